import math
from typing_extensions import Self

import numpy as np

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject
import bigtrader.config as config


class EstimatorConfig(MarketObject):
    """
    `EstimatorConfig Class Notes:`

        lam:
            The forgetting factor, strictly between 0 and 1. An observation i days old is weighted by lam ** i, so
            0.95 keeps an effective memory of roughly twenty trading days.

        gamma:
            The initial covariance scale; the estimator starts from P = gamma * I. Large values mean little trust in
            the zero starting estimate.
    """

    def __init__(self, lam: float = config.FORGETTING_FACTOR, gamma: float = config.INITIAL_COVARIANCE):
        super().__init__()
        self.object_type: ObjectType = ObjectType.ESTIMATOR_CONFIG
        self.lam: float = lam
        self.gamma: float = gamma

    @property
    def lam(self) -> float:
        return self.__lam

    @lam.setter
    def lam(self, lam: float) -> None:
        if lam is None or isinstance(lam, bool) or not isinstance(lam, (int, float)):
            raise ValueError(
                f'{self.__class__.__name__}.lam must be a float. '
                f'It is a(n) {lam.__class__.__name__} with the value of {lam}.')
        if not 0 < lam < 1:
            raise ValueError(
                f'{self.__class__.__name__}.lam must be strictly between 0 and 1. '
                f'{self.__class__.__name__}.lam has the value of {lam}.')
        self.__lam: float = float(lam)

    @property
    def gamma(self) -> float:
        return self.__gamma

    @gamma.setter
    def gamma(self, gamma: float) -> None:
        if gamma is None or isinstance(gamma, bool) or not isinstance(gamma, (int, float)):
            raise ValueError(
                f'{self.__class__.__name__}.gamma must be a float. '
                f'It is a(n) {gamma.__class__.__name__} with the value of {gamma}.')
        if not math.isfinite(gamma) or gamma <= 0:
            raise ValueError(
                f'{self.__class__.__name__}.gamma must be greater than 0. '
                f'{self.__class__.__name__}.gamma has the value of {gamma}.')
        self.__gamma: float = float(gamma)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['lam'] = self.lam
        data['gamma'] = self.gamma
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.lam = data['lam']
        self.gamma = data['gamma']
        return self


class EstimatorState(MarketObject):
    """
    `EstimatorState Class Notes:`

        a_hat:
            The current strength estimate as the 2-vector (a6_hat, a7_hat).

        p:
            The 2x2 covariance-like matrix of the recursion. It must be symmetric; the estimator re-symmetrizes it on
            every step so rounding never accumulates an asymmetric part.
    """

    SYMMETRY_TOLERANCE: float = 1e-10

    def __init__(self, a_hat: np.ndarray | None = None, p: np.ndarray | None = None):
        super().__init__()
        self.object_type: ObjectType = ObjectType.ESTIMATOR_STATE
        self.a_hat: np.ndarray = np.zeros(2) if a_hat is None else a_hat
        self.p: np.ndarray = np.eye(2) if p is None else p

    @property
    def a_hat(self) -> np.ndarray:
        return self.__a_hat

    @a_hat.setter
    def a_hat(self, a_hat: np.ndarray) -> None:
        a_hat = np.asarray(a_hat, dtype=float)
        if a_hat.shape != (2,) or not np.all(np.isfinite(a_hat)):
            raise ValueError(
                f'{self.__class__.__name__}.a_hat must be a finite 2-vector. It has the value of {a_hat}.')
        self.__a_hat: np.ndarray = a_hat

    @property
    def p(self) -> np.ndarray:
        return self.__p

    @p.setter
    def p(self, p: np.ndarray) -> None:
        p = np.asarray(p, dtype=float)
        if p.shape != (2, 2) or not np.all(np.isfinite(p)):
            raise ValueError(f'{self.__class__.__name__}.p must be a finite 2x2 matrix. It has the value of {p}.')
        if abs(p[0, 1] - p[1, 0]) > self.SYMMETRY_TOLERANCE * max(1.0, np.abs(p).max()):
            raise ValueError(f'{self.__class__.__name__}.p must be symmetric. It has the value of {p}.')
        self.__p: np.ndarray = p

    def is_positive_definite(self) -> bool:
        return bool(np.linalg.eigvalsh(self.p).min() > 0)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['a_hat'] = self.a_hat.tolist()
        data['p'] = self.p.tolist()
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.a_hat = data['a_hat']
        self.p = data['p']
        return self
