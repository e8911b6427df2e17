import datetime
import math
from typing import Sequence
from typing_extensions import Self

import numpy as np
import pandas as pd

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject
from bigtrader.common.price_series import PriceSeries
import bigtrader.config as config


class TrueStrengthPath(MarketObject):
    """
    `TrueStrengthPath Class Notes:`

        The strengths the simulator drives the model with, one (a6, a7) pair per simulated day. Day 0 is the first
        simulated step: it uses the starting prices to produce the first new price.

        Paths are usually built from a handful of piecewise-constant segments with ``expand_path`` in
        ``bigtrader.utils.simulate``.
    """

    def __init__(self, a6: Sequence[float] = (), a7: Sequence[float] = ()):
        super().__init__()
        self.object_type: ObjectType = ObjectType.TRUE_STRENGTH_PATH
        self.__a6: np.ndarray = np.empty(0)
        self.__a7: np.ndarray = np.empty(0)
        self.set_values(a6, a7)

    @property
    def a6(self) -> np.ndarray:
        return self.__a6.copy()

    @property
    def a7(self) -> np.ndarray:
        return self.__a7.copy()

    def set_values(self, a6: Sequence[float], a7: Sequence[float]) -> None:
        a6 = np.asarray(a6, dtype=float)
        a7 = np.asarray(a7, dtype=float)
        if a6.ndim != 1 or a6.shape != a7.shape:
            raise ValueError(
                f'{self.__class__.__name__} needs one a6 and one a7 per day. '
                f'It has {a6.size} a6 values and {a7.size} a7 values.')
        if not (np.all(np.isfinite(a6)) and np.all(np.isfinite(a7))):
            raise ValueError(f'{self.__class__.__name__} values must all be finite.')
        self.__a6 = a6
        self.__a7 = a7

    def __len__(self) -> int:
        return self.__a6.size

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['a6'] = self.__a6.tolist()
        data['a7'] = self.__a7.tolist()
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.set_values(data['a6'], data['a7'])
        return self


class NoiseSpec(MarketObject):
    """
    `NoiseSpec Class Notes:`

        sigma:
            The standard deviation of the daily Gaussian noise in log-return units. Zero is allowed and gives a
            noise-free path.

        seed:
            The seed of the noise generator. The generator is numpy's Philox (a 64-bit counter-based bit generator)
            with numpy's ziggurat standard normal transform, so a seed gives the same draws on every platform.
    """

    def __init__(self, sigma: float = config.SIMULATION_SIGMA, seed: int = config.SIMULATION_SEED):
        super().__init__()
        self.object_type: ObjectType = ObjectType.NOISE_SPEC
        self.sigma: float = sigma
        self.seed: int = seed

    @property
    def sigma(self) -> float:
        return self.__sigma

    @sigma.setter
    def sigma(self, sigma: float) -> None:
        if sigma is None or isinstance(sigma, bool) or not isinstance(sigma, (int, float)):
            raise ValueError(
                f'{self.__class__.__name__}.sigma must be a float. '
                f'It is a(n) {sigma.__class__.__name__} with the value of {sigma}.')
        if not math.isfinite(sigma) or sigma < 0:
            raise ValueError(
                f'{self.__class__.__name__}.sigma must be greater than or equal to 0. '
                f'{self.__class__.__name__}.sigma has the value of {sigma}.')
        self.__sigma: float = float(sigma)

    @property
    def seed(self) -> int:
        return self.__seed

    @seed.setter
    def seed(self, seed: int) -> None:
        if seed is None or isinstance(seed, bool) or not isinstance(seed, int) or seed < 0:
            raise ValueError(
                f'{self.__class__.__name__}.seed must be a nonnegative int. '
                f'It is a(n) {seed.__class__.__name__} with the value of {seed}.')
        self.__seed: int = seed

    def draws(self, days: int) -> np.ndarray:
        """
        The unscaled standard normal draws for the given number of days. Two specs with the same seed share these
        draws whatever their sigma, so changing sigma only rescales the noise.
        """
        return np.random.Generator(np.random.Philox(self.seed)).standard_normal(days)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['sigma'] = self.sigma
        data['seed'] = self.seed
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.sigma = data['sigma']
        self.seed = data['seed']
        return self


class SimulatedSeries(MarketObject):
    """
    `SimulatedSeries Class Notes:`

        The output of one simulation run.

        prices:
            Every price of the run. The first n are the starting prices (days -(n - 1) through 0 of the model) and
            each later price is one simulated day, so there are n + T prices for T days.

        signal, noise:
            The big trader term a6 * ed6 + a7 * ed7 and the noise draw of each simulated day, recorded while
            simulating. Day d turns prices[n - 1 + d] into prices[n + d].

        path:
            The true strengths the run was driven with. It is None for a series read back from a CSV file.
    """

    def __init__(self, n: int = config.MODEL_WINDOW, prices: Sequence[float] = (), signal: Sequence[float] = (),
                 noise: Sequence[float] = (), path: TrueStrengthPath | None = None):
        super().__init__()
        self.object_type: ObjectType = ObjectType.SIMULATED_SERIES
        self.n: int = n
        self.prices: np.ndarray = np.asarray(prices, dtype=float)
        self.signal: np.ndarray = np.asarray(signal, dtype=float)
        self.noise: np.ndarray = np.asarray(noise, dtype=float)
        self.path: TrueStrengthPath | None = path

        if self.prices.size != self.n + self.signal.size or self.signal.shape != self.noise.shape:
            raise ValueError(
                f'{self.__class__.__name__} needs n + T prices and T signal and noise values. It has '
                f'{self.prices.size} prices, {self.signal.size} signal values and {self.noise.size} noise values.')
        if np.any(~np.isfinite(self.prices)) or np.any(self.prices <= 0):
            raise ValueError(f'{self.__class__.__name__}.prices must all be positive and finite.')
        if self.path is not None and len(self.path) != self.days:
            raise ValueError(
                f'{self.__class__.__name__}.path must cover all {self.days} days. It covers {len(self.path)}.')

    @property
    def days(self) -> int:
        return self.signal.size

    def day_numbers(self) -> np.ndarray:
        # model day of every price, -(n - 1) through T
        return np.arange(-(self.n - 1), self.days + 1)

    def to_price_series(self, symbol: str = 'SIM', start: datetime.date = datetime.date(2000, 1, 3)) -> PriceSeries:
        dates: list[datetime.date] = [ts.date() for ts in pd.bdate_range(start, periods=self.prices.size)]
        return PriceSeries(symbol, dates, self.prices)

    def to_frame(self) -> pd.DataFrame:
        """
        One row per price. The signal and noise of a row are the terms that moved the price from that row to the
        next, so the starting rows before day 0 and the final row have none.
        """
        padding: np.ndarray = np.full(self.n - 1, np.nan)
        return pd.DataFrame({
            'day': self.day_numbers(),
            'price': self.prices,
            'signal': np.concatenate([padding, self.signal, [np.nan]]),
            'noise': np.concatenate([padding, self.noise, [np.nan]]),
        })

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['n'] = self.n
        data['prices'] = self.prices.tolist()
        data['signal'] = self.signal.tolist()
        data['noise'] = self.noise.tolist()
        data['path'] = self.path.to_json() if self.path is not None else None
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.n = data['n']
        self.prices = np.asarray(data['prices'], dtype=float)
        self.signal = np.asarray(data['signal'], dtype=float)
        self.noise = np.asarray(data['noise'], dtype=float)
        self.path = TrueStrengthPath().from_json(data['path']) if data['path'] is not None else None
        return self
