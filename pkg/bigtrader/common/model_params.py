import math
from typing_extensions import Self

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject
import bigtrader.config as config


class ModelParams(MarketObject):
    """
    `ModelParams Class Notes:`

        The two shape parameters of the big buyer / big seller price model.

        n:
            The number of trading days in the moving mean that the mood index compares today's price against. The
            mean includes today's price, so n = 1 always gives a mood index of 0.

        w:
            The width of the excess demand breakpoints in log-price units. The excess demand curves only depend on
            x / w, so scaling both the mood index and w by the same factor leaves the curves unchanged.
    """

    def __init__(self, n: int = config.MODEL_WINDOW, w: float = config.MEMBERSHIP_WIDTH):
        super().__init__()
        self.object_type: ObjectType = ObjectType.MODEL_PARAMS
        self.n: int = n
        self.w: float = w

    @property
    def n(self) -> int:
        return self.__n

    @n.setter
    def n(self, n: int) -> None:
        if n is None or isinstance(n, bool) or not isinstance(n, int):
            raise ValueError(
                f'{self.__class__.__name__}.n must be an int. It is a(n) {n.__class__.__name__} with the value of {n}.')
        if n < 1:
            raise ValueError(
                f'{self.__class__.__name__}.n must be greater than or equal to 1. '
                f'{self.__class__.__name__}.n has the value of {n}.')
        self.__n: int = n

    @property
    def w(self) -> float:
        return self.__w

    @w.setter
    def w(self, w: float) -> None:
        if w is None or isinstance(w, bool) or not isinstance(w, (int, float)):
            raise ValueError(
                f'{self.__class__.__name__}.w must be a float. It is a(n) {w.__class__.__name__} with the value of {w}.')
        if not math.isfinite(w) or w <= 0:
            raise ValueError(
                f'{self.__class__.__name__}.w must be greater than 0. '
                f'{self.__class__.__name__}.w has the value of {w}.')
        self.__w: float = float(w)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['n'] = self.n
        data['w'] = self.w
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.n = data['n']
        self.w = data['w']
        return self

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ModelParams) and self.n == other.n and self.w == other.w

    def __repr__(self) -> str:
        return f'ModelParams(n={self.n}, w={self.w})'


class ExcessDemandPair(MarketObject):
    """
    `ExcessDemandPair Class Notes:`

        The regressor of one day: the big seller excess demand ed6 in [-0.4, 0] and the big buyer excess demand ed7
        in [0, 0.4]. The big seller only reacts when the price is above its recent mean and the big buyer only when it
        is below, so at most one of the two is nonzero.
    """

    def __init__(self, ed6: float = 0.0, ed7: float = 0.0):
        super().__init__()
        self.object_type: ObjectType = ObjectType.EXCESS_DEMAND_PAIR
        self.ed6: float = ed6
        self.ed7: float = ed7
        self.__check_complementary()

    @property
    def ed6(self) -> float:
        return self.__ed6

    @ed6.setter
    def ed6(self, ed6: float) -> None:
        if ed6 is None or isinstance(ed6, bool) or not isinstance(ed6, (int, float)) or not -0.4 <= ed6 <= 0:
            raise ValueError(
                f'{self.__class__.__name__}.ed6 must be a float in [-0.4, 0]. '
                f'It is a(n) {ed6.__class__.__name__} with the value of {ed6}.')
        self.__ed6: float = float(ed6)

    @property
    def ed7(self) -> float:
        return self.__ed7

    @ed7.setter
    def ed7(self, ed7: float) -> None:
        if ed7 is None or isinstance(ed7, bool) or not isinstance(ed7, (int, float)) or not 0 <= ed7 <= 0.4:
            raise ValueError(
                f'{self.__class__.__name__}.ed7 must be a float in [0, 0.4]. '
                f'It is a(n) {ed7.__class__.__name__} with the value of {ed7}.')
        self.__ed7: float = float(ed7)

    def __check_complementary(self) -> None:
        if self.ed6 != 0 and self.ed7 != 0:
            raise ValueError(
                f'{self.__class__.__name__} must have at most one nonzero component. '
                f'It has ed6 = {self.ed6} and ed7 = {self.ed7}.')

    def as_vector(self) -> tuple[float, float]:
        # (ed6, ed7), the order the strength vector (a6, a7) uses
        return self.ed6, self.ed7

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['ed6'] = self.ed6
        data['ed7'] = self.ed7
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.ed6 = data['ed6']
        self.ed7 = data['ed7']
        self.__check_complementary()
        return self
