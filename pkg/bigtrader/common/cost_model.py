import math
from typing_extensions import Self

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject
import bigtrader.config as config


class CostModel(MarketObject):
    """
    `CostModel Class Notes:`

        Proportional transaction costs, as fractions of the traded amount. The buy side pays stamp duty, the
        transaction levy and the trading fee; the sell side pays those plus brokerage.

        per_cycle_cost:
            buy_rate + sell_rate, the cost of one buy/sell cycle when the two rates are simply added. Net returns
            subtract this once per cycle.

        cycle_factor:
            (1 - buy_rate) * (1 - sell_rate), what is left of the money after one cycle when the costs are applied
            multiplicatively. The daily valuation uses this.
    """

    def __init__(self, buy_rate: float = config.BUY_COST_RATE, sell_rate: float = config.SELL_COST_RATE):
        super().__init__()
        self.object_type: ObjectType = ObjectType.COST_MODEL
        self.buy_rate: float = buy_rate
        self.sell_rate: float = sell_rate

    @property
    def buy_rate(self) -> float:
        return self.__buy_rate

    @buy_rate.setter
    def buy_rate(self, buy_rate: float) -> None:
        self.__buy_rate: float = self.__check_rate('buy_rate', buy_rate)

    @property
    def sell_rate(self) -> float:
        return self.__sell_rate

    @sell_rate.setter
    def sell_rate(self, sell_rate: float) -> None:
        self.__sell_rate: float = self.__check_rate('sell_rate', sell_rate)

    def __check_rate(self, name: str, rate: float) -> float:
        if rate is None or isinstance(rate, bool) or not isinstance(rate, (int, float)):
            raise ValueError(
                f'{self.__class__.__name__}.{name} must be a float. '
                f'It is a(n) {rate.__class__.__name__} with the value of {rate}.')
        if not math.isfinite(rate) or not 0 <= rate < 1:
            raise ValueError(
                f'{self.__class__.__name__}.{name} must be at least 0 and below 1. '
                f'{self.__class__.__name__}.{name} has the value of {rate}.')
        return float(rate)

    @property
    def per_cycle_cost(self) -> float:
        return self.buy_rate + self.sell_rate

    @property
    def cycle_factor(self) -> float:
        return (1 - self.buy_rate) * (1 - self.sell_rate)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['buy_rate'] = self.buy_rate
        data['sell_rate'] = self.sell_rate
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.buy_rate = data['buy_rate']
        self.sell_rate = data['sell_rate']
        return self
