import math
from typing_extensions import Self

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject


class UniverseEntry(MarketObject):
    """
    `UniverseEntry Class Notes:`

        One stock of the backtest universe: its symbol (also the name of its price file), a display name and its
        index weight in percent. Weights only matter relative to each other; they do not need to sum to 100.
    """

    def __init__(self, symbol: str = '', name: str = '', weight: float = 1.0):
        super().__init__()
        self.object_type: ObjectType = ObjectType.UNIVERSE_ENTRY
        self.symbol: str = symbol
        self.name: str = name
        self.weight: float = weight

    @property
    def symbol(self) -> str:
        return self.__symbol

    @symbol.setter
    def symbol(self, symbol: str) -> None:
        if symbol is None or not isinstance(symbol, str):
            raise ValueError(
                f'{self.__class__.__name__}.symbol must be a str. '
                f'It is a(n) {symbol.__class__.__name__} with the value of {symbol}.')
        self.__symbol: str = symbol

    @property
    def name(self) -> str:
        return self.__name

    @name.setter
    def name(self, name: str) -> None:
        if name is None or not isinstance(name, str):
            raise ValueError(
                f'{self.__class__.__name__}.name must be a str. '
                f'It is a(n) {name.__class__.__name__} with the value of {name}.')
        self.__name: str = name

    @property
    def weight(self) -> float:
        return self.__weight

    @weight.setter
    def weight(self, weight: float) -> None:
        if weight is None or isinstance(weight, bool) or not isinstance(weight, (int, float)) \
                or not math.isfinite(weight) or weight <= 0:
            raise ValueError(
                f'{self.__class__.__name__}.weight must be a positive float. '
                f'It is a(n) {weight.__class__.__name__} with the value of {weight}.')
        self.__weight: float = float(weight)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['symbol'] = self.symbol
        data['name'] = self.name
        data['weight'] = self.weight
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.symbol = data['symbol']
        self.name = data['name']
        self.weight = data['weight']
        return self

    def __repr__(self) -> str:
        return f'UniverseEntry({self.symbol!r}, {self.name!r}, {self.weight})'
