import datetime
import math
from typing_extensions import Self

import numpy as np
import pandas as pd

from bigtrader.common.enums import ActionType, ObjectType, StrategyKind
from bigtrader.common.market_object import MarketObject


class TradeCycle(MarketObject):
    """
    `TradeCycle Class Notes:`

        One buy followed by one sell, both at a daily close. The sell may fall on the buy day, which gives a
        zero-return cycle when the price is unchanged.
    """

    def __init__(self, buy_date: datetime.date = datetime.date.min, buy_price: float = 1.0,
                 sell_date: datetime.date = datetime.date.min, sell_price: float = 1.0):
        super().__init__()
        self.object_type: ObjectType = ObjectType.TRADE_CYCLE
        self.buy_date: datetime.date = buy_date
        self.buy_price: float = buy_price
        self.sell_date: datetime.date = sell_date
        self.sell_price: float = sell_price

        if self.sell_date < self.buy_date:
            raise ValueError(
                f'{self.__class__.__name__}.sell_date must not be before the buy date. '
                f'It is {self.sell_date} and the buy date is {self.buy_date}.')

    @staticmethod
    def __check_price(name: str, price: float) -> float:
        if price is None or isinstance(price, bool) or not isinstance(price, (int, float)) \
                or not math.isfinite(price) or price <= 0:
            raise ValueError(
                f'TradeCycle.{name} must be a positive float. '
                f'It is a(n) {price.__class__.__name__} with the value of {price}.')
        return float(price)

    @property
    def buy_price(self) -> float:
        return self.__buy_price

    @buy_price.setter
    def buy_price(self, buy_price: float) -> None:
        self.__buy_price: float = self.__check_price('buy_price', buy_price)

    @property
    def sell_price(self) -> float:
        return self.__sell_price

    @sell_price.setter
    def sell_price(self, sell_price: float) -> None:
        self.__sell_price: float = self.__check_price('sell_price', sell_price)

    @property
    def cycle_return(self) -> float:
        return self.sell_price / self.buy_price - 1

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['buy_date'] = self.buy_date.isoformat()
        data['buy_price'] = self.buy_price
        data['sell_date'] = self.sell_date.isoformat()
        data['sell_price'] = self.sell_price
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.buy_date = datetime.date.fromisoformat(data['buy_date'])
        self.buy_price = data['buy_price']
        self.sell_date = datetime.date.fromisoformat(data['sell_date'])
        self.sell_price = data['sell_price']
        return self

    def __repr__(self) -> str:
        return (f'TradeCycle(buy {self.buy_date} at {self.buy_price}, sell {self.sell_date} at {self.sell_price}, '
                f'return {self.cycle_return:.4%})')


class TradeLog(MarketObject):
    """
    `TradeLog Class Notes:`

        The trades one strategy made on one stock over one test interval.

        cycles:
            The completed buy/sell cycles in date order. Cycles never overlap: each buy comes after the previous sell.

        actions:
            The action the strategy chose on every trading day of the interval, None on the warm-up days before the
            strategy has the smoothed estimates it reads.

        forced_exit:
            True when the position was still in stock after the last day and was sold at the last close. That sale
            is the last cycle but has no Sell in actions.

        accumulated_return:
            The product of (1 + cycle return) over the cycles, minus 1. Cash earns nothing between cycles.

        buy_hold_return:
            The return of holding the stock from the first close of the interval to the last, kept beside the
            strategy's return for comparison. None until the master controller fills it in.
    """

    def __init__(self, symbol: str = '', kind: StrategyKind = StrategyKind.BUY_HOLD):
        super().__init__()
        self.object_type: ObjectType = ObjectType.TRADE_LOG
        self.symbol: str = symbol
        self.kind: StrategyKind = kind
        self.cycles: list[TradeCycle] = []
        self.actions: list[ActionType | None] = []
        self.buy_hold_return: float | None = None
        self.forced_exit: bool = False

    def add_cycle(self, cycle: TradeCycle) -> None:
        if self.cycles and cycle.buy_date <= self.cycles[-1].sell_date:
            raise ValueError(
                f'{self.__class__.__name__} cycles must not overlap. A cycle bought on {cycle.buy_date} follows one '
                f'sold on {self.cycles[-1].sell_date}.')
        self.cycles.append(cycle)

    @property
    def accumulated_return(self) -> float:
        return float(np.prod([1 + cycle.cycle_return for cycle in self.cycles])) - 1

    def __len__(self) -> int:
        return len(self.cycles)

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({
            'buy_date': [cycle.buy_date.isoformat() for cycle in self.cycles],
            'buy_price': [cycle.buy_price for cycle in self.cycles],
            'sell_date': [cycle.sell_date.isoformat() for cycle in self.cycles],
            'sell_price': [cycle.sell_price for cycle in self.cycles],
            'return': [cycle.cycle_return for cycle in self.cycles],
        }, columns=['buy_date', 'buy_price', 'sell_date', 'sell_price', 'return'])

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['symbol'] = self.symbol
        data['kind'] = self.kind.value
        data['cycles'] = [cycle.to_json() for cycle in self.cycles]
        data['actions'] = [action.name if action is not None else None for action in self.actions]
        data['buy_hold_return'] = self.buy_hold_return
        data['forced_exit'] = self.forced_exit
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.symbol = data['symbol']
        self.kind = StrategyKind(data['kind'])
        self.cycles = []
        for cycle in data['cycles']:
            self.add_cycle(TradeCycle().from_json(cycle))
        self.actions = [ActionType[action] if action is not None else None for action in data['actions']]
        self.buy_hold_return = data['buy_hold_return']
        self.forced_exit = data['forced_exit']
        return self
