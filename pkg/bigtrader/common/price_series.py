import datetime
from typing import Sequence
from typing_extensions import Self

import numpy as np
import pandas as pd

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject


class PriceSeries(MarketObject):
    """
    `PriceSeries Class Notes:`

        The adjusted daily closing prices of one symbol. Dates are strictly increasing and every price is positive and
        finite; both are checked whenever either is assigned.

        Prices are expected to be adjusted for dividends and splits already. Nothing in the backtester adjusts them.

        Slicing:
            ``slice(start, end)`` returns the closes from trading day ``start`` to trading day ``end``, both included,
            as a new PriceSeries. Test intervals are cut from the full series this way.
    """

    def __init__(self, symbol: str = '', dates: Sequence[datetime.date] = (), prices: Sequence[float] = ()):
        super().__init__()
        self.object_type: ObjectType = ObjectType.PRICE_SERIES
        self.symbol: str = symbol
        self.__dates: list[datetime.date] = []
        self.__prices: np.ndarray = np.empty(0)
        self.set_data(dates, prices)

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
    def dates(self) -> list[datetime.date]:
        return list(self.__dates)

    @property
    def prices(self) -> np.ndarray:
        # read-only view so the invariants cannot be broken in place
        view: np.ndarray = self.__prices.view()
        view.flags.writeable = False
        return view

    def set_data(self, dates: Sequence[datetime.date], prices: Sequence[float]) -> None:
        dates = [pd.Timestamp(date).date() for date in dates]
        prices = np.asarray(prices, dtype=float)

        if prices.ndim != 1 or len(dates) != len(prices):
            raise ValueError(
                f'{self.__class__.__name__} needs one price per date. '
                f'It has {len(dates)} dates and {prices.size} prices.')
        if any(later <= earlier for earlier, later in zip(dates, dates[1:])):
            raise ValueError(f'{self.__class__.__name__}.dates must be strictly increasing.')
        if np.any(~np.isfinite(prices)) or np.any(prices <= 0):
            raise ValueError(f'{self.__class__.__name__}.prices must all be positive and finite.')

        self.__dates = dates
        self.__prices = prices

    def __len__(self) -> int:
        return len(self.__dates)

    def slice(self, start: int, end: int) -> Self:
        if not 0 <= start <= end < len(self):
            raise IndexError(f'{self.__class__.__name__} has no trading days {start} to {end}; it has {len(self)}.')
        return PriceSeries(self.symbol, self.__dates[start:end + 1], self.__prices[start:end + 1])

    def log_returns(self) -> np.ndarray:
        # r[d] = ln(p[d + 1] / p[d])
        return np.diff(np.log(self.__prices))

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame({'date': [date.isoformat() for date in self.__dates], 'adj_close': self.__prices})

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['symbol'] = self.symbol
        data['dates'] = [date.isoformat() for date in self.__dates]
        data['prices'] = self.__prices.tolist()
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.symbol = data['symbol']
        self.set_data([datetime.date.fromisoformat(date) for date in data['dates']], data['prices'])
        return self
