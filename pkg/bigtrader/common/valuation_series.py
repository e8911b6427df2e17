from typing_extensions import Self

import numpy as np
import pandas as pd

from bigtrader.common.enums import ObjectType, StrategyKind
from bigtrader.common.market_object import MarketObject
import bigtrader.config as config


class ValuationSeries(MarketObject):
    """
    `ValuationSeries Class Notes:`

        The daily market value of the money given to each stock under one strategy, and of the whole portfolio.

        frame:
            Indexed by calendar date, one column per symbol plus config.PORTFOLIO_SYMBOL, the row sum of the others.
            A stock with no close on a date carries its latest value forward; before its first close it holds its
            starting share of the initial money.
    """

    def __init__(self, kind: StrategyKind = StrategyKind.BUY_HOLD, initial_money: float = config.INITIAL_MONEY,
                 frame: pd.DataFrame | None = None):
        super().__init__()
        self.object_type: ObjectType = ObjectType.VALUATION_SERIES
        self.kind: StrategyKind = kind
        self.initial_money: float = float(initial_money)
        self.frame: pd.DataFrame = frame if frame is not None else pd.DataFrame({config.PORTFOLIO_SYMBOL: []})

        values: np.ndarray = self.frame.to_numpy(dtype=float)
        if np.any(~np.isfinite(values)) or np.any(values <= 0):
            raise ValueError(f'{self.__class__.__name__}.frame values must all be positive and finite.')

    @property
    def portfolio(self) -> pd.Series:
        return self.frame[config.PORTFOLIO_SYMBOL]

    @property
    def symbols(self) -> list[str]:
        return [column for column in self.frame.columns if column != config.PORTFOLIO_SYMBOL]

    def __len__(self) -> int:
        return len(self.frame)

    def to_long_frame(self) -> pd.DataFrame:
        """
        date, strategy, symbol, value rows, the layout the valuations report file uses.
        """
        frame: pd.DataFrame = self.frame.copy()
        frame.index = [date.isoformat() for date in frame.index]
        long: pd.DataFrame = frame.rename_axis('date').reset_index().melt(
            id_vars='date', var_name='symbol', value_name='value')
        long.insert(1, 'strategy', self.kind.label)
        return long

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['kind'] = self.kind.value
        data['initial_money'] = self.initial_money
        data['dates'] = [date.isoformat() for date in self.frame.index]
        data['values'] = {column: self.frame[column].tolist() for column in self.frame.columns}
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.kind = StrategyKind(data['kind'])
        self.initial_money = data['initial_money']
        index: list = [pd.Timestamp(date).date() for date in data['dates']]
        self.frame = pd.DataFrame(data['values'], index=index)
        return self
