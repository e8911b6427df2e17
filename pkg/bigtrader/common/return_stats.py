from typing import Sequence
from typing_extensions import Self

import numpy as np

from bigtrader.common.cost_model import CostModel
from bigtrader.common.enums import ObjectType, StrategyKind
from bigtrader.common.market_object import MarketObject
from bigtrader.utils.statistics import aggregate_stats, cost_per_year, net_return


class ReturnStats(MarketObject):
    """
    `ReturnStats Class Notes:`

        The interval statistics of one strategy on one stock, or on the weighted portfolio when the symbol is
        config.PORTFOLIO_SYMBOL.

        annual_returns:
            The annual return of every test interval, gross of costs, in plan order.

        aar, sdv:
            The mean and population standard deviation of annual_returns.

        cycles_per_year:
            Mean completed buy/sell cycles per interval, divided by the interval's length in years. Forced sales at
            the end of an interval count.

        cost_per_year, net_return:
            cycles_per_year times the per-cycle cost, and aar less that cost.
    """

    def __init__(self, symbol: str = '', kind: StrategyKind = StrategyKind.BUY_HOLD,
                 annual_returns: Sequence[float] = (0.0,), cycles_per_year: float = 0.0,
                 costs: CostModel | None = None):
        super().__init__()
        self.object_type: ObjectType = ObjectType.RETURN_STATS
        self.symbol: str = symbol
        self.kind: StrategyKind = kind
        self.annual_returns: list[float] = [float(value) for value in annual_returns]
        self.cycles_per_year: float = float(cycles_per_year)
        self.costs: CostModel = costs if costs is not None else CostModel()

        self.aar, self.sdv = aggregate_stats(self.annual_returns)
        self.net_return: float = net_return(self.aar, self.cycles_per_year, self.costs)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['symbol'] = self.symbol
        data['kind'] = self.kind.value
        data['annual_returns'] = self.annual_returns
        data['cycles_per_year'] = self.cycles_per_year
        data['costs'] = self.costs.to_json()
        data['aar'] = self.aar
        data['sdv'] = self.sdv
        data['net_return'] = self.net_return
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.symbol = data['symbol']
        self.kind = StrategyKind(data['kind'])
        self.annual_returns = [float(value) for value in data['annual_returns']]
        self.cycles_per_year = data['cycles_per_year']
        self.costs = CostModel().from_json(data['costs'])
        self.aar, self.sdv = aggregate_stats(self.annual_returns)
        self.net_return = net_return(self.aar, self.cycles_per_year, self.costs)
        return self

    @property
    def cost_per_year(self) -> float:
        return cost_per_year(self.cycles_per_year, self.costs)

    def as_row(self) -> dict:
        return {
            'symbol': self.symbol,
            'strategy': self.kind.label,
            'aar': self.aar,
            'sdv': self.sdv,
            'cycles_per_year': self.cycles_per_year,
            'cost_per_year': self.cost_per_year,
            'net_return': self.net_return,
            'intervals': len(self.annual_returns),
            'best': float(np.max(self.annual_returns)),
            'worst': float(np.min(self.annual_returns)),
        }
