import math
from typing_extensions import Self

from bigtrader.common.enums import ObjectType, StrategyKind
from bigtrader.common.market_object import MarketObject
from bigtrader.common.return_stats import ReturnStats
from bigtrader.common.trade_cycle import TradeLog
from bigtrader.common.universe_entry import UniverseEntry
from bigtrader.common.valuation_series import ValuationSeries


class StrategyResult(MarketObject):
    """
    `StrategyResult Class Notes:`

        Everything one strategy produced over a universe.

        stock_stats, portfolio_stats:
            Interval statistics per stock (universe order) and for the weighted portfolio.

        interval_cycles:
            Completed cycles per stock per test interval, in the same order as each stats' annual_returns.

        last_interval_logs:
            The trade log of each stock over its last test interval, with that interval's Buy&Hold return.

        whole_span_logs:
            The trade log of each stock when the whole price history is treated as one interval. These drive the
            daily valuation.

        valuation, average_value, value_sdv:
            The daily sub-account and portfolio values, and the mean and population standard deviation of the
            portfolio value over all days.
    """

    def __init__(self, kind: StrategyKind = StrategyKind.BUY_HOLD):
        super().__init__()
        self.object_type: ObjectType = ObjectType.STRATEGY_RESULT
        self.kind: StrategyKind = kind
        self.stock_stats: list[ReturnStats] = []
        self.portfolio_stats: ReturnStats | None = None
        self.interval_cycles: dict[str, list[int]] = {}
        self.last_interval_logs: dict[str, TradeLog] = {}
        self.whole_span_logs: dict[str, TradeLog] = {}
        self.valuation: ValuationSeries | None = None
        self.average_value: float = math.nan
        self.value_sdv: float = math.nan

    def stats_for(self, symbol: str) -> ReturnStats:
        for stats in self.stock_stats:
            if stats.symbol == symbol:
                return stats
        raise KeyError(symbol)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['kind'] = self.kind.value
        data['stock_stats'] = [stats.to_json() for stats in self.stock_stats]
        data['portfolio_stats'] = self.portfolio_stats.to_json() if self.portfolio_stats is not None else None
        data['interval_cycles'] = self.interval_cycles
        data['last_interval_logs'] = {symbol: log.to_json() for symbol, log in self.last_interval_logs.items()}
        data['whole_span_logs'] = {symbol: log.to_json() for symbol, log in self.whole_span_logs.items()}
        data['valuation'] = self.valuation.to_json() if self.valuation is not None else None
        data['average_value'] = self.average_value
        data['value_sdv'] = self.value_sdv
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.kind = StrategyKind(data['kind'])
        self.stock_stats = [ReturnStats().from_json(stats) for stats in data['stock_stats']]
        self.portfolio_stats = ReturnStats().from_json(data['portfolio_stats']) \
            if data['portfolio_stats'] is not None else None
        self.interval_cycles = {symbol: list(cycles) for symbol, cycles in data['interval_cycles'].items()}
        self.last_interval_logs = {symbol: TradeLog().from_json(log)
                                   for symbol, log in data['last_interval_logs'].items()}
        self.whole_span_logs = {symbol: TradeLog().from_json(log) for symbol, log in data['whole_span_logs'].items()}
        self.valuation = ValuationSeries().from_json(data['valuation']) if data['valuation'] is not None else None
        self.average_value = data['average_value']
        self.value_sdv = data['value_sdv']
        return self


class BacktestReport(MarketObject):
    """
    `BacktestReport Class Notes:`

        The output of a full backtest: the universe, the test interval dates of every stock, one StrategyResult per
        strategy and the run configuration that produced them. It is written to results.json and the ``report``
        command rebuilds every table from it.

        switch_gains:
            (net_X - net_Buy&Hold) / net_Buy&Hold of the portfolio for every strategy other than Buy&Hold. Empty
            when Buy&Hold was not run.
    """

    def __init__(self):
        super().__init__()
        self.object_type: ObjectType = ObjectType.BACKTEST_REPORT
        self.run_config: dict = {}
        self.universe: list[UniverseEntry] = []
        self.interval_dates: dict[str, list[tuple[str, str]]] = {}
        self.results: dict[StrategyKind, StrategyResult] = {}
        self.switch_gains: dict[StrategyKind, float] = {}

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['run_config'] = self.run_config
        data['universe'] = [entry.to_json() for entry in self.universe]
        data['interval_dates'] = {symbol: [list(pair) for pair in pairs]
                                  for symbol, pairs in self.interval_dates.items()}
        data['results'] = [result.to_json() for result in self.results.values()]
        # NaN is not valid JSON
        data['switch_gains'] = {kind.value: None if math.isnan(gain) else gain
                                for kind, gain in self.switch_gains.items()}
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.run_config = data['run_config']
        self.universe = [UniverseEntry().from_json(entry) for entry in data['universe']]
        self.interval_dates = {symbol: [tuple(pair) for pair in pairs]
                               for symbol, pairs in data['interval_dates'].items()}
        self.results = {}
        for result in data['results']:
            strategy_result: StrategyResult = StrategyResult().from_json(result)
            self.results[strategy_result.kind] = strategy_result
        self.switch_gains = {StrategyKind(kind): math.nan if gain is None else gain
                             for kind, gain in data['switch_gains'].items()}
        return self
