import logging
import sys

from tqdm import tqdm

from bigtrader.common.backtest_report import BacktestReport, StrategyResult
from bigtrader.common.enums import DebugLevel, StrategyKind
from bigtrader.common.interval_plan import IntervalPlan
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.return_stats import ReturnStats
from bigtrader.common.run_config import RunConfig
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.common.trade_cycle import TradeLog
from bigtrader.common.universe_entry import UniverseEntry
from bigtrader.config import Debug, TQDM_BAR_FORMAT, TQDM_UNITS, PORTFOLIO_SYMBOL
from bigtrader.controllers.estimator_controller import EstimatorController
from bigtrader.controllers.master_controller import MasterController
from bigtrader.controllers.valuation_controller import ValuationController
from bigtrader.utils.intervals import make_intervals
from bigtrader.utils.statistics import annual_return, average_portfolio_value, cycles_per_year, portfolio_return, \
    switch_gain
from bigtrader.utils.thread import Thread
from bigtrader.utils.validation import verify_universe


class StockOutcome:
    """
    What one stock's cell hands back to the engine: per strategy, the annual return and cycle count of every test
    interval, the trade logs of the last test interval and the whole-span trade log.
    """

    def __init__(self, symbol: str):
        self.symbol: str = symbol
        self.interval_dates: list[tuple[str, str]] = []
        self.annual_returns: dict[StrategyKind, list[float]] = {}
        self.cycle_counts: dict[StrategyKind, list[int]] = {}
        self.last_interval_logs: dict[StrategyKind, TradeLog] = {}
        self.whole_span_logs: dict[StrategyKind, TradeLog] = {}


class BacktestEngine:
    """
    `BacktestEngine Class Notes:`

        Runs the full interval plan over a universe.

        Cells:
            Each stock is one cell, run on its own Thread. A cell cuts the stock's own trading days into the test
            intervals, restarts the estimator on every interval, runs every selected strategy on it and records the
            annual return and the number of completed cycles. It then does the same once over the whole history.

        Aggregation:
            After every thread has been joined, results are combined in universe order, so the report does not
            depend on which thread finished first. The first error any cell raised is raised again here.

        Portfolio:
            Interval j of the portfolio combines interval j of every stock by index weight. Stocks with different
            calendars can have different interval counts; the portfolio then uses the intervals all stocks have.
    """

    def __init__(self, run_config: RunConfig | None = None, quiet_mode: bool = False):
        self.run_config: RunConfig = run_config if run_config is not None else RunConfig()
        self.quiet_mode: bool = quiet_mode
        self.valuation_controller: ValuationController = ValuationController()

    def run(self, universe: list[UniverseEntry], prices: dict[str, PriceSeries]) -> BacktestReport:
        error = verify_universe(universe, prices, self.run_config.interval_length)
        if error is not None:
            raise error

        threads: list[Thread] = [Thread(func=self.run_stock, args=(prices[entry.symbol],)) for entry in universe]
        for thread in threads:
            thread.start()

        outcomes: list[StockOutcome] = []
        for thread in tqdm(threads, bar_format=TQDM_BAR_FORMAT, unit=TQDM_UNITS,
                           file=sys.stderr, disable=self.quiet_mode):
            thread.join()
            outcomes.append(thread.result)

        for entry, thread in zip(universe, threads):
            if thread.error is not None:
                logging.error(f'Backtest of {entry.symbol} failed:\n{thread.error}')
                raise thread.exception

        return self.aggregate(universe, prices, outcomes)

    def run_stock(self, series: PriceSeries) -> StockOutcome:
        plan: IntervalPlan = make_intervals(len(series), self.run_config.interval_length, self.run_config.stride)
        estimator: EstimatorController = EstimatorController(self.run_config.estimator_config())
        master: MasterController = MasterController()
        dates: list = series.dates

        outcome: StockOutcome = StockOutcome(series.symbol)
        for kind in self.run_config.strategies:
            outcome.annual_returns[kind] = []
            outcome.cycle_counts[kind] = []

        for start, end in plan.intervals:
            outcome.interval_dates.append((dates[start].isoformat(), dates[end].isoformat()))
            interval: PriceSeries = series.slice(start, end)
            logs: dict[StrategyKind, TradeLog] = self.run_strategies(interval, estimator, master)
            for kind, log in logs.items():
                outcome.annual_returns[kind].append(annual_return(1.0, 1.0 + log.accumulated_return))
                outcome.cycle_counts[kind].append(len(log))
            outcome.last_interval_logs = logs

        outcome.whole_span_logs = self.run_strategies(series, estimator, master)
        self.debug(f'{series.symbol}: {len(plan)} intervals done')
        return outcome

    def run_strategies(self, series: PriceSeries, estimator: EstimatorController,
                       master: MasterController) -> dict[StrategyKind, TradeLog]:
        strengths: StrengthSeries | None = None
        if any(kind is not StrategyKind.BUY_HOLD for kind in self.run_config.strategies):
            strengths = estimator.estimate_series(series, self.run_config.model_params())
        return {kind: master.run_strategy(series, strengths, kind) for kind in self.run_config.strategies}

    def aggregate(self, universe: list[UniverseEntry], prices: dict[str, PriceSeries],
                  outcomes: list[StockOutcome]) -> BacktestReport:
        costs = self.run_config.cost_model()
        weights: dict[str, float] = {entry.symbol: entry.weight for entry in universe}
        universe_prices: dict[str, PriceSeries] = {entry.symbol: prices[entry.symbol] for entry in universe}
        common_count: int = min(len(outcome.interval_dates) for outcome in outcomes)
        if any(len(outcome.interval_dates) != common_count for outcome in outcomes):
            logging.warning(f'The stocks have different numbers of test intervals; the portfolio uses the first '
                            f'{common_count} of each.')

        report: BacktestReport = BacktestReport()
        report.run_config = self.run_config.model_dump(mode='json', exclude={'output_dir'})
        report.universe = list(universe)
        report.interval_dates = {outcome.symbol: outcome.interval_dates for outcome in outcomes}

        for kind in self.run_config.strategies:
            result: StrategyResult = StrategyResult(kind)
            for outcome in outcomes:
                result.stock_stats.append(ReturnStats(outcome.symbol, kind, outcome.annual_returns[kind],
                                                      cycles_per_year(outcome.cycle_counts[kind]), costs))
                result.interval_cycles[outcome.symbol] = outcome.cycle_counts[kind]
                result.whole_span_logs[outcome.symbol] = outcome.whole_span_logs[kind]
                result.last_interval_logs[outcome.symbol] = outcome.last_interval_logs[kind]

            portfolio_returns = portfolio_return(
                {outcome.symbol: outcome.annual_returns[kind][:common_count] for outcome in outcomes}, weights)
            portfolio_cycles: float = portfolio_return(
                {stats.symbol: stats.cycles_per_year for stats in result.stock_stats}, weights)
            result.portfolio_stats = ReturnStats(PORTFOLIO_SYMBOL, kind, portfolio_returns, portfolio_cycles, costs)

            result.valuation = self.valuation_controller.market_value_series(
                result.whole_span_logs, universe_prices, weights, self.run_config.initial_money, costs)
            result.average_value, result.value_sdv = average_portfolio_value(result.valuation.portfolio.to_numpy())

            report.results[kind] = result
            self.debug(f'{kind.label}: aar {result.portfolio_stats.aar:.4%}, net {result.portfolio_stats.net_return:.4%}')

        if StrategyKind.BUY_HOLD in report.results:
            benchmark: float = report.results[StrategyKind.BUY_HOLD].portfolio_stats.net_return
            for kind, result in report.results.items():
                if kind is not StrategyKind.BUY_HOLD:
                    report.switch_gains[kind] = switch_gain(result.portfolio_stats.net_return, benchmark)

        return report

    # Debug print statement
    def debug(self, *args):
        if Debug.level >= DebugLevel.ENGINE:
            for arg in args:
                logging.debug(f'Engine: {arg}')
