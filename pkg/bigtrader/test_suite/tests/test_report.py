import math
import os
import tempfile
import unittest

import pandas as pd

from bigtrader.common.backtest_report import BacktestReport, StrategyResult
from bigtrader.common.enums import StrategyKind
from bigtrader.common.return_stats import ReturnStats
from bigtrader.common.run_config import RunConfig
from bigtrader.common.universe_entry import UniverseEntry
from bigtrader.engine import BacktestEngine
from bigtrader.utils.report import benchmark_ranking, emit_report, interval_returns_table, last_interval_table, \
    portfolio_stats_table, rankings_table, stock_stats_table
import bigtrader.config as config
import bigtrader.test_suite.utils


class TestReport(unittest.TestCase):
    """
    `Test Report Notes:`

        This class tests the report tables and the files they are written to.
    """

    def setUp(self) -> None:
        self.utils = bigtrader.test_suite.utils
        universe: list[UniverseEntry] = [UniverseEntry('AAA', 'Stock A', 2.0), UniverseEntry('BBB', 'Stock B', 1.0)]
        prices = {entry.symbol: self.utils.synthetic_prices(entry.symbol, 160, seed=index + 30)
                  for index, entry in enumerate(universe)}
        self.prices = prices
        self.report: BacktestReport = BacktestEngine(RunConfig(interval_length=60, stride=20),
                                                     quiet_mode=True).run(universe, prices)
        self.directory = tempfile.TemporaryDirectory()

    def tearDown(self) -> None:
        self.directory.cleanup()

    @staticmethod
    def __result(kind: StrategyKind, aars: dict[str, float]) -> StrategyResult:
        result: StrategyResult = StrategyResult(kind)
        result.stock_stats = [ReturnStats(symbol, kind, [aar], 0.0) for symbol, aar in aars.items()]
        return result

    def test_benchmark_ranking(self):
        benchmark: StrategyResult = self.__result(StrategyKind.BUY_HOLD, {'A': 0.1, 'B': 0.1, 'C': 0.1, 'D': 0.1})
        strategy: StrategyResult = self.__result(StrategyKind.FOLLOW_BB, {'A': 0.3, 'B': 0.0, 'C': 0.15, 'D': 0.1})
        ranking: pd.DataFrame = benchmark_ranking(strategy, benchmark, 2)

        winners: pd.DataFrame = ranking[ranking['group'] == 'winner']
        losers: pd.DataFrame = ranking[ranking['group'] == 'loser']
        self.assertEqual(winners['symbol'].tolist(), ['A', 'C'])
        self.assertEqual(losers['symbol'].tolist(), ['B', 'D'])
        self.assertEqual(winners['rank'].tolist(), [1, 2])
        self.assertAlmostEqual(winners['difference'].iloc[0], 0.2, places=12)
        self.assertEqual(set(ranking['strategy']), {'FollowBB'})

    def test_tables(self):
        stocks: pd.DataFrame = stock_stats_table(self.report)
        self.assertEqual(len(stocks), 6)
        self.assertEqual(stocks['symbol'].tolist()[:3], ['AAA', 'AAA', 'AAA'])

        portfolio: pd.DataFrame = portfolio_stats_table(self.report)
        self.assertEqual(portfolio['strategy'].tolist(), ['FollowBB', 'RideMood', 'Buy&Hold'])
        self.assertTrue(pd.isna(portfolio['switch_gain'].iloc[2]))

        # (160 - 60) // 20 + 1 = 6 intervals per stock plus 6 portfolio rows, for each strategy
        self.assertEqual(len(interval_returns_table(self.report)), 3 * (2 * 6 + 6))
        self.assertEqual(set(rankings_table(self.report)['strategy']), {'FollowBB', 'RideMood'})

    def test_portfolio_comparisons(self):
        portfolio: pd.DataFrame = portfolio_stats_table(self.report).set_index('strategy')
        benchmark: StrategyResult = self.report.results[StrategyKind.BUY_HOLD]
        benchmark_profit: float = (benchmark.average_value - 100.0) / 100.0

        for kind in (StrategyKind.FOLLOW_BB, StrategyKind.RIDE_MOOD):
            result: StrategyResult = self.report.results[kind]
            row: pd.Series = portfolio.loc[kind.label]
            stats: ReturnStats = result.portfolio_stats
            self.assertAlmostEqual(row['cost_per_year'], stats.cycles_per_year * 0.00396, places=12)
            self.assertAlmostEqual(row['net_return'], stats.aar - row['cost_per_year'], places=12)
            self.assertAlmostEqual(row['sdv_reduction'],
                                   (benchmark.portfolio_stats.sdv - stats.sdv) / benchmark.portfolio_stats.sdv,
                                   places=12)
            profit: float = (result.average_value - 100.0) / 100.0
            self.assertAlmostEqual(row['value_profit'], profit, places=12)
            self.assertAlmostEqual(row['profit_increase'], (profit - benchmark_profit) / benchmark_profit, places=9)
            self.assertAlmostEqual(row['value_risk_reduction'],
                                   (benchmark.value_sdv - result.value_sdv) / benchmark.value_sdv, places=12)

        # Buy&Hold is the benchmark, so it has nothing to be compared with
        buy_hold: pd.Series = portfolio.loc['Buy&Hold']
        for column in ('switch_gain', 'sdv_reduction', 'profit_increase', 'value_risk_reduction'):
            self.assertTrue(math.isnan(buy_hold[column]), column)
        self.assertAlmostEqual(buy_hold['value_profit'], benchmark_profit, places=12)

    def test_last_interval_table(self):
        table: pd.DataFrame = last_interval_table(self.report)
        # (160 - 60) // 20 * 20 = 100, so the last interval runs from close 100 to close 159
        for kind, result in self.report.results.items():
            for symbol, prices in self.prices.items():
                rows: pd.DataFrame = table[(table['strategy'] == kind.label) & (table['symbol'] == symbol)]
                log = result.last_interval_logs[symbol]
                self.assertEqual(rows['row'].tolist(), ['cycle'] * len(log) + ['accumulated_return',
                                                                               'buy_hold_return'])
                self.assertEqual(rows['buy_date'].tolist()[:len(log)],
                                 [cycle.buy_date.isoformat() for cycle in log.cycles])

                accumulated: float = rows[rows['row'] == 'accumulated_return']['return'].iloc[0]
                self.assertAlmostEqual(accumulated, log.accumulated_return, places=12)
                # the interval's annual return is built from the same accumulated return
                self.assertAlmostEqual(result.stats_for(symbol).annual_returns[-1], accumulated / 2, places=12)

                buy_hold: float = rows[rows['row'] == 'buy_hold_return']['return'].iloc[0]
                self.assertAlmostEqual(buy_hold, prices.prices[159] / prices.prices[100] - 1, places=12)

        # Buy&Hold holds the whole interval in one cycle
        buy_hold_rows: pd.DataFrame = table[(table['strategy'] == 'Buy&Hold') & (table['row'] == 'cycle')]
        self.assertEqual(len(buy_hold_rows), 2)
        self.assertEqual(buy_hold_rows['buy_date'].tolist(),
                         [self.prices['AAA'].dates[100].isoformat(), self.prices['BBB'].dates[100].isoformat()])

    def test_emit_report(self):
        written: list[str] = emit_report(self.report, self.directory.name)
        names: list[str] = [os.path.basename(path) for path in written]
        self.assertEqual(names, [config.STOCK_STATS_FILE_NAME, config.PORTFOLIO_STATS_FILE_NAME,
                                 config.INTERVAL_RETURNS_FILE_NAME, config.VALUATIONS_FILE_NAME,
                                 config.CYCLES_FILE_NAME, config.LAST_INTERVAL_FILE_NAME, config.RANKINGS_FILE_NAME,
                                 config.RESULTS_FILE_NAME, config.RUN_CONFIG_FILE_NAME])
        for path in written:
            self.assertTrue(os.path.isfile(path))

        cycles: pd.DataFrame = pd.read_csv(os.path.join(self.directory.name, config.CYCLES_FILE_NAME))
        self.assertEqual(list(cycles.columns), ['strategy', 'symbol', 'buy_date', 'buy_price', 'sell_date',
                                                'sell_price', 'return'])
        # Buy&Hold makes exactly one whole-span cycle per stock
        self.assertEqual(int((cycles['strategy'] == 'Buy&Hold').sum()), 2)

        last: pd.DataFrame = pd.read_csv(os.path.join(self.directory.name, config.LAST_INTERVAL_FILE_NAME))
        self.assertEqual(list(last.columns), ['strategy', 'symbol', 'row', 'buy_date', 'buy_price', 'sell_date',
                                              'sell_price', 'return'])
        # two summary rows per strategy and stock
        self.assertEqual(int((last['row'] != 'cycle').sum()), 3 * 2 * 2)

        restored: BacktestReport = BacktestReport().from_json(self.report.to_json())
        self.assertTrue(last_interval_table(restored).equals(last_interval_table(self.report)))
