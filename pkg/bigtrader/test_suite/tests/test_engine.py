import unittest

import numpy as np

from bigtrader.common.backtest_report import BacktestReport, StrategyResult
from bigtrader.common.enums import StrategyKind
from bigtrader.common.errors import ContractError, EmptyPlanError
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.run_config import RunConfig
from bigtrader.common.universe_entry import UniverseEntry
from bigtrader.engine import BacktestEngine
import bigtrader.test_suite.utils


class TestEngine(unittest.TestCase):
    """
    `Test Engine Notes:`

        This class tests a whole backtest over a small synthetic universe: per-interval results, the weighted
        portfolio, the switch gains and the daily valuation.
    """

    def setUp(self) -> None:
        self.utils = bigtrader.test_suite.utils
        self.universe: list[UniverseEntry] = [UniverseEntry('AAA', 'Stock A', 3.0), UniverseEntry('BBB', 'Stock B', 2.0),
                                              UniverseEntry('CCC', 'Stock C', 1.0)]
        self.prices: dict[str, PriceSeries] = {entry.symbol: self.utils.synthetic_prices(entry.symbol, 300, seed=index)
                                               for index, entry in enumerate(self.universe)}
        self.run_config: RunConfig = RunConfig(interval_length=100, stride=50)
        self.engine: BacktestEngine = BacktestEngine(self.run_config, quiet_mode=True)

    def test_report_shape(self):
        report: BacktestReport = self.engine.run(self.universe, self.prices)
        self.assertEqual(list(report.results), [StrategyKind.FOLLOW_BB, StrategyKind.RIDE_MOOD, StrategyKind.BUY_HOLD])
        self.assertEqual(list(report.switch_gains), [StrategyKind.FOLLOW_BB, StrategyKind.RIDE_MOOD])
        self.assertNotIn('output_dir', report.run_config)

        for result in report.results.values():
            self.assertEqual([stats.symbol for stats in result.stock_stats], ['AAA', 'BBB', 'CCC'])
            self.assertEqual(len(result.portfolio_stats.annual_returns), 5)
            self.assertEqual(len(result.valuation), 300)
            self.assertEqual(set(result.whole_span_logs), {'AAA', 'BBB', 'CCC'})
        self.assertEqual(report.interval_dates['AAA'][0][0], self.prices['AAA'].dates[0].isoformat())
        self.assertEqual(report.interval_dates['AAA'][-1][1], self.prices['AAA'].dates[299].isoformat())

    def test_buy_hold_intervals(self):
        report: BacktestReport = self.engine.run(self.universe, self.prices)
        result: StrategyResult = report.results[StrategyKind.BUY_HOLD]
        closes: np.ndarray = self.prices['BBB'].prices

        expected: list[float] = [(closes[start + 99] / closes[start] - 1) / 2 for start in range(0, 201, 50)]
        self.assertTrue(np.allclose(result.stats_for('BBB').annual_returns, expected, rtol=1e-12, atol=1e-15))
        self.assertEqual(result.stats_for('BBB').cycles_per_year, 0.5)
        self.assertEqual(result.interval_cycles['BBB'], [1] * 5)

    def test_portfolio_weighting(self):
        report: BacktestReport = self.engine.run(self.universe, self.prices)
        for result in report.results.values():
            expected: float = sum(weight * result.stats_for(symbol).aar
                                  for symbol, weight in (('AAA', 3.0), ('BBB', 2.0), ('CCC', 1.0))) / 6.0
            self.assertAlmostEqual(result.portfolio_stats.aar, expected, places=12)
            self.assertTrue(np.allclose(result.valuation.portfolio,
                                        result.valuation.frame[['AAA', 'BBB', 'CCC']].sum(axis=1)))

    def test_interval_restart(self):
        # every interval is estimated from scratch, so the first one matches a run on that slice alone
        report: BacktestReport = self.engine.run(self.universe, self.prices)
        alone: BacktestReport = self.engine.run([UniverseEntry('AAA', 'Stock A', 1.0)],
                                                {'AAA': self.prices['AAA'].slice(0, 99)})
        for kind in report.results:
            self.assertEqual(report.results[kind].stats_for('AAA').annual_returns[0],
                             alone.results[kind].stats_for('AAA').annual_returns[0])

    def test_buy_hold_only(self):
        engine: BacktestEngine = BacktestEngine(RunConfig(interval_length=100, stride=50,
                                                          strategies=[StrategyKind.BUY_HOLD]), quiet_mode=True)
        report: BacktestReport = engine.run(self.universe, self.prices)
        self.assertEqual(list(report.results), [StrategyKind.BUY_HOLD])
        self.assertEqual(report.switch_gains, {})

    def test_different_calendars(self):
        prices: dict[str, PriceSeries] = dict(self.prices)
        prices['CCC'] = prices['CCC'].slice(0, 249)
        with self.assertLogs(level='WARNING'):
            report: BacktestReport = self.engine.run(self.universe, prices)
        self.assertEqual(len(report.results[StrategyKind.BUY_HOLD].portfolio_stats.annual_returns), 4)
        self.assertEqual(len(report.results[StrategyKind.BUY_HOLD].stats_for('AAA').annual_returns), 5)

    def test_run_fail(self):
        with self.assertRaises(ContractError):
            self.engine.run(self.universe, {'AAA': self.prices['AAA']})
        with self.assertRaises(ContractError):
            self.engine.run([], self.prices)
        with self.assertRaises(EmptyPlanError):
            self.engine.run_stock(self.prices['AAA'].slice(0, 50))

    def test_report_json(self):
        report: BacktestReport = self.engine.run(self.universe, self.prices)
        restored: BacktestReport = BacktestReport().from_json(report.to_json())
        self.assertEqual(restored.to_json(), report.to_json())
