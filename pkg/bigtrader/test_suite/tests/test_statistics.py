import math
import unittest

import numpy as np

from bigtrader.common.cost_model import CostModel
from bigtrader.common.enums import StrategyKind
from bigtrader.common.errors import ContractError, DomainError
from bigtrader.common.return_stats import ReturnStats
from bigtrader.utils.statistics import aggregate_stats, annual_return, cost_per_year, cycles_per_year, \
    net_return, portfolio_return, profit_increase, risk_reduction, switch_gain, value_profit
import bigtrader.test_suite.utils


class TestStatistics(unittest.TestCase):
    """
    `Test Statistics Notes:`

        This class tests the return statistics, the cost model and the ReturnStats summary built from them.
    """

    def setUp(self) -> None:
        self.costs: CostModel = CostModel()
        self.utils = bigtrader.test_suite.utils

    # test the cost model
    def test_cost_defaults(self):
        self.assertAlmostEqual(self.costs.per_cycle_cost, 0.00396, places=12)
        self.assertTrue(0.00395 <= 1 - self.costs.cycle_factor <= 0.00397)

    def test_cost_fail(self):
        value: float = 1.0
        with self.assertRaises(ValueError) as e:
            self.costs.buy_rate = value
        self.assertTrue(self.utils.spell_check(str(e.exception), f'CostModel.buy_rate must be at least 0 and below 1. '
                                                                 f'CostModel.buy_rate has the value of {value}.', False))
        with self.assertRaises(ValueError):
            self.costs.sell_rate = -0.001

    # test annual returns
    def test_annual_return(self):
        self.assertEqual(annual_return(100.0, 120.0), 0.1)
        self.assertEqual(annual_return(100.0, 100.0), 0.0)
        self.assertEqual(annual_return(1.0, 0.5), -0.25)
        with self.assertRaises(DomainError):
            annual_return(0.0, 1.0)

    def test_aggregate_stats(self):
        mean, sdv = aggregate_stats([0.1, 0.3])
        self.assertAlmostEqual(mean, 0.2, places=12)
        # divides by the number of values, not one less
        self.assertAlmostEqual(sdv, 0.1, places=12)
        self.assertEqual(aggregate_stats([0.05]), (0.05, 0.0))
        with self.assertRaises(ContractError):
            aggregate_stats([])

    # test the portfolio
    def test_portfolio_return(self):
        self.assertAlmostEqual(portfolio_return({'A': 0.1, 'B': 0.4}, {'A': 2.0, 'B': 1.0}), 0.2, places=12)
        combined = portfolio_return({'A': [0.1, 0.0], 'B': [0.4, 0.3]}, {'A': 2.0, 'B': 1.0})
        self.assertTrue(np.allclose(combined, [0.2, 0.1]))

    def test_portfolio_return_fail(self):
        with self.assertRaises(ContractError):
            portfolio_return({'A': 0.1}, {'A': 1.0, 'B': 1.0})
        with self.assertRaises(ContractError):
            portfolio_return({'A': [0.1, 0.2], 'B': [0.1]}, {'A': 1.0, 'B': 1.0})

    # test cycles and net returns
    def test_cycles_per_year(self):
        self.assertEqual(cycles_per_year([4, 6, 8]), 3.0)
        with self.assertRaises(ContractError):
            cycles_per_year([])

    def test_net_return(self):
        self.assertAlmostEqual(net_return(0.11, 10.0, self.costs), 0.11 - 0.0396, places=12)
        self.assertEqual(net_return(0.05, 0.0, self.costs), 0.05)

    def test_switch_gain(self):
        self.assertAlmostEqual(switch_gain(0.1, 0.05), 1.0, places=12)
        self.assertAlmostEqual(switch_gain(0.0295, 0.05), -0.41, places=12)
        with self.assertLogs(level='WARNING'):
            self.assertTrue(math.isnan(switch_gain(0.1, 0.0)))

    def test_cost_per_year(self):
        # 4.4 cycles a year at 0.396% a cycle
        self.assertAlmostEqual(cost_per_year(4.4, self.costs), 0.017424, places=12)
        self.assertEqual(cost_per_year(0.0, self.costs), 0.0)
        self.assertAlmostEqual(cost_per_year(2.0, CostModel(0.001, 0.002)), 0.006, places=12)

    def test_risk_reduction(self):
        # 15% down to 9.9% is a decrease of 34%
        self.assertAlmostEqual(risk_reduction(0.099, 0.15), 0.34, places=12)
        self.assertAlmostEqual(risk_reduction(15.0, 17.0), 2 / 17, places=12)
        self.assertAlmostEqual(risk_reduction(0.2, 0.1), -1.0, places=12)
        with self.assertLogs(level='WARNING'):
            self.assertTrue(math.isnan(risk_reduction(0.1, 0.0)))

    def test_value_profit(self):
        self.assertAlmostEqual(value_profit(121.0, 100.0), 0.21, places=12)
        self.assertAlmostEqual(value_profit(90.0, 100.0), -0.1, places=12)
        with self.assertRaises(DomainError):
            value_profit(121.0, 0.0)

    def test_profit_increase(self):
        self.assertAlmostEqual(profit_increase(0.21, 0.13), 0.08 / 0.13, places=12)
        self.assertAlmostEqual(profit_increase(0.215, 0.13), 0.085 / 0.13, places=12)
        with self.assertLogs(level='WARNING'):
            self.assertTrue(math.isnan(profit_increase(0.21, 0.0)))

    # test the summary
    def test_return_stats(self):
        stats: ReturnStats = ReturnStats('A', StrategyKind.FOLLOW_BB, [0.1, 0.3, 0.2], 5.0, self.costs)
        self.assertAlmostEqual(stats.aar, 0.2, places=12)
        self.assertAlmostEqual(stats.sdv, math.sqrt(2 / 300), places=12)
        self.assertAlmostEqual(stats.net_return, 0.2 - 5.0 * 0.00396, places=12)

        row: dict = stats.as_row()
        self.assertEqual(row['strategy'], 'FollowBB')
        self.assertEqual(row['intervals'], 3)
        self.assertAlmostEqual(row['cost_per_year'], 5.0 * 0.00396, places=12)
        self.assertEqual((row['best'], row['worst']), (0.3, 0.1))

        restored: ReturnStats = ReturnStats().from_json(stats.to_json())
        self.assertEqual(restored.as_row(), row)
