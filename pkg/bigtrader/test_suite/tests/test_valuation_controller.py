import datetime
import unittest

import numpy as np
import pandas as pd

from bigtrader.common.cost_model import CostModel
from bigtrader.common.enums import StrategyKind
from bigtrader.common.errors import ContractError, DomainError
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.common.trade_cycle import TradeCycle, TradeLog
from bigtrader.common.valuation_series import ValuationSeries
from bigtrader.controllers.master_controller import MasterController
from bigtrader.controllers.valuation_controller import ValuationController
import bigtrader.config as config
import bigtrader.test_suite.utils


class TestValuationController(unittest.TestCase):
    """
    `Test Valuation Controller Notes:`

        This class tests the daily market value of the sub-accounts and of the portfolio.
    """

    def setUp(self) -> None:
        self.valuation: ValuationController = ValuationController()
        self.master: MasterController = MasterController()
        self.dates: list[datetime.date] = [ts.date() for ts in pd.bdate_range('2011-05-02', periods=4)]
        self.prices: PriceSeries = PriceSeries('A', self.dates, [10.0, 10.5, 11.0, 12.0])
        self.log: TradeLog = TradeLog('A', StrategyKind.FOLLOW_BB)
        self.log.add_cycle(TradeCycle(self.dates[0], 10.0, self.dates[2], 11.0))
        self.utils = bigtrader.test_suite.utils

    def test_one_cycle(self):
        series: ValuationSeries = self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'A': 1.0},
                                                                     100.0, CostModel())
        values: list[float] = series.frame['A'].tolist()
        self.assertAlmostEqual(values[0], 100.0, places=12)
        self.assertAlmostEqual(values[1], 105.0, places=12)
        self.assertAlmostEqual(values[2], 100.0 * 1.1 * (1 - 0.00108) * (1 - 0.00288), places=9)
        self.assertAlmostEqual(values[2], 109.5647, delta=0.001)
        self.assertEqual(values[3], values[2])
        self.assertTrue(np.array_equal(series.portfolio.to_numpy(), series.frame['A'].to_numpy()))

    def test_zero_cost_matches_accumulated_return(self):
        prices: PriceSeries = self.utils.synthetic_prices('A', 200, seed=21)
        rng: np.random.Generator = np.random.default_rng(21)
        strengths: StrengthSeries = StrengthSeries('A', prices.dates, rng.normal(0, 0.2, 200), rng.normal(0, 0.2, 200))
        log: TradeLog = self.master.run_strategy(prices, strengths, StrategyKind.RIDE_MOOD)

        series: ValuationSeries = self.valuation.market_value_series({'A': log}, {'A': prices}, {'A': 3.0}, 50.0,
                                                                     CostModel(0.0, 0.0))
        self.assertAlmostEqual(series.portfolio.iloc[-1], 50.0 * (1 + log.accumulated_return), places=9)

    def test_buy_hold_tracks_price(self):
        prices: PriceSeries = self.utils.synthetic_prices('A', 80, seed=2)
        log: TradeLog = self.master.run_strategy(prices, None, StrategyKind.BUY_HOLD)
        series: ValuationSeries = self.valuation.market_value_series({'A': log}, {'A': prices}, {'A': 1.0}, 100.0,
                                                                     CostModel(0.0, 0.0))
        self.assertTrue(np.allclose(series.frame['A'].to_numpy(), 100.0 * prices.prices / prices.prices[0]))

    def test_linear_in_initial_money(self):
        small: ValuationSeries = self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'A': 1.0}, 1.0)
        large: ValuationSeries = self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'A': 1.0},
                                                                    250.0)
        self.assertTrue(np.allclose(large.portfolio.to_numpy(), 250.0 * small.portfolio.to_numpy()))

    def test_weights_and_calendars(self):
        other_dates: list[datetime.date] = [self.dates[1], self.dates[3]]
        other: PriceSeries = PriceSeries('B', other_dates, [20.0, 30.0])
        other_log: TradeLog = TradeLog('B', StrategyKind.FOLLOW_BB)
        series: ValuationSeries = self.valuation.market_value_series(
            {'A': self.log, 'B': other_log}, {'A': self.prices, 'B': other}, {'A': 3.0, 'B': 1.0}, 100.0)

        self.assertEqual(list(series.frame.index), self.dates)
        # B stays in cash with its quarter share on every date, before its first close too
        self.assertTrue(np.allclose(series.frame['B'].to_numpy(), 25.0))
        self.assertAlmostEqual(series.frame['A'].iloc[1], 75.0 * 1.05, places=12)
        self.assertTrue(np.allclose(series.portfolio, series.frame['A'] + series.frame['B']))
        self.assertEqual(series.symbols, ['A', 'B'])

    def test_long_frame(self):
        series: ValuationSeries = self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'A': 1.0})
        long: pd.DataFrame = series.to_long_frame()
        self.assertEqual(list(long.columns), ['date', 'strategy', 'symbol', 'value'])
        self.assertEqual(len(long), 8)
        self.assertEqual(set(long['symbol']), {'A', config.PORTFOLIO_SYMBOL})
        self.assertEqual(long['date'].iloc[0], self.dates[0].isoformat())

    def test_fail(self):
        with self.assertRaises(DomainError):
            self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'A': 1.0}, 0.0)
        with self.assertRaises(ContractError):
            self.valuation.market_value_series({'A': self.log}, {'A': self.prices}, {'B': 1.0})

        mixed: TradeLog = TradeLog('B', StrategyKind.RIDE_MOOD)
        with self.assertRaises(ContractError):
            self.valuation.market_value_series({'A': self.log, 'B': mixed}, {'A': self.prices, 'B': self.prices},
                                               {'A': 1.0, 'B': 1.0})

        stray: TradeLog = TradeLog('A', StrategyKind.FOLLOW_BB)
        stray.add_cycle(TradeCycle(datetime.date(1999, 1, 4), 10.0, self.dates[1], 11.0))
        with self.assertRaises(ContractError):
            self.valuation.market_value_series({'A': stray}, {'A': self.prices}, {'A': 1.0})
