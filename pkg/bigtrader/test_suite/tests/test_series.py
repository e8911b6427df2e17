import datetime
import math
import unittest

import numpy as np
import pandas as pd

from bigtrader.common.enums import ActionType, Presence, StrategyKind
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.common.trade_cycle import TradeCycle, TradeLog
import bigtrader.test_suite.utils


class TestSeries(unittest.TestCase):
    """
    `Test Series Notes:`

        This class tests the PriceSeries, StrengthSeries and TradeLog classes.
    """

    def setUp(self) -> None:
        self.dates: list[datetime.date] = [ts.date() for ts in pd.bdate_range('2012-01-02', periods=6)]
        self.prices: PriceSeries = PriceSeries('TEST', self.dates, [10.0, 11.0, 12.1, 11.0, 10.0, 10.5])
        self.utils = bigtrader.test_suite.utils

    # test PriceSeries
    def test_log_returns(self):
        returns: np.ndarray = self.prices.log_returns()
        self.assertEqual(len(returns), 5)
        self.assertAlmostEqual(returns[0], math.log(1.1), places=12)

    def test_slice(self):
        part: PriceSeries = self.prices.slice(1, 3)
        self.assertEqual(part.dates, self.dates[1:4])
        self.assertEqual(part.prices.tolist(), [11.0, 12.1, 11.0])
        with self.assertRaises(IndexError):
            self.prices.slice(4, 6)

    def test_prices_read_only(self):
        with self.assertRaises(ValueError):
            self.prices.prices[0] = 1.0

    def test_price_series_fail(self):
        with self.assertRaises(ValueError) as e:
            PriceSeries('TEST', self.dates[:2], [1.0])
        self.assertTrue(self.utils.spell_check(str(e.exception), 'PriceSeries needs one price per date. It has 2 dates '
                                                                 'and 1 prices.', False))
        with self.assertRaises(ValueError):
            PriceSeries('TEST', [self.dates[1], self.dates[0]], [1.0, 2.0])
        with self.assertRaises(ValueError):
            PriceSeries('TEST', self.dates[:2], [1.0, 0.0])
        value: int = 5
        with self.assertRaises(ValueError) as e:
            PriceSeries(value)
        self.assertTrue(self.utils.spell_check(str(e.exception), f'PriceSeries.symbol must be a str. It is a(n) '
                                                                 f'{value.__class__.__name__} with the value of '
                                                                 f'{value}.', False))

    def test_price_series_json(self):
        restored: PriceSeries = PriceSeries().from_json(self.prices.to_json())
        self.assertEqual(restored.dates, self.dates)
        self.assertEqual(restored.prices.tolist(), self.prices.prices.tolist())

    # test StrengthSeries
    def test_presence(self):
        nan: float = math.nan
        strengths: StrengthSeries = StrengthSeries('TEST', self.dates[:5], [nan, 0.1, -0.1, 0.1, -0.1],
                                                   [nan, 0.1, 0.1, -0.1, -0.1])
        self.assertEqual(strengths.presence(1), [None, Presence.BOTH, Presence.BIG_BUYER, Presence.BIG_SELLER,
                                                 Presence.TREND_FOLLOWER])
        self.assertEqual(strengths.presence_labels(1), ['', 'both', 'big_buyer', 'big_seller', 'trend_follower'])

    def test_mood(self):
        strengths: StrengthSeries = StrengthSeries('TEST', self.dates[:3], [0.1, 0.2, 0.3], [0.4, 0.4, 0.4])
        self.assertTrue(np.allclose(strengths.mood(1), [0.3, 0.2, 0.1]))
        self.assertAlmostEqual(strengths.mood(3)[2], 0.2, places=12)

    def test_strength_frame(self):
        nan: float = math.nan
        strengths: StrengthSeries = StrengthSeries('TEST', self.dates, [nan, nan, 0.1, 0.2, 0.3, nan],
                                                   [nan, nan, 0.0, 0.3, 0.6, nan])
        frame: pd.DataFrame = strengths.to_frame(2)
        self.assertEqual(frame['date'].tolist(), [date.isoformat() for date in self.dates[2:5]])
        self.assertTrue(math.isnan(frame['a7_bar_k'].iloc[0]))
        self.assertAlmostEqual(frame['a7_bar_k'].iloc[2], 0.45, places=12)
        # both smoothed strengths are positive once two estimates exist
        self.assertEqual(frame['presence'].tolist(), ['', 'both', 'both'])

    def test_strength_json(self):
        strengths: StrengthSeries = StrengthSeries('TEST', self.dates[:3], [math.nan, 0.1, 0.2], [math.nan, 0.0, 0.3])
        data: dict = strengths.to_json()
        self.assertIsNone(data['a6_hat'][0])
        restored: StrengthSeries = StrengthSeries().from_json(data)
        self.assertTrue(np.array_equal(restored.a7_hat, strengths.a7_hat, equal_nan=True))

    def test_strength_fail(self):
        with self.assertRaises(ValueError):
            StrengthSeries('TEST', self.dates[:3], [0.1, 0.2], [0.1, 0.2, 0.3])

    # test TradeLog
    def test_trade_log(self):
        log: TradeLog = TradeLog('TEST', StrategyKind.RIDE_MOOD)
        log.add_cycle(TradeCycle(self.dates[0], 10.0, self.dates[2], 12.1))
        log.add_cycle(TradeCycle(self.dates[3], 11.0, self.dates[5], 10.5))
        log.actions = [ActionType.BUY, None, ActionType.SELL]
        self.assertEqual(len(log), 2)
        self.assertAlmostEqual(log.accumulated_return, 1.21 * 10.5 / 11.0 - 1, places=12)

        frame: pd.DataFrame = log.to_frame()
        self.assertEqual(list(frame.columns), ['buy_date', 'buy_price', 'sell_date', 'sell_price', 'return'])
        self.assertEqual(frame['sell_date'].iloc[1], self.dates[5].isoformat())

        restored: TradeLog = TradeLog().from_json(log.to_json())
        self.assertEqual(restored.actions, log.actions)
        self.assertEqual(restored.kind, StrategyKind.RIDE_MOOD)
        self.assertEqual(restored.accumulated_return, log.accumulated_return)

    def test_trade_log_overlap(self):
        log: TradeLog = TradeLog('TEST', StrategyKind.FOLLOW_BB)
        log.add_cycle(TradeCycle(self.dates[0], 10.0, self.dates[2], 12.1))
        with self.assertRaises(ValueError):
            log.add_cycle(TradeCycle(self.dates[2], 12.1, self.dates[3], 11.0))

    def test_empty_trade_log(self):
        log: TradeLog = TradeLog('TEST', StrategyKind.FOLLOW_BB)
        self.assertEqual(log.accumulated_return, 0.0)
        self.assertEqual(len(log.to_frame()), 0)
