import datetime
from typing import Mapping

import numpy as np
import pandas as pd

from bigtrader.common.cost_model import CostModel
from bigtrader.common.enums import StrategyKind
from bigtrader.common.errors import ContractError, DomainError
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.trade_cycle import TradeLog
from bigtrader.common.valuation_series import ValuationSeries
from bigtrader.controllers.controller import Controller
import bigtrader.config as config


class ValuationController(Controller):
    """
    `Valuation Controller Notes:`

        Marks every stock's sub-account to market once a day. No money moves between stocks.

        Share:
            Stock i starts with IM * w(i) / sum_j w(j).

        In Cash:
            After N completed cycles the sub-account holds

                share * prod_k (sell_k / buy_k) * (1 - buy_rate) ** N * (1 - sell_rate) ** N

            A cycle counts as completed from its sell day on.

        In Stock:
            The cash value above, times p(t) / p(buy) of the open cycle. The open cycle's own costs are only charged
            once it is sold.

        Portfolio:
            The sum over stocks per calendar date. A stock without a close on some date carries its last value.
    """

    def market_value_series(self, logs: Mapping[str, TradeLog], prices: Mapping[str, PriceSeries],
                            weights: Mapping[str, float], initial_money: float = config.INITIAL_MONEY,
                            costs: CostModel | None = None) -> ValuationSeries:
        costs = costs if costs is not None else CostModel()
        if not initial_money > 0:
            raise DomainError(f'market_value_series needs initial money greater than 0. It got {initial_money}.')
        if not set(logs) == set(prices) == set(weights) or len(weights) == 0:
            raise ContractError('market_value_series needs a trade log, prices and a weight for the same stocks.')

        kinds: set[StrategyKind] = {log.kind for log in logs.values()}
        if len(kinds) != 1:
            raise ContractError('market_value_series values one strategy at a time.')

        total_weight: float = sum(weights.values())
        columns: dict[str, pd.Series] = {}
        shares: dict[str, float] = {}
        for symbol in weights:
            shares[symbol] = initial_money * weights[symbol] / total_weight
            columns[symbol] = self.__stock_values(logs[symbol], prices[symbol], shares[symbol], costs)

        frame: pd.DataFrame = pd.concat(columns, axis=1).sort_index().ffill()
        frame = frame.fillna(value=shares)
        frame[config.PORTFOLIO_SYMBOL] = frame[list(weights)].sum(axis=1)

        self.debug(f'{kinds.pop().label}: {len(frame)} days valued, final portfolio value '
                   f'{frame[config.PORTFOLIO_SYMBOL].iloc[-1]:.4f}')
        return ValuationSeries(logs[next(iter(logs))].kind, initial_money, frame)

    def __stock_values(self, log: TradeLog, prices: PriceSeries, share: float, costs: CostModel) -> pd.Series:
        dates: list[datetime.date] = prices.dates
        closes: np.ndarray = prices.prices
        positions: dict[datetime.date, int] = {date: index for index, date in enumerate(dates)}

        # cash value after each completed cycle, and the day ranges each cycle holds stock
        values: np.ndarray = np.empty(len(dates))
        cash: float = share
        day: int = 0
        for cycle in log.cycles:
            if cycle.buy_date not in positions or cycle.sell_date not in positions:
                raise ContractError(
                    f'{log.symbol} has a cycle from {cycle.buy_date} to {cycle.sell_date} without a close on one of '
                    f'those dates.')
            buy: int = positions[cycle.buy_date]
            sell: int = positions[cycle.sell_date]
            if buy < day:
                raise ContractError(f'{log.symbol} has overlapping cycles around {cycle.buy_date}.')

            values[day:buy] = cash
            values[buy:sell] = cash * closes[buy:sell] / cycle.buy_price
            cash *= cycle.sell_price / cycle.buy_price * costs.cycle_factor
            day = sell
        values[day:] = cash

        return pd.Series(values, index=dates)
