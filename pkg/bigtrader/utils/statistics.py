import logging
import math
from typing import Mapping, Sequence

import numpy as np

from bigtrader.common.cost_model import CostModel
from bigtrader.common.errors import ContractError, DomainError
import bigtrader.config as config

"""
Return statistics of the backtest. Annual returns, their mean and spread, the weighted portfolio, cycle counts and
net-of-cost figures. All standard deviations divide by the number of values (population normalization).
"""


def annual_return(cash_in: float, cash_out: float) -> float:
    # every interval counts as config.INTERVAL_YEARS years, whatever its calendar span
    if not cash_in > 0:
        raise DomainError(f'annual_return needs cash_in greater than 0. It got {cash_in}.')
    return (cash_out - cash_in) / (config.INTERVAL_YEARS * cash_in)


def aggregate_stats(values: Sequence[float]) -> tuple[float, float]:
    """
    :return: (mean, population standard deviation)
    """
    if len(values) == 0:
        raise ContractError('aggregate_stats needs at least one value.')
    array: np.ndarray = np.asarray(values, dtype=float)
    return float(np.mean(array)), float(np.std(array))


def portfolio_return(returns: Mapping[str, float | Sequence[float]],
                     weights: Mapping[str, float]) -> float | np.ndarray:
    """
    The weighted mean sum_i w(i) * ar(i) / sum_i w(i). Pass one float per stock for a single interval, or one
    sequence per stock for all intervals at once, which gives one portfolio return per interval.
    """
    if set(returns) != set(weights) or len(weights) == 0:
        raise ContractError(
            f'portfolio_return needs returns and weights for the same stocks. '
            f'It got returns for {sorted(returns)} and weights for {sorted(weights)}.')

    symbols: list[str] = sorted(weights)
    weight_vector: np.ndarray = np.array([weights[symbol] for symbol in symbols], dtype=float)
    try:
        matrix: np.ndarray = np.array([returns[symbol] for symbol in symbols], dtype=float)
    except ValueError as e:
        raise ContractError('portfolio_return needs the same number of intervals for every stock.') from e

    combined: np.ndarray = weight_vector @ matrix / weight_vector.sum()
    return float(combined) if combined.ndim == 0 else combined


def cycles_per_year(cycle_counts: Sequence[int]) -> float:
    if len(cycle_counts) == 0:
        raise ContractError('cycles_per_year needs at least one interval.')
    return float(np.mean(cycle_counts)) / config.INTERVAL_YEARS


def cost_per_year(cycles: float, costs: CostModel) -> float:
    # the per-cycle cost is added, not compounded
    return cycles * costs.per_cycle_cost


def net_return(aar: float, cycles: float, costs: CostModel) -> float:
    return aar - cost_per_year(cycles, costs)


def switch_gain(net_x: float, net_buy_hold: float) -> float:
    """
    The relative improvement of a strategy's net return over Buy&Hold's. NaN, with a warning, when Buy&Hold's net
    return is exactly 0.
    """
    if net_buy_hold == 0:
        logging.warning('The switch gain is undefined because the Buy&Hold net return is 0.')
        return math.nan
    return (net_x - net_buy_hold) / net_buy_hold


def average_portfolio_value(values: Sequence[float]) -> tuple[float, float]:
    """
    :return: (mean, population standard deviation) of the daily portfolio values
    """
    return aggregate_stats(values)


def risk_reduction(sdv_x: float, sdv_buy_hold: float) -> float:
    """
    How much smaller a strategy's standard deviation is than Buy&Hold's, as a fraction of Buy&Hold's:
    (sdv_BH - sdv_X) / sdv_BH. Negative when the strategy is the riskier one. NaN, with a warning, when Buy&Hold's
    standard deviation is 0.
    """
    if sdv_buy_hold == 0:
        logging.warning('The risk reduction is undefined because the Buy&Hold standard deviation is 0.')
        return math.nan
    return (sdv_buy_hold - sdv_x) / sdv_buy_hold


def value_profit(average_value: float, initial_money: float) -> float:
    """
    The profit the average daily portfolio value stands for: (aV - IM) / IM.
    """
    if not initial_money > 0:
        raise DomainError(f'value_profit needs initial_money greater than 0. It got {initial_money}.')
    return (average_value - initial_money) / initial_money


def profit_increase(profit_x: float, profit_buy_hold: float) -> float:
    """
    The relative increase of a strategy's value profit over Buy&Hold's. NaN, with a warning, when Buy&Hold's value
    profit is exactly 0.
    """
    if profit_buy_hold == 0:
        logging.warning('The profit increase is undefined because the Buy&Hold value profit is 0.')
        return math.nan
    return (profit_x - profit_buy_hold) / profit_buy_hold
