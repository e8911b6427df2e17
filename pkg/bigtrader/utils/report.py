import math
import os

import pandas as pd

from bigtrader.common.backtest_report import BacktestReport, StrategyResult
from bigtrader.common.enums import StrategyKind
from bigtrader.common.trade_cycle import TradeLog
from bigtrader.utils.helpers import write_csv_file, write_json_file
from bigtrader.utils.statistics import profit_increase, risk_reduction, value_profit
import bigtrader.config as config

"""
Turns a BacktestReport into the report files. Every table is built in universe order and strategy order, so the same
report always gives byte-identical files.
"""

PORTFOLIO_COLUMNS: list[str] = ['strategy', 'aar', 'sdv', 'cycles_per_year', 'cost_per_year', 'net_return',
                                 'switch_gain', 'sdv_reduction', 'average_value', 'value_sdv', 'value_profit',
                                 'profit_increase', 'value_risk_reduction']
LAST_INTERVAL_COLUMNS: list[str] = ['strategy', 'symbol', 'row', 'buy_date', 'buy_price', 'sell_date', 'sell_price',
                                    'return']


def stock_stats_table(report: BacktestReport) -> pd.DataFrame:
    rows: list[dict] = []
    for entry in report.universe:
        for result in report.results.values():
            rows.append({'name': entry.name, 'weight': entry.weight} | result.stats_for(entry.symbol).as_row())
    columns: list[str] = ['symbol', 'name', 'weight', 'strategy', 'aar', 'sdv', 'cycles_per_year', 'cost_per_year',
                          'net_return', 'intervals', 'best', 'worst']
    return pd.DataFrame(rows, columns=columns)


def portfolio_stats_table(report: BacktestReport) -> pd.DataFrame:
    """
    One row per strategy. The comparison columns measure each strategy against Buy&Hold and are NaN on the
    Buy&Hold row and when Buy&Hold was not run:

        sdv_reduction:          (sdv_BH - sdv_X) / sdv_BH over the interval annual returns
        value_profit:           (aV - IM) / IM from the daily portfolio value
        profit_increase:        relative increase of value_profit over Buy&Hold's
        value_risk_reduction:   (sdv(aV_BH) - sdv(aV_X)) / sdv(aV_BH)
    """
    benchmark: StrategyResult | None = report.results.get(StrategyKind.BUY_HOLD)
    benchmark_profit: float = value_profit(benchmark.average_value, benchmark.valuation.initial_money) \
        if benchmark is not None else math.nan

    rows: list[dict] = []
    for kind, result in report.results.items():
        stats = result.portfolio_stats
        profit: float = value_profit(result.average_value, result.valuation.initial_money)
        compared: bool = benchmark is not None and kind is not StrategyKind.BUY_HOLD
        rows.append({
            'strategy': kind.label,
            'aar': stats.aar,
            'sdv': stats.sdv,
            'cycles_per_year': stats.cycles_per_year,
            'cost_per_year': stats.cost_per_year,
            'net_return': stats.net_return,
            'switch_gain': report.switch_gains.get(kind, math.nan),
            'sdv_reduction': risk_reduction(stats.sdv, benchmark.portfolio_stats.sdv) if compared else math.nan,
            'average_value': result.average_value,
            'value_sdv': result.value_sdv,
            'value_profit': profit,
            'profit_increase': profit_increase(profit, benchmark_profit) if compared else math.nan,
            'value_risk_reduction': risk_reduction(result.value_sdv, benchmark.value_sdv) if compared else math.nan,
        })
    return pd.DataFrame(rows, columns=PORTFOLIO_COLUMNS)


def interval_returns_table(report: BacktestReport) -> pd.DataFrame:
    """
    One row per strategy, stock and test interval, then the portfolio rows of each strategy.
    """
    rows: list[dict] = []
    for kind, result in report.results.items():
        for entry in report.universe:
            stats = result.stats_for(entry.symbol)
            cycles: list[int] = result.interval_cycles[entry.symbol]
            for index, (ar, (start, end)) in enumerate(zip(stats.annual_returns, report.interval_dates[entry.symbol])):
                rows.append({'strategy': kind.label, 'symbol': entry.symbol, 'interval': index, 'start_date': start,
                             'end_date': end, 'annual_return': ar, 'cycles': cycles[index]})
        for index, ar in enumerate(result.portfolio_stats.annual_returns):
            rows.append({'strategy': kind.label, 'symbol': config.PORTFOLIO_SYMBOL, 'interval': index,
                         'start_date': '', 'end_date': '', 'annual_return': ar, 'cycles': ''})
    columns: list[str] = ['strategy', 'symbol', 'interval', 'start_date', 'end_date', 'annual_return', 'cycles']
    return pd.DataFrame(rows, columns=columns)


def valuations_table(report: BacktestReport) -> pd.DataFrame:
    frames: list[pd.DataFrame] = [result.valuation.to_long_frame() for result in report.results.values()]
    if not frames:
        return pd.DataFrame(columns=['date', 'strategy', 'symbol', 'value'])
    return pd.concat(frames, ignore_index=True)


def cycles_table(report: BacktestReport) -> pd.DataFrame:
    frames: list[pd.DataFrame] = []
    for kind, result in report.results.items():
        for entry in report.universe:
            frame: pd.DataFrame = result.whole_span_logs[entry.symbol].to_frame()
            frame.insert(0, 'symbol', entry.symbol)
            frame.insert(0, 'strategy', kind.label)
            frames.append(frame)
    columns: list[str] = ['strategy', 'symbol', 'buy_date', 'buy_price', 'sell_date', 'sell_price', 'return']
    non_empty: list[pd.DataFrame] = [frame for frame in frames if len(frame) > 0]
    if not non_empty:
        return pd.DataFrame(columns=columns)
    return pd.concat(non_empty, ignore_index=True)[columns]


def last_interval_table(report: BacktestReport) -> pd.DataFrame:
    """
    The cycles of every strategy on every stock over the last test interval, each stock's cycles followed by an
    accumulated return row and a Buy&Hold return row for the same interval. Summary rows leave the trade columns
    empty and carry their figure in ``return``.
    """
    rows: list[dict] = []
    for kind, result in report.results.items():
        for entry in report.universe:
            log: TradeLog = result.last_interval_logs[entry.symbol]
            for cycle in log.to_frame().to_dict('records'):
                rows.append({'strategy': kind.label, 'symbol': entry.symbol, 'row': 'cycle'} | cycle)
            for label, figure in (('accumulated_return', log.accumulated_return),
                                  ('buy_hold_return', log.buy_hold_return)):
                rows.append({'strategy': kind.label, 'symbol': entry.symbol, 'row': label, 'buy_date': '',
                             'buy_price': math.nan, 'sell_date': '', 'sell_price': math.nan, 'return': figure})
    return pd.DataFrame(rows, columns=LAST_INTERVAL_COLUMNS)


def benchmark_ranking(result: StrategyResult, benchmark: StrategyResult, top: int = config.RANKING_TOP) -> pd.DataFrame:
    """
    The stocks on which a strategy beat Buy&Hold by the most and trailed it by the most, measured by the difference
    of their average annual returns. Ties keep universe order.
    """
    rows: list[dict] = [{
        'symbol': stats.symbol,
        'aar': stats.aar,
        'benchmark_aar': benchmark.stats_for(stats.symbol).aar,
        'difference': stats.aar - benchmark.stats_for(stats.symbol).aar,
    } for stats in result.stock_stats]
    ranked: pd.DataFrame = pd.DataFrame(rows, columns=['symbol', 'aar', 'benchmark_aar', 'difference'])

    winners: pd.DataFrame = ranked.sort_values('difference', ascending=False, kind='stable').head(top)
    losers: pd.DataFrame = ranked.sort_values('difference', ascending=True, kind='stable').head(top)
    winners.insert(0, 'rank', range(1, len(winners) + 1))
    losers.insert(0, 'rank', range(1, len(losers) + 1))
    winners.insert(0, 'group', 'winner')
    losers.insert(0, 'group', 'loser')
    table: pd.DataFrame = pd.concat([winners, losers], ignore_index=True)
    table.insert(0, 'strategy', result.kind.label)
    return table


def rankings_table(report: BacktestReport, top: int = config.RANKING_TOP) -> pd.DataFrame:
    columns: list[str] = ['strategy', 'group', 'rank', 'symbol', 'aar', 'benchmark_aar', 'difference']
    if StrategyKind.BUY_HOLD not in report.results:
        return pd.DataFrame(columns=columns)
    benchmark: StrategyResult = report.results[StrategyKind.BUY_HOLD]
    frames: list[pd.DataFrame] = [benchmark_ranking(result, benchmark, top)
                                  for kind, result in report.results.items() if kind is not StrategyKind.BUY_HOLD]
    if not frames:
        return pd.DataFrame(columns=columns)
    return pd.concat(frames, ignore_index=True)[columns]


def emit_report(report: BacktestReport, out_dir: str, top: int = config.RANKING_TOP) -> list[str]:
    """
    Writes every report file into out_dir, creating it if needed.
    :return: the paths written, in writing order
    """
    os.makedirs(out_dir, exist_ok=True)
    tables: dict[str, pd.DataFrame] = {
        config.STOCK_STATS_FILE_NAME: stock_stats_table(report),
        config.PORTFOLIO_STATS_FILE_NAME: portfolio_stats_table(report),
        config.INTERVAL_RETURNS_FILE_NAME: interval_returns_table(report),
        config.VALUATIONS_FILE_NAME: valuations_table(report),
        config.CYCLES_FILE_NAME: cycles_table(report),
        config.LAST_INTERVAL_FILE_NAME: last_interval_table(report),
        config.RANKINGS_FILE_NAME: rankings_table(report, top),
    }

    written: list[str] = []
    for file_name, table in tables.items():
        path: str = os.path.join(out_dir, file_name)
        write_csv_file(table, path)
        written.append(path)

    for file_name, data in ((config.RESULTS_FILE_NAME, report.to_json()),
                            (config.RUN_CONFIG_FILE_NAME, report.run_config)):
        path = os.path.join(out_dir, file_name)
        write_json_file(data, path)
        written.append(path)
    return written
