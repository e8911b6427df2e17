import datetime
import math
import os

import pandas as pd

from bigtrader.common.errors import LoadError
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.simulated_series import SimulatedSeries
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.common.universe_entry import UniverseEntry

"""
Readers for every CSV file the backtester takes in or writes out. Rows are numbered from 1 at the first data row
(the header is not counted); every LoadError names the file and that row.
"""

PRICE_COLUMNS: list[str] = ['date', 'adj_close']
UNIVERSE_COLUMNS: list[str] = ['symbol', 'name', 'weight']
PATH_COLUMNS: list[str] = ['start_day', 'a6', 'a7']
SIMULATED_COLUMNS: list[str] = ['day', 'price', 'signal', 'noise']
STRENGTH_COLUMNS: list[str] = ['date', 'a6_hat', 'a7_hat', 'a6_bar_k', 'a7_bar_k']


# stands in for the fields of a row with too many values; no CSV text can contain it
BAD_ROW_MARKER = '\0bad row'


def read_table(path: str, columns: list[str]) -> pd.DataFrame:
    """
    Reads a CSV file as text, lower-cases and strips the header and checks the required columns are there. A row
    with more values than the header is reported by its data row number.
    """
    extra_fields: list[list[str]] = []
    try:
        width: int = len(pd.read_csv(path, nrows=0).columns)

        def keep_bad_line(bad_line: list[str]) -> list[str]:
            extra_fields.append(bad_line)
            return [BAD_ROW_MARKER] * width

        frame: pd.DataFrame = pd.read_csv(path, dtype=str, keep_default_na=False, skipinitialspace=True,
                                          engine='python', on_bad_lines=keep_bad_line)
    except FileNotFoundError:
        raise LoadError(path, None, 'the file does not exist')
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise LoadError(path, None, f'the file is not a readable CSV file ({e})')

    if extra_fields:
        row: int = int((frame.iloc[:, 0] == BAD_ROW_MARKER).to_numpy().argmax()) + 1
        raise LoadError(path, row, f'the row has {len(extra_fields[0])} values but the header has {width} columns')

    # short rows come back as NaN even with keep_default_na off
    frame = frame.fillna('')
    frame.columns = frame.columns.str.lower().str.strip()
    missing: list[str] = [column for column in columns if column not in frame.columns]
    if missing:
        raise LoadError(path, None, f'the header is missing the column(s) {", ".join(missing)}')
    return frame


def _parse_float(path: str, row: int, column: str, text: str) -> float:
    try:
        value: float = float(text)
    except (TypeError, ValueError):
        raise LoadError(path, row, f'{column} "{text}" is not a number')
    if not math.isfinite(value):
        raise LoadError(path, row, f'{column} must be finite, it is {text}')
    return value


def _parse_date(path: str, row: int, text: str) -> datetime.date:
    try:
        return datetime.date.fromisoformat(text.strip())
    except ValueError:
        raise LoadError(path, row, f'date "{text}" is not an ISO date (YYYY-MM-DD)')


def load_prices(path: str, symbol: str | None = None) -> PriceSeries:
    """
    Loads a ``date,adj_close`` file. Dates must be ISO dates in strictly increasing order and prices positive.
    :param path: the CSV file
    :param symbol: the series symbol, the file name without extension if omitted
    """
    frame: pd.DataFrame = read_table(path, PRICE_COLUMNS)
    if len(frame) == 0:
        raise LoadError(path, None, 'the file has no price rows')

    dates: list[datetime.date] = []
    prices: list[float] = []
    for row, (date_text, price_text) in enumerate(zip(frame['date'], frame['adj_close']), start=1):
        date: datetime.date = _parse_date(path, row, date_text)
        price: float = _parse_float(path, row, 'adj_close', price_text)
        if price <= 0:
            raise LoadError(path, row, f'adj_close must be positive, it is {price_text}')
        if dates and date == dates[-1]:
            raise LoadError(path, row, f'date {date} appears twice')
        if dates and date < dates[-1]:
            raise LoadError(path, row, f'date {date} comes after {dates[-1]}; dates must be increasing')
        dates.append(date)
        prices.append(price)

    if symbol is None:
        symbol = os.path.splitext(os.path.basename(path))[0]
    return PriceSeries(symbol, dates, prices)


def load_universe(path: str) -> list[UniverseEntry]:
    """
    Loads a ``symbol,name,weight`` file. Symbols must be unique and weights positive.
    """
    frame: pd.DataFrame = read_table(path, UNIVERSE_COLUMNS)
    if len(frame) == 0:
        raise LoadError(path, None, 'the universe has no stocks')

    entries: list[UniverseEntry] = []
    seen: set[str] = set()
    for row, (symbol, name, weight_text) in enumerate(zip(frame['symbol'], frame['name'], frame['weight']), start=1):
        symbol = symbol.strip()
        if symbol == '':
            raise LoadError(path, row, 'symbol is empty')
        if symbol in seen:
            raise LoadError(path, row, f'symbol {symbol} appears twice')
        weight: float = _parse_float(path, row, 'weight', weight_text)
        if weight <= 0:
            raise LoadError(path, row, f'weight must be positive, it is {weight_text}')
        seen.add(symbol)
        entries.append(UniverseEntry(symbol, name.strip(), weight))
    return entries


def load_path_segments(path: str) -> list[tuple[int, float, float]]:
    """
    Loads a ``start_day,a6,a7`` strength path file, one row per segment or per day. Segments are returned sorted by
    start day; ``expand_path`` turns them into daily values.
    """
    frame: pd.DataFrame = read_table(path, PATH_COLUMNS)
    if len(frame) == 0:
        raise LoadError(path, None, 'the path has no segments')

    segments: list[tuple[int, float, float]] = []
    for row, (start_text, a6_text, a7_text) in enumerate(zip(frame['start_day'], frame['a6'], frame['a7']), start=1):
        try:
            start: int = int(start_text)
        except ValueError:
            raise LoadError(path, row, f'start_day "{start_text}" is not a whole number')
        if start < 0:
            raise LoadError(path, row, f'start_day must not be negative, it is {start}')
        if any(start == other for other, _, _ in segments):
            raise LoadError(path, row, f'start_day {start} appears twice')
        segments.append((start, _parse_float(path, row, 'a6', a6_text), _parse_float(path, row, 'a7', a7_text)))

    segments.sort(key=lambda segment: segment[0])
    if segments[0][0] != 0:
        raise LoadError(path, None, 'the first segment must start on day 0')
    return segments


def read_simulated(path: str) -> SimulatedSeries:
    """
    Reads back a simulated series written by the ``simulate`` command. The true strength path is not in the file.
    """
    frame: pd.DataFrame = pd.read_csv(path)
    missing: list[str] = [column for column in SIMULATED_COLUMNS if column not in frame.columns]
    if missing:
        raise LoadError(path, None, f'the header is missing the column(s) {", ".join(missing)}')

    n: int = int(-frame['day'].iloc[0]) + 1
    stepped: pd.DataFrame = frame[frame['signal'].notna()]
    return SimulatedSeries(n, frame['price'].to_numpy(), stepped['signal'].to_numpy(), stepped['noise'].to_numpy())


def read_strengths(path: str, symbol: str = '') -> StrengthSeries:
    """
    Reads back a strength file written by the ``estimate`` command. Only the days that carried an estimate are in
    the file; the smoothed columns are recomputed from the estimates when needed.
    """
    frame: pd.DataFrame = pd.read_csv(path)
    missing: list[str] = [column for column in STRENGTH_COLUMNS if column not in frame.columns]
    if missing:
        raise LoadError(path, None, f'the header is missing the column(s) {", ".join(missing)}')

    dates: list[datetime.date] = [datetime.date.fromisoformat(date) for date in frame['date']]
    return StrengthSeries(symbol, dates, frame['a6_hat'].to_numpy(dtype=float), frame['a7_hat'].to_numpy(dtype=float))
