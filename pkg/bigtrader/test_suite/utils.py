import datetime
import os

from bigtrader.common.model_params import ModelParams
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.simulated_series import NoiseSpec, SimulatedSeries, TrueStrengthPath
from bigtrader.common.universe_entry import UniverseEntry
from bigtrader.utils.helpers import write_csv_file
from bigtrader.utils.simulate import expand_path, simulate

"""
This file is used as utilities to help simplify unit tests. The spell_check() method will take in a given exception
string message and expected string message to compare the two. If a discrepancy is not found, the spell check() method
will return true. Otherwise, it will print what the discrepancy is and return false.

The remaining helpers build the synthetic price data the backtest tests run on.
"""


def spell_check(str1: str, str2: str, printing: bool) -> bool:
    """
    This will check the two given strings for any mismatching information.
    :param printing:
    :param str1:
    :param str2:
    :return: true or false
    """

    # Checks if str1 and str2's length are not equal
    if len(str1) != len(str2):
        if printing:
            print(f'\nThe length of "{str1}" and "{str2}" aren\'t equal')
        return False

    # Split the two Strings into lists divided by spaces
    temp1: list[str] = str1.split()
    temp2: list[str] = str2.split()

    # a list to be returned later
    result: list[tuple[str, str]] = []

    # Collects any discrepancies
    for i in range(len(temp1)):
        if temp1[i] != temp2[i]:
            result.append((temp1[i], temp2[i]))

    if len(result) == 0:
        return True

    # Prevents extra text from printing out
    if printing:
        space: str = '\n'
        # Print a message to show the discrepancies that were found in the "x | y" format
        print(f'\nDiscrepancies were found between "{str1}" and "{str2}". The following discrepancies are below in the '
              f'format "original | expected."\n')

        [print(pair[0] + " | " + pair[1] + space) for pair in result]

    return False


# both traders present with alternating strengths; every segment stays in the stable range
TWO_SIDED_SEGMENTS: list[tuple[int, float, float]] = [(0, 0.25, 0.25), (150, 0.15, 0.25), (300, 0.25, 0.15)]


def synthetic_series(days: int, seed: int, sigma: float = 0.02,
                     segments: list[tuple[int, float, float]] | None = None) -> SimulatedSeries:
    """
    A simulated run with ``days`` prices in total (the n starting prices included).
    """
    params: ModelParams = ModelParams()
    steps: int = days - params.n
    path: TrueStrengthPath = expand_path(segments if segments is not None else [(0, 0.1, 0.2)], steps)
    return simulate(params, path, NoiseSpec(sigma, seed), steps)


def synthetic_prices(symbol: str, days: int, seed: int,
                     start: datetime.date = datetime.date(2007, 7, 3)) -> PriceSeries:
    return synthetic_series(days, seed).to_price_series(symbol, start)


def write_universe(directory: str, symbols: list[str], days: int) -> tuple[str, str]:
    """
    Writes a universe file and one price file per symbol under directory.
    :return: (universe file path, prices directory)
    """
    prices_dir: str = os.path.join(directory, 'prices')
    os.makedirs(prices_dir, exist_ok=True)
    entries: list[UniverseEntry] = []
    for index, symbol in enumerate(symbols):
        write_csv_file(synthetic_prices(symbol, days, seed=index + 1).to_frame(),
                       os.path.join(prices_dir, f'{symbol}.csv'))
        entries.append(UniverseEntry(symbol, f'Stock {symbol}', float(len(symbols) - index)))

    universe_path: str = os.path.join(directory, 'universe.csv')
    with open(universe_path, 'w') as f:
        f.write('symbol,name,weight\n')
        for entry in entries:
            f.write(f'{entry.symbol},{entry.name},{entry.weight}\n')
    return universe_path, prices_dir


def scaled_prices(series: PriceSeries, factor: float) -> PriceSeries:
    return PriceSeries(series.symbol, series.dates, series.prices * factor)


def scaled_path(path: TrueStrengthPath, factor: float) -> TrueStrengthPath:
    return TrueStrengthPath(path.a6 * factor, path.a7 * factor)
