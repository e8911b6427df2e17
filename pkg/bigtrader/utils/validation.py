from bigtrader.common.errors import ContractError
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.universe_entry import UniverseEntry


def verify_universe(universe: list[UniverseEntry], prices: dict[str, PriceSeries],
                    min_days: int) -> ContractError | None:
    """
    Checks a universe can be backtested: every stock needs a price series with at least ``min_days`` closes. Returns
    the problem as an error for the caller to raise, or None.
    """
    res = None
    symbols: list[str] = [entry.symbol for entry in universe]
    missing: list[str] = [symbol for symbol in symbols if symbol not in prices]
    short: list[str] = [symbol for symbol in symbols if symbol in prices and len(prices[symbol]) < min_days]

    if len(universe) == 0:
        res = ContractError('The universe has no stocks.')
    elif len(set(symbols)) != len(symbols):
        res = ContractError('The universe lists a symbol more than once.')
    elif missing:
        res = ContractError(f'No prices were given for {", ".join(missing)}.')
    elif short:
        res = ContractError(f'{", ".join(short)} have fewer than the {min_days} closes one test interval needs.')

    return res
