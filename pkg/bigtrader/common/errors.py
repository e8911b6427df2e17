"""
Errors raised by the backtester. Every error subclasses ``BigTraderError`` so the launcher can report any of them
with a single handler, and also the builtin it specializes so callers that only know about ``ValueError`` still
catch them.
"""


class BigTraderError(Exception):
    pass


class DomainError(BigTraderError, ValueError):
    """A value lies outside its mathematical domain (a nonpositive price, nonpositive starting cash)."""


class ContractError(BigTraderError, ValueError):
    """A caller broke a precondition (wrong window length, misaligned dates, a series that is too short)."""


class DegenerateRatioError(BigTraderError, ZeroDivisionError):
    """The signal-to-noise ratio is undefined because the noise is identically zero."""


class EmptyPlanError(BigTraderError, ValueError):
    """There are fewer trading days than one test interval needs."""


class LoadError(BigTraderError, ValueError):
    """An input file could not be parsed or broke a data invariant. The message names the offending row."""

    def __init__(self, path: str, row: int | None, reason: str):
        self.path: str = str(path)
        self.row: int | None = row
        self.reason: str = reason
        where: str = f'{self.path}, row {row}' if row is not None else self.path
        super().__init__(f'{where}: {reason}')
