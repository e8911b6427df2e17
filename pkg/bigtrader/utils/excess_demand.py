import math
from typing import Sequence

import numpy as np

from bigtrader.common.errors import ContractError, DomainError
from bigtrader.common.model_params import ExcessDemandPair, ModelParams

"""
The mood index and the two excess demand curves of the big buyer / big seller model.

Every function here is pure. The curves are piecewise linear in x / w with breakpoints at 0, 2w and 3w (big seller)
and -3w, -2w and 0 (big buyer). Adjacent pieces agree at each breakpoint, so the scalar versions pick a branch with
half-open intervals and the vectorized version interpolates through the breakpoint table; both give the same values.
"""

# (x / w, excess demand) breakpoints; np.interp holds the end values outside the table
ED6_BREAKPOINTS: tuple[tuple[float, ...], tuple[float, ...]] = ((0.0, 2.0, 3.0), (0.0, -0.2, -0.4))
ED7_BREAKPOINTS: tuple[tuple[float, ...], tuple[float, ...]] = ((-3.0, -2.0, 0.0), (0.4, 0.2, 0.0))


def mood_index(window: Sequence[float], params: ModelParams) -> float:
    """
    The log of today's price over the mean of the n most recent prices, today's price included.
    :param window: the n most recent prices, oldest first, ending with today's price
    :param params: the model parameters, only n is used
    :return: the mood index x, a finite float
    """
    if len(window) != params.n:
        raise ContractError(f'mood_index needs a window of exactly {params.n} prices. It got {len(window)}.')

    for price in window:
        if not math.isfinite(price) or price <= 0:
            raise DomainError(f'mood_index needs positive prices. It got {price}.')

    mean: float = math.fsum(window) / params.n
    return math.log(window[-1] / mean)


def ed6(x: float, w: float) -> float:
    """
    Big seller excess demand. Zero while the price is at or below its mean, then falling to -0.4 once x reaches 3w.
    """
    _check_arguments(x, w)

    if x <= 0:
        return 0.0
    if x < 2 * w:
        return -0.1 * x / w
    if x < 3 * w:
        return max(-0.2 * x / w + 0.2, -0.4)
    return -0.4


def ed7(x: float, w: float) -> float:
    """
    Big buyer excess demand. Zero while the price is at or above its mean, then rising to 0.4 once x reaches -3w.
    """
    _check_arguments(x, w)

    if x >= 0:
        return 0.0
    if x > -2 * w:
        return -0.1 * x / w
    if x > -3 * w:
        return min(-0.2 * x / w - 0.2, 0.4)
    return 0.4


def excess_demand_pair(window: Sequence[float], params: ModelParams) -> ExcessDemandPair:
    """
    The regressor of one day: the mood index of the window pushed through both curves.
    """
    x: float = mood_index(window, params)
    return ExcessDemandPair(ed6(x, params.w), ed7(x, params.w))


def excess_demand_curves(x: np.ndarray, w: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Vectorized ed6 and ed7 over an array of mood indices.
    :return: (ed6 values, ed7 values), each shaped like x
    """
    if not w > 0:
        raise DomainError(f'The membership width must be greater than 0. It is {w}.')

    scaled: np.ndarray = np.asarray(x, dtype=float) / w
    if not np.all(np.isfinite(scaled)):
        raise DomainError('The mood index must be finite everywhere.')

    return np.interp(scaled, *ED6_BREAKPOINTS), np.interp(scaled, *ED7_BREAKPOINTS)


def _check_arguments(x: float, w: float) -> None:
    if not w > 0:
        raise DomainError(f'The membership width must be greater than 0. It is {w}.')
    if not math.isfinite(x):
        raise DomainError(f'The mood index must be finite. It is {x}.')
