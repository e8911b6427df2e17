from bigtrader.common.errors import ContractError, EmptyPlanError
from bigtrader.common.interval_plan import IntervalPlan
import bigtrader.config as config


def make_intervals(total_days: int, length: int = config.INTERVAL_LENGTH,
                   stride: int = config.INTERVAL_STRIDE) -> IntervalPlan:
    """
    Slides a window of ``length`` trading days across ``total_days`` days, ``stride`` days at a time. The last window
    is the last one that still fits, so there are (total_days - length) // stride + 1 of them.
    """
    if length < 1 or stride < 1:
        raise ContractError(f'make_intervals needs length and stride of at least 1. It got {length} and {stride}.')
    if total_days < length:
        raise EmptyPlanError(f'{total_days} trading days cannot hold a {length}-day test interval.')

    intervals: list[tuple[int, int]] = []
    start: int = 0
    while start + length <= total_days:
        intervals.append((start, start + length - 1))
        start += stride

    return IntervalPlan(length, stride, intervals)
