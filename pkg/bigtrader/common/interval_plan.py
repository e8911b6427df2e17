from typing_extensions import Self

from bigtrader.common.enums import ObjectType
from bigtrader.common.market_object import MarketObject
import bigtrader.config as config


class IntervalPlan(MarketObject):
    """
    `IntervalPlan Class Notes:`

        The overlapping test intervals cut from one stock's trading days. Interval j covers trading days
        j * stride through j * stride + interval_length - 1, both included. Build plans with ``make_intervals`` in
        ``bigtrader.utils.intervals``.
    """

    def __init__(self, interval_length: int = config.INTERVAL_LENGTH, stride: int = config.INTERVAL_STRIDE,
                 intervals: list[tuple[int, int]] | None = None):
        super().__init__()
        self.object_type: ObjectType = ObjectType.INTERVAL_PLAN
        self.interval_length: int = interval_length
        self.stride: int = stride
        self.intervals: list[tuple[int, int]] = intervals if intervals is not None else []

    @property
    def interval_length(self) -> int:
        return self.__interval_length

    @interval_length.setter
    def interval_length(self, interval_length: int) -> None:
        if interval_length is None or isinstance(interval_length, bool) or not isinstance(interval_length, int) \
                or interval_length < 1:
            raise ValueError(
                f'{self.__class__.__name__}.interval_length must be an int of at least 1. '
                f'It is a(n) {interval_length.__class__.__name__} with the value of {interval_length}.')
        self.__interval_length: int = interval_length

    @property
    def stride(self) -> int:
        return self.__stride

    @stride.setter
    def stride(self, stride: int) -> None:
        if stride is None or isinstance(stride, bool) or not isinstance(stride, int) or stride < 1:
            raise ValueError(
                f'{self.__class__.__name__}.stride must be an int of at least 1. '
                f'It is a(n) {stride.__class__.__name__} with the value of {stride}.')
        self.__stride: int = stride

    @property
    def intervals(self) -> list[tuple[int, int]]:
        return list(self.__intervals)

    @intervals.setter
    def intervals(self, intervals: list[tuple[int, int]]) -> None:
        intervals = [(int(start), int(end)) for start, end in intervals]
        for index, (start, end) in enumerate(intervals):
            if end - start + 1 != self.interval_length or start != index * self.stride:
                raise ValueError(
                    f'{self.__class__.__name__}.intervals[{index}] must be ({index * self.stride}, '
                    f'{index * self.stride + self.interval_length - 1}). It is ({start}, {end}).')
        self.__intervals: list[tuple[int, int]] = intervals

    def __len__(self) -> int:
        return len(self.__intervals)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['interval_length'] = self.interval_length
        data['stride'] = self.stride
        data['intervals'] = [list(interval) for interval in self.intervals]
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.interval_length = data['interval_length']
        self.stride = data['stride']
        self.intervals = [tuple(interval) for interval in data['intervals']]
        return self
