import datetime
from typing import Sequence
from typing_extensions import Self

import numpy as np
import pandas as pd

from bigtrader.common.enums import ObjectType, Presence
from bigtrader.common.market_object import MarketObject
from bigtrader.utils.least_squares import moving_average


class StrengthSeries(MarketObject):
    """
    `StrengthSeries Class Notes:`

        The estimated strengths over a price series, one entry per price.

        Alignment:
            The estimate stored at position t is the one produced after the return from day t to day t + 1 was
            consumed, so it first becomes known at the close of day t + 1. Positions with no estimate (the first
            n - 1 days, which have no full mood window, and the final day, which has no next return) hold NaN.

        Smoothing:
            ``smoothed(k)`` takes the trailing k-day mean of both estimates. It is NaN until k estimates exist.
            ``mood(k)`` is the smoothed big buyer strength minus the smoothed big seller strength and ``presence(k)``
            reads the smoothed pair as a daily label.
    """

    def __init__(self, symbol: str = '', dates: Sequence[datetime.date] = (), a6_hat: Sequence[float] = (),
                 a7_hat: Sequence[float] = ()):
        super().__init__()
        self.object_type: ObjectType = ObjectType.STRENGTH_SERIES
        self.symbol: str = symbol
        self.dates: list[datetime.date] = [pd.Timestamp(date).date() for date in dates]
        self.a6_hat: np.ndarray = np.asarray(a6_hat, dtype=float)
        self.a7_hat: np.ndarray = np.asarray(a7_hat, dtype=float)

        if not len(self.dates) == self.a6_hat.size == self.a7_hat.size:
            raise ValueError(
                f'{self.__class__.__name__} needs one a6_hat and one a7_hat per date. It has {len(self.dates)} '
                f'dates, {self.a6_hat.size} a6_hat values and {self.a7_hat.size} a7_hat values.')

    def __len__(self) -> int:
        return len(self.dates)

    def defined(self) -> np.ndarray:
        return ~np.isnan(self.a6_hat)

    def smoothed(self, k: int) -> tuple[np.ndarray, np.ndarray]:
        return moving_average(self.a6_hat, k), moving_average(self.a7_hat, k)

    def mood(self, k: int) -> np.ndarray:
        a6_bar, a7_bar = self.smoothed(k)
        return a7_bar - a6_bar

    def presence(self, k: int) -> list[Presence | None]:
        a6_bar, a7_bar = self.smoothed(k)
        labels: list[Presence | None] = []
        for a6, a7 in zip(a6_bar, a7_bar):
            if np.isnan(a6) or np.isnan(a7):
                labels.append(None)
            elif a7 > 0 and a6 > 0:
                labels.append(Presence.BOTH)
            elif a7 > 0:
                labels.append(Presence.BIG_BUYER)
            elif a6 > 0:
                labels.append(Presence.BIG_SELLER)
            else:
                labels.append(Presence.TREND_FOLLOWER)
        return labels

    def presence_labels(self, k: int) -> list[str]:
        # lower-case Presence names, empty before the smoothed pair exists
        return [label.name.lower() if label is not None else '' for label in self.presence(k)]

    def to_frame(self, k: int) -> pd.DataFrame:
        """
        The rows that carry an estimate, with the k-day smoothed columns NaN and the presence label empty until k
        estimates exist.
        """
        a6_bar, a7_bar = self.smoothed(k)
        frame: pd.DataFrame = pd.DataFrame({
            'date': [date.isoformat() for date in self.dates],
            'a6_hat': self.a6_hat,
            'a7_hat': self.a7_hat,
            'a6_bar_k': a6_bar,
            'a7_bar_k': a7_bar,
            'presence': self.presence_labels(k),
        })
        return frame[self.defined()].reset_index(drop=True)

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['symbol'] = self.symbol
        data['dates'] = [date.isoformat() for date in self.dates]
        # NaN is not valid JSON
        data['a6_hat'] = [None if np.isnan(value) else float(value) for value in self.a6_hat]
        data['a7_hat'] = [None if np.isnan(value) else float(value) for value in self.a7_hat]
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.symbol = data['symbol']
        self.dates = [datetime.date.fromisoformat(date) for date in data['dates']]
        self.a6_hat = np.array([np.nan if value is None else value for value in data['a6_hat']], dtype=float)
        self.a7_hat = np.array([np.nan if value is None else value for value in data['a7_hat']], dtype=float)
        return self
