import datetime
import math
from typing_extensions import Self

from bigtrader.common.enums import ObjectType, PositionStatus
from bigtrader.common.market_object import MarketObject


class Position(MarketObject):
    """
    `Position Class Notes:`

        A stock is held either entirely in cash or entirely in stock; there are no partial holdings. While in stock the
        position remembers the day and closing price of the buy. In cash both are None.

        Use ``enter`` and ``exit`` to change state; they refuse a buy while holding and a sell while in cash.
    """

    def __init__(self):
        super().__init__()
        self.object_type: ObjectType = ObjectType.POSITION
        self.__status: PositionStatus = PositionStatus.CASH
        self.__entry_date: datetime.date | None = None
        self.__entry_price: float | None = None

    @property
    def status(self) -> PositionStatus:
        return self.__status

    @property
    def entry_date(self) -> datetime.date | None:
        return self.__entry_date

    @property
    def entry_price(self) -> float | None:
        return self.__entry_price

    def enter(self, date: datetime.date, price: float) -> None:
        if self.status is PositionStatus.STOCK:
            raise ValueError(f'{self.__class__.__name__} is already holding stock bought on {self.entry_date}.')
        if price is None or isinstance(price, bool) or not isinstance(price, (int, float)) \
                or not math.isfinite(price) or price <= 0:
            raise ValueError(
                f'{self.__class__.__name__}.entry_price must be a positive float. '
                f'It is a(n) {price.__class__.__name__} with the value of {price}.')
        self.__status = PositionStatus.STOCK
        self.__entry_date = date
        self.__entry_price = float(price)

    def exit(self) -> tuple[datetime.date, float]:
        if self.status is PositionStatus.CASH:
            raise ValueError(f'{self.__class__.__name__} has no stock to sell.')
        entry: tuple[datetime.date, float] = (self.__entry_date, self.__entry_price)
        self.__status = PositionStatus.CASH
        self.__entry_date = None
        self.__entry_price = None
        return entry

    def to_json(self) -> dict:
        data: dict = super().to_json()
        data['status'] = self.status.name
        data['entry_date'] = self.entry_date.isoformat() if self.entry_date is not None else None
        data['entry_price'] = self.entry_price
        return data

    def from_json(self, data: dict) -> Self:
        super().from_json(data)
        self.__status = PositionStatus.CASH
        self.__entry_date = None
        self.__entry_price = None
        if PositionStatus[data['status']] is PositionStatus.STOCK:
            self.enter(datetime.date.fromisoformat(data['entry_date']), data['entry_price'])
        return self
