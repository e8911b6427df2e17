from bigtrader.common.enums import ActionType, PositionStatus
from bigtrader.common.position import Position
from bigtrader.controllers.controller import Controller


class BuyHoldController(Controller):
    """
    `Buy&Hold Controller Notes:`

        The benchmark. Buys on the first day of the interval and holds; the master controller sells at the last close.
    """

    def step(self, position: Position) -> ActionType:
        return ActionType.BUY if position.status is PositionStatus.CASH else ActionType.HOLD_STOCK
