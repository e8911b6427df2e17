from bigtrader.common.enums import ActionType, PositionStatus
from bigtrader.common.position import Position
from bigtrader.controllers.controller import Controller


class FollowBBController(Controller):
    """
    `FollowBB Controller Notes:`

        Follow the big buyer. Reads the 3-day smoothed strengths.

            Cash,  a7_bar > 0 and a6_bar < 0  ->  Buy
            Cash,  otherwise                  ->  Stay in cash
            Stock, a7_bar > 0                 ->  Hold, whatever the big seller does
            Stock, a7_bar <= 0                ->  Sell

        Entry needs the big buyer present and the big seller absent. Once in, only the big buyer leaving ends the
        cycle.
    """

    def step(self, position: Position, a7_bar: float, a6_bar: float) -> ActionType:
        if position.status is PositionStatus.CASH:
            return ActionType.BUY if a7_bar > 0 and a6_bar < 0 else ActionType.STAY_CASH
        return ActionType.HOLD_STOCK if a7_bar > 0 else ActionType.SELL
