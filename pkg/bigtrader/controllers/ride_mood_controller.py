from bigtrader.common.enums import ActionType, PositionStatus
from bigtrader.common.position import Position
from bigtrader.controllers.controller import Controller


class RideMoodController(Controller):
    """
    `RideMood Controller Notes:`

        Ride the mood. Reads mood = a7_bar - a6_bar over the 5-day smoothed strengths: buy when it turns positive,
        sell when it turns negative. A mood of exactly 0 carries no signal and keeps the current state.
    """

    def step(self, position: Position, mood: float) -> ActionType:
        if position.status is PositionStatus.CASH:
            return ActionType.BUY if mood > 0 else ActionType.STAY_CASH
        return ActionType.SELL if mood < 0 else ActionType.HOLD_STOCK
