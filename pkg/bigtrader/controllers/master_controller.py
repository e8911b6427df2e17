import numpy as np

from bigtrader.common.enums import ActionType, PositionStatus, StrategyKind
from bigtrader.common.errors import ContractError
from bigtrader.common.position import Position
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.common.trade_cycle import TradeCycle, TradeLog
from bigtrader.controllers.buy_hold_controller import BuyHoldController
from bigtrader.controllers.controller import Controller
from bigtrader.controllers.follow_bb_controller import FollowBBController
from bigtrader.controllers.ride_mood_controller import RideMoodController


class MasterController(Controller):
    """
    `Master Controller Notes:`

        Runs one strategy over one test interval and returns its trade log.

        Daily Loop:
            The estimate stored at position d - 1 consumed the return into day d, so it is the newest estimate known
            at day d's close. The strategy reads the smoothed value at d - 1 and its Buy or Sell fills at day d's
            closing price. Days before the smoothed value exists are warm-up days with no action.

        Final Day:
            A position still in stock after the last day's action is sold at the last close. The forced sell may fall
            on the day of the buy.

        Buy&Hold:
            Needs no estimates. It buys at the first close, so it always makes exactly one cycle.
    """

    def __init__(self):
        super().__init__()
        self.follow_bb_controller: FollowBBController = FollowBBController()
        self.ride_mood_controller: RideMoodController = RideMoodController()
        self.buy_hold_controller: BuyHoldController = BuyHoldController()

    def run_strategy(self, prices: PriceSeries, strengths: StrengthSeries | None, kind: StrategyKind) -> TradeLog:
        if len(prices) == 0:
            raise ContractError('run_strategy needs at least one trading day.')
        if kind is not StrategyKind.BUY_HOLD and (strengths is None or strengths.dates != prices.dates):
            raise ContractError(f'run_strategy needs strengths on the same dates as the prices of {prices.symbol}.')

        signals: np.ndarray | tuple[np.ndarray, np.ndarray] | None = None
        match kind:
            case StrategyKind.FOLLOW_BB:
                signals = strengths.smoothed(kind.smoothing)
            case StrategyKind.RIDE_MOOD:
                signals = strengths.mood(kind.smoothing)

        closes: list[float] = prices.prices.tolist()
        dates = prices.dates
        position: Position = Position()
        log: TradeLog = TradeLog(prices.symbol, kind)

        for day in range(len(closes)):
            action: ActionType | None = self.__decide(kind, position, signals, day)
            log.actions.append(action)

            if action is ActionType.BUY:
                position.enter(dates[day], closes[day])
            elif action is ActionType.SELL:
                self.__close(position, log, dates[day], closes[day])

        if position.status is PositionStatus.STOCK:
            self.__close(position, log, dates[-1], closes[-1])
            log.forced_exit = True

        log.buy_hold_return = closes[-1] / closes[0] - 1
        return log

    def __close(self, position: Position, log: TradeLog, date, price: float) -> None:
        buy_date, buy_price = position.exit()
        log.add_cycle(TradeCycle(buy_date, buy_price, date, price))
        self.debug(f'{log.symbol} {log.kind.label}: {log.cycles[-1]}')

    def __decide(self, kind: StrategyKind, position: Position, signals, day: int) -> ActionType | None:
        if kind is StrategyKind.BUY_HOLD:
            return self.buy_hold_controller.step(position)
        if day == 0:
            return None

        match kind:
            case StrategyKind.FOLLOW_BB:
                a6_bar, a7_bar = signals[0][day - 1], signals[1][day - 1]
                if np.isnan(a6_bar) or np.isnan(a7_bar):
                    return None
                return self.follow_bb_controller.step(position, float(a7_bar), float(a6_bar))
            case StrategyKind.RIDE_MOOD:
                mood: float = signals[day - 1]
                if np.isnan(mood):
                    return None
                return self.ride_mood_controller.step(position, float(mood))
