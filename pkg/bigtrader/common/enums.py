from enum import Enum, IntEnum, auto

"""
**NOTE:** The use of the enum structure is to make it easier to execute certain tasks. It also helps with
identifying types of Objects throughout the project.

When extending the backtester, add any extra enums as necessary.
"""


class DebugLevel(IntEnum):
    NONE = auto()
    CLIENT = auto()
    CONTROLLER = auto()
    ENGINE = auto()


class ObjectType(Enum):
    NONE = auto()
    MODEL_PARAMS = auto()
    EXCESS_DEMAND_PAIR = auto()
    ESTIMATOR_CONFIG = auto()
    ESTIMATOR_STATE = auto()
    PRICE_SERIES = auto()
    STRENGTH_SERIES = auto()
    TRUE_STRENGTH_PATH = auto()
    NOISE_SPEC = auto()
    SIMULATED_SERIES = auto()
    POSITION = auto()
    TRADE_CYCLE = auto()
    TRADE_LOG = auto()
    COST_MODEL = auto()
    INTERVAL_PLAN = auto()
    UNIVERSE_ENTRY = auto()
    RETURN_STATS = auto()
    VALUATION_SERIES = auto()
    STRATEGY_RESULT = auto()
    BACKTEST_REPORT = auto()


class ActionType(Enum):
    BUY = auto()
    SELL = auto()
    HOLD_STOCK = auto()
    STAY_CASH = auto()


class PositionStatus(Enum):
    CASH = auto()
    STOCK = auto()


class Presence(Enum):
    """
    Daily reading of the smoothed strengths. BOTH means a big buyer and a big seller are present at once;
    TREND_FOLLOWER means neither is.
    """
    BIG_BUYER = auto()
    BIG_SELLER = auto()
    BOTH = auto()
    TREND_FOLLOWER = auto()


class StrategyKind(Enum):
    FOLLOW_BB = 'followbb'
    RIDE_MOOD = 'ridemood'
    BUY_HOLD = 'buyhold'

    @property
    def smoothing(self) -> int | None:
        # Buy&Hold never reads the estimates
        match self:
            case StrategyKind.FOLLOW_BB:
                return 3
            case StrategyKind.RIDE_MOOD:
                return 5
            case _:
                return None

    @property
    def label(self) -> str:
        return {StrategyKind.FOLLOW_BB: 'FollowBB',
                StrategyKind.RIDE_MOOD: 'RideMood',
                StrategyKind.BUY_HOLD: 'Buy&Hold'}[self]
