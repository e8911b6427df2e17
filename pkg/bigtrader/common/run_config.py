from typing_extensions import Self

from pydantic import BaseModel, field_validator, model_validator

from bigtrader.common.cost_model import CostModel
from bigtrader.common.enums import StrategyKind
from bigtrader.common.estimator_state import EstimatorConfig
from bigtrader.common.model_params import ModelParams
import bigtrader.config as config


class RunConfig(BaseModel):
    """
    Every setting of one backtest run. Defaults are the values in ``bigtrader.config``. Each group of fields is
    checked by building the domain object it configures, so a RunConfig that validates always builds.
    """
    n: int = config.MODEL_WINDOW
    w: float = config.MEMBERSHIP_WIDTH
    lam: float = config.FORGETTING_FACTOR
    gamma: float = config.INITIAL_COVARIANCE
    strategies: list[StrategyKind] = list(config.DEFAULT_STRATEGIES)
    interval_length: int = config.INTERVAL_LENGTH
    stride: int = config.INTERVAL_STRIDE
    buy_rate: float = config.BUY_COST_RATE
    sell_rate: float = config.SELL_COST_RATE
    initial_money: float = config.INITIAL_MONEY
    universe_path: str | None = None
    prices_dir: str | None = None
    output_dir: str = config.RESULTS_DIR
    seed: int | None = None

    model_config: dict = {'from_attributes': True}

    @field_validator('strategies')
    @classmethod
    def strategies_are_unique(cls, strategies: list[StrategyKind]) -> list[StrategyKind]:
        if len(strategies) == 0:
            raise ValueError('at least one strategy must be selected')
        if len(set(strategies)) != len(strategies):
            raise ValueError('a strategy is selected more than once')
        return strategies

    @field_validator('interval_length', 'stride')
    @classmethod
    def at_least_one_day(cls, days: int) -> int:
        if days < 1:
            raise ValueError(f'must be at least 1 trading day, it is {days}')
        return days

    @field_validator('initial_money')
    @classmethod
    def positive_money(cls, money: float) -> float:
        if not money > 0:
            raise ValueError(f'must be greater than 0, it is {money}')
        return money

    @model_validator(mode='after')
    def domain_objects_build(self) -> Self:
        self.model_params()
        self.estimator_config()
        self.cost_model()
        return self

    def model_params(self) -> ModelParams:
        return ModelParams(self.n, self.w)

    def estimator_config(self) -> EstimatorConfig:
        return EstimatorConfig(self.lam, self.gamma)

    def cost_model(self) -> CostModel:
        return CostModel(self.buy_rate, self.sell_rate)

    def with_reference_defaults(self) -> Self:
        """
        A copy with every model, estimator, plan and cost setting put back to its default. Paths, strategies and the
        seed are kept.
        """
        return self.model_copy(update={
            'n': config.MODEL_WINDOW,
            'w': config.MEMBERSHIP_WIDTH,
            'lam': config.FORGETTING_FACTOR,
            'gamma': config.INITIAL_COVARIANCE,
            'interval_length': config.INTERVAL_LENGTH,
            'stride': config.INTERVAL_STRIDE,
            'buy_rate': config.BUY_COST_RATE,
            'sell_rate': config.SELL_COST_RATE,
            'initial_money': config.INITIAL_MONEY,
        })
