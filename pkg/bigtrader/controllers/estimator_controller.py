import math
from typing import Sequence

import numpy as np

from bigtrader.common.errors import ContractError
from bigtrader.common.estimator_state import EstimatorConfig, EstimatorState
from bigtrader.common.model_params import ExcessDemandPair, ModelParams
from bigtrader.common.price_series import PriceSeries
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.controllers.controller import Controller
from bigtrader.utils.excess_demand import excess_demand_pair


class EstimatorController(Controller):
    """
    `Estimator Controller Notes:`

        Recursive least squares with exponential forgetting over the regressor (ed6, ed7).

        Init:
            The estimate starts at (0, 0) with P = gamma * I.

        Step:
            One update from the regressor of day t and the log return from day t to day t + 1:

                K  = P ed / (ed' P ed + lam)
                a' = a + K (r - ed' a)
                P' = (I - K ed') P / lam,   then replaced by (P' + P'') / 2

            The denominator is at least lam, so a step never divides by zero. A step returns a new state and leaves
            the old one untouched.

        Estimate Series:
            Runs one step for every day that has a full mood window and a next-day price, starting from a fresh
            state. Each call is independent, so separate series can be estimated on separate threads.
    """

    def __init__(self, config: EstimatorConfig | None = None):
        super().__init__()
        self.config: EstimatorConfig = config if config is not None else EstimatorConfig()

    def init(self) -> EstimatorState:
        return EstimatorState(np.zeros(2), self.config.gamma * np.eye(2))

    def step(self, state: EstimatorState, ed: ExcessDemandPair | Sequence[float], r_next: float) -> EstimatorState:
        regressor: np.ndarray = np.asarray(ed.as_vector() if isinstance(ed, ExcessDemandPair) else ed, dtype=float)
        if regressor.shape != (2,) or not np.all(np.isfinite(regressor)) or not math.isfinite(r_next):
            raise ContractError(f'step needs a finite 2-vector regressor and a finite return. '
                                f'It got {regressor} and {r_next}.')

        lam: float = self.config.lam
        p_ed: np.ndarray = state.p @ regressor
        gain: np.ndarray = p_ed / (regressor @ p_ed + lam)

        a_hat: np.ndarray = state.a_hat + gain * (r_next - regressor @ state.a_hat)
        p: np.ndarray = (np.eye(2) - np.outer(gain, regressor)) @ state.p / lam
        p = (p + p.T) / 2

        return EstimatorState(a_hat, p)

    def estimate_series(self, prices: PriceSeries, params: ModelParams) -> StrengthSeries:
        values: np.ndarray = prices.prices
        if len(values) < params.n + 1:
            raise ContractError(
                f'estimate_series needs at least n + 1 = {params.n + 1} prices. {prices.symbol} has {len(values)}.')

        returns: np.ndarray = prices.log_returns()
        a6_hat: np.ndarray = np.full(len(values), np.nan)
        a7_hat: np.ndarray = np.full(len(values), np.nan)

        state: EstimatorState = self.init()
        window: list[float] = values.tolist()
        for t in range(params.n - 1, len(values) - 1):
            ed: ExcessDemandPair = excess_demand_pair(window[t - params.n + 1:t + 1], params)
            state = self.step(state, ed, float(returns[t]))
            a6_hat[t], a7_hat[t] = state.a_hat

        self.debug(f'{prices.symbol}: {len(values) - params.n} steps, final estimate {state.a_hat}')
        return StrengthSeries(prices.symbol, prices.dates, a6_hat, a7_hat)
