import math
from typing import Sequence

import numpy as np
import pandas as pd

from bigtrader.common.errors import ContractError, DegenerateRatioError, DomainError
from bigtrader.common.estimator_state import EstimatorConfig
from bigtrader.common.model_params import ModelParams
from bigtrader.common.simulated_series import NoiseSpec, SimulatedSeries, TrueStrengthPath
from bigtrader.common.strength_series import StrengthSeries
from bigtrader.controllers.estimator_controller import EstimatorController
from bigtrader.utils.excess_demand import ed6, ed7, mood_index
import bigtrader.config as config


def expand_path(segments: Sequence[tuple[int, float, float]], days: int) -> TrueStrengthPath:
    """
    Expands piecewise-constant (start_day, a6, a7) segments into one value per day. A segment holds from its start
    day until the next segment starts; the last one holds through the final day.
    """
    if days < 1:
        raise ContractError(f'expand_path needs at least 1 day. It got {days}.')
    if len(segments) == 0 or segments[0][0] != 0:
        raise ContractError('expand_path needs a first segment that starts on day 0.')

    starts: list[int] = [int(start) for start, _, _ in segments]
    if any(later <= earlier for earlier, later in zip(starts, starts[1:])):
        raise ContractError(f'expand_path needs strictly increasing segment starts. It got {starts}.')
    if starts[-1] >= days:
        raise ContractError(f'expand_path got a segment starting on day {starts[-1]} of a {days}-day path.')

    a6: np.ndarray = np.empty(days)
    a7: np.ndarray = np.empty(days)
    ends: list[int] = starts[1:] + [days]
    for (start, seg_a6, seg_a7), end in zip(segments, ends):
        a6[start:end] = seg_a6
        a7[start:end] = seg_a7
    return TrueStrengthPath(a6, a7)


def simulate(params: ModelParams, path: TrueStrengthPath, noise: NoiseSpec, days: int,
             initial_prices: Sequence[float] | None = None) -> SimulatedSeries:
    """
    Iterates the big buyer / big seller price model forward:

        ln p_{t+1} - ln p_t = a6(t) * ed6(x_t) + a7(t) * ed7(x_t) + eps(t),   eps(t) ~ N(0, sigma ** 2)

    All noise draws are made before the loop, so a run with another sigma and the same seed sees the same draws
    scaled. The big trader term and the noise are recorded as they are applied.
    :param params: the model parameters
    :param path: the true strengths, at least ``days`` long
    :param noise: the noise level and seed
    :param days: T, the number of simulated days
    :param initial_prices: the n starting prices, oldest first; n copies of the default starting price if omitted
    :return: the simulated series
    """
    if days < 1:
        raise ContractError(f'simulate needs at least 1 day. It got {days}.')
    if len(path) < days:
        raise ContractError(f'simulate needs a strength for each of the {days} days. The path has {len(path)}.')

    if initial_prices is None:
        initial_prices = [config.SIMULATION_INITIAL_PRICE] * params.n
    if len(initial_prices) != params.n:
        raise ContractError(f'simulate needs n = {params.n} starting prices. It got {len(initial_prices)}.')
    for price in initial_prices:
        if not math.isfinite(price) or price <= 0:
            raise DomainError(f'simulate needs positive starting prices. It got {price}.')

    noise_terms: list[float] = (noise.sigma * noise.draws(days)).tolist()
    a6: list[float] = path.a6[:days].tolist()
    a7: list[float] = path.a7[:days].tolist()

    prices: list[float] = [float(price) for price in initial_prices]
    signal: list[float] = []
    for t in range(days):
        x: float = mood_index(prices[-params.n:], params)
        term: float = a6[t] * ed6(x, params.w) + a7[t] * ed7(x, params.w)
        next_price: float = prices[-1] * math.exp(term + noise_terms[t])
        if not math.isfinite(next_price) or next_price <= 0:
            raise DomainError(f'The simulated price left the representable range on day {t}.')
        signal.append(term)
        prices.append(next_price)

    truncated: TrueStrengthPath = TrueStrengthPath(a6, a7)
    return SimulatedSeries(params.n, prices, signal, noise_terms, truncated)


def signal_noise_ratio(series: SimulatedSeries) -> float:
    """
    The root mean square of the big trader terms over the root mean square of the noise terms.
    """
    if series.days < 1:
        raise ContractError('signal_noise_ratio needs at least 1 simulated day.')

    noise_rms: float = float(np.sqrt(np.mean(series.noise ** 2)))
    if noise_rms == 0:
        raise DegenerateRatioError('signal_noise_ratio is undefined because every noise term is 0.')
    return float(np.sqrt(np.mean(series.signal ** 2))) / noise_rms


def calibrate_sigma(params: ModelParams, path: TrueStrengthPath, target_ratio: float, seed: int, days: int,
                    initial_prices: Sequence[float] | None = None) -> float:
    """
    Finds the noise level whose run with the given seed measures the target signal-to-noise ratio. Bisects on
    log sigma inside config.CALIBRATION_SIGMA_BOUNDS; more noise means a smaller ratio.
    """
    if not target_ratio > 0:
        raise DomainError(f'calibrate_sigma needs a target ratio greater than 0. It got {target_ratio}.')

    low, high = (math.log(bound) for bound in config.CALIBRATION_SIGMA_BOUNDS)
    for _ in range(config.CALIBRATION_ITERATIONS):
        middle: float = (low + high) / 2
        series: SimulatedSeries = simulate(params, path, NoiseSpec(math.exp(middle), seed), days, initial_prices)
        if signal_noise_ratio(series) > target_ratio:
            low = middle
        else:
            high = middle
    return math.exp((low + high) / 2)


def estimation_overlay(series: SimulatedSeries, params: ModelParams, estimator_config: EstimatorConfig | None = None,
                       k: int = config.FOLLOW_BB_SMOOTHING) -> pd.DataFrame:
    """
    The true and estimated strengths of a simulated run side by side, one row per simulated day. The estimate of day
    d is the one that consumed day d's return, so it is the estimate of the strengths that produced that return.
    """
    if series.path is None:
        raise ContractError('estimation_overlay needs a series that still carries its true strength path.')
    if series.n != params.n:
        raise ContractError(f'estimation_overlay got a series simulated with n = {series.n} and params with '
                            f'n = {params.n}.')

    strengths: StrengthSeries = EstimatorController(estimator_config).estimate_series(series.to_price_series(), params)
    a6_bar, a7_bar = strengths.smoothed(k)

    # price position n - 1 + d is day d
    days: slice = slice(params.n - 1, params.n - 1 + series.days)
    return pd.DataFrame({
        'day': np.arange(series.days),
        'a6_true': series.path.a6,
        'a7_true': series.path.a7,
        'a6_hat': strengths.a6_hat[days],
        'a7_hat': strengths.a7_hat[days],
        'a6_bar': a6_bar[days],
        'a7_bar': a7_bar[days],
        'presence': strengths.presence_labels(k)[days],
    })
