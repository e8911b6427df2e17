from typing import Sequence

import numpy as np
import pandas as pd

from bigtrader.common.errors import ContractError
from bigtrader.common.model_params import ExcessDemandPair


def moving_average(values: Sequence[float], k: int) -> np.ndarray:
    """
    Trailing k-day mean. Day t averages days t - k + 1 through t; a day without k defined values behind it is NaN,
    so NaN inputs (days before the estimator produced anything) push the first defined output k - 1 days later.
    :param values: one value per day, NaN where undefined
    :param k: window length in days, at least 1
    :return: an array the length of values
    """
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise ContractError(f'moving_average needs a window of at least 1 day. It got {k}.')

    return pd.Series(np.asarray(values, dtype=float)).rolling(k).mean().to_numpy()


def batch_weighted_ls(history: Sequence[tuple[ExcessDemandPair | Sequence[float], float]], lam: float, gamma: float,
                      t: int | None = None) -> np.ndarray:
    """
    Solves the exponentially weighted least squares problem directly:

        minimize   sum_i lam ** (t - i) * (r_{i+1} - ed_i . a) ** 2  +  (lam ** t / gamma) * |a| ** 2

    over the first t observations of the history (i = 1..t). The ridge term is the starting covariance P0 = gamma * I
    written as a prior, which makes the answer equal to t steps of the recursive estimator. lam = 1 is accepted here
    and gives ridge-regularized ordinary least squares.
    :param history: (regressor, next-day log return) pairs in the order they were observed
    :param lam: forgetting factor in (0, 1]
    :param gamma: initial covariance scale, greater than 0
    :param t: how many observations to use, all of them by default
    :return: the 2-vector (a6, a7) minimizing the objective
    """
    if len(history) == 0:
        raise ContractError('batch_weighted_ls needs at least one observation.')
    if not 0 < lam <= 1 or not gamma > 0:
        raise ContractError(f'batch_weighted_ls needs 0 < lam <= 1 and gamma > 0. It got lam = {lam}, gamma = {gamma}.')

    t = len(history) if t is None else t
    if not 1 <= t <= len(history):
        raise ContractError(f'batch_weighted_ls can use 1 to {len(history)} observations. It was asked for {t}.')

    regressors: np.ndarray = np.array([ed.as_vector() if isinstance(ed, ExcessDemandPair) else ed
                                       for ed, _ in history[:t]], dtype=float)
    returns: np.ndarray = np.array([r for _, r in history[:t]], dtype=float)
    weights: np.ndarray = lam ** np.arange(t - 1, -1, -1, dtype=float)

    normal: np.ndarray = (regressors * weights[:, None]).T @ regressors + (lam ** t / gamma) * np.eye(2)
    moment: np.ndarray = (regressors * weights[:, None]).T @ returns
    return np.linalg.solve(normal, moment)
