import unittest

import numpy as np

from bigtrader.common.errors import ContractError
from bigtrader.common.model_params import ExcessDemandPair
from bigtrader.utils.least_squares import batch_weighted_ls, moving_average


class TestLeastSquares(unittest.TestCase):
    """
    `Test Least Squares Notes:`

        This class tests the trailing moving average and the direct weighted least squares solve.
    """

    # test moving average
    def test_moving_average_constant(self):
        for k in (1, 3, 5):
            smoothed: np.ndarray = moving_average([2.5] * 8, k)
            self.assertTrue(np.all(np.isnan(smoothed[:k - 1])))
            self.assertTrue(np.allclose(smoothed[k - 1:], 2.5))

    def test_moving_average_identity(self):
        values: list[float] = [1.0, -2.0, 3.5, np.nan, 4.0]
        smoothed: np.ndarray = moving_average(values, 1)
        self.assertTrue(np.array_equal(smoothed, np.array(values), equal_nan=True))

    def test_moving_average_mean(self):
        smoothed: np.ndarray = moving_average([1.0, 2.0, 3.0], 3)
        self.assertEqual(smoothed[2], 2.0)
        self.assertTrue(np.isnan(smoothed[0]) and np.isnan(smoothed[1]))

    def test_moving_average_leading_nan(self):
        smoothed: np.ndarray = moving_average([np.nan, np.nan, 1.0, 2.0, 3.0, 4.0], 3)
        self.assertEqual(np.isnan(smoothed).tolist(), [True, True, True, True, False, False])
        self.assertEqual(smoothed[5], 3.0)

    def test_moving_average_fail(self):
        for k in (0, -1, 2.5, True):
            with self.assertRaises(ContractError):
                moving_average([1.0, 2.0], k)

    # test batch weighted least squares
    def test_batch_all_zero_regressors(self):
        history: list = [((0.0, 0.0), 0.01), ((0.0, 0.0), -0.02), ((0.0, 0.0), 0.005)]
        self.assertTrue(np.array_equal(batch_weighted_ls(history, 0.95, 10.0), np.zeros(2)))

    def test_batch_single_observation(self):
        solution: np.ndarray = batch_weighted_ls([(ExcessDemandPair(-0.1, 0.0), 0.01)], 0.95, 10.0, 1)
        self.assertTrue(np.allclose(solution, [-0.00952381, 0.0], rtol=0, atol=1e-8))

    def test_batch_ordinary_least_squares(self):
        rng: np.random.Generator = np.random.default_rng(5)
        regressors: np.ndarray = np.column_stack([-rng.uniform(0, 0.4, 12), rng.uniform(0, 0.4, 12)])
        truth: np.ndarray = np.array([0.2, -0.1])
        returns: np.ndarray = regressors @ truth
        history: list = [(tuple(row), float(r)) for row, r in zip(regressors, returns)]

        expected: np.ndarray = np.linalg.lstsq(regressors, returns, rcond=None)[0]
        self.assertTrue(np.allclose(batch_weighted_ls(history, 1.0, 1e12), expected, rtol=0, atol=1e-9))
        self.assertTrue(np.allclose(batch_weighted_ls(history, 1.0, 1e12), truth, rtol=0, atol=1e-9))

    def test_batch_uses_first_t(self):
        history: list = [((-0.1, 0.0), 0.01), ((0.0, 0.2), 0.03), ((0.0, 0.0), 5.0)]
        self.assertTrue(np.allclose(batch_weighted_ls(history, 0.9, 10.0, 2),
                                    batch_weighted_ls(history[:2], 0.9, 10.0)))

    def test_batch_fail(self):
        with self.assertRaises(ContractError):
            batch_weighted_ls([], 0.95, 10.0)
        with self.assertRaises(ContractError):
            batch_weighted_ls([((0.0, 0.1), 0.0)], 0.0, 10.0)
        with self.assertRaises(ContractError):
            batch_weighted_ls([((0.0, 0.1), 0.0)], 0.95, -1.0)
        with self.assertRaises(ContractError):
            batch_weighted_ls([((0.0, 0.1), 0.0)], 0.95, 10.0, 2)
