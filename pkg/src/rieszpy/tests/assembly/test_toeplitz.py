import unittest
import numpy as np
from rieszpy.assembly import assemble_matrix, toeplitz_coefficients, toeplitz_split
from rieszpy.fracderiv import FractionalOrder, left_rl_cardinal, right_rl_cardinal
from rieszpy.splines import BSplineSpace


class ToeplitzCoefficientsTestCase(unittest.TestCase):
    def test_symmetric_in_shift(self):
        k = np.arange(12)
        for p in (2, 3, 4, 5):
            for alpha in (1.2, 1.5, 1.8):
                with self.subTest(p=p, alpha=alpha):
                    order = FractionalOrder(alpha)
                    t = toeplitz_coefficients(p, order, 12)
                    c = 0.5 * (p + 1) + k
                    mirrored = order.riesz_prefactor * (left_rl_cardinal(p, order, c) + right_rl_cardinal(p, order, c))
                    np.testing.assert_allclose(t, mirrored, rtol=0, atol=1e-13)

    def test_diagonal_dominates(self):
        t = toeplitz_coefficients(4, 1.6, 20)
        self.assertGreater(t[0], 0.0)
        self.assertTrue(np.all(np.abs(t[1:]) < t[0]))

    def test_decay(self):
        t = toeplitz_coefficients(3, 1.5, 200)
        # far coefficients fall off like k^{-1-α}
        self.assertLess(abs(t[199]), abs(t[20]))
        self.assertLess(abs(t[199]), 1e-3)


class ToeplitzSplitTestCase(unittest.TestCase):
    def test_interior_block(self):
        for p in (2, 3, 4, 5):
            with self.subTest(p=p):
                space = BSplineSpace(p, 32)
                split = toeplitz_split(assemble_matrix(space, 1.5))
                rows = np.arange(space.p, space.n + 2) - 2
                cols = space.interior_indices - 2
                block = split.correction[np.ix_(rows, cols)]
                self.assertLessEqual(float(np.abs(block).max()), 1e-12)

    def test_reconstruction(self):
        system = assemble_matrix(BSplineSpace(2, 16), 1.3)
        split = toeplitz_split(system)
        np.testing.assert_allclose(split.toeplitz + split.correction, system.scaled_matrix, atol=1e-14)
        np.testing.assert_array_equal(split.toeplitz, split.toeplitz.T)

    def test_rank_bound(self):
        for p in (2, 3, 4, 5):
            for n in (32, 64):
                with self.subTest(p=p, n=n):
                    split = toeplitz_split(assemble_matrix(BSplineSpace(p, n), 1.5))
                    self.assertEqual(split.rank_bound, 4 * (p - 1))
                    self.assertLessEqual(split.numerical_rank(), split.rank_bound)
                    self.assertGreater(split.correction_norm, 0.0)

    def test_correction_norm_bounded(self):
        for p in (2, 3):
            norms = [toeplitz_split(assemble_matrix(BSplineSpace(p, n), 1.5)).correction_norm for n in (16, 32, 64)]
            for a, b in zip(norms, norms[1:]):
                with self.subTest(p=p):
                    self.assertTrue(0.5 <= b / a <= 1.5)

    def test_rank_violation_logged(self):
        system = assemble_matrix(BSplineSpace(2, 8), 1.5)
        noise = np.random.default_rng(7).normal(size=system.matrix.shape)
        with self.assertLogs("rieszpy.assembly.toeplitz", level="WARNING"):
            split = toeplitz_split(system.with_matrix(noise))
        self.assertGreater(split.numerical_rank(), split.rank_bound)

    def test_repr(self):
        split = toeplitz_split(assemble_matrix(BSplineSpace(2, 8), 1.5))
        self.assertEqual(repr(split), "<ToeplitzSplit: size=8, rank_bound=4>")
