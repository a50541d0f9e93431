import unittest
import numpy as np
from rieszpy.splines import (
    BSplineSpace,
    cardinal_bspline,
    eval_bspline,
    eval_bspline_derivative,
    to_piecewise,
)


class CardinalTestCase(unittest.TestCase):
    def test_known_values(self):
        self.assertAlmostEqual(cardinal_bspline(1, 1.0), 1.0)
        self.assertAlmostEqual(cardinal_bspline(2, 1.5), 0.75)
        self.assertAlmostEqual(cardinal_bspline(3, 2.0), 2.0 / 3)
        self.assertEqual(cardinal_bspline(3, -0.5), 0.0)
        self.assertEqual(cardinal_bspline(3, 4.0), 0.0)

    def test_symmetry(self):
        rng = np.random.default_rng(1)
        for p in (2, 3, 6):
            t = rng.uniform(0, p + 1, 30)
            np.testing.assert_allclose(
                cardinal_bspline(p, t), cardinal_bspline(p, p + 1 - t), atol=1e-14
            )

    def test_integer_samples_sum_to_one(self):
        for p in (2, 3, 4, 5):
            self.assertAlmostEqual(float(np.sum(cardinal_bspline(p, np.arange(p + 2)))), 1.0, places=14)

    def test_bad_degree(self):
        with self.assertRaises(ValueError):
            cardinal_bspline(-1, 0.5)


class BSplineTestCase(unittest.TestCase):
    def setUp(self):
        self.space = BSplineSpace(3, 10)
        self.x = np.random.default_rng(7).uniform(0, 1, 40)

    def test_partition_of_unity(self):
        x = np.concatenate([[0.0, 1.0], self.x])
        total = sum(eval_bspline(self.space, i, x) for i in range(1, self.space.dimension + 1))
        np.testing.assert_allclose(total, 1.0, atol=1e-14)

    def test_end_values(self):
        s = self.space
        self.assertEqual(eval_bspline(s, 1, 0.0), 1.0)
        self.assertEqual(eval_bspline(s, s.dimension, 1.0), 1.0)
        for j in s.trimmed_indices:
            self.assertEqual(eval_bspline(s, j, 0.0), 0.0)
            self.assertEqual(eval_bspline(s, j, 1.0), 0.0)

    def test_interior_is_translated_cardinal(self):
        s = self.space
        for j in s.interior_indices:
            np.testing.assert_allclose(
                eval_bspline(s, j, self.x),
                cardinal_bspline(s.p, s.n * self.x - j + s.p + 1),
                atol=1e-14,
            )

    def test_boundary_slope(self):
        # N_2'(0) = p n for the open knot vector
        s = self.space
        self.assertAlmostEqual(eval_bspline_derivative(s, 2, 0.0), s.p * s.n, places=10)
        self.assertAlmostEqual(eval_bspline_derivative(s, 1, 0.0), -s.p * s.n, places=10)

    def test_derivative_matches_finite_difference(self):
        s, h = self.space, 1e-6
        x = np.clip(self.x, 2 * h, 1 - 2 * h)
        for j in (2, 3, 6):
            fd = (eval_bspline(s, j, x + h) - eval_bspline(s, j, x - h)) / (2 * h)
            np.testing.assert_allclose(eval_bspline_derivative(s, j, x), fd, atol=1e-5)

    def test_bad_arguments(self):
        with self.assertRaises(ValueError):
            eval_bspline(self.space, 1, 1.5)
        with self.assertRaises(ValueError):
            eval_bspline_derivative(self.space, 2, 0.5, order=4)
        with self.assertRaises(ValueError):
            eval_bspline(self.space, 14, 0.5)

    def test_scalar_in_scalar_out(self):
        self.assertIsInstance(eval_bspline(self.space, 4, 0.3), float)


class ToPiecewiseTestCase(unittest.TestCase):
    def test_matches_recursion(self):
        space = BSplineSpace(4, 9)
        x = np.random.default_rng(3).uniform(0, 1, 60)
        for j in range(1, space.dimension + 1):
            f = to_piecewise(space, j)
            np.testing.assert_allclose(f(x), eval_bspline(space, j, x), atol=1e-13)
            for order in (1, 2):
                np.testing.assert_allclose(
                    f.derivative(order)(x),
                    eval_bspline_derivative(space, j, x, order),
                    rtol=1e-10,
                    atol=1e-9,
                )

    def test_breakpoints_are_support_knots(self):
        space = BSplineSpace(3, 6)
        f = to_piecewise(space, 2)
        np.testing.assert_allclose(f.breakpoints, [0.0, 1 / 6, 2 / 6])
        self.assertEqual(f.degree, 3)
        g = to_piecewise(space, 5)
        self.assertEqual(g.intervals, 4)
