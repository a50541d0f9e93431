import unittest
from math import gamma
import numpy as np
from rieszpy.fracderiv import (
    BoundaryData,
    caputo_left_piecewise,
    caputo_right_piecewise,
    fractional_by_quadrature,
    rl_left_from_caputo,
    rl_left_piecewise,
    rl_right_from_caputo,
    rl_right_piecewise,
)
from rieszpy.splines import BSplineSpace, PiecewisePolynomial, to_piecewise

ALPHA = 1.5


class CaputoTestCase(unittest.TestCase):
    def setUp(self):
        self.x = np.linspace(0.05, 1.0, 20)

    def test_square(self):
        f = PiecewisePolynomial([0.0, 1.0], [[0.0, 0.0, 1.0]])
        expected = 2.0 * self.x ** (2 - ALPHA) / gamma(3 - ALPHA)
        np.testing.assert_allclose(caputo_left_piecewise(f, ALPHA, self.x), expected, rtol=1e-13)

    def test_square_split_into_pieces(self):
        # y^2 written on [0, 0.5] and [0.5, 1] in local coordinates
        f = PiecewisePolynomial([0.0, 0.5, 1.0], [[0.0, 0.0, 1.0], [0.25, 1.0, 1.0]])
        expected = 2.0 * self.x ** (2 - ALPHA) / gamma(3 - ALPHA)
        np.testing.assert_allclose(caputo_left_piecewise(f, ALPHA, self.x), expected, rtol=1e-12)

    def test_right_square(self):
        # (1 - y)^2 = 1 - 2y + y^2
        f = PiecewisePolynomial([0.0, 1.0], [[1.0, -2.0, 1.0]])
        x = 1.0 - self.x
        expected = 2.0 * (1.0 - x) ** (2 - ALPHA) / gamma(3 - ALPHA)
        np.testing.assert_allclose(caputo_right_piecewise(f, ALPHA, x), expected, rtol=1e-12)

    def test_beyond_support_tail(self):
        # derivative of a function supported on [0, 0.5], evaluated beyond it
        space = BSplineSpace(3, 6)
        f = to_piecewise(space, 3)
        x = np.array([0.6, 0.8, 1.0])
        closed = caputo_left_piecewise(f, ALPHA, x, 0.0, 1.0)
        quad = [fractional_by_quadrature(f, ALPHA, xi, "left") for xi in x]
        np.testing.assert_allclose(closed, quad, rtol=1e-11, atol=1e-11)

    def test_matches_quadrature(self):
        space = BSplineSpace(4, 7)
        for j in (2, 3, 6):
            f = to_piecewise(space, j)
            for side, closed in (("left", caputo_left_piecewise), ("right", caputo_right_piecewise)):
                values = closed(f, 1.3, space.greville, 0.0, 1.0)
                quad = [fractional_by_quadrature(f, 1.3, xi, side) for xi in space.greville]
                np.testing.assert_allclose(values, quad, rtol=1e-10, atol=1e-9)

    def test_order_range(self):
        f = PiecewisePolynomial([0.0, 1.0], [[0.0, 0.0, 1.0]])
        with self.assertRaises(ValueError):
            caputo_left_piecewise(f, 0.5, 0.5)

    def test_domain_checks(self):
        f = PiecewisePolynomial([0.0, 1.0], [[0.0, 0.0, 1.0]])
        with self.assertRaises(ValueError):
            caputo_left_piecewise(f, ALPHA, 0.5, a=0.5)
        with self.assertRaises(ValueError):
            caputo_left_piecewise(f, ALPHA, 1.5)

    def test_scalar(self):
        f = PiecewisePolynomial([0.0, 1.0], [[0.0, 0.0, 1.0]])
        self.assertIsInstance(caputo_left_piecewise(f, ALPHA, 0.5), float)


class RiemannLiouvilleTestCase(unittest.TestCase):
    def setUp(self):
        self.x = np.linspace(0.05, 0.95, 19)

    def test_monomials(self):
        line = PiecewisePolynomial([0.0, 1.0], [[0.0, 1.0]])
        const = PiecewisePolynomial([0.0, 1.0], [[1.0, 0.0]])
        np.testing.assert_allclose(
            rl_left_piecewise(line, ALPHA, self.x), self.x ** (1 - ALPHA) / gamma(2 - ALPHA), rtol=1e-13
        )
        np.testing.assert_allclose(
            rl_left_piecewise(const, ALPHA, self.x), self.x ** (-ALPHA) / gamma(1 - ALPHA), rtol=1e-13
        )

    def test_right_linear(self):
        f = PiecewisePolynomial([0.0, 1.0], [[1.0, -1.0]])
        np.testing.assert_allclose(
            rl_right_piecewise(f, ALPHA, self.x),
            (1 - self.x) ** (1 - ALPHA) / gamma(2 - ALPHA),
            rtol=1e-13,
        )

    def test_zero_data_is_identity(self):
        bdata = BoundaryData()
        self.assertEqual(rl_left_from_caputo(2.5, bdata, ALPHA, 0.0), 2.5)
        self.assertEqual(rl_right_from_caputo(2.5, bdata, ALPHA, 1.0), 2.5)

    def test_singular_endpoint(self):
        bdata = BoundaryData(0.0, 1.0, 0.0, 1.0)
        with self.assertRaises(ValueError):
            rl_left_from_caputo(0.0, bdata, ALPHA, 0.0)
        with self.assertRaises(ValueError):
            rl_right_from_caputo(0.0, bdata, ALPHA, 1.0)
