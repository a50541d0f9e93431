import unittest
import numpy as np
from numpy.polynomial import Polynomial
from rieszpy.manufactured import (
    ManufacturedSolution,
    get_solution,
    poly33,
    riesz_rhs,
    riesz_rhs_by_quadrature,
    sinpix2,
)


class SolutionTestCase(unittest.TestCase):
    def test_registry(self):
        self.assertEqual(get_solution("poly33").name, "poly33")
        self.assertEqual(get_solution("sinpix2").kind, "entire-series")
        with self.assertRaises(ValueError):
            get_solution("gaussian")

    def test_polynomial_boundary_data(self):
        self.assertTrue(poly33().bdata.is_zero)

    def test_sine_boundary_data(self):
        bdata = sinpix2().bdata
        self.assertEqual(bdata.left_value, 0.0)
        self.assertEqual(bdata.left_slope, 0.0)
        self.assertEqual(bdata.right_value, 0.0)
        self.assertAlmostEqual(bdata.right_slope, -2.0 * np.pi, places=12)

    def test_expansions(self):
        sol = sinpix2()
        x = np.linspace(0.0, 1.0, 201)
        np.testing.assert_allclose(Polynomial(sol.left_coeffs)(x), sol(x), atol=1e-13)
        np.testing.assert_allclose(Polynomial(sol.right_coeffs)(1.0 - x), sol(x), atol=1e-11)

    def test_second_derivative(self):
        x = np.linspace(0.0, 1.0, 11)
        expected = 2 * np.pi * np.cos(np.pi * x ** 2) - 4 * np.pi ** 2 * x ** 2 * np.sin(np.pi * x ** 2)
        np.testing.assert_allclose(sinpix2().second_derivative(x), expected, atol=1e-11)

    def test_must_vanish(self):
        with self.assertRaises(ValueError):
            ManufacturedSolution("one", np.ones_like, [1.0], [1.0])

    def test_repr(self):
        self.assertEqual(repr(poly33()), "<ManufacturedSolution: poly33 (polynomial)>")


class RieszRhsTestCase(unittest.TestCase):
    def test_matches_quadrature(self):
        x = np.linspace(0.02, 0.98, 17)
        for sol in (poly33(), sinpix2()):
            with self.subTest(solution=sol.name):
                exact = riesz_rhs(sol, 1.5, x)
                oracle = np.array([riesz_rhs_by_quadrature(sol, 1.5, xi) for xi in x])
                scale = max(1.0, float(np.max(np.abs(oracle))))
                np.testing.assert_allclose(exact, oracle, rtol=0, atol=1e-9 * scale)

    def test_square_of_line(self):
        # u = x^3 (1 - x)^3 is symmetric, so is its right-hand side
        x = np.linspace(0.05, 0.45, 9)
        np.testing.assert_allclose(riesz_rhs(poly33(), 1.3, x), riesz_rhs(poly33(), 1.3, 1.0 - x), rtol=1e-12)

    def test_integer_order_limit(self):
        sol = poly33()
        x = np.linspace(0.05, 0.95, 19)
        np.testing.assert_allclose(riesz_rhs(sol, 2.0, x), -sol.second_derivative(x), atol=1e-10)

    def test_endpoints_rejected(self):
        for x in (0.0, 1.0, [0.5, 1.0]):
            with self.assertRaises(ValueError):
                riesz_rhs(poly33(), 1.5, x)
        with self.assertRaises(ValueError):
            riesz_rhs_by_quadrature(poly33(), 1.5, 0.0)

    def test_shape(self):
        self.assertIsInstance(riesz_rhs(poly33(), 1.5, 0.5), float)
        self.assertEqual(riesz_rhs(poly33(), 1.5, np.full((2, 2), 0.5)).shape, (2, 2))
