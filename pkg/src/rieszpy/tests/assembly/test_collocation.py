import math
import unittest
import numpy as np
from rieszpy.assembly import (
    CollocationSystem,
    assemble_advection_reaction,
    assemble_left_right,
    assemble_matrix,
    assemble_rhs,
    collocation_system,
)
from rieszpy.fracderiv import (
    BoundaryData,
    FractionalOrder,
    fractional_by_quadrature,
    rl_left_from_caputo,
)
from rieszpy.splines import BSplineSpace, eval_bspline, eval_bspline_derivative, to_piecewise


class AssembleMatrixTestCase(unittest.TestCase):
    def test_shape(self):
        system = assemble_matrix(BSplineSpace(3, 16), 1.5)
        self.assertEqual(system.size, 17)
        self.assertEqual(system.matrix.shape, (17, 17))
        self.assertIsNone(system.rhs)
        self.assertTrue(np.all(np.isfinite(system.matrix)))

    def test_solver_range(self):
        for alpha in (1.0, 0.5, 2.0):
            with self.assertRaises(ValueError):
                assemble_matrix(BSplineSpace(3, 8), alpha)

    def test_mirror_symmetry(self):
        # reflection x -> 1 - x maps the operator onto itself
        a = assemble_matrix(BSplineSpace(4, 12), 1.6).matrix
        np.testing.assert_allclose(a, a[::-1, ::-1], atol=1e-10 * np.abs(a).max())

    def test_left_right_are_mirror_images(self):
        left, right = assemble_left_right(BSplineSpace(3, 10), 1.4)
        np.testing.assert_allclose(left, right[::-1, ::-1], atol=1e-10 * np.abs(left).max())

    def test_columns_match_quadrature(self):
        space, order = BSplineSpace(3, 10), FractionalOrder(1.5)
        left, _ = assemble_left_right(space, order)
        eta = space.greville
        for j in (2, 3, space.p + 1, space.p + 2):
            f = to_piecewise(space, j)
            caputo = np.array([fractional_by_quadrature(f, order, x, "left") for x in eta])
            oracle = rl_left_from_caputo(
                caputo, BoundaryData.from_piecewise(f, 0.0, 1.0), order, eta
            )
            scale = max(1.0, float(np.max(np.abs(oracle))))
            np.testing.assert_allclose(left[:, j - 2], oracle, rtol=0, atol=1e-9 * scale)

    def test_thread_count_does_not_change_entries(self):
        space = BSplineSpace(4, 40)
        one = assemble_matrix(space, 1.7, threads=1).matrix
        many = assemble_matrix(space, 1.7, threads=4).matrix
        np.testing.assert_allclose(one, many, rtol=0, atol=1e-14 * np.abs(one).max())


    def test_one_sided_norms_bounded(self):
        for p in (2, 3, 4):
            for alpha in (1.2, 1.5, 1.8):
                norms = []
                for n in (64, 128):
                    left, right = assemble_left_right(BSplineSpace(p, n), alpha)
                    norms.append(
                        [np.linalg.norm(m * n ** (-alpha), q) for m in (left, right) for q in (np.inf, 1)]
                    )
                with self.subTest(p=p, alpha=alpha):
                    change = np.abs(np.subtract(norms[1], norms[0])) / np.asarray(norms[0])
                    self.assertLess(float(change.max()), 0.1)


class LowerOrderTermsTestCase(unittest.TestCase):
    def setUp(self):
        self.space = BSplineSpace(3, 12)
        self.eta = self.space.greville
        self.last = self.space.dimension

    def test_zero_coefficients(self):
        matrix = assemble_advection_reaction(self.space, 0.0, 0.0)
        self.assertFalse(np.any(matrix))

    def test_reaction_row_sums(self):
        sums = assemble_advection_reaction(self.space, 0.0, 1.0).sum(axis=1)
        expected = 1.0 - eval_bspline(self.space, 1, self.eta) - eval_bspline(self.space, self.last, self.eta)
        np.testing.assert_allclose(sums, expected, atol=1e-13)

    def test_advection_row_sums(self):
        sums = assemble_advection_reaction(self.space, 2.0, 0.0).sum(axis=1)
        expected = -2.0 * (
            eval_bspline_derivative(self.space, 1, self.eta, 1)
            + eval_bspline_derivative(self.space, self.last, self.eta, 1)
        )
        np.testing.assert_allclose(sums, expected, atol=1e-10)

    def test_added_to_system(self):
        plain = collocation_system(self.space, 1.5)
        full = collocation_system(self.space, 1.5, advection=0.5, reaction=2.0)
        extra = assemble_advection_reaction(self.space, 0.5, 2.0)
        np.testing.assert_allclose(full.matrix - plain.matrix, extra, atol=1e-12)


class RightHandSideTestCase(unittest.TestCase):
    def setUp(self):
        self.space = BSplineSpace(2, 8)

    def test_vectorised(self):
        rhs = assemble_rhs(self.space, np.cos)
        np.testing.assert_allclose(rhs, np.cos(self.space.greville))

    def test_scalar_source(self):
        rhs = assemble_rhs(self.space, math.sin)
        np.testing.assert_allclose(rhs, np.sin(self.space.greville))

    def test_constant_source(self):
        rhs = assemble_rhs(self.space, lambda x: 3.0)
        np.testing.assert_array_equal(rhs, np.full(self.space.trimmed_dimension, 3.0))

    def test_not_finite(self):
        with self.assertRaises(ValueError):
            assemble_rhs(self.space, lambda x: np.where(x > 0.5, np.nan, x))
        with self.assertRaises(ValueError):
            assemble_rhs(self.space, lambda x: np.full_like(x, np.inf))

    def test_system_with_source(self):
        system = collocation_system(self.space, 1.5, source=np.cos)
        self.assertEqual(system.rhs.shape, (system.size,))


class CollocationSystemTestCase(unittest.TestCase):
    def test_validation(self):
        space = BSplineSpace(2, 4)
        with self.assertRaises(ValueError):
            CollocationSystem(space, 1.5, np.eye(3))
        with self.assertRaises(ValueError):
            CollocationSystem(space, 1.5, np.eye(4), rhs=np.ones(3))

    def test_scaled_matrix(self):
        space = BSplineSpace(2, 4)
        system = CollocationSystem(space, 1.5, np.eye(4))
        np.testing.assert_allclose(system.scaled_matrix, np.eye(4) / 8.0)
        self.assertIs(system.with_rhs(np.ones(4)).matrix, system.matrix)
        self.assertEqual(repr(system), "<CollocationSystem: p=2, n=4, alpha=1.5>")
