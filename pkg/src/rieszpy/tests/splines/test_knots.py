import unittest
import numpy as np
from rieszpy.splines import BSplineSpace, KnotVector, greville_points


class KnotVectorTestCase(unittest.TestCase):
    def test_open_uniform(self):
        kv = KnotVector(2, 4)
        self.assertEqual(len(kv), 2 * 2 + 4 + 1)
        np.testing.assert_allclose(
            kv.knots, [0, 0, 0, 0.25, 0.5, 0.75, 1, 1, 1], atol=0
        )
        self.assertEqual(kv.xi(4), 0.25)
        self.assertEqual(kv.last_span, 5)

    def test_bad_arguments(self):
        for p, n in ((1, 4), (11, 4), (3, 1), (3, 5000), (2.5, 4)):
            with self.assertRaises(ValueError):
                KnotVector(p, n)

    def test_repr(self):
        self.assertEqual(str(KnotVector(3, 8)), "<KnotVector: p=3, n=8>")


class BSplineSpaceTestCase(unittest.TestCase):
    def test_dimensions(self):
        space = BSplineSpace(3, 10)
        self.assertEqual(space.dimension, 13)
        self.assertEqual(space.trimmed_dimension, 11)
        np.testing.assert_array_equal(space.trimmed_indices, np.arange(2, 13))
        np.testing.assert_array_equal(space.interior_indices, np.arange(4, 11))

    def test_greville_points(self):
        space = BSplineSpace(2, 4)
        # knot averages (ξ_{i+1} + ξ_{i+2}) / 2 for i = 2..5
        np.testing.assert_allclose(greville_points(space), [0.125, 0.375, 0.625, 0.875])

    def test_greville_interior_exact(self):
        for p in (2, 3, 4, 5):
            space = BSplineSpace(p, 16)
            i = np.arange(p, space.n + 2)
            scaled = space.greville_scaled[i - 2]
            np.testing.assert_array_equal(scaled, i - 0.5 * (p + 1))
            g = greville_points(space)
            self.assertEqual(len(g), space.n + p - 2)
            self.assertTrue(np.all(np.diff(g) > 0))
            self.assertTrue(0.0 < g[0] and g[-1] < 1.0)

    def test_greville_symmetric(self):
        g = BSplineSpace(5, 11).greville
        np.testing.assert_allclose(g + g[::-1], 1.0, atol=1e-15)

    def test_greville_read_only(self):
        space = BSplineSpace(3, 6)
        with self.assertRaises(ValueError):
            space.greville[0] = 0.5

    def test_support(self):
        space = BSplineSpace(3, 6)
        self.assertEqual(space.support(1), (0.0, 1.0 / 6))
        lo, hi = space.support(5)
        self.assertAlmostEqual(lo, 1.0 / 6)
        self.assertAlmostEqual(hi, 5.0 / 6)
        with self.assertRaises(ValueError):
            space.support(0)

    def test_evaluate_constant(self):
        # the trimmed basis sums to 1 - N_1 - N_{n+p}
        space = BSplineSpace(3, 8)
        x = np.linspace(0.25, 0.75, 11)
        values = space.evaluate(np.ones(space.trimmed_dimension), x)
        np.testing.assert_allclose(values, 1.0, atol=1e-14)

    def test_evaluate_wrong_length(self):
        space = BSplineSpace(3, 8)
        with self.assertRaises(ValueError):
            space.evaluate(np.ones(3), 0.5)
