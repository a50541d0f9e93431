import unittest
import numpy as np
from scipy.linalg import toeplitz
from rieszpy.assembly import toeplitz_coefficients
from rieszpy.spectra import eig_general, eig_symmetric, eigen_residuals


def toeplitz_part(p, n, alpha):
    return toeplitz(toeplitz_coefficients(p, alpha, n + p - 2))


class SymmetricTestCase(unittest.TestCase):
    def test_small_matrices(self):
        np.testing.assert_allclose(eig_symmetric(np.eye(5)), np.ones(5), atol=1e-14)
        np.testing.assert_allclose(eig_symmetric([[2.0, 0.5], [0.5, 2.0]]), [1.5, 2.5], atol=1e-14)

    def test_ascending(self):
        values = eig_symmetric(toeplitz_part(2, 20, 1.4))
        self.assertTrue(np.all(np.diff(values) >= 0))

    def test_rejects_bad_input(self):
        with self.assertRaises(ValueError):
            eig_symmetric([[1.0, 2.0], [0.0, 1.0]])
        with self.assertRaises(ValueError):
            eig_symmetric(np.ones((2, 3)))

    def test_residuals(self):
        t = toeplitz_part(4, 40, 1.5)
        residuals = eigen_residuals(t, 10, seed=7)
        self.assertEqual(residuals.shape, (10,))
        self.assertLessEqual(float(residuals.max()), 1e-9 * float(np.linalg.norm(t, 2)))


class GeneralTestCase(unittest.TestCase):
    def test_agrees_with_symmetric(self):
        t = toeplitz_part(3, 31, 1.5)
        real, max_imag = eig_general(t)
        np.testing.assert_allclose(real, eig_symmetric(t), atol=1e-8)
        self.assertLess(max_imag, 1e-8)

    def test_triangular(self):
        real, max_imag = eig_general([[3.0, 1.0, 4.0], [0.0, 1.0, 5.0], [0.0, 0.0, 2.0]])
        np.testing.assert_allclose(real, [1.0, 2.0, 3.0], atol=1e-14)
        self.assertEqual(max_imag, 0.0)

    def test_complex_pair_logged(self):
        with self.assertLogs("rieszpy.spectra.eig", level="WARNING"):
            real, max_imag = eig_general([[0.0, -1.0], [1.0, 0.0]])
        np.testing.assert_allclose(real, [0.0, 0.0], atol=1e-15)
        self.assertAlmostEqual(max_imag, 1.0, places=14)

    def test_order_cap(self):
        with self.assertRaises(ValueError):
            eig_general(np.zeros((1025, 1025)))
