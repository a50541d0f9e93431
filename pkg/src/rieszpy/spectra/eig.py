import logging

import numpy as np
from scipy.linalg import LinAlgError, eigh, eigvals

LOG = logging.getLogger(__name__)

SYMMETRY_TOL = 1e-12
GENERAL_ORDER_CAP = 1024
IMAG_TOL = 1e-8


def _square(matrix):
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")
    return matrix


def _check_symmetric(matrix):
    scale = max(1.0, float(np.max(np.abs(matrix), initial=0.0)))
    gap = float(np.max(np.abs(matrix - matrix.T), initial=0.0))
    if gap > SYMMETRY_TOL * scale:
        raise ValueError(f"matrix is not symmetric: max |M - M^T| = {gap:.3e}")


def eig_symmetric(matrix) -> np.ndarray:
    """
    Eigenvalues of a dense symmetric matrix, in ascending order.

    Uses LAPACK's symmetric driver (Householder reduction to tridiagonal
    form followed by implicit QL/QR).

    Args:
        matrix (array_like): symmetric (N, N) matrix

    Returns:
        np.ndarray: the N real eigenvalues, ascending

    Raises:
        ValueError: if the matrix is not symmetric to 1e-12
    """
    matrix = _square(matrix)
    _check_symmetric(matrix)
    return eigh(matrix, eigvals_only=True, driver="ev")


def eigen_residuals(matrix, k=10, seed=0) -> np.ndarray:
    """
    Residuals ||M v - λ v|| for `k` eigenpairs of a symmetric matrix chosen
    at random (without replacement) with the given seed.
    """
    matrix = _square(matrix)
    _check_symmetric(matrix)
    values, vectors = eigh(matrix, driver="ev")
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(values), size=min(k, len(values)), replace=False)
    v = vectors[:, picks]
    return np.linalg.norm(matrix @ v - v * values[picks], axis=0)


def eig_general(matrix):
    """
    Eigenvalues of a dense real matrix via Hessenberg reduction and
    shifted QR.

    Args:
        matrix (array_like): (N, N) matrix with N <= 1024

    Returns:
        Tuple[np.ndarray, float]: the real parts in ascending order and the
        largest absolute imaginary part

    Raises:
        ValueError: for non-square or oversized input
        RuntimeError: if the QR iteration fails to converge
    """
    matrix = _square(matrix)
    if matrix.shape[0] > GENERAL_ORDER_CAP:
        raise ValueError(
            f"dense general eigensolver is capped at order {GENERAL_ORDER_CAP}, "
            f"got {matrix.shape[0]}"
        )
    try:
        values = eigvals(matrix, check_finite=True)
    except LinAlgError as e:
        raise RuntimeError(f"QR iteration did not converge for order {matrix.shape[0]}") from e
    max_imag = float(np.max(np.abs(values.imag), initial=0.0))
    real = np.sort(values.real)
    scale = float(np.max(np.abs(real), initial=0.0))
    if max_imag > IMAG_TOL * max(scale, 1.0):
        LOG.warning(
            "eigenvalues are not near-real: max |Im| = %.3e (spectral scale %.3e)",
            max_imag, scale,
        )
    return real, max_imag
