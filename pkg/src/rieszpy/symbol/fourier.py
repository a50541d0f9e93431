"""
The two routes to the symbol: the closed-form series of
`SymbolEvaluator`, and the Fourier series Σ t_k e^{-ikθ} of the Toeplitz
coefficients produced by assembly.
"""
import logging

import numpy as np
from scipy.integrate import quad

from rieszpy.assembly.toeplitz import toeplitz_coefficients

from .evaluator import SymbolEvaluator, _check_angles

LOG = logging.getLogger(__name__)

PARTIAL_SUM_TERMS = 1 << 14


def toeplitz_symbol(p: int, alpha: float, theta, terms=PARTIAL_SUM_TERMS):
    """
    Partial Fourier sum t_0 + 2 Σ_{k=1}^{terms} t_k cos(kθ) of the
    Toeplitz coefficients.

    Args:
        p (int): spline degree
        alpha (float): order, cos(πα/2) != 0
        theta (float or array_like): angles in [0, π]
        terms (int, optional): number of coefficients past t_0

    Returns:
        float or np.ndarray: the partial sums
    """
    th = np.atleast_1d(_check_angles(theta)).ravel()
    t = toeplitz_coefficients(p, alpha, terms + 1)
    k = np.arange(1, terms + 1, dtype=np.float64)
    values = np.empty_like(th)
    for start in range(0, len(th), 64):
        block = th[start : start + 64, None]
        values[start : start + 64] = t[0] + 2.0 * (t[1:] * np.cos(k * block)).sum(axis=-1)
    if np.ndim(theta) == 0:
        return float(values[0])
    return values.reshape(np.shape(theta))


def fourier_coefficient(ev: SymbolEvaluator, k: int, tol=1e-13) -> float:
    """
    (1/π) ∫_0^π f(θ) cos(kθ) dθ by adaptive cosine-weighted quadrature,
    split at θ = 1 to separate the algebraic behaviour at the origin.
    """
    if int(k) != k or k < 0:
        raise ValueError(f"coefficient index must be a non-negative integer, got {k}")
    total = 0.0
    for lo, hi in ((0.0, 1.0), (1.0, np.pi)):
        if k == 0:
            value, error = quad(ev, lo, hi, epsabs=tol, epsrel=tol, limit=200)
        else:
            value, error = quad(
                ev, lo, hi, weight="cos", wvar=float(k), epsabs=tol, epsrel=tol, limit=200
            )
        total += value
        LOG.debug("fourier coefficient k=%d on [%g, %g]: error %.2e", k, lo, hi, error)
    return total / np.pi


def fourier_route_check(p: int, alpha: float, count=6, grid=None):
    """
    Compare the two routes.

    Returns:
        Tuple[float, float]: maximum difference between t_0..t_{count-1}
        and the Fourier coefficients of f, and maximum difference between
        f and the Toeplitz partial sum on `grid` (default 64 points of
        [0.2, π])
    """
    ev = SymbolEvaluator(p, alpha)
    t = toeplitz_coefficients(p, alpha, count)
    coefficients = np.array([fourier_coefficient(ev, k) for k in range(count)])
    coefficient_gap = float(np.max(np.abs(t - coefficients)))
    grid = np.linspace(0.2, np.pi, 64) if grid is None else grid
    partial_gap = float(np.max(np.abs(ev(grid) - toeplitz_symbol(p, alpha, grid))))
    LOG.debug(
        "p=%d alpha=%g: coefficient gap %.2e, partial-sum gap %.2e",
        p, alpha, coefficient_gap, partial_gap,
    )
    return coefficient_gap, partial_gap
