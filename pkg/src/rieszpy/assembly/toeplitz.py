import logging

import numpy as np
from scipy.linalg import svdvals, toeplitz

from rieszpy.fracderiv.cardinal import left_rl_cardinal, right_rl_cardinal
from rieszpy.fracderiv.order import as_order

LOG = logging.getLogger(__name__)

RANK_THRESHOLD = 1e-10
EVEN_TOL = 1e-13


def toeplitz_coefficients(p: int, order, count: int) -> np.ndarray:
    """
    Coefficients t_0..t_{count-1} of the symmetric Toeplitz part,

        t_k = [D_left^α φ_p((p+1)/2 - k) + D_right^α φ_p((p+1)/2 - k)] / (2 cos(πα/2))

    which are also the Fourier coefficients of the symbol f^{p,α}.

    Args:
        p (int): spline degree
        order (FractionalOrder or float): α
        count (int): number of coefficients

    Returns:
        np.ndarray: t_0..t_{count-1}
    """
    order = as_order(order)
    t = 0.5 * (p + 1) - np.arange(count, dtype=np.float64)
    values = left_rl_cardinal(p, order, t) + right_rl_cardinal(p, order, t)
    return order.riesz_prefactor * values


class ToeplitzSplit:
    """
    The splitting n^{-α} A = T + R into a symmetric Toeplitz matrix T and a
    low-rank correction R.

    Attributes:
        first_column (np.ndarray): t_0..t_{N-1}, which defines T
        correction (np.ndarray): the dense correction R
        rank_bound (int): the bound 4(p - 1) on the rank of R
    """

    def __init__(self, first_column, correction, rank_bound):
        self.first_column = np.asarray(first_column, dtype=np.float64)
        self.correction = np.asarray(correction, dtype=np.float64)
        self.rank_bound = int(rank_bound)

    @property
    def toeplitz(self) -> np.ndarray:
        "The dense Toeplitz matrix T"
        return toeplitz(self.first_column)

    def numerical_rank(self, threshold=RANK_THRESHOLD) -> int:
        "Number of singular values of R above `threshold` times the largest"
        s = svdvals(self.correction)
        if s.size == 0 or s[0] == 0.0:
            return 0
        return int(np.count_nonzero(s > threshold * s[0]))

    @property
    def correction_norm(self) -> float:
        "Spectral norm of R"
        s = svdvals(self.correction)
        return float(s[0]) if s.size else 0.0

    def __repr__(self):
        return f"<ToeplitzSplit: size={len(self.first_column)}, rank_bound={self.rank_bound}>"


def toeplitz_split(system) -> ToeplitzSplit:
    """
    Split the scaled collocation matrix into its Toeplitz part and the
    correction R = n^{-α} A - T. A WARNING is logged when t_k = t_{-k} fails
    or when the numerical rank of R exceeds 4(p - 1).

    Args:
        system (CollocationSystem): an assembled system

    Returns:
        ToeplitzSplit: the splitting
    """
    p, order = system.space.p, as_order(system.order)
    column = toeplitz_coefficients(p, order, system.size)
    correction = system.scaled_matrix - toeplitz(column)
    split = ToeplitzSplit(column, correction, 4 * (p - 1))
    gap = _evenness_gap(p, order, column)
    if gap > EVEN_TOL * max(1.0, abs(column[0])):
        LOG.warning("Toeplitz coefficients of %s are not even: gap %.3g", system, gap)
    rank = split.numerical_rank()
    if rank > split.rank_bound:
        LOG.warning("correction of %s has rank %d > %d", system, rank, split.rank_bound)
    LOG.debug("Toeplitz split of %s: t_0=%.6g, rank(R)=%d", system, column[0], rank)
    return split


def _evenness_gap(p, order, column) -> float:
    "max |t_{-k} - t_k| over the stored coefficients"
    t = 0.5 * (p + 1) + np.arange(len(column), dtype=np.float64)
    mirrored = order.riesz_prefactor * (left_rl_cardinal(p, order, t) + right_rl_cardinal(p, order, t))
    return float(np.max(np.abs(mirrored - column))) if len(column) else 0.0
