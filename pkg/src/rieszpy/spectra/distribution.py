"""
Comparison of sorted eigenvalues with sorted samples of the symbol on the
grid θ_k = kπ/N, k = 1..N, N the matrix order.

The top 4(p - 1) eigenvalues, the budget of outliers allowed by the rank
of the low-rank correction, are left out of the deviation metric, and the
remaining ones are paired with the lowest symbol samples.
"""
import logging

import numpy as np

LOG = logging.getLogger(__name__)

OUTLIER_MARGIN = 0.05


def symbol_grid(size: int) -> np.ndarray:
    "θ_k = kπ/size for k = 1..size"
    if size < 1:
        raise ValueError(f"grid size must be positive, got {size}")
    return np.arange(1, size + 1) * np.pi / size


class EigenReport:
    """
    Eigenvalues of a matrix against the symbol sampled on its grid.

    Attributes:
        eigenvalues (np.ndarray): ascending eigenvalues (real parts)
        grid (np.ndarray): θ_1..θ_N
        samples (np.ndarray): f(θ_k), ascending
        outlier_budget (int): 4(p - 1)
        outlier_count (int): eigenvalues above (1 + 0.05) max f
        deviation (float): mean |λ_(j) - f_(j)| over the paired values
        max_imag (float or None): largest |Im| from the general solver
    """

    def __init__(self, eigenvalues, grid, samples, outlier_budget, outlier_count, deviation, max_imag=None):
        self.eigenvalues = np.asarray(eigenvalues)
        self.grid = np.asarray(grid)
        self.samples = np.asarray(samples)
        self.outlier_budget = int(outlier_budget)
        self.outlier_count = int(outlier_count)
        self.deviation = float(deviation)
        self.max_imag = max_imag

    @property
    def size(self) -> int:
        return len(self.eigenvalues)

    @property
    def within_budget(self) -> bool:
        return self.outlier_count <= self.outlier_budget

    def to_dict(self) -> dict:
        "Scalar summary for JSON output"
        return {
            "size": self.size,
            "deviation": self.deviation,
            "outlier_budget": self.outlier_budget,
            "outlier_count": self.outlier_count,
            "max_imag": self.max_imag,
            "min_eigenvalue": float(self.eigenvalues[0]),
            "max_eigenvalue": float(self.eigenvalues[-1]),
        }

    def __repr__(self):
        return (
            f"<EigenReport: N={self.size}, deviation={self.deviation:.3e}, "
            f"outliers={self.outlier_count}/{self.outlier_budget}>"
        )


def compare_to_symbol(eigs, ev, p: int, max_imag=None) -> EigenReport:
    """
    Pair sorted eigenvalues with sorted symbol samples on the grid
    θ_k = kπ/N.

    Args:
        eigs (array_like): the N eigenvalues (any order)
        ev (SymbolEvaluator): the symbol
        p (int): spline degree, fixing the outlier budget 4(p - 1)
        max_imag (float, optional): recorded imaginary residue

    Returns:
        EigenReport: the comparison
    """
    eigs = np.sort(np.asarray(eigs, dtype=np.float64))
    size = len(eigs)
    budget = 4 * (p - 1)
    if budget >= size:
        raise ValueError(f"matrix order {size} does not exceed the outlier budget {budget}")
    grid = symbol_grid(size)
    samples = np.sort(ev(grid))
    kept = size - budget
    deviation = float(np.mean(np.abs(eigs[:kept] - samples[:kept])))
    top = ev.maximum
    outliers = int(np.count_nonzero(eigs > (1.0 + OUTLIER_MARGIN) * top))
    if outliers > budget:
        LOG.warning("%d outliers exceed the budget %d for p=%d", outliers, budget, p)
    report = EigenReport(eigs, grid, samples, budget, outliers, deviation, max_imag)
    LOG.debug("%s", report)
    return report


def within_symbol_range(eigs, ev, eps=1e-8) -> bool:
    "Whether every eigenvalue lies in [min f - eps, max f + eps] over [0, π]"
    eigs = np.asarray(eigs, dtype=np.float64)
    lo = min(0.0, float(np.min(ev(np.linspace(0.0, np.pi, 10001)))))
    return bool(np.all(eigs >= lo - eps) and np.all(eigs <= ev.maximum + eps))
