import logging
import time

import numpy as np
from scipy.linalg import lu_factor, lu_solve

from rieszpy.assembly.collocation import assemble_matrix, collocation_system
from rieszpy.fracderiv.order import as_order
from rieszpy.splines.knots import BSplineSpace
from rieszpy.util.num import convergence_orders

from .solutions import riesz_rhs

LOG = logging.getLogger(__name__)

PIVOT_TOL = 1e-14
RESIDUAL_TOL = 1e-10
ERROR_SAMPLES = 1024


class SingularSystemError(np.linalg.LinAlgError):
    """Raised when a collocation matrix has a pivot below tolerance"""


def solve(system) -> np.ndarray:
    """
    Solve A c = b for a collocation system with dense LU and partial
    pivoting.

    Args:
        system (CollocationSystem): a system with a right-hand side

    Returns:
        np.ndarray: the spline coefficients

    Raises:
        SingularSystemError: if a pivot is below 1e-14 times the largest entry
    """
    if system.rhs is None:
        raise ValueError(f"{system} has no right-hand side")
    a, b = system.matrix, system.rhs
    scale = float(np.max(np.abs(a), initial=0.0))
    lu, piv = lu_factor(a, check_finite=True)
    smallest = float(np.min(np.abs(np.diag(lu))))
    if scale == 0.0 or smallest < PIVOT_TOL * scale:
        raise SingularSystemError(
            f"collocation matrix is singular: pivot {smallest:.3e}, scale {scale:.3e}"
        )
    coeffs = lu_solve((lu, piv), b)
    residual = float(np.max(np.abs(a @ coeffs - b)))
    bound = RESIDUAL_TOL * float(np.max(np.abs(b), initial=0.0))
    if residual > bound:
        LOG.warning("solve residual %.3e exceeds %.3e for %s", residual, bound, system)
    return coeffs


def error_infinity(space, coeffs, u_exact) -> float:
    """
    Maximum of |u_h - u| over 1024 equispaced points x_m = m/1023 of [0, 1].
    """
    x = np.linspace(0.0, 1.0, ERROR_SAMPLES)
    return float(np.max(np.abs(space.evaluate(coeffs, x) - u_exact(x))))


def order_model(p: int, alpha: float) -> float:
    "The observed asymptotic order: p + 2 - α for even p, p + 1 - α for odd p"
    return p + 2 - alpha if p % 2 == 0 else p + 1 - alpha


class ConvergenceTable:
    """
    Errors and observed orders for one (solution, p, α) configuration on
    successively doubled meshes.

    Attributes:
        solution (str): manufactured solution name
        p (int): spline degree
        alpha (float): fractional order
        ns (np.ndarray): mesh sizes
        errors (np.ndarray): sup-norm errors
        orders (np.ndarray): log2(e_n / e_2n), nan in the first row
    """

    def __init__(self, solution, p, alpha, ns, errors):
        self.solution = solution
        self.p = int(p)
        self.alpha = float(alpha)
        self.ns = np.asarray(ns, dtype=int)
        self.errors = np.asarray(errors, dtype=np.float64)
        self.orders = convergence_orders(self.errors)

    def rows(self):
        return list(zip(self.ns.tolist(), self.errors.tolist(), self.orders.tolist()))

    @property
    def last_order(self) -> float:
        return float(self.orders[-1])

    @property
    def expected_order(self) -> float:
        return order_model(self.p, self.alpha)

    def to_dict(self) -> dict:
        return {
            "solution": self.solution,
            "p": self.p,
            "alpha": self.alpha,
            "rows": [
                {"n": n, "error": e, "order": None if np.isnan(o) else o}
                for n, e, o in self.rows()
            ],
        }

    def __repr__(self):
        return (
            f"<ConvergenceTable: {self.solution}, p={self.p}, alpha={self.alpha}, "
            f"last order {self.last_order:.2f}>"
        )


def convergence_study(p, alpha, sol, ns=(4, 8, 16, 32, 64), threads=None) -> ConvergenceTable:
    """
    Solve the manufactured problem for each n and tabulate the errors.

    Args:
        p (int): spline degree
        alpha (float): fractional order, 1 < α < 2
        sol (ManufacturedSolution): the exact solution
        ns (Sequence[int], optional): increasing mesh sizes
        threads (int, optional): assembly worker override

    Returns:
        ConvergenceTable: the table
    """
    order = as_order(alpha).require_solver_range()
    errors = []
    for n in ns:
        t1 = time.time()
        space = BSplineSpace(p, n)
        system = collocation_system(
            space, order, source=lambda x: riesz_rhs(sol, order, x), threads=threads
        )
        coeffs = solve(system)
        errors.append(error_infinity(space, coeffs, sol))
        LOG.debug(
            "%s p=%d alpha=%g n=%d: error %.4e (%.3fs)",
            sol.name, p, order.alpha, n, errors[-1], time.time() - t1,
        )
    return ConvergenceTable(sol.name, p, order.alpha, ns, errors)


def spline_consistency_check(space, order, coeffs, threads=None) -> float:
    """
    Solve with the right-hand side A c of a spline already in the trial
    space and return the largest coefficient error relative to max |c|.
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    system = assemble_matrix(space, order, threads)
    recovered = solve(system.with_rhs(system.matrix @ coeffs))
    scale = max(float(np.max(np.abs(coeffs), initial=0.0)), 1.0)
    return float(np.max(np.abs(recovered - coeffs))) / scale
