"""
Manufactured solutions of the Riesz problem on [0, 1], held as expansions
in powers of x and of 1 - x so their fractional derivatives can be taken
term by term.
"""
import logging
from math import factorial

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import poch

from rieszpy.fracderiv.caputo import rl_left_from_caputo, rl_right_from_caputo
from rieszpy.fracderiv.order import BoundaryData, as_order
from rieszpy.fracderiv.quadrature import gauss_jacobi_oracle

LOG = logging.getLogger(__name__)

_SERIES_TOL = 1e-17


class ManufacturedSolution:
    """
    An exact solution u with u(0) = u(1) = 0.

    Args:
        name (str): registry name
        func (callable): vectorised u(x)
        left_coeffs (array_like): ascending coefficients of u in powers of x
        right_coeffs (array_like): ascending coefficients of u(1 - z) in
            powers of z
        kind (str, optional): 'polynomial' or 'entire-series'

    Attributes:
        bdata (BoundaryData): u(0+), u'(0+), u(1-), u'(1-)
    """

    def __init__(self, name, func, left_coeffs, right_coeffs, kind="polynomial"):
        self.name = name
        self.func = func
        self.kind = kind
        self.left_coeffs = np.asarray(left_coeffs, dtype=np.float64)
        self.right_coeffs = np.asarray(right_coeffs, dtype=np.float64)
        left = np.pad(self.left_coeffs, (0, 2))
        right = np.pad(self.right_coeffs, (0, 2))
        # d/dx u(1 - z) = -u'(1 - z)
        self.bdata = BoundaryData(left[0], left[1], right[0], -right[1])
        if abs(self.bdata.left_value) > 1e-14 or abs(self.bdata.right_value) > 1e-14:
            raise ValueError(f"manufactured solution {name} must vanish at 0 and 1")

    def __call__(self, x):
        return self.func(np.asarray(x, dtype=np.float64))

    def second_derivative(self, x):
        "u'' from the expansion in powers of x"
        return Polynomial(self.left_coeffs).deriv(2)(np.asarray(x, dtype=np.float64))

    def __repr__(self):
        return f"<ManufacturedSolution: {self.name} ({self.kind})>"


def _sine_series(argument: Polynomial) -> np.ndarray:
    # sin(w) = Σ (-1)^k w^{2k+1}/(2k+1)!, truncated where π^{2k+1}/(2k+1)! is negligible
    total = Polynomial([0.0])
    k = 0
    while True:
        m = 2 * k + 1
        total = total + ((-1) ** k / factorial(m)) * argument ** m
        k += 1
        if np.pi ** (2 * k + 1) / factorial(2 * k + 1) < _SERIES_TOL:
            break
    LOG.debug("sine series truncated after %d terms, degree %d", k, total.degree())
    return total.coef


def poly33() -> ManufacturedSolution:
    "u(x) = x^3 (1 - x)^3"
    coeffs = [0.0, 0.0, 0.0, 1.0, -3.0, 3.0, -1.0]
    return ManufacturedSolution(
        "poly33", lambda x: x ** 3 * (1.0 - x) ** 3, coeffs, coeffs, "polynomial"
    )


def sinpix2() -> ManufacturedSolution:
    """
    u(x) = sin(πx^2). Around x = 1, u(1 - z) = sin(π(2z - z^2)), so both
    expansions come from composing the sine series with a quadratic.
    """
    left = _sine_series(Polynomial([0.0, 0.0, np.pi]))
    right = _sine_series(Polynomial([0.0, 2.0 * np.pi, -np.pi]))
    return ManufacturedSolution(
        "sinpix2", lambda x: np.sin(np.pi * x ** 2), left, right, "entire-series"
    )


SOLUTIONS = {
    "poly33": poly33,
    "sinpix2": sinpix2,
}


def get_solution(name: str) -> ManufacturedSolution:
    if name not in SOLUTIONS:
        raise ValueError(f"unknown manufactured solution {name!r}, choose from {sorted(SOLUTIONS)}")
    return SOLUTIONS[name]()


def _caputo_series(coeffs, alpha, z):
    # C^α z^q = Γ(q+1)/Γ(q+1-α) z^{q-α} for q >= 2
    result = np.zeros_like(z)
    for q in range(2, len(coeffs)):
        c = coeffs[q]
        if c != 0.0:
            result += c * poch(q + 1.0 - alpha, alpha) * np.power(z, q - alpha)
    return result


def riesz_rhs(sol: ManufacturedSolution, order, x):
    """
    The Riesz derivative (D_left^α u + D_right^α u)/(2 cos(πα/2)) of a
    manufactured solution, by term-wise differentiation of its two
    expansions plus the Riemann–Liouville boundary corrections.

    Args:
        sol (ManufacturedSolution): the solution
        order (FractionalOrder or float): α, cos(πα/2) != 0
        x (float or array_like): points of the open interval (0, 1)

    Returns:
        float or np.ndarray: the source term s(x)

    Raises:
        ValueError: at x = 0 or x = 1, where the kernels are singular
    """
    order = as_order(order)
    xx = np.atleast_1d(np.asarray(x, dtype=np.float64)).ravel()
    if np.any((xx <= 0.0) | (xx >= 1.0)):
        raise ValueError("the Riesz right-hand side is only defined on the open interval (0, 1)")
    left = _caputo_series(sol.left_coeffs, order.alpha, xx)
    right = _caputo_series(sol.right_coeffs, order.alpha, 1.0 - xx)
    left = rl_left_from_caputo(left, sol.bdata, order, xx, a=0.0)
    right = rl_right_from_caputo(right, sol.bdata, order, xx, b=1.0)
    values = order.riesz_prefactor * (left + right)
    if np.ndim(x) == 0:
        return float(values[0])
    return values.reshape(np.shape(x))


def riesz_rhs_by_quadrature(sol: ManufacturedSolution, order, x, nodes=20) -> float:
    """
    `riesz_rhs` at a single point with the Caputo integrals of u'' done by
    Gauss–Jacobi quadrature on [0, x] and [x, 1].
    """
    order = as_order(order)
    x = float(x)
    if not 0.0 < x < 1.0:
        raise ValueError(f"x must lie in (0, 1), got {x}")
    left = order.inv_gamma(1) * gauss_jacobi_oracle(
        sol.second_derivative, order.alpha, (0.0, x), nodes, "left"
    )
    right = order.inv_gamma(1) * gauss_jacobi_oracle(
        sol.second_derivative, order.alpha, (x, 1.0), nodes, "right"
    )
    left = rl_left_from_caputo(left, sol.bdata, order, x, a=0.0)
    right = rl_right_from_caputo(right, sol.bdata, order, x, b=1.0)
    return order.riesz_prefactor * (left + right)
