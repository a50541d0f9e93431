"""
Caputo and Riemann–Liouville derivatives of order 1 < α < 2 of piecewise
polynomials, in closed form.

On an interval [a_k, b_k] with f'' = Σ_m d_m (y - a_k)^m, and L = x - a_k,

    ∫_{a_k}^{min(b_k, x)} (x - y)^β (y - a_k)^m dy
        = L^{β+m+1} B(m + 1, β + 1) I_r(m + 1, β + 1),   r = min((b_k - a_k)/L, 1)

where β = 1 - α and I_r is the regularised incomplete Beta function.
"""
import logging

import numpy as np
from scipy.special import beta as beta_function
from scipy.special import betainc

from .order import BoundaryData, as_order

LOG = logging.getLogger(__name__)


def _check_caputo_order(order):
    if not 1.0 <= order.alpha < 2.0:
        raise ValueError(f"Caputo kernels here need 1 <= alpha < 2, got {order.alpha}")


def _domain(f, a, b):
    lo, hi = f.domain
    a = lo if a is None else float(a)
    b = hi if b is None else float(b)
    if a > lo or b < hi:
        raise ValueError(f"function domain [{lo}, {hi}] is not inside [{a}, {b}]")
    return a, b


def _points(x, a, b):
    xx = np.atleast_1d(np.asarray(x, dtype=np.float64)).ravel()
    if np.any((xx < a) | (xx > b)):
        raise ValueError(f"evaluation points must lie in [{a}, {b}]")
    return xx


def _shape_like(result, x):
    if np.ndim(x) == 0:
        return float(result[0])
    return result.reshape(np.shape(x))


def _left_kernel_integral(f2, beta, x):
    result = np.zeros_like(x)
    m = np.arange(f2.degree + 1)
    complete = beta_function(m + 1, beta + 1)
    for left, width, row in zip(f2.breakpoints[:-1], f2.widths, f2.coeffs):
        if not np.any(row):
            continue
        span = x - left
        active = span > 0
        if not np.any(active):
            continue
        s = span[active][:, None]
        r = np.minimum(width / s, 1.0)
        terms = np.power(s, beta + m + 1) * complete * betainc(m + 1, beta + 1, r)
        result[active] += (terms * row).sum(axis=-1)
    return result


def caputo_left_piecewise(f, order, x, a=None, b=None):
    """
    Left Caputo derivative (1/Γ(2-α)) ∫_a^x (x - y)^{1-α} f''(y) dy.

    Args:
        f (PiecewisePolynomial): the function, zero outside its breakpoints
        order (FractionalOrder or float): α in [1, 2)
        x (float or array_like): points in [a, b]
        a (float, optional): lower terminal, defaults to the start of f
        b (float, optional): right end of the domain, defaults to the end of f

    Returns:
        float or np.ndarray: the derivative values
    """
    order = as_order(order)
    _check_caputo_order(order)
    a, b = _domain(f, a, b)
    xx = _points(x, a, b)
    f2 = f.derivative(2)
    value = order.inv_gamma(1) * _left_kernel_integral(f2, 1.0 - order.alpha, xx)
    return _shape_like(value, x)


def caputo_right_piecewise(f, order, x, a=None, b=None):
    """
    Right Caputo derivative (1/Γ(2-α)) ∫_x^b (y - x)^{1-α} f''(y) dy,
    evaluated as the left derivative of the mirror image about a + b.
    """
    order = as_order(order)
    _check_caputo_order(order)
    a, b = _domain(f, a, b)
    xx = _points(x, a, b)
    mirrored = f.reflect(about=a + b).derivative(2)
    value = order.inv_gamma(1) * _left_kernel_integral(
        mirrored, 1.0 - order.alpha, (a + b) - xx
    )
    return _shape_like(value, x)


def rl_left_from_caputo(caputo_value, bdata: BoundaryData, order, x, a=0.0):
    """
    Convert a left Caputo derivative to the Riemann–Liouville one,

        D^α u(x) = C^α u(x) + u(a+) (x - a)^{-α}/Γ(1-α) + u'(a+) (x - a)^{1-α}/Γ(2-α)

    Raises:
        ValueError: at x = a with nonzero boundary data
    """
    order = as_order(order)
    xx = np.atleast_1d(np.asarray(x, dtype=np.float64)).ravel()
    value = np.atleast_1d(np.asarray(caputo_value, dtype=np.float64)).ravel().copy()
    if bdata.left_value == 0.0 and bdata.left_slope == 0.0:
        return _shape_like(value, x)
    span = xx - a
    if np.any(span <= 0):
        raise ValueError(
            "Riemann-Liouville correction is singular at the left terminal "
            f"(x={xx[span <= 0][0]}, a={a})"
        )
    value += bdata.left_value * np.power(span, -order.alpha) * order.inv_gamma(0)
    value += bdata.left_slope * np.power(span, 1.0 - order.alpha) * order.inv_gamma(1)
    return _shape_like(value, x)


def rl_right_from_caputo(caputo_value, bdata: BoundaryData, order, x, b=1.0):
    """
    Right-sided counterpart of `rl_left_from_caputo`, with the signs
    (-1)^k of the k-th derivative terms:

        D^α u(x) = C^α u(x) + u(b-) (b - x)^{-α}/Γ(1-α) - u'(b-) (b - x)^{1-α}/Γ(2-α)
    """
    order = as_order(order)
    xx = np.atleast_1d(np.asarray(x, dtype=np.float64)).ravel()
    value = np.atleast_1d(np.asarray(caputo_value, dtype=np.float64)).ravel().copy()
    if bdata.right_value == 0.0 and bdata.right_slope == 0.0:
        return _shape_like(value, x)
    span = b - xx
    if np.any(span <= 0):
        raise ValueError(
            "Riemann-Liouville correction is singular at the right terminal "
            f"(x={xx[span <= 0][0]}, b={b})"
        )
    value += bdata.right_value * np.power(span, -order.alpha) * order.inv_gamma(0)
    value -= bdata.right_slope * np.power(span, 1.0 - order.alpha) * order.inv_gamma(1)
    return _shape_like(value, x)


def rl_left_piecewise(f, order, x, a=None, b=None):
    "Left Riemann–Liouville derivative of a piecewise polynomial on [a, b]"
    lo, hi = _domain(f, a, b)
    caputo = caputo_left_piecewise(f, order, x, lo, hi)
    return rl_left_from_caputo(caputo, BoundaryData.from_piecewise(f, lo, hi), order, x, lo)


def rl_right_piecewise(f, order, x, a=None, b=None):
    "Right Riemann–Liouville derivative of a piecewise polynomial on [a, b]"
    lo, hi = _domain(f, a, b)
    caputo = caputo_right_piecewise(f, order, x, lo, hi)
    return rl_right_from_caputo(caputo, BoundaryData.from_piecewise(f, lo, hi), order, x, hi)
