"""
Evaluation of B-splines on the open uniform knot vector by the Cox–de Boor
recurrence, their derivatives by the degree-lowering formula, and
conversion to exact piecewise polynomials.
"""
import logging
from math import factorial

import numpy as np

from .knots import BSplineSpace
from .piecewise import PiecewisePolynomial
from rieszpy.util.num import recentre

LOG = logging.getLogger(__name__)


def _as_points(x):
    x = np.asarray(x, dtype=np.float64)
    if np.any((x < 0.0) | (x > 1.0)) or np.any(np.isnan(x)):
        raise ValueError("evaluation points must lie in [0, 1]")
    return x


def _cox_de_boor(knots, i0, degree, x, last_span):
    # i0 is zero-based; the last non-degenerate span is closed at the right
    values = []
    for k in range(i0, i0 + degree + 1):
        inside = (knots[k] <= x) & (x < knots[k + 1])
        if k == last_span:
            inside = inside | (x == knots[k + 1])
        values.append(inside.astype(np.float64))
    for d in range(1, degree + 1):
        for r in range(degree - d + 1):
            k = i0 + r
            term = np.zeros_like(x)
            left = knots[k + d] - knots[k]
            if left > 0:
                term += (x - knots[k]) / left * values[r]
            right = knots[k + d + 1] - knots[k + 1]
            if right > 0:
                term += (knots[k + d + 1] - x) / right * values[r + 1]
            values[r] = term
    return values[0]


def _derivative(knots, i0, degree, x, order, last_span):
    if order == 0:
        return _cox_de_boor(knots, i0, degree, x, last_span)
    result = np.zeros_like(x)
    left = knots[i0 + degree] - knots[i0]
    if left > 0:
        result += (degree / left) * _derivative(
            knots, i0, degree - 1, x, order - 1, last_span
        )
    right = knots[i0 + degree + 1] - knots[i0 + 1]
    if right > 0:
        result -= (degree / right) * _derivative(
            knots, i0 + 1, degree - 1, x, order - 1, last_span
        )
    return result


def _scalar_or_array(result, x):
    if np.ndim(x) == 0:
        return float(result)
    return result


def eval_bspline(space: BSplineSpace, i: int, x):
    """
    Value of the basis function N_i^p at `x`.

    Uses half-open knot spans with the last span closed at 1, so the
    basis is a partition of unity on the whole of [0, 1].

    Args:
        space (BSplineSpace): the spline space
        i (int): one-based basis index in [1, n + p]
        x (float or array_like): points in [0, 1]

    Returns:
        float or np.ndarray: N_i^p(x)
    """
    space.check_index(i)
    points = _as_points(x)
    kv = space.knot_vector
    result = _cox_de_boor(kv.knots, i - 1, space.p, np.atleast_1d(points), kv.last_span)
    return _scalar_or_array(result.reshape(points.shape), x)


def eval_bspline_derivative(space: BSplineSpace, i: int, x, order: int = 1):
    """
    Derivative of order `order` of N_i^p at `x`, by recursive application
    of the degree-lowering formula

        (N_i^p)' = p (N_i^{p-1} / (ξ_{i+p} - ξ_i) - N_{i+1}^{p-1} / (ξ_{i+p+1} - ξ_{i+1}))

    with zero-denominator fractions dropped.

    Args:
        space (BSplineSpace): the spline space
        i (int): one-based basis index
        x (float or array_like): points in [0, 1]
        order (int, optional): derivative order, 1 <= order <= p

    Returns:
        float or np.ndarray: the derivative values
    """
    if int(order) != order or order < 0:
        raise ValueError(f"derivative order must be a non-negative integer, got {order}")
    if order > space.p:
        raise ValueError(f"derivative order {order} exceeds degree {space.p}")
    space.check_index(i)
    points = _as_points(x)
    kv = space.knot_vector
    result = _derivative(
        kv.knots, i - 1, space.p, np.atleast_1d(points), int(order), kv.last_span
    )
    return _scalar_or_array(result.reshape(points.shape), x)


def to_piecewise(space: BSplineSpace, i: int) -> PiecewisePolynomial:
    """
    Exact piecewise-polynomial form of N_i^p on the non-degenerate knot
    intervals of its support.

    Taylor coefficients are sampled at each interval midpoint from the
    derivatives of order 0..p, then re-expanded about the interval's
    left end.

    Args:
        space (BSplineSpace): the spline space
        i (int): one-based basis index

    Returns:
        PiecewisePolynomial: degree p pieces in powers of (y - left)
    """
    space.check_index(i)
    p = space.p
    kv = space.knot_vector
    support = kv.knots[i - 1 : i + p + 1]
    breakpoints = np.unique(support)
    left, right = breakpoints[:-1], breakpoints[1:]
    mid = 0.5 * (left + right)
    taylor = np.empty((len(mid), p + 1))
    for k in range(p + 1):
        taylor[:, k] = _derivative(kv.knots, i - 1, p, mid, k, kv.last_span) / factorial(k)
    coeffs = np.array(
        [recentre(row, a - c) for row, a, c in zip(taylor, left, mid)]
    )
    LOG.debug("N_%d^%d as %d polynomial pieces", i, p, len(mid))
    return PiecewisePolynomial(breakpoints, coeffs)
