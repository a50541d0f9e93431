"""
Closed-form left and right fractional derivatives of the cardinal
B-spline φ_p,

    D^α φ_p(t) = 1/Γ(p - α + 1) Σ_{j=0}^{p+1} (-1)^j C(p+1, j) (t - j)_+^{p-α}

Away from the support the same quantity is the (p + 1)-th backward
difference of a smooth power and the alternating sum cancels badly, so
for t >= p + 2.5 it is evaluated through the equivalent Peano form

    D^α φ_p(t) = 1/Γ(-α) ∫_0^{p+1} φ_p(s) (t - s)^{-α-1} ds

with a panel Gauss–Legendre rule on the unit knot intervals.
"""
import logging

import numpy as np
from scipy.special import binom, rgamma

from rieszpy.splines.cardinal import cardinal_bspline
from rieszpy.util.num import panel_rule, truncated_power
from .order import as_order

LOG = logging.getLogger(__name__)

FAR_MARGIN = 1.5
PEANO_NODES = 16
_CHUNK = 1 << 16
_PEANO_CACHE = {}


def _peano_rule(p):
    if p not in _PEANO_CACHE:
        s, w = panel_rule(np.arange(p + 2, dtype=np.float64), PEANO_NODES)
        _PEANO_CACHE[p] = (s, w * cardinal_bspline(p, s))
    return _PEANO_CACHE[p]


def _check_range(p, alpha):
    if int(p) != p or p < 1:
        raise ValueError(f"degree must be a positive integer, got {p}")
    if alpha >= p:
        raise ValueError(f"need 0 <= alpha < p, got alpha={alpha}, p={p}")


def _near(p, order, t):
    j = np.arange(p + 2)
    signs = np.where(j % 2 == 0, 1.0, -1.0) * binom(p + 1, j)
    powers = truncated_power(t[:, None] - j[None, :], p - order.alpha)
    return order.inv_gamma(p) * (powers * signs).sum(axis=-1)


def _far(p, order, t):
    s, ws = _peano_rule(p)
    scale = float(rgamma(-order.alpha))
    result = np.empty_like(t)
    if scale == 0.0:
        result[:] = 0.0
        return result
    for start in range(0, len(t), _CHUNK):
        block = t[start : start + _CHUNK]
        kernel = np.power(block[:, None] - s[None, :], -order.alpha - 1.0)
        result[start : start + _CHUNK] = scale * (kernel * ws).sum(axis=-1)
    return result


def left_rl_cardinal(p: int, order, t):
    """
    Left Riemann–Liouville (equivalently Caputo) derivative of order α
    of the cardinal B-spline φ_p, taken over the half line.

    Args:
        p (int): degree
        order (FractionalOrder or float): the order α, 0 <= α < p
        t (float or array_like): arguments

    Returns:
        float or np.ndarray: D^α φ_p(t), zero for t <= 0

    >>> round(left_rl_cardinal(2, 1.5, 1.5), 5)
    -1.01168
    """
    order = as_order(order)
    _check_range(p, order.alpha)
    p = int(p)
    tt = np.atleast_1d(np.asarray(t, dtype=np.float64)).ravel()
    result = np.zeros_like(tt)
    far = tt >= p + 1 + FAR_MARGIN
    near = (tt > 0.0) & ~far
    if np.any(near):
        result[near] = _near(p, order, tt[near])
    if np.any(far):
        result[far] = _far(p, order, tt[far])
    if np.ndim(t) == 0:
        return float(result[0])
    return result.reshape(np.shape(t))


def right_rl_cardinal(p: int, order, t):
    """
    Right Riemann–Liouville derivative of φ_p, obtained by reflecting the
    left derivative about the centre of the support:
    D_right^α φ_p(t) = D_left^α φ_p(p + 1 - t).
    """
    return left_rl_cardinal(p, order, (p + 1) - np.asarray(t, dtype=np.float64))
