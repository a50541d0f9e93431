"""
Quadrature used only to check the closed forms: Gauss–Jacobi rules for
the one-sided power kernels, and graded composite Gauss–Legendre for
piecewise smooth integrands with algebraic endpoint behaviour.
"""
import logging

import numpy as np
from numpy.polynomial import Polynomial
from scipy.linalg import eigh_tridiagonal
from scipy.special import betaln

from rieszpy.util.num import legendre_rule, panel_rule
from .order import as_order

LOG = logging.getLogger(__name__)

_JACOBI_CACHE = {}


def gauss_jacobi_rule(nodes: int, a: float, b: float):
    """
    Nodes and weights for ∫_{-1}^{1} (1 - s)^a (1 + s)^b g(s) ds by the
    Golub–Welsch eigenvalue method on the Jacobi three-term recurrence.

    Args:
        nodes (int): number of nodes, at least 1
        a (float): exponent at s = 1, a > -1
        b (float): exponent at s = -1, b > -1

    Returns:
        Tuple[np.ndarray, np.ndarray]: ascending nodes and their weights
    """
    if nodes < 1:
        raise ValueError(f"need at least one node, got {nodes}")
    if a <= -1 or b <= -1:
        raise ValueError(f"Jacobi exponents must exceed -1, got a={a}, b={b}")
    key = (int(nodes), float(a), float(b))
    if key in _JACOBI_CACHE:
        return _JACOBI_CACHE[key]
    ab = a + b
    i = np.arange(nodes, dtype=np.float64)
    diag = np.empty(nodes)
    diag[0] = (b - a) / (ab + 2.0)
    if nodes > 1:
        ii = i[1:]
        diag[1:] = (b * b - a * a) / ((2 * ii + ab) * (2 * ii + ab + 2))
    j = np.arange(1, nodes, dtype=np.float64)
    off = np.empty(nodes - 1)
    if nodes > 1:
        # first entry written in reduced form so a + b = -1 is safe
        off[0] = 4.0 * (1 + a) * (1 + b) / ((2 + ab) ** 2 * (3 + ab))
        jj = j[1:]
        s = 2 * jj + ab
        off[1:] = 4 * jj * (jj + a) * (jj + b) * (jj + ab) / (s * s * (s * s - 1))
        off = np.sqrt(off)
    x, v = eigh_tridiagonal(diag, off)
    mu0 = np.exp((ab + 1) * np.log(2.0) + betaln(a + 1, b + 1))
    w = mu0 * v[0, :] ** 2
    _JACOBI_CACHE[key] = (x, w)
    return x, w


def gauss_jacobi_oracle(g, alpha, interval, nodes=20, side="left") -> float:
    """
    Integrate a smooth function against the one-sided power kernel of a
    fractional derivative of order 0 < α < 2 on [lo, hi]:

        side="left":  ∫ (hi - y)^{1-α} g(y) dy
        side="right": ∫ (y - lo)^{1-α} g(y) dy

    Exact when g is a polynomial of degree at most 2·nodes - 1.

    Args:
        g (callable): vectorised integrand
        alpha (float): the order, with 1 - α in (-1, 1)
        interval (Tuple[float, float]): integration limits lo < hi
        nodes (int, optional): rule size. Default 20.
        side (str, optional): "left" or "right"

    Returns:
        float: the weighted integral
    """
    alpha = float(getattr(alpha, "alpha", alpha))
    expo = 1.0 - alpha
    if not -1.0 < expo < 1.0:
        raise ValueError(f"kernel exponent 1 - alpha must lie in (-1, 1), got {expo}")
    lo, hi = map(float, interval)
    if not hi > lo:
        raise ValueError(f"empty interval [{lo}, {hi}]")
    if side == "left":
        s, w = gauss_jacobi_rule(nodes, expo, 0.0)
    elif side == "right":
        s, w = gauss_jacobi_rule(nodes, 0.0, expo)
    else:
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    half = 0.5 * (hi - lo)
    y = lo + half * (s + 1.0)
    return float(half ** (expo + 1.0) * np.dot(w, g(y)))


def fractional_by_quadrature(f, order, x, side="left", nodes=24) -> float:
    """
    The Caputo integral (1/Γ(2-α)) ∫ |x - y|^{1-α} f''(y) dy of a piecewise
    polynomial by quadrature: Gauss–Jacobi on the piece that contains x,
    Gauss–Legendre on the pieces where the kernel is smooth.

    Args:
        f (PiecewisePolynomial): the function
        order (FractionalOrder or float): α in (1, 2)
        x (float): the evaluation point
        side (str, optional): "left" integrates over y < x, "right" over y > x
        nodes (int, optional): nodes per piece

    Returns:
        float: the Caputo derivative at x
    """
    order = as_order(order)
    expo = 1.0 - order.alpha
    f2 = f.derivative(2)
    s, w = legendre_rule(2 * nodes)
    total = 0.0
    for left, width, row in zip(f2.breakpoints[:-1], f2.widths, f2.coeffs):
        right = left + width
        piece = Polynomial(row)
        g = lambda y, a=left, piece=piece: piece(y - a)
        if side == "left":
            if left >= x:
                continue
            if right >= x:
                total += gauss_jacobi_oracle(g, order.alpha, (left, x), nodes, "left")
                continue
            kernel = lambda y: np.power(x - y, expo)
        elif side == "right":
            if right <= x:
                continue
            if left <= x:
                total += gauss_jacobi_oracle(g, order.alpha, (x, right), nodes, "right")
                continue
            kernel = lambda y: np.power(y - x, expo)
        else:
            raise ValueError(f"side must be 'left' or 'right', got {side!r}")
        y = left + 0.5 * width * (s + 1.0)
        total += 0.5 * width * np.dot(w, kernel(y) * g(y))
    return order.inv_gamma(1) * total


def _graded_breakpoints(breakpoints, grading, levels):
    pieces = []
    powers = grading ** np.arange(levels, -1, -1)
    for lo, hi in zip(breakpoints[:-1], breakpoints[1:]):
        half = 0.5 * (hi - lo)
        pieces.append([lo])
        pieces.append(lo + half * powers)
        pieces.append(hi - half * powers[::-1][1:])
    pieces.append([breakpoints[-1]])
    return np.concatenate(pieces)


def composite_gauss_legendre(
    func, breakpoints, nodes=20, grading=0.15, levels=8, tol=1e-10, max_levels=32
):
    """
    Integrate a vectorised function over consecutive panels with
    Gauss–Legendre rules on sub-panels graded geometrically towards both
    panel ends, refining until two successive gradings agree to `tol`.

    Args:
        func (callable): vectorised integrand
        breakpoints (array_like): panel boundaries, where the integrand
            may be non-smooth
        nodes (int, optional): nodes per sub-panel
        grading (float, optional): geometric ratio of the grading
        levels (int, optional): initial number of graded levels
        tol (float, optional): absolute tolerance
        max_levels (int, optional): refinement cap

    Returns:
        Tuple[float, float]: integral and error estimate
    """
    breakpoints = np.asarray(breakpoints, dtype=np.float64)
    if len(breakpoints) < 2:
        return 0.0, 0.0

    def integrate(lv):
        x, w = panel_rule(_graded_breakpoints(breakpoints, grading, lv), nodes)
        return float(np.dot(w, func(x)))

    previous = integrate(levels)
    while True:
        levels += 4
        current = integrate(levels)
        error = abs(current - previous)
        if error <= tol or levels >= max_levels:
            break
        previous = current
    if error > tol:
        LOG.warning("composite quadrature stopped at %d levels, error %.3e", levels, error)
    LOG.debug("composite quadrature: %d levels, error %.3e", levels, error)
    return current, error
