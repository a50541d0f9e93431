import logging

import numpy as np

from .evaluator import TWO_PI, SymbolEvaluator, _check_angles, alternating_hurwitz

LOG = logging.getLogger(__name__)

_REL_TOL = 1e-13


def zero_order_fit(ev: SymbolEvaluator, lo=1e-4, hi=1e-2, samples=50) -> float:
    """
    Least-squares slope of log f against log θ on [lo, hi], an estimate
    of the order of the zero of the symbol at θ = 0.
    """
    theta = np.logspace(np.log10(lo), np.log10(hi), samples)
    slope, _ = np.polyfit(np.log(theta), np.log(ev(theta)), 1)
    return float(slope)


def sandwich_check(ev: SymbolEvaluator, grid) -> dict:
    """
    Check |θ|^α sinc(θ/2)^{p+1} <= f(θ) pointwise on the grid, and estimate
    the constant of the upper bound

        f(θ) <= |θ|^α sinc(θ/2)^{p+1} + C sin(θ/2)^{p+1}

    as C* = max (f - lower) / sin(θ/2)^{p+1}, recomputed on a grid with
    twice the resolution to check it is stable.

    Args:
        ev (SymbolEvaluator): the symbol
        grid (array_like): points of (0, π]; zero is dropped

    Returns:
        dict: lower_bound_holds, constant, constant_refined, grid_stable
    """
    grid = _check_angles(grid)
    grid = grid[grid > 0]
    if len(grid) < 2:
        raise ValueError("sandwich check needs at least two positive grid points")

    def constant(theta):
        f = ev(theta)
        lower = ev.lower_bound(theta)
        holds = bool(np.all(lower <= f + _REL_TOL * np.maximum(1.0, f)))
        ratio = (f - lower) / np.sin(0.5 * theta) ** (ev.p + 1)
        return holds, float(np.max(ratio))

    holds, c = constant(grid)
    refined = np.linspace(grid[0], grid[-1], 2 * len(grid) - 1)
    holds_refined, c_refined = constant(refined)
    stable = bool(np.isfinite(c) and abs(c_refined - c) <= 1e-2 * max(abs(c), 1e-300))
    report = {
        "lower_bound_holds": holds and holds_refined,
        "constant": c,
        "constant_refined": c_refined,
        "grid_stable": stable,
    }
    LOG.debug("sandwich check p=%d alpha=%g: %s", ev.p, ev.alpha, report)
    return report


def decay_ratio_check(ev: SymbolEvaluator, rtol=1e-12):
    """
    The ratio f(π)/f(π/2) against its bound 2^{(2α + 1 - p)/2}. The bound
    is attained, so the comparison allows a relative `rtol`.

    Returns:
        Tuple[float, float, bool]: (ratio, bound, ratio <= bound)
    """
    ratio = float(ev(np.pi) / ev(0.5 * np.pi))
    bound = float(2.0 ** ((2 * ev.alpha + 1 - ev.p) / 2))
    holds = ratio <= bound * (1 + rtol)
    if not holds:
        LOG.warning("decay ratio %.6g exceeds bound %.6g for %s", ratio, bound, ev)
    LOG.debug("f(pi)/max f = %.6g for %s", normalized_decay(ev), ev)
    return ratio, bound, holds


def normalized_decay(ev: SymbolEvaluator) -> float:
    "f(π) / max f"
    return ev(np.pi) / ev.maximum


def _holds(lower, upper):
    return bool(np.all(lower <= upper * (1 + _REL_TOL) + _REL_TOL))


def odd_degree_bound_check(p: int, alpha: float, grid=None) -> bool:
    """
    For odd p, check f^{p,0} <= f^{p,α} <= f^{p,2} pointwise on a grid of
    [1, π] (2000 points by default).
    """
    if p % 2 != 1 or p < 3:
        raise ValueError(f"needs an odd degree p >= 3, got {p}")
    grid = np.linspace(1.0, np.pi, 2000) if grid is None else _check_angles(grid)
    f0 = SymbolEvaluator(p, 0.0)(grid)
    fa = SymbolEvaluator(p, alpha)(grid)
    f2 = SymbolEvaluator(p, 2.0)(grid)
    return _holds(f0, fa) and _holds(fa, f2)


def even_degree_threshold(alpha: float) -> float:
    "a = (π^4/48)^{1/α}"
    return (np.pi ** 4 / 48.0) ** (1.0 / alpha)


def even_degree_bound_report(p: int, alpha: float, resolution=2000) -> dict:
    """
    For even p > α, check f^{p,0} <= f^{p,α} on [a, π] and, separately,
    on [1, a].
    """
    if p % 2 != 0:
        raise ValueError(f"needs an even degree, got {p}")
    a = even_degree_threshold(alpha)
    zero = SymbolEvaluator(p, 0.0)
    frac = SymbolEvaluator(p, alpha)
    report = {"a": float(a), "holds_on_a_pi": None, "holds_on_1_a": None}
    if a <= np.pi:
        grid = np.linspace(a, np.pi, resolution)
        report["holds_on_a_pi"] = _holds(zero(grid), frac(grid))
    if a > 1.0:
        grid = np.linspace(1.0, min(a, np.pi), resolution)
        report["holds_on_1_a"] = _holds(zero(grid), frac(grid))
    return report


def even_degree_bound_check(p: int, alpha: float, grid=None) -> bool:
    """
    For even p, check f^{p,0} <= f^{p,α} on a grid of [a, π],
    a = (π^4/48)^{1/α}.
    """
    if p % 2 != 0:
        raise ValueError(f"needs an even degree, got {p}")
    a = even_degree_threshold(alpha)
    if grid is None:
        if a > np.pi:
            raise ValueError(f"threshold a={a:.4g} lies beyond pi for alpha={alpha}")
        grid = np.linspace(a, np.pi, 2000)
    grid = _check_angles(grid)
    if np.any(grid < a):
        raise ValueError(f"grid must lie in [a, pi] with a={a:.6g}")
    return _holds(SymbolEvaluator(p, 0.0)(grid), SymbolEvaluator(p, alpha)(grid))


def r_series(p: int, alpha: float, theta, tol=1e-14, max_terms=1 << 16):
    """
    The alternating series

        r^{p,α}(θ) = Σ_{k>=1} (-1)^k [(2kπ + θ)^{-σ} - (2kπ - θ)^{-σ}],  σ = p + 1 - α

    which for even p gives f^{p,α}(θ) = |θ|^α sinc(θ/2)^{p+1} + (2 sin(θ/2))^{p+1} r^{p,α}(θ).
    Summed explicitly until the alternating-series bound on the next pair
    drops below `tol`; if that needs more than `max_terms` pairs the
    remainder is added in closed form.
    """
    if not p > alpha:
        raise ValueError(f"needs p > alpha, got p={p}, alpha={alpha}")
    th = np.atleast_1d(_check_angles(theta)).ravel()
    s = p + 1.0 - alpha
    # |pair k| <= 2 π σ (2kπ - π)^{-σ-1}
    span = (tol / (TWO_PI * s)) ** (-1.0 / (s + 1.0))
    terms = int(np.ceil((span + np.pi) / TWO_PI)) if np.isfinite(span) else max_terms + 1
    corrected = terms > max_terms
    terms = max(1, min(terms, max_terms))
    k = np.arange(1, terms + 1, dtype=np.float64)
    signs = np.where(k % 2 == 0, 1.0, -1.0)
    result = np.empty_like(th)
    for start in range(0, len(th), 256):
        block = th[start : start + 256, None]
        pairs = np.power(TWO_PI * k + block, -s) - np.power(TWO_PI * k - block, -s)
        result[start : start + 256] = (signs * pairs).sum(axis=-1)
    if corrected:
        q = th / TWO_PI
        a = terms + 1.0
        sign = -1.0 if terms % 2 == 0 else 1.0
        result += TWO_PI ** (-s) * sign * (alternating_hurwitz(s, a + q) - alternating_hurwitz(s, a - q))
    if np.ndim(theta) == 0:
        return float(result[0])
    return result.reshape(np.shape(theta))


def zero_order_r_bound(p: int) -> float:
    "The bound (π^4/48 - 1)/π^{p+1} on r^{p,0} over [0, π]"
    return (np.pi ** 4 / 48.0 - 1.0) / np.pi ** (p + 1)


def r_bound_zero_order(p: int, grid=None) -> bool:
    "For even p, check r^{p,0}(θ) <= (π^4/48 - 1)/π^{p+1} on a grid of [0, π]"
    if p % 2 != 0:
        raise ValueError(f"needs an even degree, got {p}")
    grid = np.linspace(0.0, np.pi, 2001) if grid is None else _check_angles(grid)
    return bool(np.all(r_series(p, 0.0, grid) <= zero_order_r_bound(p) * (1 + _REL_TOL)))
