"""
The spectral symbol

    f^{p,α}(θ) = Σ_{l∈Z} |θ + 2lπ|^α (sin(θ/2 + lπ) / (θ/2 + lπ))^{p+1}

of the Toeplitz part of the collocation matrix.

With sin(θ/2 + lπ) = (-1)^l sin(θ/2) the terms l != 0 all carry the factor
(2 sin(θ/2))^{p+1}, and what remains is a sum of powers |θ + 2lπ|^{-σ},
σ = p + 1 - α: positive for odd p, alternating for even p. The partial sum
is taken to a certified level L; when that level would exceed
`max_terms` the exact remainder is added through Hurwitz zeta sums.
"""
import logging

import numpy as np
from scipy.optimize import minimize_scalar
from scipy.special import zeta

LOG = logging.getLogger(__name__)

TWO_PI = 2.0 * np.pi
_CHUNK = 256


def alternating_hurwitz(s, a):
    "Σ_{k>=0} (-1)^k (k + a)^{-s}, for s > 1 and a > 0"
    return 2.0 ** (-s) * (zeta(s, 0.5 * a) - zeta(s, 0.5 * (a + 1.0)))


def _check_angles(theta):
    theta = np.asarray(theta, dtype=np.float64)
    if np.any((theta < 0.0) | (theta > np.pi)) or np.any(np.isnan(theta)):
        raise ValueError("symbol arguments must lie in [0, pi]; the symbol is even")
    return theta


class SymbolEvaluator:
    """
    Evaluator for f^{p,α} on [0, π].

    Args:
        p (int): spline degree
        alpha (float): order, 0 <= α <= 2 and α < p
        tol (float, optional): target bound for the neglected series tail
        min_terms (int, optional): smallest truncation level
        max_terms (int, optional): largest explicit truncation level; beyond
            it the remainder is summed in closed form
        terms (int, optional): force the truncation level

    Attributes:
        truncation (int): the level L of the explicit partial sum
        tail_corrected (bool): whether the closed-form remainder is added
        tail_bound (float): bound on what is neglected
    """

    def __init__(self, p, alpha, tol=1e-13, min_terms=16, max_terms=4096, terms=None):
        if int(p) != p or p < 1:
            raise ValueError(f"degree must be a positive integer, got {p}")
        alpha = float(alpha)
        if not 0.0 <= alpha <= 2.0:
            raise ValueError(f"order must lie in [0, 2], got {alpha}")
        if not p > alpha:
            raise ValueError(f"the symbol series needs p > alpha, got p={p}, alpha={alpha}")
        self.p = int(p)
        self.alpha = alpha
        self.sigma = self.p + 1.0 - alpha
        self.tol = tol
        if terms is None:
            terms = max(min_terms, self._certified_level(tol))
            self.tail_corrected = terms > max_terms
            terms = min(terms, max_terms)
        else:
            self.tail_corrected = False
        self.truncation = int(terms)
        bound = self.integral_tail_bound(self.truncation)
        self.tail_bound = 8 * np.finfo(float).eps * bound if self.tail_corrected else bound
        self._max = None
        LOG.debug(
            "f^{%d,%g}: L=%d, tail corrected=%s, tail bound %.2e",
            self.p, self.alpha, self.truncation, self.tail_corrected, self.tail_bound,
        )

    def integral_tail_bound(self, level) -> float:
        "Bound on Σ_{|l|>L} |term_l| over [0, π]"
        s = self.sigma
        return 2.0 ** (self.p + 2) * (TWO_PI * level - np.pi) ** (1.0 - s) / (TWO_PI * (s - 1.0))

    def _certified_level(self, tol) -> int:
        s = self.sigma
        target = tol * TWO_PI * (s - 1.0) / 2.0 ** (self.p + 2)
        span = target ** (1.0 / (1.0 - s))
        if not np.isfinite(span) or span > 1e15:
            return np.iinfo(np.int64).max // 4
        return int(np.ceil((span + np.pi) / TWO_PI))

    @property
    def odd(self) -> bool:
        return self.p % 2 == 1

    def with_terms(self, terms) -> "SymbolEvaluator":
        "An evaluator with an explicit truncation level and no remainder"
        return SymbolEvaluator(self.p, self.alpha, tol=self.tol, terms=terms)

    def _remainder(self, theta):
        q = theta / TWO_PI
        s = self.sigma
        a = self.truncation + 1.0
        scale = TWO_PI ** (-s)
        if self.odd:
            return scale * (zeta(s, a + q) + zeta(s, a - q))
        sign = -1.0 if self.truncation % 2 == 0 else 1.0
        return scale * sign * (alternating_hurwitz(s, a + q) - alternating_hurwitz(s, a - q))

    def _power_sum(self, theta):
        l = np.arange(1, self.truncation + 1, dtype=np.float64)
        result = np.empty_like(theta)
        for start in range(0, len(theta), _CHUNK):
            th = theta[start : start + _CHUNK, None]
            plus = np.power(th + TWO_PI * l, -self.sigma)
            minus = np.power(TWO_PI * l - th, -self.sigma)
            if self.odd:
                terms = plus + minus
            else:
                terms = np.where(l % 2 == 0, 1.0, -1.0) * (plus - minus)
            result[start : start + _CHUNK] = terms.sum(axis=-1)
        if self.tail_corrected:
            result += self._remainder(theta)
        return result

    def __call__(self, theta):
        th = np.atleast_1d(_check_angles(theta)).ravel()
        central = np.power(th, self.alpha) * np.sinc(th / TWO_PI) ** (self.p + 1)
        shifted = (2.0 * np.sin(0.5 * th)) ** (self.p + 1) * self._power_sum(th)
        values = central + shifted
        if np.ndim(theta) == 0:
            return float(values[0])
        return values.reshape(np.shape(theta))

    def lower_bound(self, theta):
        "|θ|^α sinc(θ/2)^{p+1}, the l = 0 term"
        th = _check_angles(theta)
        return np.power(th, self.alpha) * np.sinc(th / TWO_PI) ** (self.p + 1)

    @property
    def maximum(self) -> float:
        """
        max over [0, π] of f, from a 10^4-point scan refined by
        golden-section search around the best sample.
        """
        if self._max is None:
            grid = np.linspace(0.0, np.pi, 10001)
            values = self(grid)
            k = int(np.argmax(values))
            best = float(values[k])
            if 0 < k < len(grid) - 1:
                try:
                    res = minimize_scalar(
                        lambda t: -self(float(np.clip(t, 0.0, np.pi))),
                        bracket=(grid[k - 1], grid[k], grid[k + 1]),
                        method="golden",
                        tol=1e-12,
                    )
                    best = max(best, -float(res.fun))
                except ValueError:
                    # flat top, the scan value stands
                    LOG.debug("golden-section refinement skipped for %s", self)
            self._max = best
        return self._max

    def normalized(self, theta):
        "f / max f"
        return self(theta) / self.maximum

    def __repr__(self):
        return f"<SymbolEvaluator: p={self.p}, alpha={self.alpha}, L={self.truncation}>"


def symbol_eval(ev: SymbolEvaluator, theta):
    """
    Evaluate f^{p,α}(θ) for θ in [0, π].

    >>> symbol_eval(SymbolEvaluator(3, 0.0), 0.0)
    1.0
    """
    return ev(theta)
