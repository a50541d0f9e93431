import logging

import numpy as np
from scipy.special import rgamma

LOG = logging.getLogger(__name__)

_COS_GUARD = 1e-12


class FractionalOrder:
    """
    A validated fractional order α with cached reciprocal Gamma values
    1/Γ(k - α + 1), k = 0..p_max + 1, and the Riesz prefactor
    1/(2 cos(πα/2)).

    Orders in [0, 2] are accepted for symbol and identity work; the
    collocation solver additionally requires 1 < α < 2, see
    `require_solver_range`.

    Args:
        alpha (float): the order
        p_max (int, optional): largest spline degree the cache serves.
            Default 10.
    """

    def __init__(self, alpha: float, p_max: int = 10):
        alpha = float(alpha)
        if not np.isfinite(alpha) or not 0.0 <= alpha <= 2.0:
            raise ValueError(f"fractional order must lie in [0, 2], got {alpha}")
        self.alpha = alpha
        self.p_max = int(p_max)
        self._inv_gamma = rgamma(np.arange(self.p_max + 2) - alpha + 1.0)
        self._inv_gamma.flags.writeable = False

    def inv_gamma(self, k) -> float:
        "1/Γ(k - α + 1), zero at the poles of Γ"
        if isinstance(k, (int, np.integer)) and 0 <= k <= self.p_max + 1:
            return float(self._inv_gamma[k])
        return rgamma(np.asarray(k, dtype=np.float64) - self.alpha + 1.0)

    @property
    def cos_half_pi_alpha(self) -> float:
        return float(np.cos(0.5 * np.pi * self.alpha))

    @property
    def riesz_prefactor(self) -> float:
        "1/(2 cos(πα/2)), undefined in a neighbourhood of α = 1"
        c = self.cos_half_pi_alpha
        if abs(c) <= _COS_GUARD:
            raise ValueError(
                f"Riesz prefactor is singular at alpha={self.alpha} (cos(pi alpha/2)={c:.3e})"
            )
        return 0.5 / c

    def require_solver_range(self):
        "Raise unless 1 < α < 2 with a well-defined Riesz prefactor"
        if not 1.0 < self.alpha < 2.0:
            raise ValueError(
                f"the collocation solver needs 1 < alpha < 2, got {self.alpha}"
            )
        self.riesz_prefactor
        return self

    def __eq__(self, other):
        return isinstance(other, FractionalOrder) and other.alpha == self.alpha

    def __hash__(self):
        return hash(("FractionalOrder", self.alpha))

    def __repr__(self):
        return f"<FractionalOrder: {self.alpha}>"


def as_order(order) -> FractionalOrder:
    "Accept either a FractionalOrder or a bare float"
    if isinstance(order, FractionalOrder):
        return order
    return FractionalOrder(order)


class BoundaryData:
    """
    Values and first derivatives of a function at the ends a+ and b- of
    its domain, the data entering the Riemann–Liouville/Caputo relation.

    Attributes:
        left_value (float): u(a+)
        left_slope (float): u'(a+)
        right_value (float): u(b-)
        right_slope (float): u'(b-)
    """

    def __init__(self, left_value=0.0, left_slope=0.0, right_value=0.0, right_slope=0.0):
        values = (left_value, left_slope, right_value, right_slope)
        if not all(np.isfinite(v) for v in values):
            raise ValueError(f"boundary data must be finite, got {values}")
        self.left_value, self.left_slope, self.right_value, self.right_slope = map(
            float, values
        )

    @classmethod
    def from_piecewise(cls, f, a=None, b=None):
        """
        Boundary data of a piecewise polynomial at the ends of [a, b]
        (defaults to its own domain). A function whose support starts
        after a, or ends before b, has zero data on that side.
        """
        lo, hi = f.domain
        a = lo if a is None else a
        b = hi if b is None else b
        u0, u1 = f.end_values(0)
        d0, d1 = f.end_values(1)
        left = (u0, d0) if lo <= a else (0.0, 0.0)
        right = (u1, d1) if hi >= b else (0.0, 0.0)
        return cls(left[0], left[1], right[0], right[1])

    @property
    def is_zero(self) -> bool:
        return not any(
            (self.left_value, self.left_slope, self.right_value, self.right_slope)
        )

    def __repr__(self):
        return (
            f"<BoundaryData: u(a+)={self.left_value:.6g}, u'(a+)={self.left_slope:.6g}, "
            f"u(b-)={self.right_value:.6g}, u'(b-)={self.right_slope:.6g}>"
        )
