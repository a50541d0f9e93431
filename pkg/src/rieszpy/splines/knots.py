import logging
import numpy as np

LOG = logging.getLogger(__name__)

P_MIN, P_MAX = 2, 10
N_MIN, N_MAX = 2, 4096


class KnotVector:
    """
    Open uniform knot vector of [0, 1] for degree `p` splines on `n`
    intervals.

    Knots are indexed from 1 as ξ_1..ξ_{2p+n+1}; `knots` holds them in
    a zero-based array so `knots[k - 1] == ξ_k`.

    Attributes:
        p (int): spline degree
        n (int): number of mesh intervals
        knots (np.ndarray): the 2p + n + 1 knots
    """

    def __init__(self, p: int, n: int):
        if int(p) != p or not P_MIN <= p <= P_MAX:
            raise ValueError(f"degree p must be an integer in [{P_MIN}, {P_MAX}], got {p}")
        if int(n) != n or not N_MIN <= n <= N_MAX:
            raise ValueError(f"n must be an integer in [{N_MIN}, {N_MAX}], got {n}")
        self.p = int(p)
        self.n = int(n)
        self.knots = self.scaled_knots / self.n
        self.knots.flags.writeable = False

    @property
    def scaled_knots(self) -> np.ndarray:
        "Integer knots n·ξ_k, clamped to [0, n]"
        k = np.arange(1, 2 * self.p + self.n + 2)
        return np.clip(k - self.p - 1, 0, self.n).astype(np.float64)

    def __len__(self):
        return len(self.knots)

    def xi(self, k: int) -> float:
        "The knot ξ_k (one-based)"
        return float(self.knots[k - 1])

    @property
    def last_span(self) -> int:
        "Zero-based index of the last non-degenerate knot span"
        return self.n + self.p - 1

    def __repr__(self):
        return f"<KnotVector: p={self.p}, n={self.n}>"


class BSplineSpace:
    """
    The degree `p` B-spline space on the open uniform knot vector, with
    basis N_1..N_{n+p} and the trimmed space N_2..N_{n+p-1} used for
    collocation at the Greville abscissae.

    Args:
        p (int): spline degree, 2 <= p <= 10
        n (int): number of mesh intervals, 2 <= n <= 4096
    """

    def __init__(self, p: int, n: int):
        self.knot_vector = KnotVector(p, n)
        self._greville = None

    @property
    def p(self) -> int:
        return self.knot_vector.p

    @property
    def n(self) -> int:
        return self.knot_vector.n

    @property
    def knots(self) -> np.ndarray:
        return self.knot_vector.knots

    @property
    def dimension(self) -> int:
        "Dimension n + p of the full space"
        return self.n + self.p

    @property
    def trimmed_indices(self) -> np.ndarray:
        "One-based indices 2..n+p-1 of the trimmed basis"
        return np.arange(2, self.n + self.p)

    @property
    def trimmed_dimension(self) -> int:
        return self.n + self.p - 2

    @property
    def interior_indices(self) -> np.ndarray:
        "Indices p+1..n whose basis functions are translated cardinal B-splines"
        return np.arange(self.p + 1, self.n + 1)

    @property
    def greville_scaled(self) -> np.ndarray:
        """
        The Greville abscissae scaled by n, computed from the integer knots
        so interior values are exact half-integers.
        """
        scaled = self.knot_vector.scaled_knots
        i = self.trimmed_indices
        sums = np.array([scaled[k : k + self.p].sum() for k in i])
        return sums / self.p

    @property
    def greville(self) -> np.ndarray:
        "Greville abscissae η_2..η_{n+p-1}"
        if self._greville is None:
            self._greville = self.greville_scaled / self.n
            self._greville.flags.writeable = False
        return self._greville

    def support(self, i: int):
        "The support [ξ_i, ξ_{i+p+1}] of N_i"
        self.check_index(i)
        return self.knot_vector.xi(i), self.knot_vector.xi(i + self.p + 1)

    def check_index(self, i: int):
        if int(i) != i or not 1 <= i <= self.dimension:
            raise ValueError(
                f"basis index must be in [1, {self.dimension}], got {i}"
            )

    def evaluate(self, coeffs, x) -> np.ndarray:
        """
        Evaluate a spline of the trimmed space.

        Args:
            coeffs (array_like): coefficients c_1..c_{n+p-2} multiplying
                N_2..N_{n+p-1}
            x (array_like): points in [0, 1]

        Returns:
            np.ndarray: spline values at `x`
        """
        from .bspline import eval_bspline

        coeffs = np.asarray(coeffs, dtype=np.float64)
        if coeffs.shape != (self.trimmed_dimension,):
            raise ValueError(
                f"expected {self.trimmed_dimension} coefficients, got {coeffs.shape}"
            )
        x = np.asarray(x, dtype=np.float64)
        result = np.zeros_like(x)
        for c, j in zip(coeffs, self.trimmed_indices):
            if c != 0.0:
                result += c * eval_bspline(self, j, x)
        return result

    def __repr__(self):
        return f"<BSplineSpace: p={self.p}, n={self.n}>"


def greville_points(space: BSplineSpace) -> np.ndarray:
    """
    Greville abscissae η_i = (ξ_{i+1} + ... + ξ_{i+p}) / p for
    i = 2..n+p-1, the collocation points of the trimmed space.

    Args:
        space (BSplineSpace): the spline space

    Returns:
        np.ndarray: the n + p - 2 strictly increasing points in (0, 1)
    """
    return np.array(space.greville)
