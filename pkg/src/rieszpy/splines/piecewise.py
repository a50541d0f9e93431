import numpy as np
from numpy.polynomial import Polynomial
from scipy.interpolate import PPoly

from rieszpy.util.num import reflect_polynomial


class PiecewisePolynomial:
    """
    A piecewise polynomial on consecutive intervals, stored as one row
    of ascending coefficients per interval in the local basis
    (y - left breakpoint)^m.

    Evaluation is delegated to `scipy.interpolate.PPoly`; values outside
    the breakpoint range are zero.

    Attributes:
        breakpoints (np.ndarray): the m + 1 increasing breakpoints
        coeffs (np.ndarray): (m, degree + 1) array of local coefficients
    """

    def __init__(self, breakpoints, coeffs):
        breakpoints = np.asarray(breakpoints, dtype=np.float64)
        coeffs = np.atleast_2d(np.asarray(coeffs, dtype=np.float64))
        if breakpoints.ndim != 1 or len(breakpoints) < 2:
            raise ValueError("need at least two breakpoints")
        if np.any(np.diff(breakpoints) <= 0):
            raise ValueError("breakpoints must be strictly increasing")
        if coeffs.shape[0] != len(breakpoints) - 1:
            raise ValueError(
                f"{len(breakpoints) - 1} intervals but {coeffs.shape[0]} coefficient rows"
            )
        self.breakpoints = breakpoints
        self.coeffs = coeffs
        self._ppoly = PPoly(coeffs[:, ::-1].T.copy(), breakpoints, extrapolate=False)

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    @property
    def intervals(self) -> int:
        return self.coeffs.shape[0]

    @property
    def domain(self):
        return float(self.breakpoints[0]), float(self.breakpoints[-1])

    @property
    def widths(self) -> np.ndarray:
        return np.diff(self.breakpoints)

    def __call__(self, x):
        values = np.nan_to_num(self._ppoly(np.asarray(x, dtype=np.float64)), nan=0.0)
        if np.ndim(x) == 0:
            return float(values)
        return values

    def derivative(self, order: int = 1) -> "PiecewisePolynomial":
        "The piecewise derivative of the given order"
        if order > self.degree:
            return PiecewisePolynomial(self.breakpoints, np.zeros((self.intervals, 1)))
        c = self._ppoly.derivative(order).c
        return PiecewisePolynomial(self.breakpoints, c[::-1].T)

    def end_values(self, order: int = 0):
        """
        One-sided values of the `order`-th derivative at the left end (a+)
        and the right end (b-) of the domain.
        """
        first = Polynomial(self.coeffs[0]).deriv(order)
        last = Polynomial(self.coeffs[-1]).deriv(order)
        return float(first(0.0)), float(last(self.widths[-1]))

    def reflect(self, about=None) -> "PiecewisePolynomial":
        """
        The mirror image y -> c - y, with c = a + b for the domain [a, b]
        unless `about` is given.
        """
        a, b = self.domain
        c = a + b if about is None else about
        breakpoints = c - self.breakpoints[::-1]
        coeffs = np.array(
            [reflect_polynomial(row, h) for row, h in zip(self.coeffs, self.widths)]
        )[::-1]
        return PiecewisePolynomial(breakpoints, coeffs)

    def __repr__(self):
        a, b = self.domain
        return (
            f"<PiecewisePolynomial: {self.intervals} pieces of degree "
            f"{self.degree} on [{a:.4g}, {b:.4g}]>"
        )
