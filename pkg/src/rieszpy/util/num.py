import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import roots_legendre

_LEGENDRE_CACHE = {}


def truncated_power(x, q) -> np.ndarray:
    """
    Truncated power function `(x)_+^q`, equal to `x**q` for `x > 0`
    and zero otherwise (including `x == 0` for any `q`).

    Args:
        x (array_like): arguments
        q (float): exponent

    Returns:
        np.ndarray: values with the same shape as `x`

    >>> truncated_power([-1.0, 0.0, 4.0], 0.5).tolist()
    [0.0, 0.0, 2.0]
    """
    x = np.asarray(x, dtype=np.float64)
    positive = x > 0
    return np.where(positive, np.power(np.where(positive, x, 1.0), q), 0.0)


def recentre(coeffs, shift) -> np.ndarray:
    """
    Re-expand an ascending monomial coefficient vector.

    Given `p(u) = sum_m c_m u^m`, returns the coefficients of
    `q(v) = p(v + shift)` in ascending powers of `v`, padded to the
    input length.

    Args:
        coeffs (array_like): ascending coefficients of `p`
        shift (float): offset added to the variable

    Returns:
        np.ndarray: ascending coefficients of `q`

    >>> recentre([0.0, 0.0, 1.0], 1.0).tolist()
    [1.0, 2.0, 1.0]
    """
    coeffs = np.asarray(coeffs, dtype=np.float64)
    composed = Polynomial(coeffs)(Polynomial([shift, 1.0])).coef
    result = np.zeros_like(coeffs)
    result[: len(composed)] = composed[: len(coeffs)]
    return result


def reflect_polynomial(coeffs, width) -> np.ndarray:
    """Coefficients of `p(width - v)` in ascending powers of `v`."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    composed = Polynomial(coeffs)(Polynomial([width, -1.0])).coef
    result = np.zeros_like(coeffs)
    result[: len(composed)] = composed[: len(coeffs)]
    return result


def legendre_rule(nodes: int):
    """Cached Gauss–Legendre nodes and weights on [-1, 1]."""
    if nodes not in _LEGENDRE_CACHE:
        _LEGENDRE_CACHE[nodes] = roots_legendre(nodes)
    return _LEGENDRE_CACHE[nodes]


def panel_rule(breakpoints, nodes=16):
    """
    Composite Gauss–Legendre rule over consecutive panels.

    Args:
        breakpoints (array_like): increasing panel boundaries
        nodes (int, optional): nodes per panel

    Returns:
        Tuple[np.ndarray, np.ndarray]: concatenated nodes and weights
    """
    breakpoints = np.asarray(breakpoints, dtype=np.float64)
    s, w = legendre_rule(nodes)
    left, right = breakpoints[:-1, None], breakpoints[1:, None]
    half = 0.5 * (right - left)
    x = left + half * (s[None, :] + 1.0)
    return x.ravel(), (half * w[None, :]).ravel()


def convergence_orders(errors) -> np.ndarray:
    """
    Observed orders `log2(e_k / e_{k+1})` for errors on successively
    halved meshes. The first entry is `nan`.

    >>> convergence_orders([4.0, 1.0, 0.25]).tolist()
    [nan, 2.0, 2.0]
    """
    errors = np.asarray(errors, dtype=np.float64)
    orders = np.full(errors.shape, np.nan)
    orders[1:] = np.log2(errors[:-1] / errors[1:])
    return orders
