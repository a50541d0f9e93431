import logging

import numpy as np

from .cardinal import left_rl_cardinal, right_rl_cardinal
from .order import FractionalOrder
from .quadrature import composite_gauss_legendre

LOG = logging.getLogger(__name__)


def inner_product_check(p1: int, p2: int, alpha1: float, alpha2: float, k: int, tol=1e-10):
    """
    Both sides of the fractional inner-product identity for cardinal
    B-splines,

        ∫ D_left^{α1} φ_{p1}(x) D_right^{α2} φ_{p2}(x + k) dx
            = D_left^{α1+α2} φ_{p1+p2+1}(p2 + 1 - k)

    The left factor vanishes for x < 0 and the right one for
    x > p2 + 1 - k, so the integral runs over [0, p2 + 1 - k] with
    breakpoints at the integers, where both factors have algebraic
    singularities.

    Args:
        p1, p2 (int): degrees
        alpha1, alpha2 (float): orders with 0 <= αi < pi
        k (int): integer shift
        tol (float, optional): absolute quadrature tolerance

    Returns:
        Tuple[float, float]: (lhs by quadrature, rhs in closed form)
    """
    if int(k) != k:
        raise ValueError(f"shift k must be an integer, got {k}")
    for p, alpha in ((p1, alpha1), (p2, alpha2)):
        if int(p) != p or p < 1:
            raise ValueError(f"degree must be a positive integer, got {p}")
        if not 0.0 <= alpha < p:
            raise ValueError(f"need 0 <= alpha < p, got alpha={alpha}, p={p}")
    k = int(k)
    order1 = FractionalOrder(alpha1, p_max=p1)
    order2 = FractionalOrder(alpha2, p_max=p2)
    upper = p2 + 1 - k
    if upper <= 0:
        lhs = 0.0
    else:
        def integrand(x):
            return left_rl_cardinal(p1, order1, x) * right_rl_cardinal(p2, order2, x + k)

        lhs, error = composite_gauss_legendre(
            integrand, np.arange(upper + 1, dtype=np.float64), tol=tol
        )
        LOG.debug(
            "inner product p=(%d, %d), alpha=(%g, %g), k=%d: error estimate %.2e",
            p1, p2, alpha1, alpha2, k, error,
        )
    p = p1 + p2 + 1
    rhs = left_rl_cardinal(p, FractionalOrder(alpha1 + alpha2, p_max=p), float(upper))
    return lhs, rhs
