from .knots import KnotVector, BSplineSpace, greville_points
from .piecewise import PiecewisePolynomial
from .bspline import eval_bspline, eval_bspline_derivative, to_piecewise
from .cardinal import cardinal_bspline

__all__ = [
    "KnotVector",
    "BSplineSpace",
    "PiecewisePolynomial",
    "cardinal_bspline",
    "eval_bspline",
    "eval_bspline_derivative",
    "greville_points",
    "to_piecewise",
]
