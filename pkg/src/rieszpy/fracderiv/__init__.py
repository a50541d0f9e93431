from .order import FractionalOrder, BoundaryData
from .cardinal import left_rl_cardinal, right_rl_cardinal
from .caputo import (
    caputo_left_piecewise,
    caputo_right_piecewise,
    rl_left_from_caputo,
    rl_right_from_caputo,
    rl_left_piecewise,
    rl_right_piecewise,
)
from .quadrature import (
    gauss_jacobi_rule,
    gauss_jacobi_oracle,
    fractional_by_quadrature,
    composite_gauss_legendre,
)
from .inner_product import inner_product_check

__all__ = [
    "FractionalOrder",
    "BoundaryData",
    "left_rl_cardinal",
    "right_rl_cardinal",
    "caputo_left_piecewise",
    "caputo_right_piecewise",
    "rl_left_from_caputo",
    "rl_right_from_caputo",
    "rl_left_piecewise",
    "rl_right_piecewise",
    "gauss_jacobi_rule",
    "gauss_jacobi_oracle",
    "fractional_by_quadrature",
    "composite_gauss_legendre",
    "inner_product_check",
]
