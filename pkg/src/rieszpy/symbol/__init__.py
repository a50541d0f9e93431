from .evaluator import SymbolEvaluator, symbol_eval, alternating_hurwitz
from .bounds import (
    zero_order_fit,
    sandwich_check,
    decay_ratio_check,
    normalized_decay,
    odd_degree_bound_check,
    even_degree_threshold,
    even_degree_bound_check,
    even_degree_bound_report,
    r_series,
    zero_order_r_bound,
    r_bound_zero_order,
)
from .fourier import toeplitz_symbol, fourier_coefficient, fourier_route_check

__all__ = [
    "SymbolEvaluator",
    "alternating_hurwitz",
    "decay_ratio_check",
    "even_degree_bound_check",
    "even_degree_bound_report",
    "even_degree_threshold",
    "fourier_coefficient",
    "fourier_route_check",
    "normalized_decay",
    "odd_degree_bound_check",
    "r_bound_zero_order",
    "r_series",
    "sandwich_check",
    "symbol_eval",
    "toeplitz_symbol",
    "zero_order_fit",
    "zero_order_r_bound",
]
