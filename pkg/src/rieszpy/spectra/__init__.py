from .eig import eig_symmetric, eig_general, eigen_residuals
from .distribution import EigenReport, compare_to_symbol, symbol_grid, within_symbol_range

__all__ = [
    "EigenReport",
    "compare_to_symbol",
    "eig_general",
    "eig_symmetric",
    "eigen_residuals",
    "symbol_grid",
    "within_symbol_range",
]
