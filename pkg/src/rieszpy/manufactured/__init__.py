from .solutions import (
    ManufacturedSolution,
    SOLUTIONS,
    get_solution,
    poly33,
    riesz_rhs,
    riesz_rhs_by_quadrature,
    sinpix2,
)
from .convergence import (
    ConvergenceTable,
    SingularSystemError,
    convergence_study,
    error_infinity,
    order_model,
    solve,
    spline_consistency_check,
)
from .tables import REFERENCE_TABLES, reference_row

__all__ = [
    "ConvergenceTable",
    "ManufacturedSolution",
    "REFERENCE_TABLES",
    "SOLUTIONS",
    "SingularSystemError",
    "convergence_study",
    "error_infinity",
    "get_solution",
    "order_model",
    "reference_row",
    "poly33",
    "riesz_rhs",
    "riesz_rhs_by_quadrature",
    "sinpix2",
    "solve",
    "spline_consistency_check",
]
