from .splines import BSplineSpace
from .fracderiv import FractionalOrder
from .assembly import CollocationSystem, assemble_matrix, toeplitz_split
from .symbol import SymbolEvaluator
from .manufactured import ManufacturedSolution, convergence_study

__all__ = [
    "BSplineSpace",
    "CollocationSystem",
    "FractionalOrder",
    "ManufacturedSolution",
    "SymbolEvaluator",
    "assemble_matrix",
    "convergence_study",
    "toeplitz_split",
]
