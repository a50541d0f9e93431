from .collocation import (
    CollocationSystem,
    assemble_matrix,
    assemble_left_right,
    assemble_rhs,
    assemble_advection_reaction,
    collocation_system,
)
from .toeplitz import ToeplitzSplit, toeplitz_split, toeplitz_coefficients

__all__ = [
    "CollocationSystem",
    "ToeplitzSplit",
    "assemble_matrix",
    "assemble_left_right",
    "assemble_rhs",
    "assemble_advection_reaction",
    "collocation_system",
    "toeplitz_coefficients",
    "toeplitz_split",
]
