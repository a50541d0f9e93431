"""
Collocation of the Riesz fractional diffusion operator in the trimmed
B-spline space at the Greville abscissae.

Columns of translated cardinal B-splines (indices p+1..n) use the closed
form D^α N_j(x) = n^α D^α φ_p(n x - j + p + 1); the clamped columns near
the boundary go through their exact piecewise form, the Caputo kernel
integrals and the Riemann–Liouville boundary corrections.
"""
import logging
import time

import numpy as np

from rieszpy.fracderiv.cardinal import left_rl_cardinal, right_rl_cardinal
from rieszpy.fracderiv.caputo import rl_left_piecewise, rl_right_piecewise
from rieszpy.fracderiv.order import as_order
from rieszpy.splines.bspline import eval_bspline, eval_bspline_derivative, to_piecewise
from rieszpy.util.exe import parallel_map, worker_count

LOG = logging.getLogger(__name__)

_MIN_BLOCK_ROWS = 8


class CollocationSystem:
    """
    The collocation matrix A (and optionally right-hand side) of the
    Riesz problem on a B-spline space.

    Row i - 1 and column j - 1 correspond to the Greville point η_i and
    the basis function N_j, for i, j = 2..n+p-1.

    Attributes:
        space (BSplineSpace): the spline space
        order (FractionalOrder): the fractional order
        matrix (np.ndarray): the dense (n+p-2) x (n+p-2) matrix
        rhs (np.ndarray or None): the right-hand side
    """

    def __init__(self, space, order, matrix, rhs=None):
        self.space = space
        self.order = as_order(order)
        self.matrix = np.asarray(matrix, dtype=np.float64)
        size = space.trimmed_dimension
        if self.matrix.shape != (size, size):
            raise ValueError(f"expected a {size}x{size} matrix, got {self.matrix.shape}")
        if rhs is not None:
            rhs = np.asarray(rhs, dtype=np.float64)
            if rhs.shape != (size,):
                raise ValueError(f"expected a right-hand side of length {size}, got {rhs.shape}")
        self.rhs = rhs

    @property
    def size(self) -> int:
        return self.matrix.shape[0]

    @property
    def scaled_matrix(self) -> np.ndarray:
        "n^{-α} A, the matrix whose spectrum follows the symbol"
        return self.matrix * self.space.n ** (-self.order.alpha)

    def with_rhs(self, rhs) -> "CollocationSystem":
        return CollocationSystem(self.space, self.order, self.matrix, rhs)

    def with_matrix(self, matrix) -> "CollocationSystem":
        return CollocationSystem(self.space, self.order, matrix, self.rhs)

    def __repr__(self):
        return f"<CollocationSystem: p={self.space.p}, n={self.space.n}, alpha={self.order.alpha}>"


def _boundary_pieces(space):
    interior = set(space.interior_indices.tolist())
    return {
        j: to_piecewise(space, j) for j in space.trimmed_indices if j not in interior
    }


def _fill_rows(space, order, rows, pieces):
    p, n = space.p, space.n
    scale = float(n) ** order.alpha
    eta = space.greville[rows]
    eta_scaled = space.greville_scaled[rows]
    size = space.trimmed_dimension
    left = np.empty((len(rows), size))
    right = np.empty((len(rows), size))

    interior = space.interior_indices
    if len(interior):
        t = eta_scaled[:, None] - interior[None, :] + (p + 1)
        left[:, interior - 2] = scale * left_rl_cardinal(p, order, t)
        right[:, interior - 2] = scale * right_rl_cardinal(p, order, t)

    for j, f in pieces.items():
        left[:, j - 2] = rl_left_piecewise(f, order, eta, 0.0, 1.0)
        right[:, j - 2] = rl_right_piecewise(f, order, eta, 0.0, 1.0)
    return left, right


def _row_blocks(size, threads):
    workers = worker_count(threads)
    block = max(_MIN_BLOCK_ROWS, -(-size // workers))
    return [np.arange(start, min(start + block, size)) for start in range(0, size, block)]


def assemble_left_right(space, order, threads=None):
    """
    The one-sided matrices A_L = [D_left^α N_j(η_i)] and
    A_R = [D_right^α N_j(η_i)], before the Riesz prefactor.

    Row blocks are filled independently, concurrently when more than one
    worker is available; every entry is computed the same way whatever the
    blocking.

    Args:
        space (BSplineSpace): the spline space
        order (FractionalOrder or float): α with 1 < α < 2
        threads (int, optional): worker override, see `worker_count`

    Returns:
        Tuple[np.ndarray, np.ndarray]: A_L and A_R
    """
    order = as_order(order).require_solver_range()
    t1 = time.time()
    pieces = _boundary_pieces(space)
    blocks = _row_blocks(space.trimmed_dimension, threads)
    filled = parallel_map(lambda rows: _fill_rows(space, order, rows, pieces), blocks, threads)
    left = np.vstack([block[0] for block in filled])
    right = np.vstack([block[1] for block in filled])
    LOG.debug(
        "Assembled %dx%d one-sided matrices (p=%d, n=%d, alpha=%g) in %d blocks, %.3fs",
        left.shape[0], left.shape[1], space.p, space.n, order.alpha,
        len(blocks), time.time() - t1,
    )
    return left, right


def assemble_matrix(space, order, threads=None) -> CollocationSystem:
    """
    The collocation matrix A = (A_L + A_R) / (2 cos(πα/2)).

    Args:
        space (BSplineSpace): the spline space
        order (FractionalOrder or float): α with 1 < α < 2
        threads (int, optional): worker override

    Returns:
        CollocationSystem: the system without a right-hand side
    """
    order = as_order(order)
    left, right = assemble_left_right(space, order, threads)
    return CollocationSystem(space, order, order.riesz_prefactor * (left + right))


def assemble_rhs(space, source) -> np.ndarray:
    """
    Right-hand side [s(η_2), ..., s(η_{n+p-1})].

    Args:
        space (BSplineSpace): the spline space
        source (callable): the source term, vectorised or scalar

    Returns:
        np.ndarray: the collocation right-hand side
    """
    eta = space.greville
    try:
        values = np.asarray(source(eta), dtype=np.float64)
    except TypeError:
        values = None
    if values is None or values.shape != eta.shape:
        values = np.array([float(source(x)) for x in eta])
    if not np.all(np.isfinite(values)):
        raise ValueError("source term is not finite at every collocation point")
    return values


def assemble_advection_reaction(space, gamma: float, rho: float) -> np.ndarray:
    """
    Collocation matrix of the lower-order terms γ u' + ρ u,
    [γ N_j'(η_i) + ρ N_j(η_i)], to be added to A.

    Args:
        space (BSplineSpace): the spline space
        gamma (float): advection coefficient
        rho (float): reaction coefficient

    Returns:
        np.ndarray: the (n+p-2) x (n+p-2) matrix
    """
    size = space.trimmed_dimension
    matrix = np.zeros((size, size))
    if gamma == 0.0 and rho == 0.0:
        return matrix
    eta = space.greville
    for j in space.trimmed_indices:
        column = np.zeros(size)
        if gamma != 0.0:
            column += gamma * eval_bspline_derivative(space, j, eta, 1)
        if rho != 0.0:
            column += rho * eval_bspline(space, j, eta)
        matrix[:, j - 2] = column
    return matrix


def collocation_system(
    space, order, source=None, advection=0.0, reaction=0.0, threads=None
) -> CollocationSystem:
    """
    Assemble the full collocation system for
    Riesz(u) + advection u' + reaction u = s, with the lower-order terms
    included only when nonzero.
    """
    system = assemble_matrix(space, order, threads)
    if advection or reaction:
        system = system.with_matrix(
            system.matrix + assemble_advection_reaction(space, advection, reaction)
        )
    if source is not None:
        system = system.with_rhs(assemble_rhs(space, source))
    return system
