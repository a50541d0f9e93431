"""
Registry of numerical checks run by `rieszpy verify`.

Each check takes a seeded `numpy.random.Generator` and returns
`(passed, measured)` where `measured` is a dict of plain floats/ints/bools.
"""
import logging
from math import gamma

import numpy as np
from numpy.polynomial import Polynomial
from scipy.linalg import toeplitz
from scipy.special import beta as beta_function

from rieszpy.assembly import (
    assemble_advection_reaction,
    assemble_left_right,
    assemble_matrix,
    toeplitz_coefficients,
    toeplitz_split,
)
from rieszpy.fracderiv import (
    BoundaryData,
    FractionalOrder,
    caputo_left_piecewise,
    caputo_right_piecewise,
    fractional_by_quadrature,
    gauss_jacobi_oracle,
    inner_product_check,
    left_rl_cardinal,
    right_rl_cardinal,
    rl_left_from_caputo,
    rl_left_piecewise,
    rl_right_from_caputo,
)
from rieszpy.manufactured import (
    SingularSystemError,
    convergence_study,
    get_solution,
    order_model,
    reference_row,
    riesz_rhs,
    riesz_rhs_by_quadrature,
    solve,
    spline_consistency_check,
)
from rieszpy.spectra import (
    compare_to_symbol,
    eig_general,
    eig_symmetric,
    eigen_residuals,
    within_symbol_range,
)
from rieszpy.splines import (
    BSplineSpace,
    PiecewisePolynomial,
    cardinal_bspline,
    eval_bspline,
    eval_bspline_derivative,
    greville_points,
    to_piecewise,
)
from rieszpy.symbol import (
    SymbolEvaluator,
    decay_ratio_check,
    even_degree_bound_check,
    fourier_route_check,
    odd_degree_bound_check,
    r_bound_zero_order,
    r_series,
    sandwich_check,
    zero_order_fit,
)
from rieszpy.util.num import panel_rule

LOG = logging.getLogger(__name__)

SUITES = ("splines", "fracderiv", "symbol", "assembly", "spectra", "manufactured")
CHECKS = {suite: [] for suite in SUITES}


def check(suite):
    def register(func):
        CHECKS[suite].append((func.__name__, func))
        return func

    return register


def _gap(a, b) -> float:
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b))))


# splines


@check("splines")
def partition_of_unity(rng):
    space = BSplineSpace(3, 10)
    x = np.concatenate([[0.0, 1.0], rng.uniform(0.0, 1.0, 50)])
    total = sum(eval_bspline(space, i, x) for i in range(1, space.dimension + 1))
    gap = _gap(total, 1.0)
    return gap <= 1e-13, {"max_gap": gap}


@check("splines")
def greville_interior_spacing(rng):
    space = BSplineSpace(4, 16)
    g = greville_points(space)
    i = np.arange(space.p, space.n + 2)
    exact = bool(np.all(space.greville_scaled[i - 2] == i - 0.5 * (space.p + 1)))
    ordered = bool(np.all(np.diff(g) > 0) and g[0] > 0 and g[-1] < 1)
    count = len(g) == space.n + space.p - 2
    return exact and ordered and count, {"count": len(g), "exact_interior": exact}


@check("splines")
def trimmed_basis_vanishes_at_ends(rng):
    space = BSplineSpace(5, 12)
    ends = np.array([0.0, 1.0])
    largest = max(float(np.max(np.abs(eval_bspline(space, j, ends)))) for j in space.trimmed_indices)
    return largest == 0.0, {"max_end_value": largest}


@check("splines")
def cardinal_symmetry(rng):
    p = 5
    t = rng.uniform(0.0, p + 1.0, 100)
    gap = _gap(cardinal_bspline(p, t), cardinal_bspline(p, p + 1.0 - t))
    return gap <= 1e-13, {"max_gap": gap}


@check("splines")
def cardinal_unit_integral(rng):
    gaps = []
    for p in range(2, 7):
        x, w = panel_rule(np.arange(p + 2, dtype=np.float64), 16)
        gaps.append(abs(float(np.dot(w, cardinal_bspline(p, x))) - 1.0))
    return max(gaps) <= 1e-13, {"max_gap": max(gaps)}


@check("splines")
def interior_basis_is_translated_cardinal(rng):
    space = BSplineSpace(3, 12)
    x = rng.uniform(0.0, 1.0, 40)
    gap = max(
        _gap(eval_bspline(space, j, x), cardinal_bspline(space.p, space.n * x - j + space.p + 1))
        for j in space.interior_indices
    )
    return gap <= 1e-13, {"max_gap": gap}


@check("splines")
def piecewise_form_matches_recursion(rng):
    space = BSplineSpace(4, 9)
    x = rng.uniform(0.0, 1.0, 60)
    gap = max(_gap(to_piecewise(space, j)(x), eval_bspline(space, j, x)) for j in space.trimmed_indices)
    return gap <= 1e-12, {"max_gap": gap}


@check("splines")
def second_derivative_matches_recursion(rng):
    space = BSplineSpace(4, 9)
    x = rng.uniform(0.0, 1.0, 60)
    rel = 0.0
    for j in space.trimmed_indices:
        exact = eval_bspline_derivative(space, j, x, 2)
        piece = to_piecewise(space, j).derivative(2)(x)
        rel = max(rel, _gap(piece, exact) / max(1.0, float(np.max(np.abs(exact)))))
    return rel <= 1e-10, {"max_relative_gap": rel}


# fracderiv


@check("fracderiv")
def reciprocal_gamma_cache(rng):
    order = FractionalOrder(1.5)
    gap = abs(order.inv_gamma(1) - 1.0 / gamma(2 - 1.5))
    return gap <= 1e-15, {"gap": gap}


@check("fracderiv")
def riesz_prefactor_singular_at_one(rng):
    try:
        FractionalOrder(1.0).riesz_prefactor
    except ValueError:
        return True, {"raised": True}
    return False, {"raised": False}


@check("fracderiv")
def left_cardinal_vanishes_before_support(rng):
    values = left_rl_cardinal(3, 1.5, np.array([-2.0, -0.5, 0.0]))
    return bool(np.all(values == 0.0)), {"max_value": float(np.max(np.abs(values)))}


@check("fracderiv")
def cardinal_near_far_continuity(rng):
    gaps = []
    for p in (2, 3, 5):
        t = p + 1.0 + 1.5
        below, above = left_rl_cardinal(p, 1.5, np.array([t - 1e-9, t + 1e-9]))
        gaps.append(abs(float(below - above)))
    return max(gaps) <= 1e-8, {"max_jump": max(gaps)}


@check("fracderiv")
def right_cardinal_is_reflection(rng):
    p = 4
    t = rng.uniform(-2.0, p + 4.0, 50)
    gap = _gap(right_rl_cardinal(p, 1.3, t), left_rl_cardinal(p, 1.3, p + 1.0 - t))
    return gap == 0.0, {"max_gap": gap}


@check("fracderiv")
def caputo_matches_quadrature(rng):
    space = BSplineSpace(3, 8)
    f = to_piecewise(space, 2)
    x = space.greville
    left = caputo_left_piecewise(f, 1.5, x, 0.0, 1.0)
    right = caputo_right_piecewise(f, 1.5, x, 0.0, 1.0)
    ql = np.array([fractional_by_quadrature(f, 1.5, xi, "left") for xi in x])
    qr = np.array([fractional_by_quadrature(f, 1.5, xi, "right") for xi in x])
    scale = max(1.0, float(np.max(np.abs(ql))))
    gap = max(_gap(left, ql), _gap(right, qr)) / scale
    return gap <= 1e-10, {"max_relative_gap": gap}


@check("fracderiv")
def monomial_rules_from_corrections(rng):
    alpha = 1.4
    x = rng.uniform(0.05, 1.0, 20)
    line = PiecewisePolynomial([0.0, 1.0], [[0.0, 1.0]])
    const = PiecewisePolynomial([0.0, 1.0], [[1.0, 0.0]])
    gap = max(
        _gap(rl_left_piecewise(line, alpha, x), x ** (1 - alpha) / gamma(2 - alpha)),
        _gap(rl_left_piecewise(const, alpha, x), x ** (-alpha) / gamma(1 - alpha)),
    )
    return gap <= 1e-12, {"max_gap": gap}


@check("fracderiv")
def gauss_jacobi_exact_on_cubics(rng):
    value = gauss_jacobi_oracle(lambda y: y ** 3, 1.5, (0.0, 1.0), nodes=4, side="left")
    exact = float(beta_function(4.0, 0.5))
    return abs(value - exact) <= 1e-13, {"value": value, "exact": exact}


@check("fracderiv")
def inner_product_identity(rng):
    cases = [(2, 2, 0.5, 0.5, 0), (3, 2, 1.2, 0.6, 1), (3, 3, 1.2, 0.7, -1), (2, 3, 0.3, 1.1, 2)]
    worst = 0.0
    for case in cases:
        lhs, rhs = inner_product_check(*case)
        worst = max(worst, abs(lhs - rhs))
    return worst <= 1e-8, {"max_gap": worst, "cases": len(cases)}


@check("fracderiv")
def inner_product_integer_orders(rng):
    lhs, rhs = inner_product_check(2, 2, 0.0, 0.0, 1)
    return abs(lhs - rhs) <= 1e-12, {"lhs": lhs, "rhs": rhs}


@check("fracderiv")
def inner_product_beyond_support(rng):
    lhs, rhs = inner_product_check(2, 3, 0.8, 0.9, 5)
    return lhs == 0.0 and rhs == 0.0, {"lhs": lhs, "rhs": rhs}


# symbol


@check("symbol")
def symbol_vanishes_at_origin(rng):
    value = SymbolEvaluator(3, 1.5)(0.0)
    return value == 0.0, {"f0": value}


@check("symbol")
def zero_order_symbol_at_origin(rng):
    values = [SymbolEvaluator(p, 0.0)(0.0) for p in (3, 4)]
    gap = max(abs(v - 1.0) for v in values)
    return gap <= 1e-14, {"max_gap": gap}


@check("symbol")
def zero_order_matches_alpha(rng):
    gaps = [abs(zero_order_fit(SymbolEvaluator(p, a)) - a) for p, a in ((3, 1.5), (4, 1.2), (6, 1.8))]
    return max(gaps) <= 0.02, {"max_gap": max(gaps)}


@check("symbol")
def decay_ratio_bound(rng):
    ratios, holds = [], True
    for p in range(2, 9):
        ratio, _, ok = decay_ratio_check(SymbolEvaluator(p, 1.5))
        holds = holds and ok
        ratios.append(ratio)
    monotone = bool(np.all(np.diff(ratios) < 0))
    return holds and monotone, {"holds": holds, "monotone": monotone}


@check("symbol")
def odd_degree_sandwich(rng):
    ok = all(odd_degree_bound_check(p, 1.3) for p in (3, 5))
    return ok, {"holds": ok}


@check("symbol")
def even_degree_lower_bound(rng):
    ok = all(even_degree_bound_check(p, 1.3) for p in (2, 4))
    return ok, {"holds": ok}


@check("symbol")
def lower_bound_sandwich(rng):
    report = sandwich_check(SymbolEvaluator(3, 1.5), np.linspace(0.01, np.pi, 400))
    ok = report["lower_bound_holds"] and np.isfinite(report["constant"])
    return bool(ok), report


@check("symbol")
def symbol_positive(rng):
    low = float(np.min(SymbolEvaluator(4, 1.8)(np.linspace(1e-3, np.pi, 500))))
    return low > 0.0, {"min_value": low}


@check("symbol")
def fourier_route_equivalence(rng):
    coefficient_gap, partial_gap = fourier_route_check(3, 1.5, count=4)
    ok = coefficient_gap <= 1e-10 and partial_gap <= 1e-7
    return ok, {"coefficient_gap": coefficient_gap, "partial_sum_gap": partial_gap}


@check("symbol")
def zero_order_r_bound(rng):
    ok = all(r_bound_zero_order(p) for p in (2, 4))
    return ok, {"holds": ok}


@check("symbol")
def even_degree_r_decomposition(rng):
    ev = SymbolEvaluator(4, 1.5)
    theta = np.linspace(0.0, np.pi, 101)
    split = ev.lower_bound(theta) + (2 * np.sin(0.5 * theta)) ** 5 * r_series(4, 1.5, theta)
    gap = _gap(ev(theta), split)
    return gap <= 1e-12, {"max_gap": gap}


# assembly


@check("assembly")
def matrix_order(rng):
    system = assemble_matrix(BSplineSpace(3, 16), 1.5)
    return system.size == 17, {"size": system.size}


@check("assembly")
def interior_block_is_toeplitz(rng):
    space = BSplineSpace(3, 32)
    split = toeplitz_split(assemble_matrix(space, 1.5))
    rows = np.arange(space.p, space.n + 2) - 2
    cols = space.interior_indices - 2
    gap = float(np.max(np.abs(split.correction[np.ix_(rows, cols)])))
    return gap <= 1e-12, {"max_entry": gap}


@check("assembly")
def correction_rank_bound(rng):
    measured = {}
    ok = True
    for p in (2, 3):
        split = toeplitz_split(assemble_matrix(BSplineSpace(p, 32), 1.5))
        rank = split.numerical_rank()
        measured[f"rank_p{p}"] = rank
        ok = ok and rank <= split.rank_bound
    return ok, measured


@check("assembly")
def toeplitz_coefficients_symmetric(rng):
    p, order = 3, FractionalOrder(1.5)
    k = np.arange(12)
    t = toeplitz_coefficients(p, order, 12)
    mirrored = order.riesz_prefactor * (
        left_rl_cardinal(p, order, 0.5 * (p + 1) + k) + right_rl_cardinal(p, order, 0.5 * (p + 1) + k)
    )
    gap = _gap(t, mirrored)
    return gap <= 1e-13, {"max_gap": gap}


@check("assembly")
def columns_match_quadrature(rng):
    space, order = BSplineSpace(3, 10), FractionalOrder(1.5)
    left, _ = assemble_left_right(space, order)
    eta = space.greville
    worst = 0.0
    for j in (2, 3, space.p + 1, space.p + 2):
        f = to_piecewise(space, j)
        caputo = np.array([fractional_by_quadrature(f, order, x, "left") for x in eta])
        oracle = rl_left_from_caputo(caputo, BoundaryData.from_piecewise(f, 0.0, 1.0), order, eta)
        scale = max(1.0, float(np.max(np.abs(oracle))))
        worst = max(worst, _gap(left[:, j - 2], oracle) / scale)
    return worst <= 1e-9, {"max_relative_gap": worst}


@check("assembly")
def assembly_is_deterministic(rng):
    space = BSplineSpace(4, 40)
    one = assemble_matrix(space, 1.7, threads=1).matrix
    many = assemble_matrix(space, 1.7, threads=4).matrix
    same = bool(np.array_equal(one, many))
    return same, {"identical": same}


@check("assembly")
def one_sided_norms_bounded(rng):
    changes = []
    for alpha in (1.2, 1.8):
        norms = []
        for n in (64, 128):
            left, _ = assemble_left_right(BSplineSpace(2, n), alpha)
            scaled = left * n ** (-alpha)
            norms.append((np.linalg.norm(scaled, np.inf), np.linalg.norm(scaled, 1)))
        (a_inf, a_one), (b_inf, b_one) = norms
        changes.append(max(abs(b_inf - a_inf) / a_inf, abs(b_one - a_one) / a_one))
    return max(changes) < 0.1, {"max_relative_change": max(changes)}


@check("assembly")
def reaction_rows_sum_to_trimmed_unity(rng):
    space = BSplineSpace(3, 12)
    eta = space.greville
    sums = assemble_advection_reaction(space, 0.0, 1.0).sum(axis=1)
    expected = 1.0 - eval_bspline(space, 1, eta) - eval_bspline(space, space.dimension, eta)
    gap = _gap(sums, expected)
    return gap <= 1e-13, {"max_gap": gap}


# spectra


@check("spectra")
def identity_spectrum(rng):
    gap = _gap(eig_symmetric(np.eye(5)), 1.0)
    return gap <= 1e-14, {"max_gap": gap}


@check("spectra")
def two_by_two_spectrum(rng):
    gap = _gap(eig_symmetric([[2.0, 0.5], [0.5, 2.0]]), [1.5, 2.5])
    return gap <= 1e-14, {"max_gap": gap}


@check("spectra")
def nonsymmetric_rejected(rng):
    try:
        eig_symmetric([[1.0, 2.0], [0.0, 1.0]])
    except ValueError:
        return True, {"raised": True}
    return False, {"raised": False}


def _toeplitz_part(p, n, alpha):
    return toeplitz(toeplitz_coefficients(p, alpha, n + p - 2))


@check("spectra")
def symmetric_and_general_agree(rng):
    t = _toeplitz_part(3, 31, 1.5)
    real, max_imag = eig_general(t)
    gap = _gap(eig_symmetric(t), real)
    return gap <= 1e-8, {"max_gap": gap, "max_imag": max_imag}


@check("spectra")
def toeplitz_spectrum_in_symbol_range(rng):
    ok = True
    for alpha in (1.2, 1.8):
        ok = ok and within_symbol_range(eig_symmetric(_toeplitz_part(3, 63, alpha)), SymbolEvaluator(3, alpha))
    return ok, {"inside": ok}


@check("spectra")
def eigenpair_residuals(rng):
    t = _toeplitz_part(4, 40, 1.5)
    residuals = eigen_residuals(t, 10, seed=int(rng.integers(1 << 31)))
    bound = 1e-9 * float(np.linalg.norm(t, 2))
    return float(residuals.max()) <= bound, {"max_residual": float(residuals.max())}


@check("spectra")
def outliers_within_budget(rng):
    system = assemble_matrix(BSplineSpace(3, 63), 1.5)
    real, max_imag = eig_general(system.scaled_matrix)
    report = compare_to_symbol(real, SymbolEvaluator(3, 1.5), 3, max_imag)
    return report.within_budget, report.to_dict()


@check("spectra")
def deviation_shrinks_with_n(rng):
    ev = SymbolEvaluator(3, 1.5)
    deviations = []
    for n in (63, 126):
        real, max_imag = eig_general(assemble_matrix(BSplineSpace(3, n), 1.5).scaled_matrix)
        deviations.append(compare_to_symbol(real, ev, 3, max_imag).deviation)
    ok = bool(np.isfinite(deviations[0]) and deviations[1] < deviations[0])
    return ok, {"deviation_63": deviations[0], "deviation_126": deviations[1]}


# manufactured


@check("manufactured")
def polynomial_boundary_data_vanish(rng):
    bdata = get_solution("poly33").bdata
    return bdata.is_zero, {"zero": bdata.is_zero}


@check("manufactured")
def sine_boundary_slope(rng):
    bdata = get_solution("sinpix2").bdata
    gap = abs(bdata.right_slope + 2.0 * np.pi)
    return gap <= 1e-12, {"right_slope": bdata.right_slope}


@check("manufactured")
def expansions_reproduce_solution(rng):
    sol = get_solution("sinpix2")
    x = np.linspace(0.0, 1.0, 201)
    gap = max(
        _gap(Polynomial(sol.left_coeffs)(x), sol(x)),
        _gap(Polynomial(sol.right_coeffs)(1.0 - x), sol(x)),
    )
    return gap <= 1e-11, {"max_gap": gap}


@check("manufactured")
def rhs_matches_quadrature(rng):
    worst = 0.0
    x = rng.uniform(0.02, 0.98, 20)
    for name in ("poly33", "sinpix2"):
        sol = get_solution(name)
        exact = riesz_rhs(sol, 1.5, x)
        oracle = np.array([riesz_rhs_by_quadrature(sol, 1.5, xi) for xi in x])
        worst = max(worst, _gap(exact, oracle) / max(1.0, float(np.max(np.abs(oracle)))))
    return worst <= 1e-9, {"max_relative_gap": worst}


@check("manufactured")
def integer_order_limit(rng):
    sol = get_solution("poly33")
    x = rng.uniform(0.05, 0.95, 20)
    gap = _gap(riesz_rhs(sol, 2.0, x), -sol.second_derivative(x))
    return gap <= 1e-10, {"max_gap": gap}


@check("manufactured")
def rhs_rejects_endpoints(rng):
    try:
        riesz_rhs(get_solution("poly33"), 1.5, 0.0)
    except ValueError:
        return True, {"raised": True}
    return False, {"raised": False}


@check("manufactured")
def order_model_values(rng):
    ok = order_model(2, 1.5) == 2.5 and order_model(3, 1.5) == 2.5 and order_model(4, 1.2) == 4.8
    return ok, {"p2": order_model(2, 1.5), "p3": order_model(3, 1.5)}


@check("manufactured")
def spline_consistency(rng):
    space = BSplineSpace(3, 16)
    gap = spline_consistency_check(space, 1.5, rng.normal(size=space.trimmed_dimension))
    return gap <= 1e-9, {"relative_gap": gap}


@check("manufactured")
def singular_system_detected(rng):
    system = assemble_matrix(BSplineSpace(2, 4), 1.5)
    system = system.with_matrix(np.zeros_like(system.matrix)).with_rhs(np.ones(system.size))
    try:
        solve(system)
    except SingularSystemError:
        return True, {"raised": True}
    return False, {"raised": False}


@check("manufactured")
def polynomial_table_reproduced(rng):
    table = convergence_study(2, 1.2, get_solution("poly33"), ns=(4, 8, 16))
    worst = 0.0
    for n, error, _ in table.rows():
        published, _ = reference_row("poly33", 1.2, 2, n)
        tol = 0.05 if n >= 16 else 0.10
        worst = max(worst, abs(error - published) / published / tol)
    return worst <= 1.0, {"worst_fraction_of_tolerance": worst}


def run_checks(suite="all", seed=42):
    """
    Run the checks of one suite (or all of them).

    Args:
        suite (str): a suite name or 'all'
        seed (int): seed of the generator handed to every check

    Returns:
        List[dict]: one record per check with keys suite, name, passed,
        measured and, if the check raised, error
    """
    if suite != "all" and suite not in CHECKS:
        raise ValueError(f"unknown suite {suite!r}, choose from {('all',) + SUITES}")
    suites = SUITES if suite == "all" else (suite,)
    results = []
    for name in suites:
        for check_name, func in CHECKS[name]:
            rng = np.random.default_rng(seed)
            record = {"suite": name, "name": check_name}
            try:
                passed, measured = func(rng)
                record["passed"] = bool(passed)
                record["measured"] = {k: _plain(v) for k, v in measured.items()}
            except Exception as e:
                LOG.error("check %s.%s raised %s", name, check_name, e)
                record["passed"] = False
                record["measured"] = {}
                record["error"] = f"{type(e).__name__}: {e}"
            LOG.info("%s.%s: %s", name, check_name, "pass" if record["passed"] else "FAIL")
            results.append(record)
    return results


def _plain(value):
    if isinstance(value, (np.bool_, bool)):
        return bool(value)
    if isinstance(value, (np.integer, int)):
        return int(value)
    if value is None:
        return None
    return float(value)
