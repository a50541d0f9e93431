import io
import json
import logging
import sys
from pathlib import Path

import numpy as np

from rieszpy.util.exe import parallel_map

LOG = logging.getLogger("rieszpy")

SCHEMA_VERSION = 1
CSV_FORMAT = "%.9e"
COMMANDS = ("symbol", "bounds", "eigs", "convergence", "verify")


class ExperimentConfig:
    """
    Validated settings for one CLI invocation.

    Args:
        command (str): one of symbol, bounds, eigs, convergence, verify
        p (Sequence[int]): spline degrees; most commands use the first
        n (int): number of mesh intervals
        alpha (Sequence[float]): fractional orders
        resolution (int): number of grid points for symbol tables
        out (str or None): output path, stdout when None
        fmt (str): 'csv' or 'json'
        seed (int): seed for randomised checks
    """

    def __init__(
        self, command, p=(3,), n=63, alpha=(1.5,), resolution=1000, out=None,
        fmt="csv", seed=42, solution="poly33", gamma=0.0, rho=0.0, threads=None,
        suite="all", ns=(4, 8, 16, 32, 64),
    ):
        self.command = command
        self.p = [int(x) for x in p]
        self.n = int(n)
        self.alpha = [float(a) for a in alpha]
        self.resolution = int(resolution)
        self.out = out
        self.fmt = fmt
        self.seed = int(seed)
        self.solution = solution
        self.gamma = float(gamma)
        self.rho = float(rho)
        self.threads = threads
        self.suite = suite
        self.ns = [int(x) for x in ns]
        self.validate()

    @classmethod
    def from_args(cls, args):
        return cls(
            args.command,
            p=args.p or [3],
            n=args.n,
            alpha=args.alpha or [1.5],
            resolution=args.resolution,
            out=args.out,
            fmt=args.format,
            seed=args.seed,
            solution=args.solution,
            gamma=args.gamma,
            rho=args.rho,
            threads=args.threads,
            suite=args.suite,
            ns=args.ns or [4, 8, 16, 32, 64],
        )

    def validate(self):
        from rieszpy.splines.knots import N_MAX, N_MIN, P_MAX, P_MIN

        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")
        for p in self.p:
            if not P_MIN <= p <= P_MAX:
                raise ValueError(f"p must lie in [{P_MIN}, {P_MAX}], got {p}")
        for n in [self.n] + self.ns:
            if not N_MIN <= n <= N_MAX:
                raise ValueError(f"n must lie in [{N_MIN}, {N_MAX}], got {n}")
        for a in self.alpha:
            if not 0.0 <= a <= 2.0:
                raise ValueError(f"alpha must lie in [0, 2], got {a}")
        if self.command in ("eigs", "convergence"):
            for a in self.alpha:
                if not 1.0 < a < 2.0:
                    raise ValueError(f"{self.command} needs 1 < alpha < 2, got {a}")
        if self.command in ("symbol", "bounds"):
            for p in self.p:
                for a in self.alpha:
                    if not p > a:
                        raise ValueError(f"the symbol needs p > alpha, got p={p}, alpha={a}")
        if self.resolution < 2:
            raise ValueError(f"resolution must be at least 2, got {self.resolution}")
        if self.threads is not None and self.threads < 1:
            raise ValueError(f"threads must be positive, got {self.threads}")

    def __repr__(self):
        return f"<ExperimentConfig: {self.command}, p={self.p}, n={self.n}, alpha={self.alpha}>"


def csv_text(header, columns) -> str:
    "One-line header and scientific notation with ten significant digits"
    buf = io.StringIO()
    np.savetxt(buf, np.column_stack(columns), fmt=CSV_FORMAT, delimiter=",", header=",".join(header), comments="")
    return buf.getvalue()


def json_text(payload) -> str:
    payload = dict(payload)
    payload["schema_version"] = SCHEMA_VERSION
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _table_payload(header, columns):
    rows = np.column_stack(columns).tolist()
    # nan marks a missing order and has no JSON spelling
    rows = [[None if v != v else v for v in row] for row in rows]
    return {"columns": header, "rows": rows}


def cmd_symbol(config):
    """Columns θ, f^{p,α}(θ) for each α on a uniform grid of [0, π]."""
    from rieszpy.symbol import SymbolEvaluator

    p = config.p[0]
    theta = np.linspace(0.0, np.pi, config.resolution)
    header = ["theta"] + [f"f_p{p}_alpha{a:g}" for a in config.alpha]
    columns = [theta] + [SymbolEvaluator(p, a)(theta) for a in config.alpha]
    return header, columns, {}


def cmd_bounds(config):
    """
    Columns θ, f^{p,0}, f^{p,α} and, for odd p, f^{p,2} on [1, π], with
    verdicts for the degree-dependent bounds.
    """
    from rieszpy.symbol import (
        SymbolEvaluator,
        even_degree_bound_report,
        odd_degree_bound_check,
    )

    p, alpha = config.p[0], config.alpha[0]
    theta = np.linspace(1.0, np.pi, config.resolution)
    header = ["theta", "f_alpha0", f"f_alpha{alpha:g}"]
    columns = [theta, SymbolEvaluator(p, 0.0)(theta), SymbolEvaluator(p, alpha)(theta)]
    if p % 2 == 1:
        header.append("f_alpha2")
        columns.append(SymbolEvaluator(p, 2.0)(theta))
        verdicts = {"odd_sandwich_holds": odd_degree_bound_check(p, alpha, theta)}
    else:
        report = even_degree_bound_report(p, alpha, config.resolution)
        verdicts = {
            "threshold_a": report["a"],
            "even_lower_bound_holds": report["holds_on_a_pi"],
            "lower_bound_holds_on_1_a": report["holds_on_1_a"],
        }
    return header, columns, {"p": p, "alpha": alpha, "verdicts": verdicts}


def cmd_eigs(config):
    """
    Columns index, eigenvalues of T, real parts of the eigenvalues of
    n^{-α}A, and symbol samples on θ_k = kπ/N, all ascending.
    """
    from rieszpy.assembly import collocation_system, toeplitz_split
    from rieszpy.spectra import compare_to_symbol, eig_general, eig_symmetric
    from rieszpy.splines import BSplineSpace
    from rieszpy.symbol import SymbolEvaluator

    p, n, alpha = config.p[0], config.n, config.alpha[0]
    space = BSplineSpace(p, n)
    system = collocation_system(
        space, alpha, advection=config.gamma, reaction=config.rho, threads=config.threads
    )
    ev = SymbolEvaluator(p, alpha)
    t_eigs = eig_symmetric(toeplitz_split(system).toeplitz)
    a_eigs, max_imag = eig_general(system.scaled_matrix)
    t_report = compare_to_symbol(t_eigs, ev, p)
    a_report = compare_to_symbol(a_eigs, ev, p, max_imag)
    header = ["index", "eig_T", "eig_scaled_A", "symbol"]
    columns = [np.arange(1, system.size + 1), t_eigs, a_eigs, a_report.samples]
    meta = {
        "p": p, "n": n, "alpha": alpha, "gamma": config.gamma, "rho": config.rho,
        "toeplitz": t_report.to_dict(), "scaled_matrix": a_report.to_dict(),
    }
    return header, columns, meta


def cmd_convergence(config):
    """Long-form table alpha, p, n, error, order over every (α, p) cell."""
    from rieszpy.manufactured import convergence_study, get_solution

    sol = get_solution(config.solution)
    cells = [(a, p) for a in config.alpha for p in config.p]

    def study(cell):
        a, p = cell
        LOG.info("convergence %s: alpha=%g, p=%d", sol.name, a, p)
        return convergence_study(p, a, sol, config.ns, threads=1)

    tables = parallel_map(study, cells, config.threads)
    rows = [
        (t.alpha, t.p, n, e, o)
        for t in tables
        for n, e, o in t.rows()
    ]
    header = ["alpha", "p", "n", "error", "order"]
    columns = [np.array(col, dtype=np.float64) for col in zip(*rows)]
    return header, columns, {"solution": sol.name}


def cmd_verify(config):
    from .verify import run_checks

    results = run_checks(config.suite, config.seed)
    passed = sum(r["passed"] for r in results)
    return {
        "suite": config.suite,
        "seed": config.seed,
        "checks": results,
        "passed": passed,
        "failed": len(results) - passed,
    }


_TABLE_COMMANDS = {
    "symbol": cmd_symbol,
    "bounds": cmd_bounds,
    "eigs": cmd_eigs,
    "convergence": cmd_convergence,
}


def _write(text, out):
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        LOG.info("Wrote %s", out)


def run(config) -> int:
    """Run one configured command and return its exit code."""
    if config.command == "verify":
        report = cmd_verify(config)
        _write(json_text(report), config.out)
        if report["failed"]:
            LOG.error("%d of %d checks failed", report["failed"], len(report["checks"]))
            return 1
        return 0

    header, columns, meta = _TABLE_COMMANDS[config.command](config)
    if config.fmt == "json":
        payload = dict(meta)
        payload.update(_table_payload(header, columns))
        _write(json_text(payload), config.out)
    else:
        _write(csv_text(header, columns), config.out)
        if meta:
            side = None if config.out is None else str(Path(config.out).with_suffix(".json"))
            if side is None:
                sys.stderr.write(json_text(meta))
            else:
                _write(json_text(meta), side)
    verdicts = meta.get("verdicts", {})
    if any(v is False for v in verdicts.values()):
        LOG.error("bound check failed: %s", verdicts)
        return 1
    return 0


def build_parser():
    import argparse

    parser = argparse.ArgumentParser(
        prog="rieszpy",
        description="B-spline collocation for Riesz fractional diffusion: symbols, spectra and convergence",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--p", type=int, action="append", help="spline degree (repeatable)")
    parser.add_argument("--n", type=int, default=63, help="number of mesh intervals")
    parser.add_argument("--alpha", type=float, action="append", help="fractional order (repeatable)")
    parser.add_argument("--ns", type=int, nargs="+", help="mesh sizes for convergence")
    parser.add_argument("--resolution", type=int, default=1000)
    parser.add_argument("-o", "--out", default=None)
    parser.add_argument("--format", choices=("csv", "json"), default="csv")
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--solution", default="poly33", choices=("poly33", "sinpix2"))
    parser.add_argument("--gamma", type=float, default=0.0, help="advection coefficient")
    parser.add_argument("--rho", type=float, default=0.0, help="reaction coefficient")
    parser.add_argument("--threads", type=int, default=None, help="overrides COLLOC_THREADS")
    parser.add_argument(
        "--suite", default="all",
        choices=("all", "splines", "fracderiv", "symbol", "assembly", "spectra", "manufactured"),
    )
    parser.add_argument("--log-level", default="INFO")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level)

    try:
        config = ExperimentConfig.from_args(args)
    except ValueError as e:
        LOG.error("Invalid arguments: %s", e)
        sys.exit(2)
    LOG.debug("Running %s", config)

    try:
        code = run(config)
    except ValueError as e:
        LOG.error("%s failed: %s", config.command, e)
        sys.exit(2)
    sys.exit(code)


if __name__ == "__main__":
    main()
