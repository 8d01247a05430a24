"""Command-line front end.

Subcommands: eval, constants, decompose, cm-check, ineq, sweep.
Exit codes: 0 success/pass, 1 verification failure, 2 usage or domain
error.  Output is deterministic byte-for-byte for fixed flags, config
file, and seed.  The CMKIT_PROFILE environment variable (fast|strict)
selects the default tolerance profile; a JSON config file overrides the
profile and flags override the file.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

from . import serialize
from .cm_verifier import (
    CMReport,
    FamilySpec,
    cm_check,
    default_grid,
)
from .config import DEFAULT, PROFILES, EvalConfig, profile_from_env, with_overrides
from .errors import CmkitError, DomainError, PreconditionError
from .inequalities import (
    CATALOG_IDS,
    build_beta_ratio,
    build_hurwitz_ratio,
    build_mills_ratio,
    build_psi_ratio,
    build_tricomi_ratio,
    build_turan_alt_hurwitz,
    build_turan_hurwitz,
    case_bernoulli_ratio,
    case_euler_ratio,
    case_yang_tian,
    catalog_passed,
    default_catalog,
    log_grid,
)
from .majorization import MajorizationPair, RTuple, decompose, is_majorized
from .specials import (
    alt_hurwitz_zeta,
    dirichlet_beta_fn,
    dirichlet_eta,
    dirichlet_lambda,
    ext_polygamma,
    hurwitz_zeta,
    lambda_constant,
    lambda_star,
    mills_ratio_p,
    nielsen_beta_p,
    riemann_zeta,
    solve_theta0,
    tricomi_u,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(CmkitError):
    pass


@dataclass(frozen=True)
class CliConfig:
    eval: EvalConfig
    fmt: str = "text"
    seed: int = 0


# ---------------------------------------------------------------------------
# parsing helpers


def _parse_tuple(text: str, name: str) -> tuple[float, ...]:
    try:
        values = tuple(float(v) for v in text.split(",") if v != "")
    except ValueError as exc:
        raise UsageError(f"--{name} expects comma-separated reals, got {text!r}") from exc
    if not values:
        raise UsageError(f"--{name} must contain at least one value")
    ordered = tuple(sorted(values, reverse=True))
    if ordered != values:
        print(f"warning: --{name} was not sorted; using descending order",
              file=sys.stderr)
    return ordered


def _parse_scalar(text: str, name: str) -> float:
    try:
        return float(text)
    except ValueError as exc:
        raise UsageError(f"--{name} expects a real number, got {text!r}") from exc


def _grid_from_args(args) -> tuple[float, ...]:
    if args.x_count < 0:
        raise UsageError("--x-count must be >= 0")
    if args.x_count == 0:
        return ()
    if not (args.x_min > 0 and args.x_max > 0):
        raise UsageError("--x-min and --x-max must be positive")
    if args.x_count == 1:
        return (args.x_min,)
    if args.linear:
        step = (args.x_max - args.x_min) / (args.x_count - 1)
        return tuple(args.x_min + step * i for i in range(args.x_count))
    return log_grid(args.x_min, args.x_max, args.x_count)


def _load_cli_config(args) -> CliConfig:
    base = profile_from_env()
    fmt = None
    seed = None
    file_overrides: dict = {}
    if args.config:
        try:
            doc = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config file {args.config}: {exc}") from exc
        if not isinstance(doc, dict):
            raise UsageError("config file must hold a JSON object")
        profile = doc.pop("profile", None)
        if profile is not None:
            if profile not in PROFILES:
                raise UsageError(f"config profile must be one of {sorted(PROFILES)}")
            base = PROFILES[profile]
        fmt = doc.pop("format", None)
        seed = doc.pop("seed", None)
        known = set(EvalConfig.__dataclass_fields__)
        unknown = set(doc) - known
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        file_overrides = doc
    if args.profile:
        base = PROFILES[args.profile]
    eval_cfg = with_overrides(base, **file_overrides)
    eval_cfg = with_overrides(
        eval_cfg,
        rel_tol=args.rel_tol,
        em_shift_N=args.em_shift_n,
        em_terms=args.em_terms,
        quad_nodes=args.quad_nodes,
        series_switch_x=args.series_switch_x,
        asym_switch_x=args.asym_switch_x,
    )
    if args.format:
        fmt = args.format
    if args.seed is not None:
        seed = args.seed
    return CliConfig(eval=eval_cfg, fmt=fmt or "text", seed=seed or 0)


# ---------------------------------------------------------------------------
# eval

_EVAL_FUNCTIONS = (
    "hurwitz-zeta", "alt-hurwitz-zeta", "psi-p", "beta-p", "zeta", "eta",
    "dirichlet-beta", "dirichlet-lambda", "tricomi-u", "mills-r",
)


def _eval_one(function: str, args, x: float, config: EvalConfig) -> float:
    p = args.p
    if function in ("hurwitz-zeta", "alt-hurwitz-zeta", "psi-p", "beta-p",
                    "tricomi-u", "mills-r") and p is None:
        raise UsageError(f"{function} requires --p")
    if function == "hurwitz-zeta":
        return hurwitz_zeta(p, x, config)
    if function == "alt-hurwitz-zeta":
        return alt_hurwitz_zeta(p, x, config)
    if function == "psi-p":
        return ext_polygamma(p, x, config)
    if function == "beta-p":
        return nielsen_beta_p(p, x, config)
    if function == "zeta":
        return riemann_zeta(x, config)
    if function == "eta":
        return dirichlet_eta(x, config)
    if function == "dirichlet-beta":
        return dirichlet_beta_fn(x, config)
    if function == "dirichlet-lambda":
        return dirichlet_lambda(x, config)
    if function == "tricomi-u":
        if args.a is None or args.b is None:
            raise UsageError("tricomi-u requires --a and --b")
        a, b = args.a, args.b
        if p:
            a, b = a + p, b + p
        return tricomi_u(a, b, x, config)
    if function == "mills-r":
        return mills_ratio_p(p, x, config)
    raise UsageError(
        f"unknown function id {function!r}; choose from {', '.join(_EVAL_FUNCTIONS)}"
    )


def _cmd_eval(args, cli: CliConfig) -> int:
    xs = [float(v) for v in args.x.split(",") if v != ""]
    if not xs:
        raise UsageError("--x must contain at least one value")
    rows = [{"x": x, "value": _eval_one(args.function, args, x, cli.eval)} for x in xs]
    _emit_rows(rows, ("x", "value"), cli)
    return EXIT_OK


def _emit_rows(rows, columns, cli: CliConfig) -> None:
    if cli.fmt == "json":
        print(serialize.json_document({"rows": rows}))
    elif cli.fmt == "csv":
        sys.stdout.write(serialize.rows_to_csv(rows, columns))
    else:
        for row in rows:
            print(" ".join(serialize._fmt(row.get(c)) for c in columns))


# ---------------------------------------------------------------------------
# constants


def _cmd_constants(args, cli: CliConfig) -> int:
    which = args.which
    if which == "theta0":
        pair = solve_theta0()
        payload = {"t0": pair.t0, "theta0": pair.theta0}
    elif which == "lambda":
        if args.p is None or args.q is None or args.theta is None:
            raise UsageError("constants lambda requires --p, --q, and --theta")
        p = _parse_tuple(args.p, "p")
        q = _parse_tuple(args.q, "q")
        payload = {"lambda": lambda_constant(p, q, args.theta),
                   "p": list(p), "q": list(q), "theta": args.theta}
    elif which == "lambda-star":
        if args.p is None or args.q is None or args.a is None or args.b is None:
            raise UsageError("constants lambda-star requires --p, --q, --a, --b")
        p = _parse_tuple(args.p, "p")
        q = _parse_tuple(args.q, "q")
        payload = {"lambda_star": lambda_star(p, q, args.a, args.b),
                   "p": list(p), "q": list(q), "a": args.a, "b": args.b}
    else:
        raise UsageError(f"unknown constant {which!r}")
    if cli.fmt == "json":
        print(serialize.json_document(payload))
    else:
        for key, value in payload.items():
            print(f"{key}={serialize._fmt(value)}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# decompose


def _cmd_decompose(args, cli: CliConfig) -> int:
    p = _parse_tuple(args.p, "p")
    q = _parse_tuple(args.q, "q")
    pair = MajorizationPair(RTuple(p), RTuple(q))  # raises PreconditionError -> exit 2
    tree = decompose(pair)
    nodes = list(tree.walk())
    valid = all(
        n.pair.trivial or is_majorized(n.pair.p, n.pair.q) for n in nodes
    )
    summary = {
        "tree": tree.to_dict(),
        "nodes": len(nodes),
        "reductions": sum(1 for n in nodes if n.kind == "reduction"),
        "trivial_leaves": sum(1 for n in nodes if n.kind == "trivial-equal"),
        "all_nodes_valid": valid,
    }
    print(serialize.json_document(summary))
    return EXIT_OK if valid else EXIT_FAIL


# ---------------------------------------------------------------------------
# cm-check


def _family_from_args(args) -> FamilySpec:
    if args.family == "tricomi":
        if args.a is None or args.b is None:
            raise UsageError("--family tricomi requires --a and --b")
        return FamilySpec.tricomi(args.a, args.b)
    if args.family in ("hurwitz", "alternating", "gaussian"):
        return FamilySpec(args.family)
    raise UsageError(f"unknown family {args.family!r}")


def _resolve_lambda(args, spec: FamilySpec, p, q) -> float:
    if args.lam != "auto":
        try:
            return float(args.lam)
        except ValueError as exc:
            raise UsageError(f"--lambda expects a number or 'auto', got {args.lam!r}") from exc
    theta = args.theta
    if theta is None:
        theta = spec.theta_logconcave if args.sign == "+" else spec.theta_logconvex
        if theta is None:
            return 1.0  # log-convex side reached only in the limit
    return lambda_constant(p, q, theta)


def _cmd_cm_check(args, cli: CliConfig) -> int:
    spec = _family_from_args(args)
    p = _parse_tuple(args.p, "p")
    q = _parse_tuple(args.q, "q")
    pair = MajorizationPair(RTuple(p), RTuple(q))
    lam = _resolve_lambda(args, spec, p, q)
    sign = 1 if args.sign == "+" else -1
    grid = _grid_from_args(args) or default_grid()
    report = cm_check(spec, pair, lam, sign, grid=grid, K=args.K, config=cli.eval)
    if cli.fmt == "csv":
        sys.stdout.write(serialize.cm_report_to_csv(report))
    elif cli.fmt == "text":
        print(f"family={report.family} lambda={report.lam!r} sign={args.sign} "
              f"orders=0..{report.orders_checked}")
        for m in range(report.orders_checked + 1):
            state = "pass" if report.verdict[m] else "FAIL"
            print(f"  order {m}: worst_margin={report.worst_margin[m]!r} {state}")
        if not report.passed:
            m = report.worst_order()
            culprit = _worst_grid_point(spec, pair, lam, sign, m, report, cli.eval)
            print(f"  first failure at order {m}, x={culprit!r}")
        print("PASS" if report.passed else "FAIL")
    else:
        print(serialize.json_document(report.to_dict()))
    if args.plot:
        from . import plots

        plots.render_cm_report(report, args.plot)
    return EXIT_OK if report.passed else EXIT_FAIL


def _worst_grid_point(spec, pair, lam, sign, m, report, config) -> float:
    from .cm_verifier import product_derivative

    worst_x, worst_val = report.grid[0], None
    for x in report.grid:
        a = product_derivative(spec, pair.p, m, x, config)
        b = lam * product_derivative(spec, pair.q, m, x, config)
        margin = sign * (a - b) / max(a, b, 1e-300)
        if worst_val is None or margin < worst_val:
            worst_x, worst_val = x, margin
    return worst_x


# ---------------------------------------------------------------------------
# ineq


def _cmd_ineq(args, cli: CliConfig) -> int:
    catalog = default_catalog(cli.eval)
    if not args.cases or args.cases == ["all"]:
        selection = list(CATALOG_IDS)
    else:
        unknown = [c for c in args.cases if c not in catalog]
        if unknown:
            raise UsageError(f"unknown catalog ids: {', '.join(sorted(unknown))}")
        selection = [c for c in CATALOG_IDS if c in set(args.cases)]
    if args.n_max is not None:
        if args.n_max < 1:
            raise UsageError("--n-max must be >= 1")
        catalog["bernoulli.ratio"] = lambda: case_bernoulli_ratio(args.n_max)
        catalog["euler.ratio"] = lambda: case_euler_ratio(args.n_max)
        catalog["mills.yang-tian"] = lambda: case_yang_tian(args.n_max, config=cli.eval)
    reports = [catalog[cid]() for cid in selection]
    if cli.fmt == "csv":
        sys.stdout.write(serialize.ineq_reports_to_csv(reports))
    elif cli.fmt == "json":
        print(serialize.json_document({"reports": [r.to_dict() for r in reports]}))
    else:
        for r in reports:
            state = "pass" if r.verdict else "FAIL"
            gate = "" if "conjecture" not in r.flags else " (non-gating)"
            lo = "" if r.min_slack_lower is None else f" lo={r.min_slack_lower:.3e}"
            up = "" if r.min_slack_upper is None else f" up={r.min_slack_upper:.3e}"
            print(f"{r.case_id}: {state}{gate} samples={r.samples}{lo}{up}")
    if args.plot_dir:
        from . import plots

        out = Path(args.plot_dir)
        out.mkdir(parents=True, exist_ok=True)
        plots.render_ineq_reports(reports, str(out / "ineq-slacks.png"))
    return EXIT_OK if catalog_passed(reports) else EXIT_FAIL


# ---------------------------------------------------------------------------
# sweep

_SWEEP_DEFAULTS = {
    "psi.ratio": {"p": (2.0, 2.0), "q": (3.0, 1.0)},
    "hurwitz.ratio": {"p": (2.5, 2.5), "q": (3.0, 2.0)},
    "hurwitz.turan": {"p": 3.0, "q": 2.0},
    "beta.ratio": {"p": (1.0, 1.0), "q": (2.0, 0.0)},
    "alt-hurwitz.turan": {"p": 3.0, "q": 1.0},
    "tricomi.ratio-sharp": {"a": 2.0, "b": 2.0, "p": (1.0, 1.0), "q": (2.0, 0.0)},
    "tricomi.ratio-unit": {"a": 2.0, "b": 2.0, "p": (1.0, 1.0), "q": (2.0, 0.0)},
    "mills.ratio": {"p": (1.0, 1.0), "q": (2.0, 0.0)},
}


def _build_sweep_case(case_id: str, args, grid, config: EvalConfig):
    defaults = _SWEEP_DEFAULTS.get(case_id)
    if defaults is None:
        raise UsageError(
            f"case {case_id!r} is not x-sweepable; choose from "
            f"{', '.join(sorted(_SWEEP_DEFAULTS))}"
        )
    scalar_case = case_id in ("hurwitz.turan", "alt-hurwitz.turan")
    if args.p is not None:
        p = _parse_scalar(args.p, "p") if scalar_case else _parse_tuple(args.p, "p")
    else:
        p = defaults["p"]
    if args.q is not None:
        q = _parse_scalar(args.q, "q") if scalar_case else _parse_tuple(args.q, "q")
    else:
        q = defaults["q"]
    if case_id == "psi.ratio":
        return build_psi_ratio(p, q, grid, config)
    if case_id == "hurwitz.ratio":
        return build_hurwitz_ratio(p, q, grid, config)
    if case_id == "hurwitz.turan":
        return build_turan_hurwitz(p, q, grid, config)
    if case_id == "beta.ratio":
        return build_beta_ratio(p, q, theta=args.theta, vartheta=args.vartheta or 0.0,
                                grid=grid, config=config)
    if case_id == "alt-hurwitz.turan":
        return build_turan_alt_hurwitz(p, q, grid, config)
    if case_id == "mills.ratio":
        return build_mills_ratio(p, q, grid, config)
    a = args.a if args.a is not None else defaults["a"]
    b = args.b if args.b is not None else defaults["b"]
    variant = "sharp" if case_id.endswith("sharp") else "unit"
    return build_tricomi_ratio(a, b, p, q, grid, variant, config)


def _cmd_sweep(args, cli: CliConfig) -> int:
    if (args.function is None) == (args.case is None):
        raise UsageError("sweep requires exactly one of --function or --case")
    grid = _grid_from_args(args)
    if args.function is not None:
        if args.function not in _EVAL_FUNCTIONS:
            raise UsageError(f"unknown function id {args.function!r}")
        p = _parse_scalar(args.p, "p") if args.p is not None else None
        shim = argparse.Namespace(p=p, a=args.a, b=args.b)
        rows = [
            {"x": x, "value": _eval_one(args.function, shim, x, cli.eval)}
            for x in grid
        ]
        columns = ("x", "value")
    else:
        case = _build_sweep_case(args.case, args, grid, cli.eval)
        rows = []
        for x in grid:
            rows.append({
                "x": x,
                "ratio": float(case.middle(x)),
                "lower": float(case.lower(x)) if case.lower is not None else None,
                "upper": float(case.upper(x)) if case.upper is not None else None,
            })
        columns = ("x", "ratio", "lower", "upper")
    if cli.fmt == "json":
        print(serialize.json_document({"rows": rows}))
    else:
        sys.stdout.write(serialize.rows_to_csv(rows, columns))
    if args.plot:
        if not rows:
            raise UsageError("cannot plot an empty sweep")
        from . import plots

        title = args.case or args.function
        plots.render_sweep(rows, args.plot, title=title)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cmkit",
        description="Laplace-transform special functions, majorization "
                    "decomposition, CM verification, and the inequality catalog.",
    )
    parser.add_argument("--config", help="JSON config file")
    parser.add_argument("--format", choices=("json", "csv", "text"))
    parser.add_argument("--profile", choices=tuple(sorted(PROFILES)))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--rel-tol", type=float, dest="rel_tol")
    parser.add_argument("--em-shift-n", type=int, dest="em_shift_n")
    parser.add_argument("--em-terms", type=int, dest="em_terms")
    parser.add_argument("--quad-nodes", type=int, dest="quad_nodes")
    parser.add_argument("--series-switch-x", type=float, dest="series_switch_x")
    parser.add_argument("--asym-switch-x", type=float, dest="asym_switch_x")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one special function")
    p_eval.add_argument("function", help="|".join(_EVAL_FUNCTIONS))
    p_eval.add_argument("--p", type=float)
    p_eval.add_argument("--a", type=float)
    p_eval.add_argument("--b", type=float)
    p_eval.add_argument("--x", required=True, help="comma-separated points")

    p_const = sub.add_parser("constants", help="theta0, lambda, lambda-star")
    p_const.add_argument("which", choices=("theta0", "lambda", "lambda-star"))
    p_const.add_argument("--p")
    p_const.add_argument("--q")
    p_const.add_argument("--theta", type=float)
    p_const.add_argument("--a", type=float)
    p_const.add_argument("--b", type=float)

    p_dec = sub.add_parser("decompose", help="majorization reduction tree")
    p_dec.add_argument("--p", required=True)
    p_dec.add_argument("--q", required=True)

    p_cm = sub.add_parser("cm-check", help="complete monotonicity verification")
    p_cm.add_argument("--family", required=True,
                      choices=("hurwitz", "alternating", "tricomi", "gaussian"))
    p_cm.add_argument("--a", type=float)
    p_cm.add_argument("--b", type=float)
    p_cm.add_argument("--p", required=True)
    p_cm.add_argument("--q", required=True)
    p_cm.add_argument("--lambda", dest="lam", default="auto",
                      help="numeric value or 'auto' (from --theta or family default)")
    p_cm.add_argument("--theta", type=float)
    p_cm.add_argument("--sign", choices=("+", "-"), default="+")
    p_cm.add_argument("--K", type=int, default=6)
    p_cm.add_argument("--x-min", type=float, default=0.0, dest="x_min")
    p_cm.add_argument("--x-max", type=float, default=0.0, dest="x_max")
    p_cm.add_argument("--x-count", type=int, default=0, dest="x_count")
    p_cm.add_argument("--linear", action="store_true")
    p_cm.add_argument("--plot", help="render worst margins per order to this file")

    p_ineq = sub.add_parser("ineq", help="inequality catalog")
    p_ineq.add_argument("cases", nargs="*", help="catalog ids or 'all'")
    p_ineq.add_argument("--n-max", type=int, dest="n_max")
    p_ineq.add_argument("--plot-dir", dest="plot_dir",
                        help="write a slack summary figure into this directory")

    p_sweep = sub.add_parser("sweep", help="CSV sweep of a function or ratio case")
    p_sweep.add_argument("--function")
    p_sweep.add_argument("--case")
    p_sweep.add_argument("--p")
    p_sweep.add_argument("--q")
    p_sweep.add_argument("--a", type=float)
    p_sweep.add_argument("--b", type=float)
    p_sweep.add_argument("--theta", type=float)
    p_sweep.add_argument("--vartheta", type=float)
    p_sweep.add_argument("--x-min", type=float, default=1e-2, dest="x_min")
    p_sweep.add_argument("--x-max", type=float, default=1e2, dest="x_max")
    p_sweep.add_argument("--x-count", type=int, default=25, dest="x_count")
    p_sweep.add_argument("--linear", action="store_true")
    p_sweep.add_argument("--plot", help="render the sweep to this file")
    return parser


_COMMANDS = {
    "eval": _cmd_eval,
    "constants": _cmd_constants,
    "decompose": _cmd_decompose,
    "cm-check": _cmd_cm_check,
    "ineq": _cmd_ineq,
    "sweep": _cmd_sweep,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cli = _load_cli_config(args)
        return _COMMANDS[args.command](args, cli)
    except (UsageError, DomainError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CmkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
