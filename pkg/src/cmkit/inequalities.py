"""Executable catalog of the sharp ratio and sequence inequalities.

Every case evaluates a middle quantity against its lower/upper bounds on
a sampled domain and reports the worst normalized slack.  Grid cases
sample x on a log grid; sequence cases (Bernoulli, Euler) use exact
rational middles and evaluate the bounds at 60 significant digits, since
the true slack of the Bernoulli ratio bound shrinks below double
precision already around n = 16.

Boundary cases where the paper's strict inequality degenerates to
equality (the n = 1 Euler ratio, the b = a + 1 Tricomi kernel, p = q in
the Turan forms) are excluded from strict assertions and flagged.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

import mpmath

from .config import DEFAULT, EvalConfig
from .errors import DomainError
from .majorization import MajorizationPair, RTuple
from .specials import (
    alt_hurwitz_zeta,
    bernoulli_numbers,
    euler_numbers,
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

STRICTNESS_FLOOR = 1e-12
CONJECTURE_TOL = 1e-9
_SEQUENCE_DPS = 60
_SEQUENCE_FLOOR = 1e-40


def log_grid(lo: float = 1e-2, hi: float = 1e2, count: int = 25) -> tuple[float, ...]:
    if count == 1:
        return (lo,)
    ratio = (hi / lo) ** (1.0 / (count - 1))
    return tuple(lo * ratio ** i for i in range(count))


@dataclass(frozen=True)
class IneqReport:
    """Worst-case slack summary for one catalog case."""

    case_id: str
    params: dict
    samples: int
    min_slack_lower: Optional[float]
    min_slack_upper: Optional[float]
    verdict: bool
    flags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "id": self.case_id,
            "params": self.params,
            "samples": self.samples,
            "min_slack_lower": self.min_slack_lower,
            "min_slack_upper": self.min_slack_upper,
            "verdict": self.verdict,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class IneqCase:
    """One inequality with evaluators over a sampled domain.

    middle / lower / upper are called per sample; lower or upper may be
    absent for one-sided cases.  ``excluded`` marks boundary samples that
    are flagged instead of asserted strictly.  ``floor`` is the per-case
    strictness floor: the default 1e-12 distinguishes true slack from
    double-precision rounding, while exact-sequence cases evaluated at
    extended precision use a far smaller floor because their true slack
    shrinks below 1e-12 (the Bernoulli ratio bound closes like 9^-n).
    ``normalized`` turns off slack normalization for cases whose middle
    already is a margin (the conjecture scan).
    """

    case_id: str
    params: dict
    samples: tuple
    middle: Callable
    lower: Optional[Callable] = None
    upper: Optional[Callable] = None
    strict: bool = True
    flags: tuple[str, ...] = ()
    excluded: Optional[Callable] = None
    floor: float = STRICTNESS_FLOOR
    normalized: bool = True


def _norm(a, b) -> float:
    return max(abs(float(a)), abs(float(b)), 1e-300)


def evaluate_case(case: IneqCase) -> IneqReport:
    """Evaluate every sample; verdict requires slack > floor on both sides."""
    if case.lower is None and case.upper is None:
        raise DomainError(f"case {case.case_id} has neither bound")
    min_lo = math.inf if case.lower is not None else None
    min_up = math.inf if case.upper is not None else None
    flags = list(case.flags)
    evaluated = 0
    for s in case.samples:
        if case.excluded is not None and case.excluded(s):
            if "boundary-excluded" not in flags:
                flags.append("boundary-excluded")
            continue
        mid = case.middle(s)
        if case.lower is not None:
            lo = case.lower(s)
            slack = float(mid - lo)
            if case.normalized:
                slack /= _norm(mid, lo)
            min_lo = min(min_lo, slack)
        if case.upper is not None:
            up = case.upper(s)
            slack = float(up - mid)
            if case.normalized:
                slack /= _norm(mid, up)
            min_up = min(min_up, slack)
        evaluated += 1
    threshold = case.floor if case.strict else -CONJECTURE_TOL
    verdict = evaluated > 0
    if min_lo is not None:
        verdict = verdict and min_lo > threshold
    if min_up is not None:
        verdict = verdict and min_up > threshold
    return IneqReport(
        case_id=case.case_id,
        params=case.params,
        samples=evaluated,
        min_slack_lower=min_lo,
        min_slack_upper=min_up,
        verdict=verdict,
        flags=tuple(flags),
    )


def merge_reports(case_id: str, params: dict, reports: Sequence[IneqReport]) -> IneqReport:
    """Aggregate sweep reports for one catalog id (min slacks, AND verdict)."""
    lows = [r.min_slack_lower for r in reports if r.min_slack_lower is not None]
    ups = [r.min_slack_upper for r in reports if r.min_slack_upper is not None]
    flags: list[str] = []
    for r in reports:
        for f in r.flags:
            if f not in flags:
                flags.append(f)
    return IneqReport(
        case_id=case_id,
        params=params,
        samples=sum(r.samples for r in reports),
        min_slack_lower=min(lows) if lows else None,
        min_slack_upper=min(ups) if ups else None,
        verdict=all(r.verdict for r in reports) and bool(reports),
        flags=tuple(flags),
    )


def _validated_pair(p, q, lo_bound: float, what: str) -> MajorizationPair:
    pair = MajorizationPair(RTuple(p), RTuple(q))
    smallest = min(pair.p[-1], pair.q[-1])
    if not smallest > lo_bound:
        raise DomainError(f"{what} requires entries > {lo_bound}, got {smallest}")
    return pair


def _product_ratio(fn, pair: MajorizationPair, config: EvalConfig):
    def middle(x: float) -> float:
        num = 1.0
        den = 1.0
        for pj in pair.p:
            num *= fn(pj, x, config)
        for qj in pair.q:
            den *= fn(qj, x, config)
        return num / den

    return middle


# ---------------------------------------------------------------------------
# grid cases


def build_psi_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqCase:
    """prod Gamma(p_j)/Gamma(q_j) < prod psi_p/psi_q < prod Gamma(p_j+1)/Gamma(q_j+1)."""
    pair = _validated_pair(p, q, 0.0, "psi ratio")
    lower = lambda_constant(pair.p, pair.q, 1.0)
    upper = lambda_constant(pair.p, pair.q, 0.0)
    return IneqCase(
        case_id="psi.ratio",
        params={"p": list(pair.p), "q": list(pair.q)},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=_product_ratio(ext_polygamma, pair, config),
        lower=lambda x: lower,
        upper=lambda x: upper,
    )


def case_psi_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_psi_ratio(p, q, grid, config))


def build_hurwitz_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqCase:
    """prod (q_j-1)/(p_j-1) < prod zeta(p_j,x)/zeta(q_j,x) < 1."""
    pair = _validated_pair(p, q, 1.0, "hurwitz ratio")
    lower = 1.0
    for pj, qj in zip(pair.p, pair.q):
        lower *= (qj - 1.0) / (pj - 1.0)
    return IneqCase(
        case_id="hurwitz.ratio",
        params={"p": list(pair.p), "q": list(pair.q)},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=_product_ratio(hurwitz_zeta, pair, config),
        lower=lambda x: lower,
        upper=lambda x: 1.0,
    )


def case_hurwitz_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_hurwitz_ratio(p, q, grid, config))


def build_turan_hurwitz(p: float, q: float, grid=None,
                        config: EvalConfig = DEFAULT) -> IneqCase:
    """(p-1)(q-1)/((p+q)/2 - 1)^2 < zeta((p+q)/2,x)^2/(zeta(p,x) zeta(q,x)) < 1."""
    if not (p > 1 and q > 1):
        raise DomainError(f"turan_hurwitz requires p, q > 1, got p={p}, q={q}")
    if abs(p - q) < 1e-12:
        raise DomainError("turan_hurwitz is degenerate (non-strict) at p = q")
    s = 0.5 * (p + q)
    lower = (p - 1.0) * (q - 1.0) / (s - 1.0) ** 2

    def middle(x: float) -> float:
        return hurwitz_zeta(s, x, config) ** 2 / (
            hurwitz_zeta(p, x, config) * hurwitz_zeta(q, x, config)
        )

    return IneqCase(
        case_id="hurwitz.turan",
        params={"p": p, "q": q},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=middle,
        lower=lambda x: lower,
        upper=lambda x: 1.0,
    )


def case_turan_hurwitz(p: float, q: float, grid=None,
                       config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_turan_hurwitz(p, q, grid, config))


def case_zeta_ratio(p: float, r: float, config: EvalConfig = DEFAULT) -> IneqReport:
    """Bounds on zeta(p+r)/zeta(p) through the Dirichlet lambda ratio."""
    if not p > 1:
        raise DomainError(f"zeta_ratio requires p > 1, got p={p}")
    if not r > 0:
        raise DomainError(f"zeta_ratio requires r > 0, got r={r}")
    factor = (2.0 ** p - 1.0) * 2.0 ** r / (2.0 ** (p + r) - 1.0)
    lower = (p - 1.0) / (p + r - 1.0) * factor
    middle = riemann_zeta(p + r, config) / riemann_zeta(p, config)
    case = IneqCase(
        case_id="zeta.ratio",
        params={"p": p, "r": r},
        samples=((p, r),),
        middle=lambda s: middle,
        lower=lambda s: lower,
        upper=lambda s: factor,
    )
    return evaluate_case(case)


def case_zeta_reciprocal_convexity(p: float, q: float,
                                   config: EvalConfig = DEFAULT) -> IneqReport:
    """1/zeta(p+q) < alpha_{p,q}/zeta(p+2q) + beta_{p,q}/zeta(p)."""
    if not p > 1:
        raise DomainError(f"reciprocal convexity requires p > 1, got p={p}")
    if not q > 0:
        raise DomainError(f"reciprocal convexity requires q > 0, got q={q}")
    alpha = (p + q - 1.0) / (p - 1.0) * (2.0 ** (p + q) - 1.0) / (
        2.0 ** (q + 1.0) * (2.0 ** p - 1.0)
    )
    beta = (p + q - 1.0) / (p + 2.0 * q - 1.0) * (
        2.0 ** (q - 1.0) * (2.0 ** (p + q) - 1.0)
    ) / (2.0 ** (p + 2.0 * q) - 1.0)
    lhs = 1.0 / riemann_zeta(p + q, config)
    rhs = alpha / riemann_zeta(p + 2.0 * q, config) + beta / riemann_zeta(p, config)
    case = IneqCase(
        case_id="zeta.reciprocal-convexity",
        params={"p": p, "q": q, "alpha": alpha, "beta": beta},
        samples=((p, q),),
        middle=lambda s: lhs,
        upper=lambda s: rhs,
    )
    return evaluate_case(case)


def build_beta_ratio(p, q, theta: Optional[float] = None, vartheta: float = 0.0,
                     grid=None, config: EvalConfig = DEFAULT) -> IneqCase:
    """Gamma-ratio bounds on prod beta_p/beta_q for tilts vartheta and theta."""
    pair = _validated_pair(p, q, -1.0, "beta ratio")
    theta0 = solve_theta0().theta0
    if theta is None:
        theta = theta0
    smallest = min(pair.p[-1], pair.q[-1])
    if not 0.0 <= vartheta < 1.0 + smallest:
        raise DomainError(
            f"beta ratio requires 0 <= vartheta < 1 + min entry, got {vartheta}"
        )
    if theta > theta0 + 1e-12:
        raise DomainError(f"beta ratio requires theta <= theta0={theta0}, got {theta}")
    lower = lambda_constant(pair.p, pair.q, vartheta)
    upper = lambda_constant(pair.p, pair.q, theta)
    return IneqCase(
        case_id="beta.ratio",
        params={"p": list(pair.p), "q": list(pair.q),
                "theta": theta, "vartheta": vartheta},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=_product_ratio(nielsen_beta_p, pair, config),
        lower=lambda x: lower,
        upper=lambda x: upper,
    )


def case_beta_ratio(p, q, theta: Optional[float] = None, vartheta: float = 0.0,
                    grid=None, config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_beta_ratio(p, q, theta, vartheta, grid, config))


def build_turan_alt_hurwitz(p: float, q: float, grid=None,
                            config: EvalConfig = DEFAULT) -> IneqCase:
    """1 < zeta*((p+q)/2,x)^2/(zeta*(p,x) zeta*(q,x)) < gamma-ratio bound."""
    if not (p > 0 and q > 0):
        raise DomainError(f"turan_alt_hurwitz requires p, q > 0, got p={p}, q={q}")
    if abs(p - q) < 1e-12:
        raise DomainError("turan_alt_hurwitz is degenerate (non-strict) at p = q")
    s = 0.5 * (p + q)
    t0 = solve_theta0().theta0
    upper = math.exp(
        2.0 * math.lgamma(s - t0) + math.lgamma(p) + math.lgamma(q)
        - 2.0 * math.lgamma(s) - math.lgamma(p - t0) - math.lgamma(q - t0)
    )

    def middle(x: float) -> float:
        return alt_hurwitz_zeta(s, x, config) ** 2 / (
            alt_hurwitz_zeta(p, x, config) * alt_hurwitz_zeta(q, x, config)
        )

    return IneqCase(
        case_id="alt-hurwitz.turan",
        params={"p": p, "q": q, "theta0": t0},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=middle,
        lower=lambda x: 1.0,
        upper=lambda x: upper,
    )


def case_turan_alt_hurwitz(p: float, q: float, grid=None,
                           config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_turan_alt_hurwitz(p, q, grid, config))


def build_tricomi_ratio(a: float, b: float, p, q, grid=None, variant: str = "sharp",
                        config: EvalConfig = DEFAULT) -> IneqCase:
    """Tricomi product-ratio bounds; direction keyed to the sign of a - b + 1.

    variant "sharp" compares against lambda_star (requires b > 1), variant
    "unit" against 1.  b = a + 1 collapses the ratio to the constant 1 and
    is rejected as degenerate.
    """
    if variant not in ("sharp", "unit"):
        raise DomainError(f"variant must be 'sharp' or 'unit', got {variant!r}")
    if not a > 0:
        raise DomainError(f"tricomi ratio requires a > 0, got a={a}")
    direction = a - b + 1.0
    if direction == 0.0:
        raise DomainError(
            "b = a + 1 makes the ratio identically 1 (equality boundary); excluded"
        )
    pair = _validated_pair(p, q, -a, "tricomi ratio")
    if variant == "sharp":
        if not b > 1:
            raise DomainError(f"sharp variant requires b > 1, got b={b}")
        bound = lambda_star(pair.p, pair.q, a, b)
    else:
        bound = 1.0

    def middle(x: float) -> float:
        num = 1.0
        den = 1.0
        for pj in pair.p:
            num *= tricomi_u(a + pj, b + pj, x, config)
        for qj in pair.q:
            den *= tricomi_u(a + qj, b + qj, x, config)
        return num / den

    # a - b + 1 > 0: bound < ratio (sharp) and ratio < 1 (unit); reversed otherwise
    bound_is_lower = (direction > 0) == (variant == "sharp")
    return IneqCase(
        case_id=f"tricomi.ratio-{variant}",
        params={"a": a, "b": b, "p": list(pair.p), "q": list(pair.q),
                "bound": bound, "direction": direction},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=middle,
        lower=(lambda x: bound) if bound_is_lower else None,
        upper=None if bound_is_lower else (lambda x: bound),
    )


def case_tricomi_ratio(a: float, b: float, p, q, grid=None, variant: str = "sharp",
                       config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_tricomi_ratio(a, b, p, q, grid, variant, config))


def build_mills_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqCase:
    """prod Gamma(p_j+1)/Gamma(q_j+1) < prod R_p/R_q < 1."""
    pair = _validated_pair(p, q, -1.0, "mills ratio")
    lower = lambda_constant(pair.p, pair.q, 0.0)
    return IneqCase(
        case_id="mills.ratio",
        params={"p": list(pair.p), "q": list(pair.q)},
        samples=tuple(grid) if grid is not None else log_grid(),
        middle=_product_ratio(mills_ratio_p, pair, config),
        lower=lambda x: lower,
        upper=lambda x: 1.0,
    )


def case_mills_ratio(p, q, grid=None, config: EvalConfig = DEFAULT) -> IneqReport:
    return evaluate_case(build_mills_ratio(p, q, grid, config))


def case_yang_tian(n_max: int, grid=None, config: EvalConfig = DEFAULT) -> IneqReport:
    """Gamma-ratio bounds on R_{n-1} R_{n+1} / R_n^2 for n = 1..n_max."""
    if n_max < 1:
        raise DomainError(f"yang_tian requires n_max >= 1, got {n_max}")
    xs = tuple(grid) if grid is not None else log_grid()
    samples = tuple((n, x) for n in range(1, n_max + 1) for x in xs)

    def middle(s):
        n, x = s
        return (
            mills_ratio_p(n - 1.0, x, config) * mills_ratio_p(n + 1.0, x, config)
            / mills_ratio_p(float(n), x, config) ** 2
        )

    def lower(s):
        n, _ = s
        h = 0.5 * n
        return math.exp(
            math.lgamma(h) + math.lgamma(h + 1.0) - 2.0 * math.lgamma(h + 0.5)
        )

    def upper(s):
        n, _ = s
        return (n + 1.0) / n

    case = IneqCase(
        case_id="mills.yang-tian",
        params={"n_max": n_max},
        samples=samples,
        middle=middle,
        lower=lower,
        upper=upper,
    )
    return evaluate_case(case)


def case_conjecture_rp(grid_p=(0.0, 0.5, 1.0, 1.5, 2.0), grid_x=(0.5, 1.0, 2.0),
                       config: EvalConfig = DEFAULT) -> IneqReport:
    """Evidence scan for log-convexity of p -> R_p(x)/Gamma(p/2 + 1/2).

    Discrete convexity margins of the log on consecutive p-triplets;
    reported with the conjecture flag and never used as a gate.
    """
    ps = tuple(grid_p)
    if len(ps) < 3:
        raise DomainError("conjecture scan needs at least 3 p-grid points")
    samples = tuple(
        (ps[i - 1], ps[i], ps[i + 1], x)
        for i in range(1, len(ps) - 1)
        for x in grid_x
    )

    def margin(s):
        p1, p2, p3, x = s

        def g(p: float) -> float:
            return math.log(mills_ratio_p(p, x, config)) - math.lgamma(0.5 * p + 0.5)

        return (p3 - p2) * g(p1) - (p3 - p1) * g(p2) + (p2 - p1) * g(p3)

    case = IneqCase(
        case_id="mills.conjecture",
        params={"grid_p": list(ps), "grid_x": list(grid_x)},
        samples=samples,
        middle=margin,
        lower=lambda s: 0.0,
        strict=False,
        flags=("conjecture",),
        normalized=False,
    )
    return evaluate_case(case)


# ---------------------------------------------------------------------------
# exact sequence cases


def case_bernoulli_ratio(n_max: int = 20) -> IneqReport:
    """Bounds on |B_{2n+2}|/|B_{2n}| with exact rational middles.

    The slack closes like 3^(-2n), far below double precision by n = 20,
    so the bound arithmetic runs at extended precision.
    """
    if n_max < 1:
        raise DomainError(f"bernoulli_ratio requires n_max >= 1, got {n_max}")
    table = bernoulli_numbers(n_max + 1)
    with mpmath.workdps(_SEQUENCE_DPS):
        pi2 = mpmath.pi ** 2

        def middle(n):
            m = abs(table[2 * n + 2]) / abs(table[2 * n])
            return mpmath.mpf(m.numerator) / m.denominator

        def factor(n):
            return (mpmath.mpf(4 ** n) - 1) / (4 ** (n + 1) - 1)

        def lower(n):
            return (2 * n + 2) * (2 * n - 1) / pi2 * factor(n)

        def upper(n):
            return (2 * n + 2) * (2 * n + 1) / pi2 * factor(n)

        case = IneqCase(
            case_id="bernoulli.ratio",
            params={"n_max": n_max},
            samples=tuple(range(1, n_max + 1)),
            middle=middle,
            lower=lower,
            upper=upper,
            floor=_SEQUENCE_FLOOR,
        )
        return evaluate_case(case)


def case_euler_ratio(n_max: int = 15) -> IneqReport:
    """Both double inequalities for |E_{2n}|/|E_{2n-2}|.

    At n = 1 the first pair's upper bound and the second pair's lower
    bound are attained with equality; that sample is flagged and excluded
    from the strict assertion.
    """
    if n_max < 1:
        raise DomainError(f"euler_ratio requires n_max >= 1, got {n_max}")
    table = euler_numbers(n_max)
    with mpmath.workdps(_SEQUENCE_DPS):
        pi2 = mpmath.pi ** 2

        def middle(n):
            m = Fraction(abs(table[2 * n]), abs(table[2 * n - 2]))
            return mpmath.mpf(m.numerator) / m.denominator

        def lower(n):
            first = 8 / pi2 * n * (2 * n - 1)
            second = mpmath.mpf(4 * n + 1) * (4 * n - 1) / 15
            return max(first, second)

        def upper(n):
            first = mpmath.mpf(n) * (2 * n - 1)
            second = (4 * n + 1) * (4 * n - 1) / pi2
            return min(first, second)

        case = IneqCase(
            case_id="euler.ratio",
            params={"n_max": n_max},
            samples=tuple(range(1, n_max + 1)),
            middle=middle,
            lower=lower,
            upper=upper,
            excluded=lambda n: n == 1,
            floor=_SEQUENCE_FLOOR,
        )
        report = evaluate_case(case)
        # non-strict sanity at the flagged boundary: equality is allowed
        boundary_ok = middle(1) <= upper(1) + mpmath.mpf(10) ** -40 and (
            middle(1) >= lower(1) - mpmath.mpf(10) ** -40
        )
    if not boundary_ok:
        return IneqReport(
            case_id=report.case_id,
            params=report.params,
            samples=report.samples,
            min_slack_lower=report.min_slack_lower,
            min_slack_upper=report.min_slack_upper,
            verdict=False,
            flags=report.flags + ("boundary-violated",),
        )
    return report


# ---------------------------------------------------------------------------
# catalog


def _sweep(case_fn, combos, case_id, params, config) -> IneqReport:
    reports = [case_fn(*combo, config=config) for combo in combos]
    return merge_reports(case_id, params, reports)


ZETA_RATIO_SWEEP = tuple((p, r) for p in (1.5, 2.0, 3.0, 5.0, 10.0) for r in (0.5, 1.0, 2.0))
ZETA_RECIPROCAL_SWEEP = tuple((p, q) for p in (1.5, 2.0, 4.0) for q in (0.5, 1.0, 3.0))

GRID_CASE_BUILDERS = {
    "psi.ratio": build_psi_ratio,
    "hurwitz.ratio": build_hurwitz_ratio,
    "hurwitz.turan": build_turan_hurwitz,
    "beta.ratio": build_beta_ratio,
    "alt-hurwitz.turan": build_turan_alt_hurwitz,
    "tricomi.ratio-sharp": build_tricomi_ratio,
    "tricomi.ratio-unit": build_tricomi_ratio,
    "mills.ratio": build_mills_ratio,
}


def default_catalog(config: EvalConfig = DEFAULT) -> dict[str, Callable[[], IneqReport]]:
    """Catalog ids mapped to zero-argument runners with default parameters."""
    return {
        "psi.ratio": lambda: case_psi_ratio((2.0, 2.0), (3.0, 1.0), config=config),
        "hurwitz.ratio": lambda: case_hurwitz_ratio(
            (2.5, 2.5), (3.0, 2.0), config=config
        ),
        "hurwitz.turan": lambda: case_turan_hurwitz(3.0, 2.0, config=config),
        "zeta.ratio": lambda: _sweep(
            case_zeta_ratio, ZETA_RATIO_SWEEP, "zeta.ratio",
            {"sweep_p": [1.5, 2.0, 3.0, 5.0, 10.0], "sweep_r": [0.5, 1.0, 2.0]},
            config,
        ),
        "bernoulli.ratio": lambda: case_bernoulli_ratio(20),
        "zeta.reciprocal-convexity": lambda: _sweep(
            case_zeta_reciprocal_convexity, ZETA_RECIPROCAL_SWEEP,
            "zeta.reciprocal-convexity",
            {"sweep_p": [1.5, 2.0, 4.0], "sweep_q": [0.5, 1.0, 3.0]},
            config,
        ),
        "beta.ratio": lambda: case_beta_ratio((1.0, 1.0), (2.0, 0.0), config=config),
        "alt-hurwitz.turan": lambda: case_turan_alt_hurwitz(3.0, 1.0, config=config),
        "euler.ratio": lambda: case_euler_ratio(15),
        "tricomi.ratio-sharp": lambda: case_tricomi_ratio(
            2.0, 2.0, (1.0, 1.0), (2.0, 0.0), variant="sharp", config=config
        ),
        "tricomi.ratio-unit": lambda: case_tricomi_ratio(
            2.0, 2.0, (1.0, 1.0), (2.0, 0.0), variant="unit", config=config
        ),
        "mills.ratio": lambda: case_mills_ratio((1.0, 1.0), (2.0, 0.0), config=config),
        "mills.yang-tian": lambda: case_yang_tian(10, config=config),
        "mills.conjecture": lambda: case_conjecture_rp(config=config),
    }


CATALOG_IDS = tuple(default_catalog().keys())


def run_catalog(selection: Sequence[str], config: EvalConfig = DEFAULT) -> list[IneqReport]:
    """Run the selected cases in canonical catalog order."""
    catalog = default_catalog(config)
    unknown = [cid for cid in selection if cid not in catalog]
    if unknown:
        raise DomainError(f"unknown catalog ids: {', '.join(sorted(unknown))}")
    wanted = set(selection)
    return [catalog[cid]() for cid in CATALOG_IDS if cid in wanted]


def catalog_passed(reports: Sequence[IneqReport]) -> bool:
    """Overall verdict; conjecture-flagged cases never gate."""
    return all(r.verdict for r in reports if "conjecture" not in r.flags)


def log_convexity_margins(fn: Callable[[float], float],
                          ps: Sequence[float]) -> list[float]:
    """Discrete convexity margins of ln fn over consecutive triplets.

    Nonnegative margins mean log-convex on the sampled grid; apply to
    1/fn (or negate) for log-concavity.
    """
    logs = [math.log(fn(p)) for p in ps]
    out = []
    for i in range(1, len(ps) - 1):
        p1, p2, p3 = ps[i - 1], ps[i], ps[i + 1]
        out.append(
            (p3 - p2) * logs[i - 1] - (p3 - p1) * logs[i] + (p2 - p1) * logs[i + 1]
        )
    return out
