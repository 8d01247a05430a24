"""Numerical complete-monotonicity verification for the four families.

Each family F_p(x) = int t^p f(t) e^(-xt) dt satisfies d/dx F_p = -F_{p+1},
so the m-th derivative of a product prod_j F_{p_j} expands exactly, by the
multinomial Leibniz rule, into a positive combination of function values
at shifted indices.  No finite differences are involved: the signed
derivative of the product-difference

    D(x; lambda) = prod_j F_{p_j}(x) - lambda * prod_j F_{q_j}(x)

is evaluated order by order and normalized by the larger of the two
product derivatives.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .config import DEFAULT, EvalConfig
from .errors import CombinatorialBlowupError, DomainError
from .majorization import MajorizationPair, RTuple
from .specials import (
    ext_polygamma,
    mills_ratio_p,
    nielsen_beta_p,
    solve_theta0,
    tricomi_u,
)

FAMILY_KINDS = ("hurwitz", "alternating", "tricomi", "gaussian")

K_MAX_DEFAULT = 8
CM_TOL_DEFAULT = 1e-9
_MAX_EXPANSION_TERMS = 10 ** 6


def default_grid(lo: float = 2.0 ** -3, hi: float = 2.0 ** 6, count: int = 25) -> tuple[float, ...]:
    """Log-spaced grid covering both asymptotic regimes."""
    if count == 1:
        return (lo,)
    ratio = (hi / lo) ** (1.0 / (count - 1))
    return tuple(lo * ratio ** i for i in range(count))


@dataclass(frozen=True)
class FamilySpec:
    """One Laplace-transform family and its log-concavity thresholds.

    kind selects the kernel f(t):
      hurwitz      1 / (1 - e^-t)      -> F_p = psi_p, valid p > 0
      alternating  1 / (1 + e^-t)      -> F_p = beta_p, valid p > -1
      tricomi      t^(a-1)(1+t)^(b-a-1)/Gamma(a)
                                       -> F_p = Gamma(a+p) U(a+p, b+p, x),
                                          valid p > -a
      gaussian     e^(-t^2 / 2)        -> F_p = R_p, valid p > -1

    theta_logconcave / theta_logconvex are the tilt exponents making
    t^theta f(t) log-concave / log-convex; a None convex threshold means
    the log-convex side is only reached in the limit (sharp constant 1).
    """

    kind: str
    a: Optional[float] = None
    b: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise DomainError(f"unknown family kind {self.kind!r}")
        if self.kind == "tricomi":
            if self.a is None or self.b is None:
                raise DomainError("tricomi family requires parameters a and b")
            if not self.a > 0:
                raise DomainError(f"tricomi family requires a > 0, got a={self.a}")
        elif self.a is not None or self.b is not None:
            raise DomainError(f"family {self.kind!r} takes no (a, b) parameters")

    @classmethod
    def hurwitz(cls) -> "FamilySpec":
        return cls("hurwitz")

    @classmethod
    def alternating(cls) -> "FamilySpec":
        return cls("alternating")

    @classmethod
    def tricomi(cls, a: float, b: float) -> "FamilySpec":
        return cls("tricomi", a=a, b=b)

    @classmethod
    def gaussian(cls) -> "FamilySpec":
        return cls("gaussian")

    @property
    def min_index(self) -> float:
        """Open lower bound of the valid index range."""
        if self.kind == "hurwitz":
            return 0.0
        if self.kind == "tricomi":
            return -self.a
        return -1.0

    @property
    def theta_logconcave(self) -> Optional[float]:
        if self.kind == "hurwitz":
            return 1.0
        if self.kind in ("alternating", "gaussian"):
            return 0.0
        direction = self.a - self.b + 1.0
        if direction > 0:
            return 2.0 - self.b
        if direction < 0:
            return 1.0 - self.a
        return None  # b = a + 1: kernel is a pure power, D vanishes

    @property
    def theta_logconvex(self) -> Optional[float]:
        if self.kind == "hurwitz":
            return 0.0
        if self.kind == "alternating":
            return solve_theta0().theta0
        if self.kind == "gaussian":
            return None  # reached only as theta -> -inf; sharp constant is 1
        direction = self.a - self.b + 1.0
        if direction > 0:
            return 1.0 - self.a
        if direction < 0:
            return 2.0 - self.b
        return None

    def describe(self) -> str:
        if self.kind == "tricomi":
            return f"tricomi(a={self.a}, b={self.b})"
        return self.kind


def family_F(spec: FamilySpec, p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """F_p(x) for the family; positive on the valid (p, x) domain."""
    if p <= spec.min_index:
        raise DomainError(
            f"family {spec.describe()} requires p > {spec.min_index}, got p={p}"
        )
    if spec.kind == "hurwitz":
        return ext_polygamma(p, x, config)
    if spec.kind == "alternating":
        return nielsen_beta_p(p, x, config)
    if spec.kind == "tricomi":
        return math.gamma(spec.a + p) * tricomi_u(spec.a + p, spec.b + p, x, config)
    return mills_ratio_p(p, x, config)


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in _weak_compositions(total - head, parts - 1):
            yield (head,) + rest


def _expansion_size(m: int, n: int) -> int:
    return math.comb(m + n - 1, n - 1)


def _derivative_from_rows(rows: Sequence[Sequence[float]], m: int) -> float:
    # rows[j][i] = F_{p_j + i}(x); returns (-1)^m (d/dx)^m prod_j F_{p_j}
    n = len(rows)
    fact_m = math.factorial(m)
    total = 0.0
    for comp in _weak_compositions(m, n):
        coef = fact_m
        for mj in comp:
            coef //= math.factorial(mj)
        prod = float(coef)
        for j, mj in enumerate(comp):
            prod *= rows[j][mj]
        total += prod
    return total


def product_derivative(
    spec: FamilySpec,
    tup: Sequence[float],
    m: int,
    x: float,
    config: EvalConfig = DEFAULT,
) -> float:
    """(-1)^m (d/dx)^m of prod_j F_{p_j}(x), by exact index shifting."""
    if m < 0:
        raise DomainError(f"derivative order must be >= 0, got {m}")
    entries = tuple(tup)
    if _expansion_size(m, len(entries)) > _MAX_EXPANSION_TERMS:
        raise CombinatorialBlowupError(
            f"derivative expansion needs {_expansion_size(m, len(entries))} terms "
            f"(n={len(entries)}, m={m}); limit is {_MAX_EXPANSION_TERMS}"
        )
    rows = [
        [family_F(spec, pj + i, x, config) for i in range(m + 1)] for pj in entries
    ]
    return _derivative_from_rows(rows, m)


@dataclass(frozen=True)
class CMReport:
    """Per-order verification result of sign * (-1)^m D^(m) >= 0 on a grid."""

    family: str
    p: tuple[float, ...]
    q: tuple[float, ...]
    lam: float
    sign: int
    grid: tuple[float, ...]
    orders_checked: int
    requested_orders: int
    worst_margin: tuple[float, ...]
    verdict: tuple[bool, ...]
    clipped: bool
    cm_tol: float

    @property
    def passed(self) -> bool:
        return all(self.verdict)

    def worst_order(self) -> int:
        return min(range(len(self.worst_margin)), key=lambda m: self.worst_margin[m])

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "p": list(self.p),
            "q": list(self.q),
            "lambda": self.lam,
            "sign": self.sign,
            "grid": list(self.grid),
            "orders_checked": self.orders_checked,
            "requested_orders": self.requested_orders,
            "worst_margin": list(self.worst_margin),
            "verdict": list(self.verdict),
            "clipped": self.clipped,
            "cm_tol": self.cm_tol,
            "passed": self.passed,
        }


def cm_check(
    spec: FamilySpec,
    pair: MajorizationPair,
    lam: float,
    sign: int,
    grid: Sequence[float] = (),
    K: int = 6,
    config: EvalConfig = DEFAULT,
    cm_tol: float = CM_TOL_DEFAULT,
) -> CMReport:
    """Check sign * (-1)^m D^(m)(x; lambda) >= -cm_tol for m = 0..K on a grid.

    Margins are normalized by the larger of the two product derivatives,
    so a pass means the signed derivative is nonnegative up to relative
    rounding.  K is clipped to the largest order keeping every shifted
    index inside the family's range (shifts only move indices up, so the
    clip can only trigger when a base index is already at the boundary).
    """
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    if not grid:
        grid = default_grid()
    base = min(min(pair.p.entries), min(pair.q.entries))
    if base <= spec.min_index:
        raise DomainError(
            f"family {spec.describe()} requires indices > {spec.min_index}, "
            f"smallest given is {base}"
        )
    K_safe = min(K, K_MAX_DEFAULT)
    clipped = K_safe < K

    worst = [math.inf] * (K_safe + 1)
    tiny = 1e-300
    for x in grid:
        rows_p = [
            [family_F(spec, pj + i, x, config) for i in range(K_safe + 1)]
            for pj in pair.p
        ]
        rows_q = [
            [family_F(spec, qj + i, x, config) for i in range(K_safe + 1)]
            for qj in pair.q
        ]
        for m in range(K_safe + 1):
            a = _derivative_from_rows(rows_p, m)
            b = lam * _derivative_from_rows(rows_q, m)
            margin = sign * (a - b) / max(a, b, tiny)
            if margin < worst[m]:
                worst[m] = margin
    verdict = tuple(w >= -cm_tol for w in worst)
    return CMReport(
        family=spec.describe(),
        p=pair.p.entries,
        q=pair.q.entries,
        lam=lam,
        sign=sign,
        grid=tuple(grid),
        orders_checked=K_safe,
        requested_orders=K,
        worst_margin=tuple(worst),
        verdict=verdict,
        clipped=clipped,
        cm_tol=cm_tol,
    )


def sharpness_scan(
    spec: FamilySpec,
    pair: MajorizationPair,
    x_small: float,
    x_large: float,
    config: EvalConfig = DEFAULT,
) -> tuple[float, float]:
    """Product ratio prod F_{p_j} / prod F_{q_j} at both grid extremes.

    Computed in log space so long tuples at large x do not underflow.
    The caller compares the two values against candidate sharp constants.
    """
    def log_ratio(x: float) -> float:
        return math.fsum(
            math.log(family_F(spec, pj, x, config)) for pj in pair.p
        ) - math.fsum(
            math.log(family_F(spec, qj, x, config)) for qj in pair.q
        )

    return math.exp(log_ratio(x_small)), math.exp(log_ratio(x_large))


def converse_probe(
    spec: FamilySpec,
    pair: MajorizationPair,
    sign: int,
    lam_sharp: float,
    inflation: float = 0.05,
    grid: Sequence[float] = (),
    config: EvalConfig = DEFAULT,
) -> CMReport:
    """Order-0 check with lambda pushed past the sharp constant.

    Inflates lambda by the given fraction beyond the valid region (up for
    the +D side, down for the -D side).  A failing order-0 verdict is the
    sampled converse evidence for the sharpness claims; grid resolution
    limits what the probe can certify.
    """
    factor = 1.0 + inflation if sign > 0 else 1.0 - inflation
    return cm_check(spec, pair, lam_sharp * factor, sign, grid=grid, K=0, config=config)
