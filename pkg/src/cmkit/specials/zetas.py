"""Hurwitz zeta, its alternating variant, and the Dirichlet specializations.

The Hurwitz zeta is evaluated by Euler-Maclaurin summation: the first N
terms of the defining series are summed directly and the tail is replaced
by the integral term, the half-term, and Bernoulli corrections whose shape
matches the large-x asymptotic expansion of the function.  The error of
the truncated correction sum is controlled by the first omitted term.

The alternating variant is reduced to two Hurwitz evaluations through the
even/odd pairing identity when the exponent is comfortably above 1; close
to and below 1 (where the plain series converges only conditionally) it is
summed with the Cohen-Rodriguez Villegas-Zagier acceleration scheme for
alternating series, whose error decays like (3 + sqrt(8))^(-n).
"""

from __future__ import annotations

import math

from ..config import DEFAULT, EvalConfig
from ..errors import ConvergenceError, DomainError
from .sequences import bernoulli_numbers

# Pairing needs both Hurwitz exponents safely inside p > 1.
_PAIRING_MIN_P = 1.25


def hurwitz_zeta(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """zeta(p, x) = sum_{k>=0} (k + x)^(-p) for p > 1, x > 0."""
    if not p > 1:
        raise DomainError(f"hurwitz_zeta requires p > 1, got p={p}")
    if not x > 0:
        raise DomainError(f"hurwitz_zeta requires x > 0, got x={x}")

    N = config.em_shift_N
    direct = math.fsum((k + x) ** -p for k in range(N))
    y = N + x
    tail = y ** (1.0 - p) / (p - 1.0) + 0.5 * y ** -p

    # Bernoulli corrections; the first term NOT added certifies the error
    table = bernoulli_numbers(config.em_terms + 1)
    total = direct + tail
    rising = p                   # Gamma(2n + p - 1) / Gamma(p) at n = 1
    y_pow = y ** -(1.0 + p)      # y^-(2n - 1 + p) at n = 1
    inv_y2 = y ** -2.0
    prev = math.inf
    for n in range(1, config.em_terms + 2):
        term = float(table[2 * n] / math.factorial(2 * n)) * rising * y_pow
        if abs(term) <= config.rel_tol * abs(total) + config.abs_tol:
            return total
        if abs(term) >= prev:
            raise ConvergenceError(
                f"hurwitz_zeta corrections stopped decreasing at n={n} "
                f"(p={p}, x={x}); increase em_shift_N"
            )
        if n == config.em_terms + 1:
            break
        total += term
        prev = abs(term)
        rising *= (p + 2 * n - 1.0) * (p + 2 * n)
        y_pow *= inv_y2
    raise ConvergenceError(
        f"hurwitz_zeta did not reach rel_tol={config.rel_tol} within "
        f"em_terms={config.em_terms} corrections (p={p}, x={x})"
    )


def _accelerated_alternating(term, n: int) -> float:
    # Cohen-Rodriguez Villegas-Zagier acceleration of sum (-1)^k term(k);
    # valid for totally monotone term sequences, error ~ (3+sqrt 8)^-n.
    d = (3.0 + math.sqrt(8.0)) ** n
    d = (d + 1.0 / d) / 2.0
    b = -1.0
    c = -d
    s = 0.0
    for k in range(n):
        c = b - c
        s += c * term(k)
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


def _alt_accel_order(config: EvalConfig) -> int:
    tol = max(min(config.rel_tol, 1e-2), 1e-17)
    return max(12, int(math.ceil(-math.log(tol) / 1.7627)) + 6)


def alt_hurwitz_zeta(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """zeta*(p, x) = sum_{k>=0} (-1)^k (k + x)^(-p) for p > 0, x > 0."""
    if not p > 0:
        raise DomainError(f"alt_hurwitz_zeta requires p > 0, got p={p}")
    if not x > 0:
        raise DomainError(f"alt_hurwitz_zeta requires x > 0, got x={x}")
    if p > _PAIRING_MIN_P:
        return _alt_pairing(p, x, config)
    return _alt_accelerated(p, x, config)


def _alt_pairing(p: float, x: float, config: EvalConfig) -> float:
    # Even/odd split of the series: zeta*(p,x) = 2^-p [zeta(p,x/2) - zeta(p,(x+1)/2)]
    return 2.0 ** -p * (
        hurwitz_zeta(p, 0.5 * x, config) - hurwitz_zeta(p, 0.5 * (x + 1.0), config)
    )


def _alt_accelerated(p: float, x: float, config: EvalConfig) -> float:
    n = _alt_accel_order(config)
    return _accelerated_alternating(lambda k: (k + x) ** -p, n)


def ext_polygamma(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """psi_p(x) = Gamma(p+1) zeta(p+1, x), the real-order polygamma."""
    if not p > 0:
        raise DomainError(f"ext_polygamma requires p > 0, got p={p}")
    return math.gamma(p + 1.0) * hurwitz_zeta(p + 1.0, x, config)


def nielsen_beta_p(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """beta_p(x) = Gamma(p+1) zeta*(p+1, x), the real-order Nielsen beta."""
    if not p > -1:
        raise DomainError(f"nielsen_beta_p requires p > -1, got p={p}")
    return math.gamma(p + 1.0) * alt_hurwitz_zeta(p + 1.0, x, config)


def riemann_zeta(p: float, config: EvalConfig = DEFAULT) -> float:
    """zeta(p) = zeta(p, 1) for p > 1."""
    return hurwitz_zeta(p, 1.0, config)


def dirichlet_lambda(p: float, config: EvalConfig = DEFAULT) -> float:
    """lambda(p) = sum over odd k of k^-p = (1 - 2^-p) zeta(p)."""
    if not p > 1:
        raise DomainError(f"dirichlet_lambda requires p > 1, got p={p}")
    return (1.0 - 2.0 ** -p) * riemann_zeta(p, config)


def dirichlet_eta(p: float, config: EvalConfig = DEFAULT) -> float:
    """eta(p) = zeta*(p, 1), the alternating zeta."""
    return alt_hurwitz_zeta(p, 1.0, config)


def dirichlet_beta_fn(p: float, config: EvalConfig = DEFAULT) -> float:
    """beta(p) = sum_{k>=0} (-1)^k (2k+1)^(-p) = 2^-p zeta*(p, 1/2).

    The scaling follows from (k + 1/2)^-p = 2^p (2k+1)^-p; the anchor
    values beta(1) = pi/4 and beta(3) = pi^3/32 pin it down.
    """
    if not p > 0:
        raise DomainError(f"dirichlet_beta_fn requires p > 0, got p={p}")
    return 2.0 ** -p * alt_hurwitz_zeta(p, 0.5, config)
