"""Order-p Mills ratio R_p(x) = int_0^inf t^p e^(-t^2/2) e^(-xt) dt.

Three regimes, each exposed for cross-checking:

* ``mills_series``: the convergent power series
  R_p(x) = sum_k (-1)^k 2^((k+p-1)/2) Gamma((k+p+1)/2) x^k / k!
* ``mills_asymptotic``: the divergent large-x expansion
  R_p(x) ~ sum_k (-1)^k Gamma(2k+p+1) / (2^k k! x^(2k+p+1)),
  truncated at its smallest-magnitude term; raises when that optimal
  truncation cannot meet the requested tolerance
* ``mills_quadrature``: adaptive quadrature of the defining integral,
  rescaled by t = s/x for x > 1 so the integrand keeps an O(1) scale.

``mills_ratio_p`` dispatches on x: series below series_switch_x,
asymptotic above asym_switch_x, quadrature in between.  The optimal
truncation error of the asymptotic series grows with p at fixed x, so
above the switch the dispatcher falls back to quadrature whenever the
asymptotic regime reports itself unreliable; the fixed switch point is
tuned for the 1e-9 regime agreement at small orders.
"""

from __future__ import annotations

import math

from scipy.integrate import quad

from ..config import DEFAULT, EvalConfig
from ..errors import AsymptoticUnreliableError, ConvergenceError, DomainError

_MAX_SERIES_TERMS = 800


def _check_domain(p: float, x: float) -> None:
    if not p > -1:
        raise DomainError(f"mills ratio requires p > -1, got p={p}")
    if x < 0:
        raise DomainError(f"mills ratio requires x >= 0, got x={x}")


def mills_ratio_p(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    """R_p(x) for p > -1 and x >= 0 (x = 0 evaluates through the series)."""
    _check_domain(p, x)
    if x <= config.series_switch_x:
        return mills_series(p, x, config)
    if x >= config.asym_switch_x:
        try:
            return mills_asymptotic(p, x, config)
        except AsymptoticUnreliableError:
            return mills_quadrature(p, x, config)
    return mills_quadrature(p, x, config)


def mills_series(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    _check_domain(p, x)
    term = 2.0 ** (0.5 * (p - 1.0)) * math.gamma(0.5 * (p + 1.0))
    total = term
    if x == 0.0:
        return total
    decreasing = False
    for k in range(_MAX_SERIES_TERMS):
        ratio = math.sqrt(2.0) * x / (k + 1.0) * math.exp(
            math.lgamma(0.5 * (k + p + 2.0)) - math.lgamma(0.5 * (k + p + 1.0))
        )
        new = -term * ratio
        total += new
        if abs(new) < abs(term):
            decreasing = True
        if decreasing and abs(new) <= config.rel_tol * abs(total) + config.abs_tol:
            return total
        term = new
    raise ConvergenceError(
        f"mills series did not converge at p={p}, x={x} "
        f"within {_MAX_SERIES_TERMS} terms"
    )


def mills_asymptotic(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    _check_domain(p, x)
    if x <= 0:
        raise AsymptoticUnreliableError("asymptotic regime requires x > 0")
    # leading term Gamma(p+1) / x^(p+1), then optimal truncation
    term = math.exp(math.lgamma(p + 1.0) - (p + 1.0) * math.log(x))
    total = term
    inv_x2 = 1.0 / (x * x)
    k = 0
    while True:
        ratio = (2 * k + p + 1.0) * (2 * k + p + 2.0) / (2.0 * (k + 1.0)) * inv_x2
        new = -term * ratio
        if abs(new) >= abs(term):
            # smallest term reached; first omitted term bounds the error
            if abs(new) > config.rel_tol * abs(total) + config.abs_tol:
                raise AsymptoticUnreliableError(
                    f"asymptotic truncation error {abs(new / total):.3e} at "
                    f"p={p}, x={x} exceeds rel_tol={config.rel_tol}"
                )
            return total
        total += new
        if abs(new) <= config.rel_tol * abs(total) + config.abs_tol:
            return total
        term = new
        k += 1


def mills_quadrature(p: float, x: float, config: EvalConfig = DEFAULT) -> float:
    _check_domain(p, x)
    scale = max(x, 1.0)
    # R_p(x) = scale^-(p+1) * int s^p exp(-s^2/(2 scale^2) - (x/scale) s) ds
    half_inv2 = 0.5 / (scale * scale)
    rate = x / scale

    if p < 0:
        # s = u^(1/(p+1)) removes the s^p endpoint singularity exactly
        inv = 1.0 / (p + 1.0)

        def f(u: float) -> float:
            s = u ** inv
            return math.exp(-half_inv2 * s * s - rate * s)

        prefactor = inv
    else:
        def f(s: float) -> float:
            return s ** p * math.exp(-half_inv2 * s * s - rate * s)

        prefactor = 1.0
    out = quad(f, 0.0, math.inf, epsabs=0.0,
               epsrel=min(config.rel_tol, 1e-11),
               limit=config.quad_nodes, full_output=True)
    if len(out) > 3:
        raise ConvergenceError(
            f"mills quadrature did not converge at p={p}, x={x}: {out[3]}"
        )
    return prefactor * scale ** -(p + 1.0) * out[0]
