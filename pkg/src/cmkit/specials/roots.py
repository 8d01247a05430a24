"""The threshold constant of the alternating family.

t0 is the unique positive root of t e^t - 2 e^t - t - 2 = 0; the
log-convexity threshold is theta0 = -t0^2 e^t0 / (e^t0 + 1)^2.  The
displayed closed form is a positive quantity; the threshold used
everywhere downstream (theta <= theta0) is its negative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Theta0Pair:
    t0: float
    theta0: float


def _g(t: float) -> float:
    et = math.exp(t)
    return t * et - 2.0 * et - t - 2.0


def _g_prime(t: float) -> float:
    return (t - 1.0) * math.exp(t) - 1.0


@lru_cache(maxsize=1)
def solve_theta0() -> Theta0Pair:
    """Bracketed bisection on [2, 3] followed by Newton polish."""
    lo, hi = 2.0, 3.0
    # g(2) < 0 < g(3); bisect down to a short bracket
    for _ in range(40):
        mid = 0.5 * (lo + hi)
        if _g(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    t = 0.5 * (lo + hi)
    for _ in range(8):
        step = _g(t) / _g_prime(t)
        t -= step
        if abs(step) < 1e-15 * t:
            break
    et = math.exp(t)
    theta0 = -(t * t * et) / (et + 1.0) ** 2
    return Theta0Pair(t0=t, theta0=theta0)
