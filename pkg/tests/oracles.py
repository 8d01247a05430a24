"""Independent oracles used by the tests.

Everything here recomputes expected values by a route different from the
package implementation: raw partial sums with rigorous integral-tail
brackets, iterated averaging for alternating series, exact generating
function inversion for the integer sequences, and the error-function
form of the Gaussian tail.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

import numpy as np


def hurwitz_bracket(p: float, x: float, terms: int = 2_000_000) -> tuple[float, float]:
    """Rigorous bracket for sum (k+x)^-p: partial sum + integral tail.

    The tail sum lies between the integral from `terms` and the integral
    from `terms - 1`, so the bracket width is one term at the cutoff.
    """
    k = np.arange(terms, dtype=float)
    s = float(np.sum((k + x) ** -p))
    lo = s + (terms + x) ** (1.0 - p) / (p - 1.0)
    hi = s + (terms - 1.0 + x) ** (1.0 - p) / (p - 1.0)
    return lo, hi


def assert_in_bracket(value: float, lo: float, hi: float, rel: float) -> None:
    pad = rel * max(abs(lo), abs(hi))
    assert lo - pad <= value <= hi + pad, (value, lo, hi)


def alt_averaged(term, n_terms: int = 200, levels: int = 60) -> float:
    """sum (-1)^k term(k) by iterated averaging of partial sums.

    Converges geometrically for totally monotone terms; independent of
    the package's acceleration scheme.
    """
    partials = []
    s = 0.0
    for k in range(n_terms):
        s += (-1) ** k * term(k)
        partials.append(s)
    row = partials
    for _ in range(levels):
        row = [(a + b) / 2.0 for a, b in zip(row, row[1:])]
        if len(row) < 3:
            break
    return row[len(row) // 2]


def zeta_partial(p: float, terms: int = 2_000_000) -> float:
    lo, hi = hurwitz_bracket(p, 1.0, terms)
    return 0.5 * (lo + hi)


def exp_integral_e1(x: float) -> float:
    """E1(x) = -gamma - ln x + sum (-1)^(k+1) x^k / (k k!)."""
    euler_gamma = 0.5772156649015328606
    total = -euler_gamma - math.log(x)
    term = 1.0
    for k in range(1, 80):
        term *= x / k
        total += -term / k if k % 2 == 0 else term / k
    return total


def bernoulli_via_gf(K: int) -> list[Fraction]:
    """B_0..B_{2K} as Taylor coefficients of t/(e^t - 1), by exact series
    inversion of (e^t - 1)/t = sum t^k / (k+1)!."""
    n = 2 * K + 1
    a = [Fraction(1, math.factorial(k + 1)) for k in range(n)]
    inv = [Fraction(1)]
    for m in range(1, n):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += a[j] * inv[m - j]
        inv.append(-acc)
    return [inv[m] * math.factorial(m) for m in range(n)]


def euler_via_gf(K: int) -> list[int]:
    """E_0..E_{2K} as Taylor coefficients of 1/cosh t, by exact inversion
    of cosh t = sum t^(2k) / (2k)!."""
    n = 2 * K + 1
    cosh = [Fraction(1, math.factorial(k)) if k % 2 == 0 else Fraction(0)
            for k in range(n)]
    inv = [Fraction(1)]
    for m in range(1, n):
        acc = Fraction(0)
        for j in range(1, m + 1):
            acc += cosh[j] * inv[m - j]
        inv.append(-acc)
    values = []
    for m in range(n):
        c = inv[m] * math.factorial(m)
        assert c.denominator == 1
        values.append(int(c))
    return values


def mills_erfc(x: float) -> float:
    """R(x) = e^(x^2/2) sqrt(pi/2) erfc(x / sqrt 2)."""
    return math.exp(0.5 * x * x) * math.sqrt(math.pi / 2.0) * math.erfc(x / math.sqrt(2.0))


def indexed_phi(seed: int):
    """Deterministic positive pseudo-random evaluator phi(index, x).

    The value depends only on the index (and the seed), which is all the
    decomposition identity needs.
    """

    def phi(idx: float, x: float) -> float:
        rng = random.Random(f"{seed}:{float(idx):.12e}")
        return rng.uniform(0.25, 4.0)

    return phi
