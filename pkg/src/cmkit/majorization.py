"""Tuple majorization and the constructive reduction to 2-tuples.

An (n+1)-pair p < q (q's descending partial sums dominate p's, totals
equal) is reduced one step by picking the smallest k with q_{k+1} <= p_1
and forming

* a length-n "star" pair: p*_j = p_{j+1} and q* equal to q with the
  entries q_k, q_{k+1} merged into q_k + q_{k+1} - p_1,
* a length-2 "prime" pair: the sorted pair {p_1, q*_k} against
  (q_k, q_{k+1}).

Both outputs are again majorized pairs, and the product-difference of any
indexed family splits algebraically along the reduction:

    Delta(p, q) = Phi_{p_1} * Delta(p*, q*)
                + (prod of Phi_{q_j} over j < k and j > k+1) * Delta(p', q')

The identity holds for arbitrary positive Phi; it is the engine behind
the complete-monotonicity induction and the Hardy-Littlewood-Polya check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import PreconditionError

# Comparison tolerance for real tuples: absolute, scaled by magnitude.
_TOL = 1e-12


def _tol(scale: float) -> float:
    return _TOL * (1.0 + abs(scale))


@dataclass(frozen=True)
class RTuple:
    """A finite real tuple stored in nonincreasing order."""

    entries: tuple[float, ...]

    def __init__(self, entries: Iterable[float]):
        vals = tuple(float(v) for v in entries)
        if len(vals) < 1:
            raise PreconditionError("RTuple requires at least one entry")
        if any(not math.isfinite(v) for v in vals):
            raise PreconditionError("RTuple entries must be finite")
        for a, b in zip(vals, vals[1:]):
            if b > a + _tol(max(abs(a), abs(b))):
                raise PreconditionError(
                    f"RTuple entries must be nonincreasing, got {a} before {b}"
                )
        object.__setattr__(self, "entries", vals)

    @classmethod
    def sorted(cls, entries: Iterable[float]) -> "RTuple":
        return cls(sorted((float(v) for v in entries), reverse=True))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def total(self) -> float:
        return math.fsum(self.entries)


def is_majorized(p: RTuple, q: RTuple) -> bool:
    """True iff p is strictly majorized by q.

    Checks q's descending partial sums dominate p's, totals agree, and
    p != q, all within the scaled tolerance.
    """
    if len(p) != len(q):
        raise PreconditionError(
            f"is_majorized requires equal lengths, got {len(p)} and {len(q)}"
        )
    sp = sq = 0.0
    for j in range(len(p) - 1):
        sp += p[j]
        sq += q[j]
        if sq < sp - _tol(max(abs(sp), abs(sq))):
            return False
    tp, tq = p.total, q.total
    if abs(tp - tq) > _tol(max(abs(tp), abs(tq))):
        return False
    return not _tuples_equal(p, q)


def _tuples_equal(p: RTuple, q: RTuple) -> bool:
    return len(p) == len(q) and all(
        abs(a - b) <= _tol(max(abs(a), abs(b))) for a, b in zip(p, q)
    )


@dataclass(frozen=True)
class MajorizationPair:
    """A validated pair (p, q) with p majorized by q.

    Construction enforces the partial-sum dominance and equal totals.
    Strictness (p != q) is required unless ``allow_equal`` is set; the
    equal case only arises as the degenerate "trivial" leaf of a
    decomposition, where the product-difference vanishes identically.
    """

    p: RTuple
    q: RTuple

    def __init__(self, p: RTuple, q: RTuple, allow_equal: bool = False):
        if not isinstance(p, RTuple):
            p = RTuple(p)
        if not isinstance(q, RTuple):
            q = RTuple(q)
        if len(p) != len(q):
            raise PreconditionError(
                f"pair requires equal lengths, got {len(p)} and {len(q)}"
            )
        if len(p) < 2:
            raise PreconditionError("pair requires length >= 2")
        equal = _tuples_equal(p, q)
        if equal and not allow_equal:
            raise PreconditionError("pair requires p != q (strict majorization)")
        if not equal and not is_majorized(p, q):
            detail = _first_violation(p, q)
            raise PreconditionError(f"p is not majorized by q: {detail}")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __len__(self) -> int:
        return len(self.p)

    @property
    def trivial(self) -> bool:
        return _tuples_equal(self.p, self.q)


def _first_violation(p: RTuple, q: RTuple) -> str:
    sp = sq = 0.0
    for j in range(len(p) - 1):
        sp += p[j]
        sq += q[j]
        if sq < sp - _tol(max(abs(sp), abs(sq))):
            return (
                f"partial sum through index {j + 1}: "
                f"sum(q)={sq} < sum(p)={sp}"
            )
    tp, tq = p.total, q.total
    if abs(tp - tq) > _tol(max(abs(tp), abs(tq))):
        return f"totals differ: sum(p)={tp}, sum(q)={tq}"
    return "p equals q"


def find_k(pair: MajorizationPair) -> int:
    """Smallest k >= 1 with q_{k+1} <= p_1 (1-based).

    Exists for any valid pair of length >= 3 because q_n <= p_n <= p_1.
    """
    if len(pair) < 3:
        raise PreconditionError("find_k requires a pair of length >= 3")
    p1 = pair.p[0]
    q = pair.q.entries
    for k in range(1, len(q)):
        if q[k] <= p1:
            return k
    raise PreconditionError("no valid k found; pair violates majorization")


def reduce_once(pair: MajorizationPair, k: int) -> tuple[MajorizationPair, MajorizationPair]:
    """One reduction step at index k, returning (star, prime) pairs.

    Preconditions (each reported by name on failure): pair length >= 3,
    1 <= k <= n, q_k >= p_1, and q_{k+1} <= p_1.  The outputs satisfy
    star.p < star.q and prime.p < prime.q, except that either may
    degenerate to an equal (trivial) pair when q_{k+1} = p_1.
    """
    n1 = len(pair)
    if n1 < 3:
        raise PreconditionError("reduce_once requires a pair of length >= 3")
    if not 1 <= k <= n1 - 1:
        raise PreconditionError(f"k must lie in [1, {n1 - 1}], got {k}")
    p = pair.p.entries
    q = pair.q.entries
    p1 = p[0]
    tol = _tol(max(abs(p1), abs(q[k - 1]), abs(q[k])))
    if q[k - 1] < p1 - tol:
        raise PreconditionError(
            f"hypothesis q_k >= p_1 failed: q_{k}={q[k - 1]} < p_1={p1}"
        )
    if q[k] > p1 + tol:
        raise PreconditionError(
            f"hypothesis q_(k+1) <= p_1 failed: q_{k + 1}={q[k]} > p_1={p1}"
        )

    merged = q[k - 1] + q[k] - p1
    star_p = p[1:]
    star_q = q[: k - 1] + (merged,) + q[k + 1:]
    prime_p = (p1, merged) if p1 >= merged else (merged, p1)
    prime_q = (q[k - 1], q[k])

    star = _checked_pair(star_p, star_q, "star")
    prime = _checked_pair(prime_p, prime_q, "prime")
    return star, prime


def _checked_pair(p: Sequence[float], q: Sequence[float], label: str) -> MajorizationPair:
    try:
        return MajorizationPair(RTuple(p), RTuple(q), allow_equal=True)
    except PreconditionError as exc:
        raise PreconditionError(f"{label} pair invalid after reduction: {exc}") from exc


@dataclass(frozen=True)
class DecompositionNode:
    """Recursive record of the reduction of a pair into 2-pairs.

    kind is one of:
      "reduction"    an inner node carrying k_index, the scalar
                     multiplier index p_1 (multiplier_left), the index
                     multiset of untouched q entries (multiplier_right),
                     and the star / prime children;
      "leaf-2tuple"  a strict 2-pair leaf;
      "trivial-equal" an equal pair, whose product-difference is 0.
    """

    pair: MajorizationPair
    kind: str
    k_index: Optional[int] = None
    star: Optional["DecompositionNode"] = None
    prime: Optional["DecompositionNode"] = None
    multiplier_left: Optional[float] = None
    multiplier_right: tuple[float, ...] = field(default=())

    @property
    def star_pair(self) -> Optional[MajorizationPair]:
        return self.star.pair if self.star is not None else None

    @property
    def prime_pair(self) -> Optional[MajorizationPair]:
        return self.prime.pair if self.prime is not None else None

    def walk(self):
        yield self
        if self.star is not None:
            yield from self.star.walk()
        if self.prime is not None:
            yield from self.prime.walk()

    def to_dict(self) -> dict:
        doc = {
            "kind": self.kind,
            "pair": {"p": list(self.pair.p), "q": list(self.pair.q)},
        }
        if self.kind == "reduction":
            doc["k_index"] = self.k_index
            doc["multiplier_left"] = self.multiplier_left
            doc["multiplier_right"] = list(self.multiplier_right)
            doc["star_pair"] = {"p": list(self.star.pair.p), "q": list(self.star.pair.q)}
            doc["prime_pair"] = {"p": list(self.prime.pair.p), "q": list(self.prime.pair.q)}
            doc["star"] = self.star.to_dict()
            doc["prime"] = self.prime.to_dict()
        return doc


def decompose(pair: MajorizationPair) -> DecompositionNode:
    """Full recursive reduction; 2-pairs and equal pairs become leaves.

    Each level recomputes find_k on the current pair, mirroring the
    step-by-step structure of the inductive proof.
    """
    if pair.trivial:
        return DecompositionNode(pair=pair, kind="trivial-equal")
    if len(pair) == 2:
        return DecompositionNode(pair=pair, kind="leaf-2tuple")
    k = find_k(pair)
    star, prime = reduce_once(pair, k)
    q = pair.q.entries
    return DecompositionNode(
        pair=pair,
        kind="reduction",
        k_index=k,
        star=decompose(star),
        prime=decompose(prime),
        multiplier_left=pair.p[0],
        multiplier_right=q[: k - 1] + q[k + 1:],
    )


PhiEvaluator = Callable[[float, float], float]


def _product(phi: PhiEvaluator, indices: Iterable[float], x: float) -> float:
    out = 1.0
    for idx in indices:
        out *= phi(idx, x)
    return out


def _delta(phi: PhiEvaluator, pair: MajorizationPair, x: float) -> float:
    return _product(phi, pair.p, x) - _product(phi, pair.q, x)


def verify_decomposition_identity(
    node: DecompositionNode, phi: PhiEvaluator, x: float
) -> float:
    """Normalized residual of the one-step decomposition identity at x.

    phi is called as phi(index, x) and may be any positive evaluator;
    the identity is algebraic (insert and subtract the middle product),
    so the residual is rounding-level regardless of majorization.
    """
    if node.kind != "reduction":
        raise PreconditionError("identity check requires a reduction node")
    prod_p = _product(phi, node.pair.p, x)
    prod_q = _product(phi, node.pair.q, x)
    lhs = prod_p - prod_q
    rhs = (
        phi(node.multiplier_left, x) * _delta(phi, node.star.pair, x)
        + _product(phi, node.multiplier_right, x) * _delta(phi, node.prime.pair, x)
    )
    scale = max(abs(prod_p), abs(prod_q))
    if scale == 0.0:
        return abs(lhs - rhs)
    return abs(lhs - rhs) / scale


def hlp_check(
    phi: Callable[[float], float], pair: MajorizationPair, abs_tol: float = 1e-9
) -> bool:
    """Hardy-Littlewood-Polya: sum phi(p_j) <= sum phi(q_j) for convex phi."""
    sp = math.fsum(phi(v) for v in pair.p)
    sq = math.fsum(phi(v) for v in pair.q)
    return sp <= sq + abs_tol * (1.0 + max(abs(sp), abs(sq)))


def random_majorized_pair(
    n: int,
    seed: int,
    low: float = 0.0,
    high: float = 4.0,
    transfers: Optional[int] = None,
) -> MajorizationPair:
    """Strictly majorized pair from random Robin-Hood transfers.

    q is drawn nonincreasing on [low, high); p is produced by repeatedly
    moving mass delta <= (hi - lo)/2 from a larger entry to a smaller
    one, which preserves domination by q.  At least one transfer with
    delta > 0 is forced, so the result is strict.  Deterministic per seed.
    """
    if n < 2:
        raise PreconditionError(f"random_majorized_pair requires n >= 2, got {n}")
    rng = random.Random(seed)
    while True:
        q_vals = sorted((rng.uniform(low, high) for _ in range(n)), reverse=True)
        if q_vals[0] - q_vals[-1] > _tol(max(map(abs, q_vals))):
            break
    vals = list(q_vals)
    moved = False
    for _ in range(transfers if transfers is not None else n):
        i, j = rng.sample(range(n), 2)
        hi_idx, lo_idx = (i, j) if vals[i] >= vals[j] else (j, i)
        gap = vals[hi_idx] - vals[lo_idx]
        if gap <= 0.0:
            continue
        delta = rng.uniform(0.0, 0.5) * gap
        vals[hi_idx] -= delta
        vals[lo_idx] += delta
        moved = moved or delta > 0.0
    p = RTuple.sorted(vals)
    q = RTuple(q_vals)
    if not moved or _tuples_equal(p, q):
        vals = list(q_vals)
        delta = 0.25 * (vals[0] - vals[-1])
        vals[0] -= delta
        vals[-1] += delta
        p = RTuple.sorted(vals)
    return MajorizationPair(p, q)
