"""Evaluation configuration and tolerance profiles.

All numerical routines take an immutable :class:`EvalConfig`; the default
instance is shared and safe for concurrent use.  The ``CMKIT_PROFILE``
environment variable (``fast`` or ``strict``) selects the default profile
for the command-line tools.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace

from .errors import DomainError


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and regime switches for the special-function evaluators.

    rel_tol          relative tolerance target for function values
    abs_tol          absolute floor used in convergence tests
    em_shift_N       terms summed directly before the Euler-Maclaurin tail
    em_terms         maximum number of Bernoulli correction terms
    quad_nodes       subdivision limit handed to the adaptive quadrature
    series_switch_x  Mills ratio: power series for x <= this value
    asym_switch_x    Mills ratio: asymptotic series for x >= this value
    """

    rel_tol: float = 1e-12
    abs_tol: float = 0.0
    em_shift_N: int = 16
    em_terms: int = 8
    quad_nodes: int = 200
    series_switch_x: float = 1.0
    asym_switch_x: float = 8.0

    def __post_init__(self) -> None:
        if self.rel_tol <= 0:
            raise DomainError("rel_tol must be > 0")
        if self.abs_tol < 0:
            raise DomainError("abs_tol must be >= 0")
        if self.em_shift_N < 1:
            raise DomainError("em_shift_N must be >= 1")
        if self.em_terms < 0:
            raise DomainError("em_terms must be >= 0")
        if self.quad_nodes < 1:
            raise DomainError("quad_nodes must be >= 1")
        if not self.series_switch_x < self.asym_switch_x:
            raise DomainError("series_switch_x must be < asym_switch_x")


STRICT = EvalConfig()
FAST = EvalConfig(rel_tol=1e-9, em_shift_N=12, em_terms=8, quad_nodes=100)

PROFILES = {"strict": STRICT, "fast": FAST}

DEFAULT = STRICT


def profile_from_env(default: str = "strict") -> EvalConfig:
    """Config selected by the CMKIT_PROFILE environment variable."""
    name = os.environ.get("CMKIT_PROFILE", default).strip().lower()
    if name not in PROFILES:
        raise DomainError(
            f"CMKIT_PROFILE must be one of {sorted(PROFILES)}, got {name!r}"
        )
    return PROFILES[name]


def with_overrides(config: EvalConfig, **overrides) -> EvalConfig:
    """Copy of ``config`` with the given non-None fields replaced."""
    fields = {k: v for k, v in overrides.items() if v is not None}
    return replace(config, **fields) if fields else config
