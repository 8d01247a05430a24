"""Laplace-transform special functions, majorization reduction, numerical
complete-monotonicity verification, and a runnable sharp-inequality catalog.
"""

from .cm_verifier import (
    CMReport,
    FamilySpec,
    cm_check,
    converse_probe,
    default_grid,
    family_F,
    product_derivative,
    sharpness_scan,
)
from .config import DEFAULT, FAST, STRICT, EvalConfig
from .errors import (
    AsymptoticUnreliableError,
    CmkitError,
    CombinatorialBlowupError,
    ConvergenceError,
    DomainError,
    PreconditionError,
)
from .inequalities import (
    CATALOG_IDS,
    IneqCase,
    IneqReport,
    catalog_passed,
    run_catalog,
)
from .majorization import (
    DecompositionNode,
    MajorizationPair,
    RTuple,
    decompose,
    find_k,
    hlp_check,
    is_majorized,
    random_majorized_pair,
    reduce_once,
    verify_decomposition_identity,
)
from .specials import *  # noqa: F401,F403  (curated in specials.__all__)

__version__ = "0.1.0"
