"""Special-function evaluators backing the Laplace-transform families."""

from .gammafn import gamma_ratio, lambda_constant, lambda_star, log_gamma
from .mills import mills_asymptotic, mills_quadrature, mills_ratio_p, mills_series
from .roots import Theta0Pair, solve_theta0
from .sequences import BernoulliTable, EulerTable, bernoulli_numbers, euler_numbers
from .tricomi import tricomi_u, tricomi_u_p
from .zetas import (
    alt_hurwitz_zeta,
    dirichlet_beta_fn,
    dirichlet_eta,
    dirichlet_lambda,
    ext_polygamma,
    hurwitz_zeta,
    nielsen_beta_p,
    riemann_zeta,
)

__all__ = [
    "BernoulliTable",
    "EulerTable",
    "Theta0Pair",
    "alt_hurwitz_zeta",
    "bernoulli_numbers",
    "dirichlet_beta_fn",
    "dirichlet_eta",
    "dirichlet_lambda",
    "euler_numbers",
    "ext_polygamma",
    "gamma_ratio",
    "hurwitz_zeta",
    "lambda_constant",
    "lambda_star",
    "log_gamma",
    "mills_asymptotic",
    "mills_quadrature",
    "mills_ratio_p",
    "mills_series",
    "nielsen_beta_p",
    "riemann_zeta",
    "solve_theta0",
    "tricomi_u",
    "tricomi_u_p",
]
