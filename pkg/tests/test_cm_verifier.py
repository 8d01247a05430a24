import math

import pytest

from cmkit.cm_verifier import (
    FamilySpec,
    cm_check,
    converse_probe,
    default_grid,
    family_F,
    product_derivative,
    sharpness_scan,
)
from cmkit.errors import CombinatorialBlowupError, DomainError
from cmkit.majorization import MajorizationPair, RTuple, random_majorized_pair
from cmkit.specials import lambda_constant, solve_theta0

from oracles import zeta_partial


PAIR = MajorizationPair(RTuple((2.0, 2.0)), RTuple((3.0, 1.0)))


def test_family_dispatch_values():
    assert abs(family_F(FamilySpec.hurwitz(), 1.0, 1.0) - math.pi ** 2 / 6.0) < 1e-10
    # gaussian at x -> 0+ approaches the half-Gaussian integral
    assert abs(family_F(FamilySpec.gaussian(), 0.0, 1e-8) - math.sqrt(math.pi / 2.0)) < 1e-6
    # tricomi with b = a + 1 collapses to Gamma(a) x^-a; here a=1, b=2
    spec = FamilySpec.tricomi(1.0, 2.0)
    for x in (0.5, 2.0):
        assert abs(family_F(spec, 0.0, x) - 1.0 / x) <= 1e-9 / x


def test_family_theta_defaults():
    assert FamilySpec.hurwitz().theta_logconcave == 1.0
    assert FamilySpec.hurwitz().theta_logconvex == 0.0
    alt = FamilySpec.alternating()
    assert alt.theta_logconcave == 0.0
    assert alt.theta_logconvex == solve_theta0().theta0
    g = FamilySpec.gaussian()
    assert g.theta_logconcave == 0.0 and g.theta_logconvex is None
    t = FamilySpec.tricomi(2.0, 2.0)  # a - b + 1 = 1 > 0
    assert t.theta_logconcave == 0.0 and t.theta_logconvex == -1.0
    t2 = FamilySpec.tricomi(1.0, 3.0)  # a - b + 1 = -1 < 0
    assert t2.theta_logconcave == 0.0 and t2.theta_logconvex == -1.0
    t3 = FamilySpec.tricomi(1.0, 2.0)  # boundary kernel, pure power
    assert t3.theta_logconcave is None and t3.theta_logconvex is None


def test_family_domain_guard():
    with pytest.raises(DomainError):
        family_F(FamilySpec.hurwitz(), 0.0, 1.0)
    with pytest.raises(DomainError):
        family_F(FamilySpec.gaussian(), -1.0, 1.0)
    with pytest.raises(DomainError):
        FamilySpec.tricomi(-1.0, 2.0)
    with pytest.raises(DomainError):
        FamilySpec("hurwitz", a=1.0)


def test_product_derivative_order_zero():
    spec = FamilySpec.hurwitz()
    val = product_derivative(spec, (2.0, 2.0), 0, 1.0)
    f = family_F(spec, 2.0, 1.0)
    assert abs(val - f * f) <= 1e-12 * abs(val)


def test_product_derivative_single_factor_is_index_shift():
    # for n = 1 the m-th signed derivative is exactly F_{p+m}
    spec = FamilySpec.hurwitz()
    for m in range(0, 7):
        lhs = product_derivative(spec, (1.5,), m, 2.0)
        rhs = family_F(spec, 1.5 + m, 2.0)
        assert abs(lhs - rhs) <= 1e-11 * abs(rhs)


def test_product_derivative_leibniz_by_hand():
    # n=2, m=1, hurwitz, p=(1,1): 2 F_1 F_2 = 2 (pi^2/6)(2 zeta(3))
    spec = FamilySpec.hurwitz()
    val = product_derivative(spec, (1.0, 1.0), 1, 1.0)
    expected = 2.0 * (math.pi ** 2 / 6.0) * (2.0 * zeta_partial(3.0))
    assert abs(val - expected) <= 1e-9 * expected


def test_product_derivative_finite_difference_cross_check():
    # gaussian family: central differences at m = 1 and 2
    spec = FamilySpec.gaussian()
    tup = (1.0, 0.5)
    x, h = 2.0, 1e-4

    def prod(z):
        return product_derivative(spec, tup, 0, z)

    d1 = (prod(x + h) - prod(x - h)) / (2.0 * h)
    assert abs(-d1 - product_derivative(spec, tup, 1, x)) <= 1e-6 * abs(d1)
    d2 = (prod(x + h) - 2.0 * prod(x) + prod(x - h)) / h ** 2
    assert abs(d2 - product_derivative(spec, tup, 2, x)) <= 1e-5 * abs(d2)


def test_product_derivative_blowup_guard():
    spec = FamilySpec.gaussian()
    with pytest.raises(CombinatorialBlowupError):
        product_derivative(spec, tuple(float(i) for i in range(40)), 30, 1.0)


def test_cm_check_hurwitz_concave_side():
    lam = lambda_constant(PAIR.p, PAIR.q, 1.0)
    report = cm_check(FamilySpec.hurwitz(), PAIR, lam, +1, K=6)
    assert report.passed
    assert report.orders_checked == 6
    assert min(report.worst_margin) > 0.0


def test_cm_check_hurwitz_convex_side_unit_lambda():
    report = cm_check(FamilySpec.hurwitz(), PAIR, 1.0, -1, K=6)
    assert report.passed


def test_cm_check_inflated_lambda_fails_order_zero():
    lam = lambda_constant(PAIR.p, PAIR.q, 1.0)
    report = converse_probe(FamilySpec.hurwitz(), PAIR, +1, lam)
    assert not report.passed
    assert report.worst_margin[0] < 0.0


def test_cm_check_clips_requested_order():
    lam = lambda_constant(PAIR.p, PAIR.q, 1.0)
    report = cm_check(FamilySpec.hurwitz(), PAIR, lam, +1, K=12,
                      grid=(1.0, 2.0))
    assert report.clipped
    assert report.orders_checked == 8
    assert report.requested_orders == 12


def test_cm_check_rejects_bad_sign_and_indices():
    with pytest.raises(DomainError):
        cm_check(FamilySpec.hurwitz(), PAIR, 0.5, 2)
    bad = MajorizationPair(RTuple((0.5, 0.5)), RTuple((1.0, 0.0)))
    with pytest.raises(DomainError):
        cm_check(FamilySpec.hurwitz(), bad, 0.5, +1)  # q contains 0


def test_sharpness_scan_hurwitz_family():
    pair = MajorizationPair(RTuple((2.5, 2.5)), RTuple((3.0, 2.0)))
    small, large = sharpness_scan(FamilySpec.hurwitz(), pair, 1e-3, 1e3)
    lam1 = lambda_constant(pair.p, pair.q, 1.0)  # ~0.8836
    lam0 = lambda_constant(pair.p, pair.q, 0.0)  # ~0.9204
    assert abs(large - lam1) <= 0.01 * lam1
    assert abs(small - lam0) <= 0.01 * lam0


def test_sharpness_scan_gaussian_large_x_limit():
    pair = MajorizationPair(RTuple((1.0, 1.0)), RTuple((2.0, 0.0)))
    _, large = sharpness_scan(FamilySpec.gaussian(), pair, 0.5, 50.0)
    lam0 = lambda_constant(pair.p, pair.q, 0.0)
    assert abs(large - lam0) <= 0.01 * lam0


def test_default_grid_shape():
    grid = default_grid()
    assert len(grid) == 25
    assert abs(grid[0] - 0.125) < 1e-12
    assert abs(grid[-1] - 64.0) < 1e-9
    assert all(a < b for a, b in zip(grid, grid[1:]))


def test_cm_check_all_families_random_pairs():
    theta0 = solve_theta0().theta0
    configs = [
        (FamilySpec.hurwitz(), 1.0, +1),
        (FamilySpec.alternating(), theta0, -1),
        (FamilySpec.tricomi(2.0, 2.0), 0.0, +1),
        (FamilySpec.gaussian(), 0.0, +1),
    ]
    grid = default_grid(count=9)
    for spec, theta, sign in configs:
        pair = random_majorized_pair(2, seed=11, low=0.5, high=3.0)
        lam = lambda_constant(pair.p, pair.q, theta)
        report = cm_check(spec, pair, lam, sign, grid=grid, K=4)
        assert report.passed, (spec.kind, report.worst_margin)


def test_report_to_dict_fields():
    lam = lambda_constant(PAIR.p, PAIR.q, 1.0)
    report = cm_check(FamilySpec.hurwitz(), PAIR, lam, +1, K=2, grid=(1.0,))
    doc = report.to_dict()
    assert doc["family"] == "hurwitz"
    assert doc["lambda"] == lam
    assert doc["passed"] is True
    assert len(doc["worst_margin"]) == 3
