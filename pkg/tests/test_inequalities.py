import math
from fractions import Fraction

import pytest

from cmkit.errors import DomainError
from cmkit.inequalities import (
    CATALOG_IDS,
    build_beta_ratio,
    build_hurwitz_ratio,
    build_mills_ratio,
    build_psi_ratio,
    build_tricomi_ratio,
    build_turan_alt_hurwitz,
    case_bernoulli_ratio,
    case_beta_ratio,
    case_conjecture_rp,
    case_euler_ratio,
    case_hurwitz_ratio,
    case_mills_ratio,
    case_psi_ratio,
    case_tricomi_ratio,
    case_turan_alt_hurwitz,
    case_turan_hurwitz,
    case_yang_tian,
    case_zeta_ratio,
    case_zeta_reciprocal_convexity,
    catalog_passed,
    evaluate_case,
    log_convexity_margins,
    log_grid,
    merge_reports,
    run_catalog,
)
from cmkit.specials import (
    alt_hurwitz_zeta,
    bernoulli_numbers,
    hurwitz_zeta,
    lambda_constant,
    mills_ratio_p,
    solve_theta0,
)

from oracles import zeta_partial


def test_psi_ratio_passes_with_expected_middle():
    case = build_psi_ratio((2.0, 2.0), (3.0, 1.0))
    report = evaluate_case(case)
    assert report.verdict
    # middle at x=1 is (2 zeta(3))^2 / (6 zeta(4) zeta(2)) ~ 0.5412
    mid = case.middle(1.0)
    expected = (2.0 * zeta_partial(3.0)) ** 2 / (
        6.0 * zeta_partial(4.0) * zeta_partial(2.0)
    )
    assert abs(mid - expected) < 1e-9
    assert 0.5 < mid < 2.0 / 3.0


def test_psi_ratio_endpoint_limits():
    case = build_psi_ratio((2.0, 2.0), (3.0, 1.0))
    # x -> inf approaches prod Gamma(p)/Gamma(q) = 1/2,
    # x -> 0+ approaches prod Gamma(p+1)/Gamma(q+1) = 2/3
    assert abs(case.middle(1e3) - 0.5) < 0.01 * 0.5
    assert abs(case.middle(1e-3) - 2.0 / 3.0) < 0.01 * (2.0 / 3.0)


def test_hurwitz_ratio_bounds_and_sharpness():
    case = build_hurwitz_ratio((2.5, 2.5), (3.0, 2.0))
    report = evaluate_case(case)
    assert report.verdict
    lower = case.lower(1.0)
    assert abs(lower - 8.0 / 9.0) < 1e-12
    mid1 = case.middle(1.0)
    assert lower < mid1 < 1.0
    # sharpness: upper bound 1 approached as x -> 0+, lower as x -> inf
    assert abs(case.middle(1e-3) - 1.0) < 0.01
    assert abs(case.middle(1e3) - lower) < 0.01 * lower


def test_hurwitz_ratio_tightened_bounds_violate():
    # tightening either sharp bound by 5 percent must fail somewhere
    case = build_hurwitz_ratio((2.5, 2.5), (3.0, 2.0))
    grid = log_grid(1e-3, 1e3, 31)
    lower = case.lower(1.0)
    assert any(case.middle(x) < 1.05 * lower for x in grid)
    assert any(case.middle(x) > 0.95 * 1.0 for x in grid)


def test_hurwitz_ratio_requires_entries_above_one():
    with pytest.raises(DomainError):
        case_hurwitz_ratio((1.5, 0.5), (2.0, 0.0))


def test_turan_hurwitz_example():
    report = case_turan_hurwitz(3.0, 2.0)
    assert report.verdict
    mid = hurwitz_zeta(2.5, 1.0) ** 2 / (hurwitz_zeta(3.0, 1.0) * hurwitz_zeta(2.0, 1.0))
    assert abs(mid - 0.9101) < 1e-3
    assert 8.0 / 9.0 < mid < 1.0


def test_turan_hurwitz_degenerate_rejected():
    with pytest.raises(DomainError):
        case_turan_hurwitz(2.0, 2.0)


def test_hurwitz_log_convexity_corollary():
    # p -> zeta(p, x) log-convex; p -> (p-1) zeta(p, x) log-concave
    ps = [1.5 + 0.25 * i for i in range(9)]
    for x in (0.5, 1.0, 10.0):
        convex = log_convexity_margins(lambda p: hurwitz_zeta(p, x), ps)
        assert all(m >= -1e-12 for m in convex)
        concave = log_convexity_margins(
            lambda p: 1.0 / ((p - 1.0) * hurwitz_zeta(p, x)), ps
        )
        assert all(m >= -1e-12 for m in concave)


def test_alt_hurwitz_log_concavity_corollary():
    # p -> zeta*(p, x) log-concave; Gamma(p)/Gamma(p - theta0) zeta*(p, x) log-convex
    t0 = solve_theta0().theta0
    ps = [1.25 + 0.25 * i for i in range(9)]
    for x in (0.5, 1.0, 10.0):
        concave = log_convexity_margins(lambda p: 1.0 / alt_hurwitz_zeta(p, x), ps)
        assert all(m >= -1e-12 for m in concave)
        convex = log_convexity_margins(
            lambda p: math.exp(math.lgamma(p) - math.lgamma(p - t0))
            * alt_hurwitz_zeta(p, x),
            ps,
        )
        assert all(m >= -1e-12 for m in convex)


def test_zeta_ratio_worked_values():
    report = case_zeta_ratio(2.0, 2.0)
    assert report.verdict
    factor = (2.0 ** 2 - 1.0) * 4.0 / (2.0 ** 4 - 1.0)
    assert abs(factor - 0.8) < 1e-12
    middle = math.pi ** 2 / 15.0
    lower = (1.0 / 3.0) * factor
    assert lower < middle < factor


def test_zeta_ratio_sweep():
    for p in (1.5, 2.0, 3.0, 5.0, 10.0):
        for r in (0.5, 1.0, 2.0):
            assert case_zeta_ratio(p, r).verdict, (p, r)


def test_bernoulli_ratio_first_terms():
    table = bernoulli_numbers(3)
    middle = abs(table[4]) / abs(table[2])
    assert middle == Fraction(1, 5)
    lower = 4.0 * 1.0 / math.pi ** 2 * (3.0 / 15.0)
    upper = 4.0 * 3.0 / math.pi ** 2 * (3.0 / 15.0)
    assert abs(lower - 0.08106) < 1e-5
    assert abs(upper - 0.24317) < 1e-5
    assert lower < float(middle) < upper


def test_bernoulli_ratio_full_range():
    report = case_bernoulli_ratio(20)
    assert report.verdict
    assert report.samples == 20
    assert report.min_slack_lower > 0 and report.min_slack_upper > 0


def test_zeta_reciprocal_convexity_paper_constants():
    report = case_zeta_reciprocal_convexity(2.0, 1.0)
    assert report.verdict
    assert abs(report.params["alpha"] - 7.0 / 6.0) < 1e-12
    assert abs(report.params["beta"] - 14.0 / 45.0) < 1e-12
    lhs = 1.0 / zeta_partial(3.0)
    rhs = (7.0 / 6.0) / zeta_partial(4.0) + (14.0 / 45.0) / zeta_partial(2.0)
    assert lhs < rhs


def test_zeta_reciprocal_convexity_sweep():
    for p in (1.5, 2.0, 4.0):
        for q in (0.5, 1.0, 3.0):
            assert case_zeta_reciprocal_convexity(p, q).verdict, (p, q)


def test_beta_ratio_bracket_computed():
    case = build_beta_ratio((1.0, 1.0), (2.0, 0.0))
    report = evaluate_case(case)
    assert report.verdict
    # all three Nielsen beta values at x=1 are known in closed form:
    # beta_0(1)=ln 2, beta_1(1)=pi^2/12, beta_2(1)=(3/2) zeta(3)
    mid = case.middle(1.0)
    expected = (math.pi ** 2 / 12.0) ** 2 / (1.5 * zeta_partial(3.0) * math.log(2.0))
    assert abs(mid - expected) < 1e-9
    assert case.lower(1.0) < mid < case.upper(1.0)
    assert abs(case.lower(1.0) - 0.5) < 1e-12


def test_beta_ratio_sharpness_both_ends():
    case = build_beta_ratio((1.0, 1.0), (2.0, 0.0))
    lam0 = lambda_constant((1.0, 1.0), (2.0, 0.0), 0.0)
    assert abs(case.middle(1e-3) - lam0) < 0.01 * lam0
    assert abs(case.middle(1e3) - lam0) < 0.01 * lam0


def test_beta_ratio_vartheta_bound_is_limit_value():
    case = build_beta_ratio((1.0, 1.0), (2.0, 0.0), vartheta=0.0)
    assert case.lower(1.0) == lambda_constant((1.0, 1.0), (2.0, 0.0), 0.0)


def test_beta_ratio_rejects_bad_tilts():
    with pytest.raises(DomainError):
        case_beta_ratio((1.0, 1.0), (2.0, 0.0), vartheta=1.5)  # >= 1 + min entry
    with pytest.raises(DomainError):
        case_beta_ratio((1.0, 1.0), (2.0, 0.0), theta=0.0)  # above theta0


def test_turan_alt_hurwitz_example():
    case = build_turan_alt_hurwitz(3.0, 1.0)
    report = evaluate_case(case)
    assert report.verdict
    mid = case.middle(1.0)
    # eta(2)^2 / (eta(3) eta(1)) ~ 1.0826
    expected = (math.pi ** 2 / 12.0) ** 2 / (
        0.75 * zeta_partial(3.0) * math.log(2.0)
    )
    assert abs(mid - expected) < 1e-9
    assert abs(mid - 1.0826) < 1e-3
    assert 1.0 < mid < case.upper(1.0)


def test_turan_alt_hurwitz_degenerate_rejected():
    with pytest.raises(DomainError):
        case_turan_alt_hurwitz(2.0, 2.0)


def test_euler_ratio_boundary_flagged():
    report = case_euler_ratio(15)
    assert report.verdict
    assert report.samples == 14  # n = 1 excluded
    assert "boundary-excluded" in report.flags


def test_euler_ratio_n2_values():
    # |E_4|/|E_2| = 5 inside both double inequalities
    assert 8.0 / math.pi ** 2 * 2.0 * 3.0 < 5.0 < 2.0 * 3.0
    assert (1.0 / 15.0) * 9.0 * 7.0 < 5.0 < 9.0 * 7.0 / math.pi ** 2


def test_tricomi_sharp_and_unit_orientation():
    sharp = build_tricomi_ratio(2.0, 2.0, (1.0, 1.0), (2.0, 0.0), variant="sharp")
    assert evaluate_case(sharp).verdict
    assert abs(sharp.params["bound"] - 0.75) < 1e-12
    unit = build_tricomi_ratio(2.0, 2.0, (1.0, 1.0), (2.0, 0.0), variant="unit")
    assert evaluate_case(unit).verdict
    mid = sharp.middle(1.0)
    assert 0.75 < mid < 1.0


def test_tricomi_reversed_orientation():
    # a - b + 1 < 0 flips both directions
    sharp = build_tricomi_ratio(1.0, 3.0, (1.0, 1.0), (2.0, 0.0), variant="sharp")
    report = evaluate_case(sharp)
    assert report.verdict
    assert sharp.upper is not None and sharp.lower is None
    unit = build_tricomi_ratio(1.0, 3.0, (1.0, 1.0), (2.0, 0.0), variant="unit")
    assert evaluate_case(unit).verdict
    mid = unit.middle(1.0)
    assert 1.0 < mid < sharp.upper(1.0)


def test_tricomi_degenerate_kernel_rejected():
    with pytest.raises(DomainError):
        case_tricomi_ratio(1.0, 2.0, (1.0, 1.0), (2.0, 0.0))


def test_mills_ratio_case():
    case = build_mills_ratio((1.0, 1.0), (2.0, 0.0))
    report = evaluate_case(case)
    assert report.verdict
    assert abs(case.lower(1.0) - 0.5) < 1e-12
    mid = case.middle(1.0)
    direct = mills_ratio_p(1.0, 1.0) ** 2 / (
        mills_ratio_p(2.0, 1.0) * mills_ratio_p(0.0, 1.0)
    )
    assert abs(mid - direct) < 1e-12
    assert 0.5 < mid < 1.0
    # sharpness of the lower bound at large x
    assert abs(case.middle(50.0) - 0.5) < 0.01 * 0.5


def test_mills_ratio_triple():
    assert case_mills_ratio((1.0, 1.0, 1.0), (2.0, 1.0, 0.0)).verdict


def test_yang_tian_first_order():
    report = case_yang_tian(1, grid=(1.0,))
    assert report.verdict
    lower = math.gamma(0.5) * math.gamma(1.5) / math.gamma(1.0) ** 2
    assert abs(lower - math.pi / 2.0) < 1e-12
    mid = mills_ratio_p(0.0, 1.0) * mills_ratio_p(2.0, 1.0) / mills_ratio_p(1.0, 1.0) ** 2
    assert math.pi / 2.0 < mid < 2.0


def test_yang_tian_range():
    assert case_yang_tian(10).verdict


def test_conjecture_case_is_flagged_and_consistent():
    report = case_conjecture_rp(grid_p=(0.0, 1.0, 2.0), grid_x=(1.0,))
    assert "conjecture" in report.flags
    assert report.verdict
    # the {0,1,2} second difference is the log of the Yang-Tian n=1
    # middle over its lower bound
    def g(p):
        return math.log(mills_ratio_p(p, 1.0)) - math.lgamma(0.5 * p + 0.5)

    margin = g(0.0) - 2.0 * g(1.0) + g(2.0)
    mid = mills_ratio_p(0.0, 1.0) * mills_ratio_p(2.0, 1.0) / mills_ratio_p(1.0, 1.0) ** 2
    assert abs(margin - math.log(mid / (math.pi / 2.0))) < 1e-9
    assert margin > 0


def test_run_catalog_selection_and_order():
    reports = run_catalog(["mills.ratio", "psi.ratio", "bernoulli.ratio"])
    assert [r.case_id for r in reports] == ["psi.ratio", "bernoulli.ratio", "mills.ratio"]
    assert run_catalog([]) == []
    with pytest.raises(DomainError):
        run_catalog(["nope.case"])


def test_catalog_passed_ignores_conjecture():
    reports = run_catalog(["mills.conjecture"])
    assert catalog_passed(reports)  # nothing gating
    assert catalog_passed([])


def test_merge_reports_aggregates():
    a = case_zeta_ratio(2.0, 1.0)
    b = case_zeta_ratio(3.0, 1.0)
    merged = merge_reports("zeta.ratio", {"sweep": True}, [a, b])
    assert merged.samples == a.samples + b.samples
    assert merged.verdict
    assert merged.min_slack_lower == min(a.min_slack_lower, b.min_slack_lower)


def test_catalog_ids_are_stable():
    assert CATALOG_IDS == (
        "psi.ratio",
        "hurwitz.ratio",
        "hurwitz.turan",
        "zeta.ratio",
        "bernoulli.ratio",
        "zeta.reciprocal-convexity",
        "beta.ratio",
        "alt-hurwitz.turan",
        "euler.ratio",
        "tricomi.ratio-sharp",
        "tricomi.ratio-unit",
        "mills.ratio",
        "mills.yang-tian",
        "mills.conjecture",
    )
