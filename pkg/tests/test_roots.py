import math

from cmkit.specials import solve_theta0


def test_t0_value():
    pair = solve_theta0()
    assert abs(pair.t0 - 2.399357) < 1e-5


def test_theta0_value():
    pair = solve_theta0()
    assert abs(pair.theta0 - (-0.439228)) < 1e-5
    assert -0.44 < pair.theta0 < -0.43


def test_root_residual():
    t = solve_theta0().t0
    residual = t * math.exp(t) - 2.0 * math.exp(t) - t - 2.0
    assert abs(residual) < 1e-12


def test_theta0_closed_form_consistency():
    pair = solve_theta0()
    et = math.exp(pair.t0)
    assert abs(pair.theta0 + pair.t0 ** 2 * et / (et + 1.0) ** 2) < 1e-14
