import math

import pytest
from scipy.integrate import quad

from cmkit.errors import DomainError
from cmkit.specials import tricomi_u, tricomi_u_p

from oracles import exp_integral_e1


def test_power_law_case():
    # b = a + 1 makes (1+t)^(b-a-1) = 1, a pure Gamma integral: U = x^-a
    for a in (0.5, 1.0, 2.5):
        for x in (0.5, 1.0, 4.0):
            assert abs(tricomi_u(a, a + 1.0, x) - x ** -a) <= 1e-9 * x ** -a


def test_exponential_integral_anchor():
    # U(1, 1, x) = e^x E1(x)
    oracle = math.e * exp_integral_e1(1.0)
    assert abs(tricomi_u(1.0, 1.0, 1.0) - oracle) < 1e-9
    assert abs(oracle - 0.596347362323194) < 1e-12


def test_derivative_index_shift():
    # -dU/dx = a U(a+1, b+1, x), checked by central differences
    for a, b, x in ((1.0, 1.0, 1.0), (2.0, 2.0, 0.5), (0.7, 1.4, 2.0)):
        h = 1e-5 * x
        slope = (tricomi_u(a, b, x + h) - tricomi_u(a, b, x - h)) / (2.0 * h)
        rhs = a * tricomi_u(a + 1.0, b + 1.0, x)
        assert abs(-slope - rhs) <= 1e-5 * abs(rhs)


def test_order_p_identity_cases():
    a, b, x = 1.3, 0.8, 2.0
    assert tricomi_u_p(0.0, a, b, x) == pytest.approx(tricomi_u(a, b, x), rel=1e-12)
    # p = 1 against the Pochhammer form (a)_1 U(a+1, b+1, x)
    lhs = tricomi_u_p(1.0, a, b, x)
    rhs = a * tricomi_u(a + 1.0, b + 1.0, x)
    assert abs(lhs - rhs) <= 1e-10 * abs(rhs)


def test_order_half_against_weighted_quadrature():
    # direct quadrature of the weighted integral, independent of the
    # gamma-ratio + index-shift route
    a, b, x, p = 1.0, 1.0, 1.0, 0.5

    def f(t):
        return t ** (p + a - 1.0) * (1.0 + t) ** (b - a - 1.0) * math.exp(-x * t)

    oracle = (quad(f, 0.0, 1.0, epsrel=1e-12)[0]
              + quad(f, 1.0, math.inf, epsrel=1e-12)[0]) / math.gamma(a)
    assert abs(tricomi_u_p(p, a, b, x) - oracle) <= 1e-7 * abs(oracle)


def test_scipy_cross_check():
    from scipy.special import hyperu

    for a, b, x in ((2.0, 3.5, 1.0), (0.5, 0.5, 4.0), (3.0, 1.2, 0.3)):
        assert abs(tricomi_u(a, b, x) - hyperu(a, b, x)) <= 1e-8 * hyperu(a, b, x)


def test_domain_errors():
    with pytest.raises(DomainError):
        tricomi_u(0.0, 1.0, 1.0)
    with pytest.raises(DomainError):
        tricomi_u(1.0, 1.0, 0.0)
    with pytest.raises(DomainError):
        tricomi_u_p(-2.0, 1.0, 1.0, 1.0)


def test_positivity():
    for a in (0.4, 1.0, 6.0):
        for b in (a - 1.0, a + 0.5, 2.0):
            for x in (0.01, 1.0, 30.0):
                assert tricomi_u(a, b, x) > 0.0
