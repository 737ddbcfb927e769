import math

import numpy as np
import pytest
from scipy import stats

from ruincapital.approx import (
    capital_asymptotic_bounds,
    capital_asymptotic_endpoints,
    cramer_constants_exp,
    cramer_ruin_exp,
    ig_params,
    ig_ruin_probability,
    var_clt,
)
from ruincapital.dist import Erlang, Exponential, MixtureExp2, Pareto
from ruincapital.errors import DomainError, ExcludedCaseError
from ruincapital.exact import ExpPair, ruin_finite_exp, ruin_ultimate_exp
from ruincapital.model import RiskModel

UNIT = RiskModel(Exponential(1.0), Exponential(1.0))


def test_var_clt_reference_values():
    # unit model, alpha=0.05, t=200: (1-c)*200 + 1.6449*sqrt(2)*sqrt(200)
    z = stats.norm.ppf(0.95)
    assert var_clt(UNIT, 0.05, 200.0, 0.0) == pytest.approx(
        200.0 + z * math.sqrt(2.0) * math.sqrt(200.0), rel=1e-12
    )
    assert var_clt(UNIT, 0.05, 200.0, 1.0) == pytest.approx(
        z * math.sqrt(400.0), rel=1e-12
    )
    assert var_clt(UNIT, 0.05, 200.0, 2.5) == 0.0


def test_ig_params_regimes():
    p = ig_params(UNIT, 10.0, 0.5)
    assert p.regime == "subcritical"
    assert p.mu == pytest.approx(2.0)
    assert p.lam == pytest.approx(10.0 / (0.25 * 2.0))
    p = ig_params(UNIT, 10.0, 1.0)
    assert p.regime == "subcritical"
    assert math.isinf(p.mu)
    p = ig_params(UNIT, 10.0, 2.0)
    assert p.regime == "supercritical"
    assert p.mu == pytest.approx(1.0)


def test_ig_closed_equals_integral():
    for u, c, t in [
        (10.0, 0.5, 50.0),
        (40.0, 0.9, 200.0),
        (40.0, 1.0, 200.0),
        (40.0, 1.3, 200.0),
        (50.0, 1.0, 1000.0),
        (5.0, 2.0, 30.0),
    ]:
        a = ig_ruin_probability(UNIT, u, c, t, "integral")
        b = ig_ruin_probability(UNIT, u, c, t, "closed")
        assert b == pytest.approx(a, abs=1e-8), (u, c, t)


def test_ig_supercritical_defective_limit():
    # above the equilibrium rate the approximating first-passage law is
    # defective: the t -> inf limit stabilizes strictly below the total
    # mass exp(-2 lam / mu) because the passage window starts at x = 1
    u, c = 30.0, 1.5
    k = ig_params(UNIT, u, c)
    v9 = ig_ruin_probability(UNIT, u, c, 1e9, "closed")
    v12 = ig_ruin_probability(UNIT, u, c, 1e12, "closed")
    assert v12 == pytest.approx(v9, rel=1e-9)
    assert 0.0 < v12 < math.exp(-2.0 * k.lam / k.mu)


def test_ig_close_to_exact_probability():
    # the approximation error at u=50, t=1000 is at the percent level
    p = ExpPair(1.0, 1.0)
    for c in (0.9, 1.0, 1.1):
        ex = ruin_finite_exp(p, 50.0, c, 1000.0)
        ig = ig_ruin_probability(UNIT, 50.0, c, 1000.0)
        assert abs(ig - ex) < 0.03


def test_ig_heavy_tailed_model_supported():
    m = RiskModel(MixtureExp2(1.0, 2.0, 2.0 / 3.0), Pareto(4.0, 0.35))
    v = ig_ruin_probability(m, 40.0, 1.0, 1000.0)
    assert 0.0 < v < 1.0


def test_ig_domain_errors():
    with pytest.raises(DomainError):
        ig_ruin_probability(UNIT, 0.0, 1.0, 10.0)
    with pytest.raises(DomainError):
        ig_ruin_probability(UNIT, 1.0, 0.0, 10.0)
    with pytest.raises(DomainError):
        ig_ruin_probability(UNIT, 1.0, 1.0, 1.0, "fancy")
    assert ig_ruin_probability(UNIT, 1.0, 1.0, 0.0) == 0.0


def test_cramer_constants_printed_formulas():
    # delta=rho=1, c=2: q=1/2, kappa=1/2, C=1/2, m=1/2, D^2=2
    k = cramer_constants_exp(ExpPair(1.0, 1.0), 2.0)
    assert k.big_c == pytest.approx(0.5)
    assert k.kappa == pytest.approx(0.5)
    assert k.m_sub is None
    assert k.m_super == pytest.approx(0.5)
    assert k.d2_super == pytest.approx(2.0)
    # subcritical branch: c=0.5, q=2, m = -1/(c(1-q)) = 2,
    # D^2 = -2q/(c^2 rho (1-q)^3) = 16
    k = cramer_constants_exp(ExpPair(1.0, 1.0), 0.5)
    assert k.m_super is None
    assert k.m_sub == pytest.approx(2.0)
    assert k.d2_sub == pytest.approx(16.0)


def test_cramer_excluded_at_equilibrium():
    with pytest.raises(ExcludedCaseError):
        cramer_constants_exp(ExpPair(1.0, 1.0), 1.0)
    # float ties from grid arithmetic fall in the excluded window too
    with pytest.raises(ExcludedCaseError):
        cramer_constants_exp(ExpPair(1.0, 1.0), 0.5 + 0.05 * 10)


def test_cramer_supercritical_t_limit_is_ultimate_ruin():
    p = ExpPair(1.0, 1.0)
    u, c = 20.0, 1.5
    val = cramer_ruin_exp(p, u, c, 1e12)
    assert val == pytest.approx(ruin_ultimate_exp(p, u, c), rel=1e-12)


def test_cramer_close_to_exact():
    p = ExpPair(1.0, 1.0)
    for c in (0.7, 1.4):
        ex = ruin_finite_exp(p, 50.0, c, 1000.0)
        ap = cramer_ruin_exp(p, 50.0, c, 1000.0)
        assert abs(ap - ex) < 0.03


def test_endpoints_unit_model():
    # u(0) = t/M + z_.05 sqrt(2) sqrt(t); u(c*) = z_.025 sqrt(2) sqrt(t)
    e = capital_asymptotic_endpoints(UNIT, 0.05, 200.0)
    z_a = stats.norm.ppf(0.95)
    z_h = stats.norm.ppf(0.975)
    assert e.u_at_zero == pytest.approx(200.0 + z_a * math.sqrt(400.0), rel=1e-12)
    assert e.u_at_cstar == pytest.approx(z_h * math.sqrt(400.0), rel=1e-12)


def test_endpoints_erlang_model():
    m = RiskModel(Erlang(1.6, 2), Exponential(0.6))
    e = capital_asymptotic_endpoints(m, 0.05, 200.0)
    # scale = D / M^{3/2} with D^2 = 1.40625, M = 0.75
    scale = math.sqrt(1.40625) / 0.75**1.5
    assert e.u_at_cstar == pytest.approx(
        stats.norm.ppf(0.975) * scale * math.sqrt(200.0), rel=1e-12
    )


def test_bounds_bracket_endpoint_and_order():
    lo, hi = capital_asymptotic_bounds(UNIT, 0.05, 200.0, 1.0)
    e = capital_asymptotic_endpoints(UNIT, 0.05, 200.0)
    assert lo < hi
    assert lo <= e.u_at_cstar <= hi
    lo0, hi0 = capital_asymptotic_bounds(UNIT, 0.05, 200.0, 0.0)
    assert lo0 <= e.u_at_zero + 1e-9
    assert e.u_at_zero <= hi0 + 1e-9
    with pytest.raises(DomainError):
        capital_asymptotic_bounds(UNIT, 0.05, 200.0, 1.5)


def test_precondition_warning_for_missing_third_moment():
    m = RiskModel(Exponential(0.8), Pareto(3.0, 0.3))
    with pytest.warns(RuntimeWarning):
        capital_asymptotic_endpoints(m, 0.05, 200.0)
