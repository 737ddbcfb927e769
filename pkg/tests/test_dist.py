import math

import numpy as np
import pytest
from scipy import integrate

from ruincapital.dist import (
    Erlang,
    Exponential,
    Kummer,
    MixtureExp2,
    Pareto,
    cdf,
    distribution_from_config,
    has_bounded_density,
    is_heavy_tailed,
    mgf,
    mgf_abscissa,
    moments,
    pdf,
    sample,
)
from ruincapital.errors import DomainError, MomentUndefinedError, UnsupportedDistributionError

# the Kummer family is moments-only and is covered separately
DENSITY_LAWS = [
    Exponential(0.8),
    Erlang(1.6, 2),
    MixtureExp2(1.0, 2.0, 2.0 / 3.0),
    Pareto(4.0, 0.35),
]


@pytest.mark.parametrize("d", DENSITY_LAWS, ids=lambda d: type(d).__name__)
def test_pdf_integrates_to_one(d):
    val, err = integrate.quad(lambda x: pdf(d, x), 0.0, np.inf, limit=200)
    assert val == pytest.approx(1.0, abs=max(1e-9, 10 * err))


@pytest.mark.parametrize("d", DENSITY_LAWS, ids=lambda d: type(d).__name__)
def test_cdf_is_integral_of_pdf(d):
    for x in (0.3, 1.0, 4.0):
        val, _ = integrate.quad(lambda s: pdf(d, s), 0.0, x, limit=200)
        assert cdf(d, x) == pytest.approx(val, abs=1e-9)


@pytest.mark.parametrize("d", DENSITY_LAWS, ids=lambda d: type(d).__name__)
def test_moments_match_quadrature(d):
    m = moments(d)
    m1, _ = integrate.quad(lambda x: x * pdf(d, x), 0.0, np.inf, limit=400)
    m2, _ = integrate.quad(lambda x: x * x * pdf(d, x), 0.0, np.inf, limit=400)
    assert m.mean == pytest.approx(m1, rel=1e-7)
    assert m.variance == pytest.approx(m2 - m1 * m1, rel=1e-6)


def test_third_moment_flags():
    assert moments(Pareto(3.0, 0.3)).third_moment is None
    assert moments(Pareto(2.5, 0.35)).third_moment is None
    assert moments(Pareto(4.0, 0.35)).third_moment is not None
    assert moments(Kummer(5.0, 7.0)).third_moment is not None
    assert moments(Kummer(5.0, 5.0)).third_moment is None


def test_undefined_low_moments_raise():
    with pytest.raises(MomentUndefinedError):
        moments(Pareto(1.5, 1.0))
    with pytest.raises(MomentUndefinedError):
        moments(Kummer(5.0, 3.0))


@pytest.mark.parametrize("d", DENSITY_LAWS, ids=lambda d: type(d).__name__)
def test_sample_mean_and_variance(d):
    rng = np.random.Generator(np.random.Philox(key=42))
    x = sample(d, rng, 200_000)
    m = moments(d)
    assert np.all(x > 0.0)
    assert float(np.mean(x)) == pytest.approx(m.mean, abs=5.0 * math.sqrt(m.variance / x.size))
    assert float(np.var(x)) == pytest.approx(m.variance, rel=0.05)


def test_sample_scalar_form():
    rng = np.random.Generator(np.random.Philox(key=0))
    v = sample(Exponential(1.0), rng)
    assert np.isscalar(v) or np.ndim(v) == 0


def test_mixture_sample_matches_cdf():
    d = MixtureExp2(1.0, 2.0, 2.0 / 3.0)
    rng = np.random.Generator(np.random.Philox(key=7))
    x = sample(d, rng, 100_000)
    for q in (0.5, 1.0, 2.0):
        emp = float(np.mean(x <= q))
        assert emp == pytest.approx(cdf(d, q), abs=0.006)


def test_mgf_light_tailed():
    d = Exponential(2.0)
    assert mgf_abscissa(d) == pytest.approx(2.0)
    assert mgf(d, 1.0) == pytest.approx(2.0)
    e = Erlang(3.0, 2)
    assert mgf(e, 1.0) == pytest.approx((3.0 / 2.0) ** 2)
    mix = MixtureExp2(1.0, 2.0, 0.25)
    assert mgf_abscissa(mix) == pytest.approx(1.0)
    assert mgf(mix, 0.5) == pytest.approx(0.25 * 2.0 + 0.75 * (2.0 / 1.5))


def test_heavy_tail_flags():
    assert is_heavy_tailed(Pareto(4.0, 0.4))
    assert is_heavy_tailed(Kummer(5.0, 5.0))
    assert not is_heavy_tailed(Exponential(1.0))
    assert not is_heavy_tailed(Erlang(1.0, 3))
    assert not is_heavy_tailed(MixtureExp2(1.0, 2.0, 0.5))


def test_heavy_tail_mgf_diverges():
    assert mgf(Pareto(4.0, 0.4), 0.1) == math.inf
    assert mgf(Kummer(5.0, 5.0), 0.1) == math.inf
    assert mgf(Exponential(1.0), 1.5) == math.inf


def test_kummer_is_moments_only():
    d = Kummer(5.0, 7.0)
    rng = np.random.Generator(np.random.Philox(key=1))
    with pytest.raises(UnsupportedDistributionError):
        pdf(d, 1.0)
    with pytest.raises(UnsupportedDistributionError):
        cdf(d, 1.0)
    with pytest.raises(UnsupportedDistributionError):
        sample(d, rng, 10)
    # gamma-ratio moments: E X^j = (l/k)^j Gamma(k/2+j) Gamma(l/2-j) /
    # (Gamma(k/2) Gamma(l/2)), here k=5, l=7
    m = moments(d)
    assert m.mean == pytest.approx(7.0 / 5.0, rel=1e-12)
    assert m.variance == pytest.approx(
        (7.0 / 5.0) ** 2 * (3.5 / 1.5) - m.mean**2, rel=1e-12
    )


def test_bounded_density_flags():
    assert has_bounded_density(Exponential(1.0))
    assert has_bounded_density(Pareto(4.0, 0.4))


def test_config_round_trip():
    d = distribution_from_config({"family": "erlang", "rate": 1.6, "shape": 2})
    assert d == Erlang(1.6, 2)
    d = distribution_from_config(
        {"family": "mixture2", "rate1": 1.0, "rate2": 2.0, "weight": 0.5}
    )
    assert d == MixtureExp2(1.0, 2.0, 0.5)
    d = distribution_from_config({"family": "pareto", "shape": 4.0, "scale": 0.4})
    assert d == Pareto(4.0, 0.4)
    d = distribution_from_config({"family": "kummer", "k": 5.0, "l": 5.0})
    assert d == Kummer(5.0, 5.0)
    with pytest.raises(DomainError):
        distribution_from_config({"family": "cauchy"})
    with pytest.raises(DomainError):
        distribution_from_config({"family": "exponential"})
