"""
Unit tests for FadingServiceImpl: distribution functions, sampling and moments of
unit-mean Nakagami-m and degenerate fading.
"""
import math

import numpy as np
import pytest
from scipy import stats

from plpf.error_handler.exceptions import DivergenceException, DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec


@pytest.mark.parametrize("x", [0.0, 0.3, 1.0, 2.5])
def test_rayleigh_cdf_is_exponential(fading_service, rayleigh, x):
    assert fading_service.cdf(rayleigh, x) == pytest.approx(-math.expm1(-x), abs=1e-15)
    assert fading_service.survival(rayleigh, x) == pytest.approx(math.exp(-x), rel=1e-14)


def test_degenerate_step(fading_service, no_fading):
    assert fading_service.cdf(no_fading, 0.999) == 0.0
    assert fading_service.cdf(no_fading, 1.0) == 1.0
    assert fading_service.survival(no_fading, 0.5) == 1.0


def test_vectorized_input_returns_array(fading_service):
    spec = FadingSpec.nakagami(2.0)
    x = np.array([0.5, 1.0, 2.0])
    values = fading_service.cdf(spec, x)
    assert isinstance(values, np.ndarray)
    np.testing.assert_allclose(values, stats.gamma.cdf(x, a=2.0, scale=0.5), rtol=1e-12)
    assert isinstance(fading_service.cdf(spec, 0.5), float)


def test_negative_arguments_have_zero_cdf(fading_service, rayleigh):
    assert fading_service.cdf(rayleigh, -1.0) == 0.0


def test_pdf(fading_service):
    spec = FadingSpec.nakagami(3.0)
    assert fading_service.pdf(spec, 0.8) == pytest.approx(stats.gamma.pdf(0.8, a=3.0, scale=1 / 3.0), rel=1e-12)


def test_pdf_unsupported_or_out_of_domain(fading_service, rayleigh, no_fading):
    with pytest.raises(UnsupportedOperationException):
        fading_service.pdf(no_fading, 1.0)
    with pytest.raises(DomainException):
        fading_service.pdf(rayleigh, 0.0)


@pytest.mark.parametrize("m, nu", [(1.0, 0.5), (1.0, 2.0), (2.0, 1.5), (5.0, -0.5), (0.5, 1.0)])
def test_moment_matches_gamma_law(fading_service, m, nu):
    reference = math.gamma(m + nu) / (math.gamma(m) * m ** nu)
    assert fading_service.moment(FadingSpec.nakagami(m), nu) == pytest.approx(reference, rel=1e-12)


def test_unit_mean_and_rayleigh_second_moment(fading_service, rayleigh):
    assert fading_service.moment(FadingSpec.nakagami(4.0), 1.0) == pytest.approx(1.0, rel=1e-14)
    assert fading_service.moment(rayleigh, 2.0) == pytest.approx(2.0, rel=1e-14)


def test_moment_divergence(fading_service, rayleigh, no_fading):
    with pytest.raises(DivergenceException):
        fading_service.moment(rayleigh, -1.0)
    assert fading_service.moment(no_fading, -5.0) == 1.0


def test_sample_shape_and_mean(fading_service):
    rng = np.random.default_rng(1)
    draws = fading_service.sample(FadingSpec.nakagami(2.0), rng, size=200000)
    assert draws.shape == (200000,)
    assert np.all(draws > 0)
    # unit mean, variance 1/m
    assert abs(draws.mean() - 1.0) < 4 * math.sqrt(0.5 / draws.size)


def test_sample_scalar_and_degenerate(fading_service, rayleigh, no_fading):
    rng = np.random.default_rng(2)
    assert isinstance(fading_service.sample(rayleigh, rng), float)
    np.testing.assert_array_equal(fading_service.sample(no_fading, rng, size=3), np.ones(3))
    assert fading_service.sample(rayleigh, rng, size=0).shape == (0,)


def test_sample_passes_ks_against_cdf(fading_service):
    spec = FadingSpec.nakagami(0.5)
    draws = fading_service.sample(spec, np.random.default_rng(3), size=5000)
    result = stats.kstest(draws, lambda x: fading_service.cdf(spec, x))
    assert result.pvalue > 0.001


@pytest.mark.parametrize("m", [1.0, 2.0, 4.5])
def test_pdf_is_central_difference_of_cdf(fading_service, m):
    spec = FadingSpec.nakagami(m)
    h = 1e-5
    for x in np.linspace(0.1, 3.0, 30):
        slope = (fading_service.cdf(spec, x + h) - fading_service.cdf(spec, x - h)) / (2.0 * h)
        assert fading_service.pdf(spec, x) == pytest.approx(slope, rel=1e-6, abs=1e-9)


def test_large_m_approaches_the_step(fading_service):
    spec = FadingSpec.nakagami(200.0)
    assert abs(fading_service.cdf(spec, 0.7) - 0.0) < 0.05
    assert abs(fading_service.cdf(spec, 1.3) - 1.0) < 0.05


@pytest.mark.parametrize("nu", [0.25, 0.5, 1.0, 1.5])
def test_moment_agrees_with_sample_mean(fading_service, nu):
    spec = FadingSpec.nakagami(2.0)
    powers = fading_service.sample(spec, np.random.default_rng(11), size=200000) ** nu
    std_error = powers.std(ddof=1) / math.sqrt(powers.size)
    assert abs(powers.mean() - fading_service.moment(spec, nu)) < 5 * std_error
