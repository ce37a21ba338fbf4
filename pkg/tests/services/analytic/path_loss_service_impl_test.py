"""
Unit tests for PathLossServiceImpl: laws of the ordered path losses with and without
fading, their moments and entropies, reordering probabilities and localization.
"""
import math

import numpy as np
import pytest
from scipy import integrate, special

from plpf.constants import REORDER_CLOSED_FORMS
from plpf.error_handler.exceptions import DivergenceException, DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig


# -------------------------------
# Unfaded path loss process
# -------------------------------

def test_mean_measure_and_intensity(path_loss_service, standard):
    assert path_loss_service.mean_measure(standard, 2.0) == pytest.approx(2.0 * math.pi)
    assert path_loss_service.intensity(standard, 0.7) == pytest.approx(math.pi)
    assert path_loss_service.intensity(standard, 0.0) == pytest.approx(math.pi)


def test_intensity_at_origin_diverges_for_small_delta(path_loss_service):
    cfg = NetworkConfig.from_delta(2, 0.5)
    with pytest.raises(DivergenceException):
        path_loss_service.intensity(cfg, 0.0)
    assert path_loss_service.intensity(NetworkConfig.from_delta(2, 2.0), 0.0) == 0.0


@pytest.mark.parametrize("i", [1, 3, 10])
def test_distance_and_loss_densities_integrate_to_one(path_loss_service, i):
    cfg = NetworkConfig(d=3, alpha=2.5)
    total_r, _ = integrate.quad(lambda r: path_loss_service.distance_pdf(cfg, i, r), 0, np.inf)
    total_x, _ = integrate.quad(lambda x: path_loss_service.plp_pdf(cfg, i, x), 0, np.inf, limit=200)
    assert total_r == pytest.approx(1.0, abs=1e-8)
    assert total_x == pytest.approx(1.0, abs=1e-8)


def test_first_loss_is_exponential_in_standard_network(path_loss_service, standard):
    assert path_loss_service.plp_pdf(standard, 1, 0.4) == pytest.approx(math.pi * math.exp(-0.4 * math.pi))


def test_plp_law(path_loss_service, standard):
    law = path_loss_service.plp_cdf_and_mean(standard, 3)
    assert law.mean == pytest.approx(3.0 / math.pi, rel=1e-12)
    assert law.cdf(0.0) == 0.0
    assert law.cdf(1.0) == pytest.approx(special.gammainc(3, math.pi), rel=1e-12)


# -------------------------------
# Faded path loss process
# -------------------------------

def test_first_faded_loss_under_rayleigh(path_loss_service, standard, rayleigh):
    x = 0.8
    c = math.pi
    assert path_loss_service.plpf_cdf(standard, rayleigh, 1, x) == pytest.approx(c * x / (1 + c * x), rel=1e-12)


@pytest.mark.parametrize("m, i, x", [(1.0, 1, 0.3), (2.0, 3, 0.7), (0.5, 2, 2.0), (4.5, 5, 1.2)])
def test_plpf_cdf_closed_form_matches_quadrature(path_loss_service, standard, m, i, x):
    spec = FadingSpec.nakagami(m)
    closed = path_loss_service.plpf_cdf(standard, spec, i, x)
    numeric = path_loss_service.plpf_cdf(standard, spec, i, x, closed_form=False)
    assert closed == pytest.approx(numeric, rel=1e-7, abs=1e-10)


def test_plpf_cdf_without_fading_is_plp_cdf(path_loss_service, no_fading):
    cfg = NetworkConfig.from_delta(2, 0.5)
    law = path_loss_service.plp_cdf_and_mean(cfg, 4)
    assert path_loss_service.plpf_cdf(cfg, no_fading, 4, 3.0) == pytest.approx(law.cdf(3.0), rel=1e-12)
    assert path_loss_service.plpf_cdf(cfg, no_fading, 4, 0.0) == 0.0


@pytest.mark.parametrize("x", [0.05, 0.2, 0.5, 1.0, 2.0])
def test_plpf_cdf_large_m_approaches_unfaded_law(path_loss_service, standard, x):
    faded = path_loss_service.plpf_cdf(standard, FadingSpec.nakagami(500.0), 1, x)
    assert abs(faded - (-math.expm1(-math.pi * x))) < 2e-2


def test_plpf_cdf_general_delta_is_monotone(path_loss_service, rayleigh):
    cfg = NetworkConfig.from_delta(2, 0.5)
    values = [path_loss_service.plpf_cdf(cfg, rayleigh, 2, x) for x in (0.1, 1.0, 10.0, 100.0)]
    assert all(0.0 <= v <= 1.0 for v in values)
    assert values == sorted(values)


def test_plpf_pdf_is_derivative_of_cdf(path_loss_service, standard):
    spec = FadingSpec.nakagami(2.0)
    x, h = 0.9, 1e-5
    slope = (path_loss_service.plpf_cdf(standard, spec, 3, x + h)
             - path_loss_service.plpf_cdf(standard, spec, 3, x - h)) / (2 * h)
    assert path_loss_service.plpf_pdf(standard, spec, 3, x) == pytest.approx(slope, rel=1e-6)


def test_plpf_pdf_general_delta_integrates_to_one(path_loss_service, rayleigh):
    cfg = NetworkConfig.from_delta(2, 2.0)
    total, _ = integrate.quad(lambda x: path_loss_service.plpf_pdf(cfg, rayleigh, 2, x), 0, np.inf, limit=200)
    assert total == pytest.approx(1.0, abs=1e-6)


def test_plpf_moments(path_loss_service, standard, rayleigh, no_fading):
    assert path_loss_service.plpf_moments(standard, no_fading, 2).mean == pytest.approx(2.0 / math.pi)
    moments = path_loss_service.plpf_moments(standard, FadingSpec.nakagami(3.0), 2)
    assert moments.mean == pytest.approx(3.0 / math.pi)
    assert moments.variance == pytest.approx(9.0 * 2.0 * 4.0 / (math.pi ** 2 * 4.0 * 1.0))
    assert path_loss_service.plpf_moments(standard, FadingSpec.nakagami(2.0), 1).variance is None
    with pytest.raises(DivergenceException):
        path_loss_service.plpf_moments(standard, rayleigh, 3)
    with pytest.raises(UnsupportedOperationException):
        path_loss_service.plpf_moments(NetworkConfig.from_delta(2, 0.5), no_fading, 3)


def test_path_gain_moments_standard_rayleigh(path_loss_service, standard, rayleigh):
    moments = path_loss_service.path_gain_moments(standard, rayleigh, 3)
    assert moments.mean == pytest.approx(math.pi / 2.0)
    assert moments.second_moment == pytest.approx(math.pi ** 2)
    assert moments.variance == pytest.approx(3.0 * math.pi ** 2 / 4.0)
    assert path_loss_service.path_gain_moments(standard, rayleigh, 2).variance is None
    with pytest.raises(DivergenceException):
        path_loss_service.path_gain_moments(standard, rayleigh, 1)


@pytest.mark.parametrize("m, i", [(1.0, 1), (2.0, 3), (5.0, 2)])
def test_entropy_closed_form_matches_quadrature(path_loss_service, standard, m, i):
    spec = FadingSpec.nakagami(m)
    closed = path_loss_service.plpf_entropy(standard, spec, i)
    numeric = path_loss_service.plpf_entropy(standard, spec, i, closed_form=False)
    assert closed == pytest.approx(numeric, rel=1e-7, abs=1e-9)


def test_entropy_without_fading_is_erlang(path_loss_service, standard, no_fading):
    # exponential with rate pi for i = 1
    assert path_loss_service.plpf_entropy(standard, no_fading, 1) == pytest.approx(1.0 - math.log(math.pi))


def test_path_gain_entropy(path_loss_service, standard, rayleigh):
    assert path_loss_service.path_gain_entropy(standard, rayleigh, 1) == pytest.approx(2.0 + math.log(math.pi))
    with pytest.raises(UnsupportedOperationException):
        path_loss_service.path_gain_entropy(standard, FadingSpec.nakagami(2.0), 1)


# -------------------------------
# Reordering and localization
# -------------------------------

@pytest.mark.parametrize("pair", sorted(REORDER_CLOSED_FORMS))
def test_reorder_quadrature_matches_closed_forms(path_loss_service, pair):
    i, j = pair
    result = path_loss_service.reorder_probability(i, j, method="quadrature")
    assert result.method == "quadrature"
    assert result.probability == pytest.approx(REORDER_CLOSED_FORMS[pair], abs=1e-6)
    assert path_loss_service.reorder_probability(i, j).method == "closed_form"


def test_reorder_double_integral(path_loss_service):
    result = path_loss_service.reorder_probability(1, 1, method="double")
    assert result.probability == pytest.approx(1.0 - math.log(2.0), abs=1e-6)


def test_reorder_large_index_approaches_half_from_below(path_loss_service):
    probability = path_loss_service.reorder_probability(200, 3).probability
    assert probability < 0.5
    assert abs(probability - 0.5) < 5e-3


def test_reorder_rejects_unknown_method(path_loss_service):
    with pytest.raises(DomainException):
        path_loss_service.reorder_probability(1, 1, method="simulate")


@pytest.mark.parametrize("spec", [FadingSpec.rayleigh(), FadingSpec.nakagami(2.5)])
def test_conditioned_cdf_closed_form_matches_quadrature(path_loss_service, standard, spec):
    for x in (0.2, 1.0, 3.0, 50.0):
        closed = path_loss_service.conditioned_plpf_cdf(standard, spec, 2.0, x)
        numeric = path_loss_service.conditioned_plpf_cdf(standard, spec, 2.0, x, closed_form=False)
        assert closed == pytest.approx(numeric, rel=1e-8, abs=1e-12)


def test_conditioned_cdf_erf_form_at_half_delta(path_loss_service, rayleigh):
    cfg = NetworkConfig.from_delta(2, 0.5)
    closed = path_loss_service.conditioned_plpf_cdf(cfg, rayleigh, 1.5, 0.8)
    numeric = path_loss_service.conditioned_plpf_cdf(cfg, rayleigh, 1.5, 0.8, closed_form=False)
    assert closed == pytest.approx(numeric, rel=1e-8)


def test_conditioned_cdf_without_fading(path_loss_service, standard, no_fading):
    assert path_loss_service.conditioned_plpf_cdf(standard, no_fading, 2.0, 0.5) == pytest.approx(0.25)
    assert path_loss_service.conditioned_plpf_cdf(standard, no_fading, 2.0, 5.0) == 1.0


@pytest.mark.parametrize("loss", [0.05, 0.3, 1.0, 2.2, 7.5])
def test_localize_is_argmax_of_density(path_loss_service, standard, loss):
    spec = FadingSpec.nakagami(2.0)
    densities = [path_loss_service.plpf_pdf(standard, spec, i, loss) for i in range(1, 201)]
    expected = int(np.argmax(densities)) + 1
    assert path_loss_service.localize(standard, spec, loss) == expected == max(1, math.ceil(math.pi * loss))


def test_localize_from_gain_ceiling_rule(path_loss_service, standard, rayleigh):
    for gain in (0.02, 0.5, 1.0, 3.0):
        assert path_loss_service.localize_from_gain(standard, rayleigh, gain) == math.ceil(math.pi / gain)


def test_localize_general_delta_scans_indices(path_loss_service, rayleigh):
    cfg = NetworkConfig.from_delta(2, 2.0)
    index = path_loss_service.localize(cfg, rayleigh, 1.0, i_max=20)
    densities = [path_loss_service.plpf_pdf(cfg, rayleigh, i, 1.0) for i in range(1, 21)]
    assert index == int(np.argmax(densities)) + 1
