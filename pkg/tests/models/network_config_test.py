import math

import pytest

from plpf.error_handler.exceptions import DomainException
from plpf.models.network_config import STANDARD_NETWORK, NetworkConfig


def test_standard_network():
    assert STANDARD_NETWORK.delta == 1.0
    assert STANDARD_NETWORK.big_delta == 1.5
    assert STANDARD_NETWORK.c_d == pytest.approx(math.pi, rel=1e-15)
    assert STANDARD_NETWORK.unit_delta


@pytest.mark.parametrize("d, volume", [(1, 2.0), (2, math.pi), (3, 4.0 * math.pi / 3.0)])
def test_unit_ball_volume(d, volume):
    assert NetworkConfig(d=d, alpha=2.0).c_d == pytest.approx(volume, rel=1e-14)


def test_constructors_from_exponent_ratios():
    cfg = NetworkConfig.from_delta(2, 0.5)
    assert cfg.alpha == 4.0
    assert cfg.big_delta == 0.75
    cfg = NetworkConfig.from_big_delta(2, 1.0)
    assert cfg.alpha == 3.0
    assert cfg.delta == pytest.approx(2.0 / 3.0)


@pytest.mark.parametrize("d, alpha", [(0, 2.0), (2, 0.0), (2, -1.0), (2.5, 2.0), (2, math.inf)])
def test_invalid_parameters_raise(d, alpha):
    with pytest.raises(DomainException):
        NetworkConfig(d=d, alpha=alpha)
