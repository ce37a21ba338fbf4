"""
Per-trial statistics for MonteCarloService.estimate / collect.

Each factory returns a callable (realization, rng, params) -> value. Statistics that filter
connected nodes go through GeometryService.connected_set so the window truncation check applies.
"""
import math

import numpy as np

from plpf.models.fading_spec import FadingSpec
from plpf.services.fading_service import FadingService
from plpf.services.geometry_service import GeometryService


def connected_count(geometry_service: GeometryService, s: float):
    def statistic(real, rng, params) -> float:
        return float(geometry_service.connected_set(real, s).count)
    return statistic


def connected_distance_sum(geometry_service: GeometryService, s: float):
    """Σ over connected nodes of the unfaded distance x̂^(1/alpha)."""
    def statistic(real, rng, params) -> float:
        connected = geometry_service.connected_set(real, s)
        return float(np.sum(connected.x_hat ** (1.0 / real.config.alpha)))
    return statistic


def max_connected_distance(geometry_service: GeometryService, s: float):
    """Largest connected distance, 0 for an isolated origin."""
    def statistic(real, rng, params) -> float:
        connected = geometry_service.connected_set(real, s)
        if connected.count == 0:
            return 0.0
        return float(connected.x_hat.max() ** (1.0 / real.config.alpha))
    return statistic


def crossing_fraction(a: float):
    """
    Nodes with x < a whose faded loss lands beyond a, divided by Λ(a) = c_d a^delta.
    Its mean is the probability that a node inside [0, a) leaves it.
    """
    def statistic(real, rng, params) -> float:
        inside = real.x < a
        crossers = np.count_nonzero(real.xi[inside] > a)
        return crossers / (real.config.c_d * a ** real.config.delta)
    return statistic


def reorder_indicator(i: int, j: int):
    """1 when the i-th nearest node has a larger faded loss than the (i+j)-th, nan if either is missing."""
    def statistic(real, rng, params) -> float:
        if real.size < i + j:
            return math.nan
        return float(real.xi[i - 1] > real.xi[i + j - 1])
    return statistic


def retransmission_count(fading_service: FadingService, spec: FadingSpec, s: float, k: int, n: int):
    """Nodes receiving exactly k of n transmissions, with the fading redrawn for every transmission."""
    def statistic(real, rng, params) -> float:
        if real.size == 0:
            return 0.0
        marks = np.asarray(fading_service.sample(spec, rng, size=n * real.size)).reshape(n, real.size)
        received = np.count_nonzero(marks > s * real.x, axis=0)
        return float(np.count_nonzero(received == k))
    return statistic


def faded_losses_below(limit: float):
    """Sampler returning every faded path loss below limit (for pooled KS tests)."""
    def sampler(real, rng, params) -> np.ndarray:
        return real.xi[real.xi < limit]
    return sampler
