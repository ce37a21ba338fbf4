from abc import ABC, abstractmethod

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import (
    CapacityResult,
    ReachabilityThreshold,
    ReachResult,
    SumDistanceResult,
    SuperpositionBound,
)


class BroadcastService(ABC):
    """Broadcast reachability, sum-distance and transport capacity."""

    @abstractmethod
    def broadcast_reach_probability(self, m: int, s_tilde: float) -> ReachResult:
        """
        p_m(s̃): probability that a node placed uniformly in [0, a) is reached, s̃ = a s,
        delta = 1, integer m. Also returns the Taylor lower bound and the first-order upper bound.
        """
        pass

    @abstractmethod
    def epsilon_reachability_threshold(self, m: int, eps: float) -> ReachabilityThreshold:
        pass

    @abstractmethod
    def broadcast_sum_distance(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> SumDistanceResult:
        """Expected sum of distances to all nodes decoding one broadcast at threshold s."""
        pass

    @abstractmethod
    def capacity_at_rate(self, cfg: NetworkConfig, spec: FadingSpec, rate: float) -> float:
        """R·D(2^R - 1) in bit-meters/s/Hz."""
        pass

    @abstractmethod
    def broadcast_transport_capacity(self, cfg: NetworkConfig, spec: FadingSpec) -> CapacityResult:
        pass

    @abstractmethod
    def maximize_capacity_numerically(self, cfg: NetworkConfig, spec: FadingSpec) -> tuple[float, float]:
        """(rate, capacity) found by bounded 1-D maximization; big_delta < 1 only."""
        pass

    @abstractmethod
    def superposition_capacity_lower_bound(self, cfg: NetworkConfig) -> SuperpositionBound:
        pass
