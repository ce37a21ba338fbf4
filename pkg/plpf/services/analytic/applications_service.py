from abc import ABC, abstractmethod

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import MaxDistanceResult, ProgressResult, RetransmissionLaw


class ApplicationsService(ABC):
    """Maximum transmission distance, probabilistic progress and retransmissions."""

    @abstractmethod
    def max_distance(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> MaxDistanceResult:
        pass

    @abstractmethod
    def probabilistic_progress(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> ProgressResult:
        pass

    @abstractmethod
    def retransmission_distribution(self, cfg: NetworkConfig, s: float, k: int, n: int,
                                    spec: FadingSpec | None = None) -> RetransmissionLaw:
        """Law of the nodes receiving exactly k of n packets; Rayleigh when spec is None."""
        pass
