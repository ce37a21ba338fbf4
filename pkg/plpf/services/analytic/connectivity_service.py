from abc import ABC, abstractmethod

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import GainReport, RetransmissionConnectivity


class ConnectivityService(ABC):
    """Counts and locations of the nodes a transmitter at the origin reaches."""

    @abstractmethod
    def expected_connected(self, cfg: NetworkConfig, spec: FadingSpec, s: float, closed_form: bool = True) -> float:
        """E N̂ = c_d s^-delta E[f^delta]."""
        pass

    @abstractmethod
    def connectivity_gain(self, cfg: NetworkConfig, spec: FadingSpec) -> GainReport:
        pass

    @abstractmethod
    def connectivity_gain_minimum(self, spec: FadingSpec) -> tuple[float, float]:
        """(delta_min, gain) minimizing E[f^delta] over delta in (0, 1)."""
        pass

    @abstractmethod
    def isolation_probability(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> float:
        pass

    @abstractmethod
    def expected_connected_beyond(self, cfg: NetworkConfig, spec: FadingSpec, s: float, x: float) -> float:
        """Expected number of connected nodes whose unfaded path loss exceeds x."""
        pass

    @abstractmethod
    def expected_connected_within(self, cfg: NetworkConfig, spec: FadingSpec, s: float, a: float) -> float:
        """Expected number of connected nodes among those with unfaded path loss below a."""
        pass

    @abstractmethod
    def mean_connected_node(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> float:
        """Mean unfaded path loss of a uniformly chosen connected node."""
        pass

    @abstractmethod
    def retransmission_connectivity(self, cfg: NetworkConfig, spec: FadingSpec, s: float,
                                    n: int) -> RetransmissionConnectivity:
        """Nodes receiving at least one of n transmissions, block fading redrawn per transmission."""
        pass

    @abstractmethod
    def scheduled_retransmission_count(self, cfg: NetworkConfig, spec: FadingSpec, s1: float, n: int) -> float:
        """Nodes reached by at least one of n transmissions with thresholds s_k = s1/k."""
        pass
