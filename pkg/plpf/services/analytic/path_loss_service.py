from abc import ABC, abstractmethod

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import PlpfMoments, PlpLaw, ReorderProbability


class PathLossService(ABC):
    """Laws of the path loss process (PLP) and of the faded process (PLPF)."""

    @abstractmethod
    def mean_measure(self, cfg: NetworkConfig, x: float) -> float:
        """Λ(x) = c_d x^delta, the expected number of nodes with path loss below x."""
        pass

    @abstractmethod
    def intensity(self, cfg: NetworkConfig, x: float) -> float:
        """λ(x) = c_d delta x^(delta-1)."""
        pass

    @abstractmethod
    def distance_pdf(self, cfg: NetworkConfig, i: int, r: float) -> float:
        """Generalized gamma density of the distance to the i-th nearest node."""
        pass

    @abstractmethod
    def plp_pdf(self, cfg: NetworkConfig, i: int, x: float) -> float:
        pass

    @abstractmethod
    def plp_cdf_and_mean(self, cfg: NetworkConfig, i: int) -> PlpLaw:
        pass

    @abstractmethod
    def plpf_cdf(self, cfg: NetworkConfig, spec: FadingSpec, i: int, x: float, closed_form: bool = True) -> float:
        """P[xi_i <= x]; closed_form=False forces the general quadrature."""
        pass

    @abstractmethod
    def plpf_pdf(self, cfg: NetworkConfig, spec: FadingSpec, i: int, x: float) -> float:
        pass

    @abstractmethod
    def plpf_moments(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> PlpfMoments:
        """Mean and variance of xi_i when delta = 1."""
        pass

    @abstractmethod
    def path_gain_moments(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> PlpfMoments:
        """Mean, variance and second moment of the path gain 1/xi_i."""
        pass

    @abstractmethod
    def plpf_entropy(self, cfg: NetworkConfig, spec: FadingSpec, i: int, closed_form: bool = True) -> float:
        """Differential entropy h(xi_i) in nats, delta = 1."""
        pass

    @abstractmethod
    def path_gain_entropy(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> float:
        """h(1/xi_i) for the standard network in the plane."""
        pass

    @abstractmethod
    def reorder_probability(self, i: int, j: int, method: str = "auto") -> ReorderProbability:
        """P[xi_i > xi_(i+j)] in the standard network."""
        pass

    @abstractmethod
    def conditioned_plpf_cdf(self, cfg: NetworkConfig, spec: FadingSpec, a: float, x: float,
                             closed_form: bool = True) -> float:
        """cdf of a faded loss when the unfaded loss has cdf (x/a)^delta on [0, a)."""
        pass

    @abstractmethod
    def localize(self, cfg: NetworkConfig, spec: FadingSpec, loss: float, i_max: int = 200) -> int:
        """ML index of the node whose faded path loss was measured."""
        pass

    @abstractmethod
    def localize_from_gain(self, cfg: NetworkConfig, spec: FadingSpec, gain: float, i_max: int = 200) -> int:
        """ML index from a measured path gain; c_d/i <= gain < c_d/(i-1) for delta = 1."""
        pass
