from abc import ABC, abstractmethod

import numpy as np

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.realization import ConnectedSet, PlpfRealization


class GeometryService(ABC):

    @abstractmethod
    def sample_plp(self, cfg: NetworkConfig, intensity_measure_cap: float, rng: np.random.Generator,
                   truncation_eps: float | None = None) -> PlpfRealization:
        """Sample the path loss process on [0, L) with c_d L^delta = intensity_measure_cap."""
        pass

    @abstractmethod
    def attach_fading(self, plp: PlpfRealization, spec: FadingSpec, rng: np.random.Generator) -> PlpfRealization:
        """Attach iid fading marks and compute the faded path losses."""
        pass

    @abstractmethod
    def connected_set(self, real: PlpfRealization, s: float, strict: bool = True) -> ConnectedSet:
        """Nodes with xi < 1/s. Strict mode refuses thresholds the window cannot represent."""
        pass

    @abstractmethod
    def sample_conditioned(self, cfg: NetworkConfig, n: int, a: float, spec: FadingSpec,
                           rng: np.random.Generator) -> PlpfRealization:
        """n iid path losses with cdf (x/a)^delta on [0, a), with marks."""
        pass

    @abstractmethod
    def expected_missed(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float, window: float) -> float:
        """Expected number of nodes beyond the window whose faded loss is below loss_bound."""
        pass

    @abstractmethod
    def truncation_window(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float,
                          eps: float | None = None) -> float:
        """Smallest window missing at most eps expected nodes connected at loss_bound."""
        pass

    @abstractmethod
    def sample_network(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float, rng: np.random.Generator,
                       eps: float | None = None) -> PlpfRealization:
        """Window selection, PLP sampling and fading in one call."""
        pass

    @abstractmethod
    def sample_uniform_toy(self, cfg: NetworkConfig, n: int, upper: float, spec: FadingSpec,
                           rng: np.random.Generator) -> PlpfRealization:
        """n distances placed uniformly on (0, upper], for illustrations only."""
        pass

    @abstractmethod
    def realization_rows(self, real: PlpfRealization, s: float | None = None) -> list[dict]:
        """Export rows (i, r, x, f, xi, connected)."""
        pass
