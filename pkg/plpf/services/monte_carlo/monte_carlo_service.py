from abc import ABC, abstractmethod
from typing import Callable

import numpy as np

from plpf.models.estimate import ChiSquareResult, DistributionEstimate, Estimate, KsResult
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.realization import PlpfRealization

Statistic = Callable[[PlpfRealization, np.random.Generator, dict], float]
Sampler = Callable[[PlpfRealization, np.random.Generator, dict], np.ndarray]


class MonteCarloService(ABC):
    """
    Trial i always draws from the child stream (base_seed, i), so every result is
    reproducible whatever the number of workers.

    params:
        loss_bound: largest faded path loss the statistic looks at; sets the sampling window
        truncation_eps: optional expected-missed-node tolerance of the window
        conditioned: optional (n, a); draw n iid losses on [0, a) instead of the PPP
    """

    @abstractmethod
    def estimate(self, statistic: Statistic, trials: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
                 params: dict, n_jobs: int | None = None) -> Estimate:
        pass

    @abstractmethod
    def collect(self, sampler: Sampler, trials: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
                params: dict, n_jobs: int | None = None) -> np.ndarray:
        """Pool the arrays returned by sampler, in trial order."""
        pass

    @abstractmethod
    def empirical_cdf_ks(self, samples, reference_cdf: Callable[[float], float]) -> KsResult:
        pass

    @abstractmethod
    def estimate_distribution(self, statistic: Statistic, trials: int, base_seed: int, cfg: NetworkConfig,
                              spec: FadingSpec, params: dict, bins=None,
                              n_jobs: int | None = None) -> DistributionEstimate:
        """Histogram of an integer-valued statistic with its dispersion index."""
        pass

    @abstractmethod
    def poisson_chi_square(self, values, mean: float) -> ChiSquareResult:
        """Chi-square goodness of fit of integer counts against Poisson(mean)."""
        pass
