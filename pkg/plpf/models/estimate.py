from dataclasses import dataclass

import numpy as np

from plpf.constants import Z_95


@dataclass(frozen=True)
class Estimate:
    """Monte Carlo point estimate with a normal-approximation 95% interval."""
    mean: float
    std_error: float
    n_trials: int
    n_flagged: int = 0

    @property
    def ci95(self) -> tuple[float, float]:
        return (self.mean - Z_95 * self.std_error, self.mean + Z_95 * self.std_error)

    def within(self, reference: float, n_se: float = 4.0) -> bool:
        """Whether reference lies within n_se standard errors of the mean."""
        return abs(self.mean - reference) <= n_se * self.std_error


@dataclass(frozen=True)
class KsResult:
    statistic: float
    n: int
    pass_at_1pct: bool
    p_value: float


@dataclass(frozen=True)
class ChiSquareResult:
    statistic: float
    dof: int
    p_value: float
    pass_at_1pct: bool


@dataclass(frozen=True)
class DistributionEstimate:
    """
    Histogram of a count-valued statistic plus Poisson diagnostics.
    dispersion_index: sample variance / sample mean (1 for a Poisson law)
    """
    estimate: Estimate
    counts: np.ndarray
    bin_edges: np.ndarray
    variance: float
    dispersion_index: float
