"""Result records returned by the analytic services."""
from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class GainReport:
    with_fading: float
    without_fading: float
    gain: float

    @classmethod
    def of(cls, with_fading: float, without_fading: float) -> "GainReport":
        return cls(with_fading, without_fading, with_fading / without_fading)


@dataclass(frozen=True)
class PlpLaw:
    """Law of the i-th unfaded path loss x_i: its cdf and its mean."""
    i: int
    cdf: Callable[[float], float]
    mean: float


@dataclass(frozen=True)
class PlpfMoments:
    """Mean and variance of a loss or gain. When the mean is finite but the variance is not,
    variance and second_moment are None; a divergent mean raises DivergenceException."""
    mean: float
    variance: float | None
    second_moment: float | None = None


@dataclass(frozen=True)
class ReorderProbability:
    i: int
    j: int
    probability: float
    method: str


@dataclass(frozen=True)
class RetransmissionConnectivity:
    """Nodes receiving at least one of n transmissions (block fading)."""
    n: int
    density: Callable[[float], float]
    expected_count: float


@dataclass(frozen=True)
class ReachResult:
    """p_m(s̃) with the Taylor lower bound and the first-order upper bound."""
    m: int
    s_tilde: float
    probability: float
    lower_bound: float
    upper_bound: float


@dataclass(frozen=True)
class ReachabilityThreshold:
    """
    Largest a·s keeping at least a fraction 1-eps of nodes in [0, a) connected.

    sufficient: bound from the Taylor lower bound (guaranteed to satisfy the target)
    exact: exact threshold p_m(exact) = 1 - eps
    quadratic: second-order refinement 2eps + 4eps²/3 (Rayleigh only)
    """
    m: int
    eps: float
    sufficient: float
    exact: float
    quadratic: float | None


@dataclass(frozen=True)
class SumDistanceResult:
    distance_sum: float
    report: GainReport


@dataclass(frozen=True)
class CapacityResult:
    """
    Broadcast transport capacity; all optimizer fields are None when unbounded (Δ > 1).
    """
    r_opt: float | None
    s_opt: float | None
    capacity: float | None
    bounded: bool
    lower_bound: float | None = None
    s_opt_lower_bound: float | None = None
    optimality_residual: float | None = None


@dataclass(frozen=True)
class SuperpositionBound:
    """
    Capacity when every node decodes at the rate its SNR supports (no fading).
    exact: the expected rate-distance sum itself, finite only for big_delta < 1
    """
    bound: float | None
    bounded: bool
    near_field: float
    near_field_closed_form: float
    exact: float | None = None


@dataclass(frozen=True)
class MaxDistanceResult:
    """
    cdf: Gumbel-type cdf of the largest connected path loss (atom exp(-E N̂) at 0)
    mean: E max x̂^{1/alpha} by quadrature of cdf
    bound: Jensen upper bound on mean (standard network only)
    """
    cdf: Callable[[float], float]
    expected_connected: float
    mean: float
    bound: float | None


@dataclass(frozen=True)
class ProgressResult:
    """
    x_opt: maximizer of x^{1/alpha}·P[f > s x]
    g_table: G_i for i = 1..len(g_table)
    i_opt: argmax of g_table (1-based)
    i_opt_closed: ⌈c_d/(alpha s)⌉ (standard network), None otherwise
    i_tilde: continuous approximation 1/(alpha log(1 + s/c_d)), None off the standard network
    expected_distance: E x_{i_opt}^{1/alpha}
    """
    x_opt: float
    g_table: np.ndarray
    i_opt: int
    i_opt_closed: int | None
    i_tilde: float | None
    expected_distance: float


@dataclass(frozen=True)
class RetransmissionLaw:
    """
    Nodes receiving exactly k of n packets under block fading redrawn per transmission.
    For k = 0 the count is infinite: count_finite is False and the normalized fields are None.
    """
    k: int
    n: int
    density: Callable[[float], float]
    count_finite: bool
    expected_count: float | None
    pdf: Callable[[float], float] | None
    mean: float | None
    variance: float | None
