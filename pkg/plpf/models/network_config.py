import math
from dataclasses import dataclass

from plpf.util.specfun_util import gamma
from plpf.util.validation_util import validate_count, validate_positive


@dataclass(frozen=True)
class NetworkConfig:
    """
    Ambient model parameters: nodes form a unit-intensity PPP in R^d and the path loss
    over distance r is r^alpha.

    Derived quantities:
        delta = d/alpha        governs connectivity
        big_delta = (d+1)/alpha  governs broadcast sum-distance and capacity
        c_d = π^{d/2}/Γ(1+d/2)   volume of the d-dimensional unit ball
    """
    d: int
    alpha: float

    def __post_init__(self):
        validate_count("d", self.d)
        object.__setattr__(self, "alpha", validate_positive("alpha", self.alpha))

    @classmethod
    def from_delta(cls, d: int, delta: float) -> "NetworkConfig":
        return cls(d=d, alpha=d / validate_positive("delta", delta))

    @classmethod
    def from_big_delta(cls, d: int, big_delta: float) -> "NetworkConfig":
        return cls(d=d, alpha=(d + 1) / validate_positive("big_delta", big_delta))

    @property
    def delta(self) -> float:
        return self.d / self.alpha

    @property
    def big_delta(self) -> float:
        return (self.d + 1) / self.alpha

    @property
    def c_d(self) -> float:
        return math.pi ** (self.d / 2.0) / gamma(1.0 + self.d / 2.0)

    @property
    def unit_delta(self) -> bool:
        """True when the path loss exponent equals the dimension (δ = 1)."""
        return math.isclose(self.delta, 1.0, rel_tol=1e-12)


STANDARD_NETWORK = NetworkConfig(d=2, alpha=2.0)
