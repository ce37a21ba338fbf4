from abc import ABC, abstractmethod

import numpy as np

from plpf.models.fading_spec import FadingSpec


class FadingService(ABC):

    @abstractmethod
    def cdf(self, spec: FadingSpec, x):
        """F(x) = P[f <= x]; 0 for x < 0. Accepts a float or an array."""
        pass

    @abstractmethod
    def survival(self, spec: FadingSpec, x):
        """1 - F(x), evaluated without cancellation."""
        pass

    @abstractmethod
    def pdf(self, spec: FadingSpec, x):
        """Density of f at x > 0. The degenerate spec has none."""
        pass

    @abstractmethod
    def sample(self, spec: FadingSpec, rng: np.random.Generator, size: int | None = None):
        """Draw iid marks; a float when size is None."""
        pass

    @abstractmethod
    def moment(self, spec: FadingSpec, nu: float) -> float:
        """E[f^nu]. Diverges for nu <= -m under Nakagami fading."""
        pass
