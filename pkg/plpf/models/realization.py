from dataclasses import dataclass

import numpy as np

from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig


@dataclass(frozen=True, eq=False)
class PlpfRealization:
    """
    One sampled network seen from the origin.

    r: ordered distances r_1 < r_2 < ...
    x: path losses x_i = r_i^alpha (the PLP)
    f: iid fading marks, None until fading is attached
    xi: faded path losses xi_i = x_i/f_i (the PLPF), None until fading is attached
    window_loss_bound: largest path loss represented by the sample
    complete: True when the sample holds the whole node population (conditioned or toy
              samples), so no window truncation applies
    """
    config: NetworkConfig
    r: np.ndarray
    x: np.ndarray
    window_loss_bound: float
    truncation_eps: float
    f: np.ndarray | None = None
    xi: np.ndarray | None = None
    fading: FadingSpec | None = None
    complete: bool = False

    @property
    def size(self) -> int:
        return int(self.x.size)

    @property
    def has_marks(self) -> bool:
        return self.f is not None


@dataclass(frozen=True, eq=False)
class ConnectedSet:
    """
    Nodes whose faded path loss is below 1/s.

    indices: positions in the originating realization (ascending, so x_hat follows x order,
             while xi_hat is unordered in general)
    """
    s: float
    indices: np.ndarray
    x_hat: np.ndarray
    xi_hat: np.ndarray

    @property
    def count(self) -> int:
        return int(self.indices.size)
