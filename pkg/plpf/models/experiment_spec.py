from dataclasses import dataclass, field

from plpf.models.fading_spec import FadingSpec


@dataclass(frozen=True)
class ExperimentSpec:
    """
    Declarative description of one CLI experiment.

    grid: parameter name -> tuple of values (d, alpha, delta, big_delta, m, s, eps, n, k, ...).
          m values are FadingSpec instances (m = ∞ is the degenerate spec).
    """
    name: str
    grid: dict = field(default_factory=dict)
    trials: int = 10000
    seed: int = 0
    out: str | None = None

    def values(self, key: str, default=None) -> tuple:
        if key in self.grid:
            return tuple(self.grid[key])
        return tuple(default) if default is not None else ()

    def value(self, key: str, default=None):
        values = self.grid.get(key)
        return values[0] if values else default

    def fading_specs(self, default: tuple = ()) -> tuple[FadingSpec, ...]:
        return self.values("m", default)
