"""
Sampling of the path loss process (PLP) and its faded counterpart (PLPF).

By the mapping theorem the path losses x_i = r_i^alpha of a unit-intensity PPP in R^d
form a 1-D Poisson process with mean measure c_d x^delta. On a window [0, L) it is
sampled by inversion: draw the Poisson count, place the points iid with cdf
(x/L)^delta and sort them.
"""
import dataclasses

import numpy as np
from scipy import optimize

from plpf.configuration.config import Config
from plpf.error_handler.exceptions import StateException, TruncationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.realization import ConnectedSet, PlpfRealization
from plpf.services.fading_service import FadingService
from plpf.services.geometry_service import GeometryService
from plpf.util.logging_util import log_calls
from plpf.util.measure_util import nakagami_tail_measure
from plpf.util.validation_util import validate_count, validate_positive

# Relative slack when comparing a window's missed-node count against its own tolerance
_WINDOW_SLACK = 1e-6
_MAX_DOUBLINGS = 200


@log_calls("plpf.services")
class GeometryServiceImpl(GeometryService):
    def __init__(self, fading_service: FadingService):
        self.fading_service = fading_service

    def sample_plp(self, cfg: NetworkConfig, intensity_measure_cap: float, rng: np.random.Generator,
                   truncation_eps: float | None = None) -> PlpfRealization:
        cap = validate_positive("intensity_measure_cap", intensity_measure_cap)
        eps = Config.TRUNCATION_EPS if truncation_eps is None else validate_positive("truncation_eps", truncation_eps)
        window = (cap / cfg.c_d) ** (1.0 / cfg.delta)

        count = rng.poisson(cap)
        # 1 - U lies in (0, 1], so every point is strictly positive
        u = 1.0 - rng.random(count)
        x = np.sort(window * u ** (1.0 / cfg.delta))
        r = x ** (1.0 / cfg.alpha)
        return PlpfRealization(config=cfg, r=r, x=x, window_loss_bound=window, truncation_eps=eps)

    def attach_fading(self, plp: PlpfRealization, spec: FadingSpec, rng: np.random.Generator) -> PlpfRealization:
        if plp.has_marks:
            raise StateException("Fading marks are already attached to this realization.")
        f = self.fading_service.sample(spec, rng, size=plp.size)
        return dataclasses.replace(plp, f=f, xi=plp.x / f, fading=spec)

    def connected_set(self, real: PlpfRealization, s: float, strict: bool = True) -> ConnectedSet:
        s = validate_positive("s", s)
        if not real.has_marks:
            raise StateException("Attach fading marks before filtering connected nodes.")
        loss_bound = 1.0 / s
        if strict and not real.complete:
            missed = self.expected_missed(real.config, real.fading, loss_bound, real.window_loss_bound)
            if missed > real.truncation_eps * (1.0 + _WINDOW_SLACK):
                raise TruncationException(loss_bound, real.window_loss_bound, missed, real.truncation_eps)

        indices = np.flatnonzero(real.xi < loss_bound)
        return ConnectedSet(s=s, indices=indices, x_hat=real.x[indices], xi_hat=real.xi[indices])

    def sample_conditioned(self, cfg: NetworkConfig, n: int, a: float, spec: FadingSpec,
                           rng: np.random.Generator) -> PlpfRealization:
        n = validate_count("n", n)
        a = validate_positive("a", a)
        u = 1.0 - rng.random(n)
        x = np.sort(a * u ** (1.0 / cfg.delta))
        plp = PlpfRealization(config=cfg, r=x ** (1.0 / cfg.alpha), x=x, window_loss_bound=a,
                              truncation_eps=0.0, complete=True)
        return self.attach_fading(plp, spec, rng)

    def expected_missed(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float, window: float) -> float:
        t = validate_positive("loss_bound", loss_bound)
        window = validate_positive("window", window)
        delta = cfg.delta
        if spec.is_degenerate:
            return cfg.c_d * max(t ** delta - window ** delta, 0.0)
        return cfg.c_d * t ** delta * nakagami_tail_measure(spec.m, delta, window / t)

    def truncation_window(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float,
                          eps: float | None = None) -> float:
        t = validate_positive("loss_bound", loss_bound)
        eps = Config.TRUNCATION_EPS if eps is None else validate_positive("eps", eps)
        if spec.is_degenerate:
            return t

        scale = cfg.c_d * t ** cfg.delta

        def excess(w: float) -> float:
            return scale * nakagami_tail_measure(spec.m, cfg.delta, w) - eps

        if excess(1.0) <= 0:
            return t
        lo, hi = 1.0, 2.0
        for _ in range(_MAX_DOUBLINGS):
            if excess(hi) <= 0:
                break
            lo, hi = hi, 2.0 * hi
        return t * optimize.brentq(excess, lo, hi, xtol=1e-12, rtol=1e-12)

    def sample_network(self, cfg: NetworkConfig, spec: FadingSpec, loss_bound: float, rng: np.random.Generator,
                       eps: float | None = None) -> PlpfRealization:
        eps = Config.TRUNCATION_EPS if eps is None else validate_positive("eps", eps)
        window = self.truncation_window(cfg, spec, loss_bound, eps)
        plp = self.sample_plp(cfg, cfg.c_d * window ** cfg.delta, rng, truncation_eps=eps)
        return self.attach_fading(plp, spec, rng)

    def sample_uniform_toy(self, cfg: NetworkConfig, n: int, upper: float, spec: FadingSpec,
                           rng: np.random.Generator) -> PlpfRealization:
        n = validate_count("n", n)
        upper = validate_positive("upper", upper)
        r = np.sort(upper * (1.0 - rng.random(n)))
        plp = PlpfRealization(config=cfg, r=r, x=r ** cfg.alpha, window_loss_bound=upper ** cfg.alpha,
                              truncation_eps=0.0, complete=True)
        return self.attach_fading(plp, spec, rng)

    def realization_rows(self, real: PlpfRealization, s: float | None = None) -> list[dict]:
        connected = None
        if s is not None:
            s = validate_positive("s", s)
            losses = real.xi if real.has_marks else real.x
            connected = losses < 1.0 / s

        rows = []
        for idx in range(real.size):
            rows.append({
                "i": idx + 1,
                "r": float(real.r[idx]),
                "x": float(real.x[idx]),
                "f": float(real.f[idx]) if real.has_marks else None,
                "xi": float(real.xi[idx]) if real.has_marks else None,
                "connected": None if connected is None else int(connected[idx]),
            })
        return rows

