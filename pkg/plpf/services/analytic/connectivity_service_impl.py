import math

from scipy import optimize

from plpf.error_handler.exceptions import UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import GainReport, RetransmissionConnectivity
from plpf.services.analytic.connectivity_service import ConnectivityService
from plpf.services.analytic.path_loss_service import PathLossService
from plpf.services.fading_service import FadingService
from plpf.util import specfun_util
from plpf.util.logging_util import log_calls
from plpf.util.measure_util import nakagami_tail_measure
from plpf.util.quadrature_util import integrate_split
from plpf.util.validation_util import validate_count, validate_non_negative, validate_positive


@log_calls("plpf.services")
class ConnectivityServiceImpl(ConnectivityService):
    """
    A node at path loss x connects when its mark exceeds s x, so connected nodes form a
    Poisson process of density (1 - F(s x)) λ(x). Integrals over that density use
    v = (s x)^delta, which turns λ(x) dx into c_d s^-delta dv.
    """

    def __init__(self, fading_service: FadingService, path_loss_service: PathLossService):
        self.fading_service = fading_service
        self.path_loss_service = path_loss_service

    def expected_connected(self, cfg: NetworkConfig, spec: FadingSpec, s: float, closed_form: bool = True) -> float:
        s = validate_positive("s", s)
        scale = cfg.c_d * s ** (-cfg.delta)
        if closed_form or spec.is_degenerate:
            return scale * self.fading_service.moment(spec, cfg.delta)

        def integrand(v: float) -> float:
            return self.fading_service.survival(spec, v ** (1.0 / cfg.delta))

        return scale * integrate_split(integrand, 0.0, 1.0, "expected connected nodes")

    def connectivity_gain(self, cfg: NetworkConfig, spec: FadingSpec) -> GainReport:
        return GainReport.of(self.expected_connected(cfg, spec, 1.0), cfg.c_d)

    def connectivity_gain_minimum(self, spec: FadingSpec) -> tuple[float, float]:
        if spec.is_degenerate:
            raise UnsupportedOperationException("connectivity_gain_minimum", "the gain is 1 for every delta without fading")
        result = optimize.minimize_scalar(lambda d: self.fading_service.moment(spec, d), bounds=(1e-9, 1.0),
                                          method="bounded", options={"xatol": 1e-10})
        return float(result.x), float(result.fun)

    def isolation_probability(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> float:
        return math.exp(-self.expected_connected(cfg, spec, s))

    def expected_connected_beyond(self, cfg: NetworkConfig, spec: FadingSpec, s: float, x: float) -> float:
        s = validate_positive("s", s)
        x = validate_non_negative("x", x)
        if spec.is_degenerate:
            return cfg.c_d * max(s ** (-cfg.delta) - x ** cfg.delta, 0.0)
        return cfg.c_d * s ** (-cfg.delta) * nakagami_tail_measure(spec.m, cfg.delta, s * x)

    def expected_connected_within(self, cfg: NetworkConfig, spec: FadingSpec, s: float, a: float) -> float:
        s = validate_positive("s", s)
        a = validate_positive("a", a)
        return cfg.c_d * a ** cfg.delta * self.path_loss_service.conditioned_plpf_cdf(cfg, spec, a, 1.0 / s)

    def mean_connected_node(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> float:
        s = validate_positive("s", s)
        delta = cfg.delta
        ratio = self.fading_service.moment(spec, delta + 1.0) / self.fading_service.moment(spec, delta)
        return delta / ((delta + 1.0) * s) * ratio

    def retransmission_connectivity(self, cfg: NetworkConfig, spec: FadingSpec, s: float,
                                    n: int) -> RetransmissionConnectivity:
        s = validate_positive("s", s)
        n = validate_count("n", n)
        c, delta = cfg.c_d, cfg.delta

        def density(x: float) -> float:
            return (1.0 - self.fading_service.cdf(spec, s * x) ** n) * self.path_loss_service.intensity(cfg, x)

        if spec.is_degenerate:
            count = c * s ** (-delta)
        elif spec.is_rayleigh and cfg.unit_delta:
            count = c / s * specfun_util.harmonic_number(n)
        else:
            def integrand(v: float) -> float:
                return self._miss_complement(n * [v ** (1.0 / delta)], spec)

            count = c * s ** (-delta) * integrate_split(integrand, 0.0, 1.0, f"nodes reached in {n} transmissions")
        return RetransmissionConnectivity(n=n, density=density, expected_count=float(count))

    def scheduled_retransmission_count(self, cfg: NetworkConfig, spec: FadingSpec, s1: float, n: int) -> float:
        s1 = validate_positive("s1", s1)
        n = validate_count("n", n)
        c, delta = cfg.c_d, cfg.delta
        if spec.is_degenerate:
            return c * (n / s1) ** delta

        def integrand(v: float) -> float:
            u = v ** (1.0 / delta)
            return self._miss_complement([u / k for k in range(1, n + 1)], spec)

        return c * s1 ** (-delta) * integrate_split(integrand, 0.0, float(n) ** delta,
                                                   f"nodes reached by a {n}-step threshold schedule")

    def _miss_complement(self, thresholds: list[float], spec: FadingSpec) -> float:
        """1 - Π_k F(t_k), accumulated in log space so it stays accurate near 0 and 1."""
        log_miss = 0.0
        for t in thresholds:
            f = self.fading_service.cdf(spec, t)
            if f <= 0.0:
                return 1.0
            log_miss += math.log(f)
        return -math.expm1(log_miss)
