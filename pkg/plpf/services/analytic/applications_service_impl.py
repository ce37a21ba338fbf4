import math

import numpy as np
from scipy import optimize, special, stats

from plpf.constants import EULER_GAMMA
from plpf.error_handler.exceptions import DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import MaxDistanceResult, ProgressResult, RetransmissionLaw
from plpf.services.analytic.applications_service import ApplicationsService
from plpf.services.analytic.connectivity_service import ConnectivityService
from plpf.services.analytic.path_loss_service import PathLossService
from plpf.services.fading_service import FadingService
from plpf.util.logging_util import log_calls
from plpf.util.quadrature_util import integrate, integrate_split
from plpf.util.validation_util import validate_count, validate_positive

_MIN_SCAN = 10


@log_calls("plpf.services")
class ApplicationsServiceImpl(ApplicationsService):
    def __init__(self, fading_service: FadingService, path_loss_service: PathLossService,
                 connectivity_service: ConnectivityService):
        self.fading_service = fading_service
        self.path_loss_service = path_loss_service
        self.connectivity_service = connectivity_service

    def max_distance(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> MaxDistanceResult:
        s = validate_positive("s", s)
        expected = self.connectivity_service.expected_connected(cfg, spec, s)

        def cdf(x: float) -> float:
            """P[max connected unfaded loss <= x]; exp(-E N̂) at 0 is the isolation atom."""
            if x < 0:
                return 0.0
            if math.isinf(x):
                return 1.0
            return math.exp(-self.connectivity_service.expected_connected_beyond(cfg, spec, s, x))

        def exceedance(r: float) -> float:
            beyond = self.connectivity_service.expected_connected_beyond(cfg, spec, s, r ** cfg.alpha)
            return -math.expm1(-beyond)

        reach = s ** (-1.0 / cfg.alpha)
        if spec.is_degenerate:
            mean = integrate(exceedance, 0.0, reach, "mean maximum distance")
        else:
            mean = integrate_split(exceedance, 0.0, reach, "mean maximum distance")

        bound = None
        if cfg.unit_delta and spec.is_rayleigh:
            # Jensen on the concave digamma function
            bound = ((special.digamma(cfg.c_d / s + 1.0) + EULER_GAMMA) / s) ** (1.0 / cfg.alpha)
        return MaxDistanceResult(cdf=cdf, expected_connected=expected, mean=mean, bound=bound)

    def probabilistic_progress(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> ProgressResult:
        s = validate_positive("s", s)
        c, alpha, d = cfg.c_d, cfg.alpha, cfg.d
        standard = cfg.unit_delta and spec.is_rayleigh

        x_opt = self._continuous_optimum(cfg, spec, s)
        i_ref = math.ceil(c / (alpha * s))
        i = np.arange(1, max(_MIN_SCAN, 10 * i_ref) + 1)
        g_table = self._progress_table(cfg, spec, s, i)
        i_opt = int(np.argmax(g_table)) + 1

        expected_distance = c ** (-1.0 / d) * math.exp(special.gammaln(i_opt + 1.0 / d) - special.gammaln(i_opt))
        return ProgressResult(
            x_opt=x_opt,
            g_table=g_table,
            i_opt=i_opt,
            i_opt_closed=i_ref if standard else None,
            i_tilde=1.0 / (alpha * math.log1p(s / c)) if standard else None,
            expected_distance=expected_distance,
        )

    def retransmission_distribution(self, cfg: NetworkConfig, s: float, k: int, n: int,
                                    spec: FadingSpec | None = None) -> RetransmissionLaw:
        s = validate_positive("s", s)
        n = validate_count("n", n)
        k = validate_count("k", k, minimum=0)
        if k > n:
            raise DomainException("k", k, f"<= n = {n}")
        spec = FadingSpec.rayleigh() if spec is None else spec
        if spec.is_degenerate:
            raise UnsupportedOperationException("retransmission_distribution",
                                                "without fading every transmission reaches the same nodes")
        c, delta = cfg.c_d, cfg.delta

        def success(x: float) -> float:
            return self.fading_service.survival(spec, s * x)

        def density(x: float) -> float:
            return self.path_loss_service.intensity(cfg, x) * stats.binom.pmf(k, n, success(x))

        if k == 0:
            return RetransmissionLaw(k=k, n=n, density=density, count_finite=False, expected_count=None,
                                     pdf=None, mean=None, variance=None)

        # v = x^delta turns λ(x) dx into c_d dv
        def weighted(power: float):
            def integrand(v: float) -> float:
                x = v ** (1.0 / delta)
                return x ** power * stats.binom.pmf(k, n, success(x))
            return integrand

        split = s ** (-delta)
        if spec.is_rayleigh and cfg.unit_delta:
            count = c / (k * s)
        else:
            count = c * integrate_split(weighted(0.0), 0.0, split, f"E N_{k}^{n}")
        mean = c * integrate_split(weighted(1.0), 0.0, split, f"E x_{k}^{n}") / count
        second = c * integrate_split(weighted(2.0), 0.0, split, f"E (x_{k}^{n})^2") / count

        def pdf(x: float) -> float:
            return density(x) / count

        return RetransmissionLaw(k=k, n=n, density=density, count_finite=True, expected_count=count, pdf=pdf,
                                 mean=mean, variance=second - mean ** 2)

    def _continuous_optimum(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> float:
        """argmax of x^(1/alpha) P[f > s x]."""
        alpha = cfg.alpha
        if spec.is_degenerate:
            return 1.0 / s
        if spec.is_rayleigh:
            return 1.0 / (alpha * s)
        result = optimize.minimize_scalar(lambda u: -u ** (1.0 / alpha) * self.fading_service.survival(spec, u),
                                          bounds=(1e-12, 4.0 + 4.0 / alpha), method="bounded",
                                          options={"xatol": 1e-12})
        return float(result.x) / s

    def _progress_table(self, cfg: NetworkConfig, spec: FadingSpec, s: float, i: np.ndarray) -> np.ndarray:
        """G_i = E[x_i^(1/alpha) P[f > s x_i]] for each index in i."""
        c, alpha, d, delta = cfg.c_d, cfg.alpha, cfg.d, cfg.delta
        if cfg.unit_delta and spec.is_rayleigh:
            log_g = (i * math.log(c) - (i + 1.0 / alpha) * math.log(s + c)
                     + special.gammaln(i + 1.0 / alpha) - special.gammaln(i))
            return np.exp(log_g)
        if spec.is_degenerate:
            # x_i^(1/alpha) = (u/c)^(1/d) with u ~ gamma(i), cut at u = c s^-delta
            log_g = -math.log(c) / d + special.gammaln(i + 1.0 / d) - special.gammaln(i)
            return np.exp(log_g) * special.gammainc(i + 1.0 / d, c * s ** (-delta))

        def entry(index: int) -> float:
            def integrand(u: float) -> float:
                x = (u / c) ** (1.0 / delta)
                return x ** (1.0 / alpha) * self.fading_service.survival(spec, s * x) * stats.gamma.pdf(u, index)
            return integrate_split(integrand, 0.0, float(index), f"G_{index}")

        return np.array([entry(int(index)) for index in i])
