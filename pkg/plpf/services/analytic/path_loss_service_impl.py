import math

import numpy as np
from scipy import special, stats

from plpf.constants import REORDER_CLOSED_FORMS
from plpf.error_handler.exceptions import DivergenceException, DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import PlpfMoments, PlpLaw, ReorderProbability
from plpf.services.analytic.path_loss_service import PathLossService
from plpf.services.fading_service import FadingService
from plpf.util import specfun_util
from plpf.util.logging_util import log_calls
from plpf.util.quadrature_util import integrate, integrate_2d, integrate_split
from plpf.util.validation_util import validate_count, validate_non_negative, validate_positive

_REORDER_METHODS = ("auto", "quadrature", "double")


@log_calls("plpf.services")
class PathLossServiceImpl(PathLossService):
    """
    With u = c_d x^delta the i-th path loss x_i maps to a gamma(i, 1) variable, so every
    integral over the law of x_i is evaluated in u, where the integrand is smooth.
    """

    def __init__(self, fading_service: FadingService):
        self.fading_service = fading_service

    def mean_measure(self, cfg: NetworkConfig, x: float) -> float:
        x = validate_non_negative("x", x)
        return cfg.c_d * x ** cfg.delta

    def intensity(self, cfg: NetworkConfig, x: float) -> float:
        x = validate_non_negative("x", x)
        if x == 0.0:
            if cfg.unit_delta:
                return cfg.c_d
            if cfg.delta < 1.0:
                raise DivergenceException("intensity at x = 0", f"delta = {cfg.delta:g} < 1")
        return cfg.c_d * cfg.delta * x ** (cfg.delta - 1.0)

    def distance_pdf(self, cfg: NetworkConfig, i: int, r: float) -> float:
        i = validate_count("i", i)
        r = validate_positive("r", r)
        cr = cfg.c_d * r ** cfg.d
        return math.exp(-cr + math.log(cfg.d) + i * math.log(cr) - math.log(r) - special.gammaln(i))

    def plp_pdf(self, cfg: NetworkConfig, i: int, x: float) -> float:
        i = validate_count("i", i)
        x = validate_positive("x", x)
        u = cfg.c_d * x ** cfg.delta
        # density of u is gamma(i, 1); du/dx = delta u / x
        return math.exp(stats.gamma.logpdf(u, i) + math.log(cfg.delta * u / x))

    def plp_cdf_and_mean(self, cfg: NetworkConfig, i: int) -> PlpLaw:
        i = validate_count("i", i)
        c, delta = cfg.c_d, cfg.delta

        def cdf(x: float) -> float:
            if x <= 0:
                return 0.0
            return float(special.gammainc(i, c * x ** delta))

        mean = c ** (-1.0 / delta) * specfun_util.gamma_ratio(i + 1.0 / delta, i)
        return PlpLaw(i=i, cdf=cdf, mean=mean)

    def plpf_cdf(self, cfg: NetworkConfig, spec: FadingSpec, i: int, x: float, closed_form: bool = True) -> float:
        i = validate_count("i", i)
        x = validate_non_negative("x", x)
        if x == 0:
            return 0.0
        c, delta = cfg.c_d, cfg.delta
        if spec.is_degenerate:
            return float(special.gammainc(i, c * x ** delta))
        m = spec.m
        if closed_form and cfg.unit_delta:
            # c xi / m is beta-prime(i, m) distributed
            return specfun_util.regularized_incomplete_beta(i, m, c * x / (m + c * x))

        def integrand(u: float) -> float:
            loss = (u / c) ** (1.0 / delta)
            return self.fading_service.survival(spec, loss / x) * stats.gamma.pdf(u, i)

        return min(integrate_split(integrand, 0.0, float(i), f"cdf of xi_{i}"), 1.0)

    def plpf_pdf(self, cfg: NetworkConfig, spec: FadingSpec, i: int, x: float) -> float:
        i = validate_count("i", i)
        x = validate_positive("x", x)
        if spec.is_degenerate:
            return self.plp_pdf(cfg, i, x)
        c, delta, m = cfg.c_d, cfg.delta, spec.m
        if cfg.unit_delta:
            return math.exp(self._log_unit_delta_pdf(c, m, i, x))

        def integrand(u: float) -> float:
            loss = (u / c) ** (1.0 / delta)
            if loss == 0:
                return 0.0
            return self.fading_service.pdf(spec, loss / x) * loss / x ** 2 * stats.gamma.pdf(u, i)

        return integrate_split(integrand, 0.0, float(i), f"pdf of xi_{i}")

    def plpf_moments(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> PlpfMoments:
        i = validate_count("i", i)
        self._require_unit_delta(cfg, "plpf_moments")
        c = cfg.c_d
        if spec.is_degenerate:
            return PlpfMoments(mean=i / c, variance=i / c ** 2, second_moment=i * (i + 1) / c ** 2)
        m = spec.m
        if m <= 1:
            raise DivergenceException(f"E xi_{i} for nakagami m={m:g}", "m <= 1")
        mean = m * i / (c * (m - 1))
        if m <= 2:
            return PlpfMoments(mean=mean, variance=None)
        variance = m ** 2 * i * (m + i - 1) / (c ** 2 * (m - 1) ** 2 * (m - 2))
        return PlpfMoments(mean=mean, variance=variance, second_moment=variance + mean ** 2)

    def path_gain_moments(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> PlpfMoments:
        i = validate_count("i", i)
        c, delta = cfg.c_d, cfg.delta
        # 1/xi_i = f/x_i with E f = 1 and E x_i^-k = c^(k/delta) Γ(i - k/delta)/Γ(i)
        if i <= 1.0 / delta:
            raise DivergenceException(f"E[1/xi_{i}]", "i <= 1/delta")
        mean = c ** (1.0 / delta) * specfun_util.gamma_ratio(i - 1.0 / delta, i)
        if i <= 2.0 / delta:
            return PlpfMoments(mean=mean, variance=None)
        second = (self.fading_service.moment(spec, 2.0)
                  * c ** (2.0 / delta) * specfun_util.gamma_ratio(i - 2.0 / delta, i))
        return PlpfMoments(mean=mean, variance=second - mean ** 2, second_moment=second)

    def plpf_entropy(self, cfg: NetworkConfig, spec: FadingSpec, i: int, closed_form: bool = True) -> float:
        i = validate_count("i", i)
        self._require_unit_delta(cfg, "plpf_entropy")
        c = cfg.c_d
        if spec.is_degenerate:
            # Erlang(i, c)
            return (1 - i) * special.digamma(i) + special.gammaln(i) + i - math.log(c)
        m = spec.m
        if closed_form:
            # xi_i = (m/c) Y with Y beta-prime(i, m)
            h_y = (special.betaln(i, m)
                   - (i - 1) * (special.digamma(i) - special.digamma(m))
                   + (i + m) * (special.digamma(i + m) - special.digamma(m)))
            return float(h_y + math.log(m / c))

        def integrand(x: float) -> float:
            if x == 0:
                return 0.0
            log_p = self._log_unit_delta_pdf(c, m, i, x)
            return -math.exp(log_p) * log_p

        return integrate_split(integrand, 0.0, i / c, f"entropy of xi_{i}")

    def path_gain_entropy(self, cfg: NetworkConfig, spec: FadingSpec, i: int) -> float:
        i = validate_count("i", i)
        if cfg.d != 2 or not cfg.unit_delta or not spec.is_rayleigh:
            raise UnsupportedOperationException(
                "path_gain_entropy", "only the standard network in the plane (d = alpha = 2, Rayleigh) is covered")
        return (i + 1) / i + math.log(math.pi / i)

    def reorder_probability(self, i: int, j: int, method: str = "auto") -> ReorderProbability:
        i = validate_count("i", i)
        j = validate_count("j", j)
        if method not in _REORDER_METHODS:
            raise DomainException("method", method, f"one of {', '.join(_REORDER_METHODS)}")

        if method == "auto" and (i, j) in REORDER_CLOSED_FORMS:
            return ReorderProbability(i, j, REORDER_CLOSED_FORMS[(i, j)], "closed_form")

        if method == "double":
            # E[x/(2x + y)] with x ~ gamma(i), y ~ gamma(j); independent of c_d
            def joint(y: float, x: float) -> float:
                return x / (2 * x + y) * stats.gamma.pdf(x, i) * stats.gamma.pdf(y, j)

            value = integrate_2d(joint, 0.0, math.inf, 0.0, math.inf, f"P[{i},{j}] double integral")
            return ReorderProbability(i, j, value, "double")

        # B = x_i/x_(i+j) is beta(i, j) and exponential marks give P = E[B/(1+B)]
        def integrand(b: float) -> float:
            return b / (1.0 + b) * stats.beta.pdf(b, i, j)

        value = integrate(integrand, 0.0, 1.0, f"P[{i},{j}]", points=[i / (i + j)])
        return ReorderProbability(i, j, value, "quadrature")

    def conditioned_plpf_cdf(self, cfg: NetworkConfig, spec: FadingSpec, a: float, x: float,
                             closed_form: bool = True) -> float:
        a = validate_positive("a", a)
        x = validate_non_negative("x", x)
        if x == 0:
            return 0.0
        delta = cfg.delta
        if spec.is_degenerate:
            return (min(x, a) / a) ** delta
        m = spec.m
        if closed_form:
            if spec.is_rayleigh and cfg.unit_delta:
                return -(x / a) * math.expm1(-a / x)
            if spec.is_rayleigh and math.isclose(delta, 0.5, rel_tol=1e-12):
                return math.sqrt(math.pi) / 2.0 * math.sqrt(x / a) * specfun_util.erf(math.sqrt(a / x))
            k = m * a / x
            return float(special.gammaincc(m, k)
                         + k ** (-delta) * specfun_util.gamma_ratio(m + delta, m) * special.gammainc(m + delta, k))

        # position v = (loss/a)^delta is uniform on (0, 1)
        def integrand(v: float) -> float:
            return self.fading_service.survival(spec, a * v ** (1.0 / delta) / x)

        return integrate(integrand, 0.0, 1.0, "conditioned cdf of xi")

    def localize(self, cfg: NetworkConfig, spec: FadingSpec, loss: float, i_max: int = 200) -> int:
        loss = validate_positive("loss", loss)
        i_max = validate_count("i_max", i_max)
        if cfg.unit_delta:
            # f_{xi_(i+1)}/f_{xi_i} > 1 exactly when i < c_d loss, for every fading spec
            c = cfg.c_d
            k = max(1, math.ceil(c * loss))
            if k > 1 and loss <= (k - 1) / c:
                k -= 1
            elif loss > k / c:
                k += 1
            return k
        densities = [self.plpf_pdf(cfg, spec, i, loss) for i in range(1, i_max + 1)]
        return int(np.argmax(densities)) + 1

    def localize_from_gain(self, cfg: NetworkConfig, spec: FadingSpec, gain: float, i_max: int = 200) -> int:
        gain = validate_positive("gain", gain)
        if cfg.unit_delta:
            c = cfg.c_d
            k = max(1, math.ceil(c / gain))
            if k > 1 and gain >= c / (k - 1):
                k -= 1
            elif gain < c / k:
                k += 1
            return k
        return self.localize(cfg, spec, 1.0 / gain, i_max)

    @staticmethod
    def _log_unit_delta_pdf(c: float, m: float, i: int, x: float) -> float:
        return (m * math.log(m) + special.gammaln(m + i) - special.gammaln(m) - special.gammaln(i)
                + i * math.log(c) + (i - 1) * math.log(x) - (m + i) * math.log(m + c * x))

    @staticmethod
    def _require_unit_delta(cfg: NetworkConfig, operation: str) -> None:
        if not cfg.unit_delta:
            raise UnsupportedOperationException(operation, f"closed forms require delta = 1 (got {cfg.delta:g})")
