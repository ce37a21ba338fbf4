import math

from scipy import optimize, special

from plpf.constants import LN2
from plpf.error_handler.exceptions import DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.results import (
    CapacityResult,
    GainReport,
    ReachabilityThreshold,
    ReachResult,
    SumDistanceResult,
    SuperpositionBound,
)
from plpf.services.analytic.broadcast_service import BroadcastService
from plpf.services.fading_service import FadingService
from plpf.util import specfun_util
from plpf.util.logging_util import log_calls
from plpf.util.quadrature_util import integrate, integrate_split
from plpf.util.validation_util import validate_positive, validate_probability_open


def _integer_m(m) -> int:
    if isinstance(m, bool) or not isinstance(m, (int, float)) or not math.isfinite(m):
        raise DomainException("m", m, "a positive integer")
    if not float(m).is_integer():
        raise UnsupportedOperationException("reach probability", f"m must be an integer (got {m:g})")
    if m < 1:
        raise DomainException("m", m, "a positive integer")
    return int(m)


@log_calls("plpf.services")
class BroadcastServiceImpl(BroadcastService):
    def __init__(self, fading_service: FadingService):
        self.fading_service = fading_service

    def broadcast_reach_probability(self, m: int, s_tilde: float) -> ReachResult:
        m = _integer_m(m)
        s_tilde = validate_positive("s_tilde", s_tilde)
        ms = m * s_tilde
        # ∫_0^1 Q(m, m s̃ v) dv integrated by parts
        exact = special.gammaincc(m, ms) + special.gammainc(m + 1, ms) / s_tilde
        # 1 - (m s̃)^m / (m+1)!, kept in log space so large m s̃ cannot overflow
        log_taylor = m * math.log(ms) - special.gammaln(m + 2)
        lower = 0.0 if log_taylor >= 0.0 else -math.expm1(log_taylor)
        upper = min(1.0, (-math.expm1(-ms) - math.exp(-ms) * (m - 1) * s_tilde) / s_tilde)
        return ReachResult(m=m, s_tilde=s_tilde, probability=float(min(exact, 1.0)), lower_bound=lower,
                           upper_bound=upper)

    def epsilon_reachability_threshold(self, m: int, eps: float) -> ReachabilityThreshold:
        m = _integer_m(m)
        eps = validate_probability_open("eps", eps)
        sufficient = math.exp((special.gammaln(m + 2) + math.log(eps)) / m) / m
        target = 1.0 - eps

        if m == 1:
            q = 1.0 / target
            exact = specfun_util.lambert_w0(-q * math.exp(-q)) + q
            quadratic = 2.0 * eps + 4.0 * eps ** 2 / 3.0
        else:
            def excess(s_tilde: float) -> float:
                return self.broadcast_reach_probability(m, s_tilde).probability - target

            # p_m(s̃) <= 1/s̃ brackets the root from above
            exact = optimize.brentq(excess, sufficient, 2.0 / target, xtol=1e-14, rtol=1e-13)
            quadratic = None
        return ReachabilityThreshold(m=m, eps=eps, sufficient=sufficient, exact=float(exact), quadratic=quadratic)

    def broadcast_sum_distance(self, cfg: NetworkConfig, spec: FadingSpec, s: float) -> SumDistanceResult:
        s = validate_positive("s", s)
        without = self._sum_distance_unfaded(cfg, s)
        with_fading = without * self.fading_service.moment(spec, cfg.big_delta)
        return SumDistanceResult(distance_sum=with_fading, report=GainReport.of(with_fading, without))

    def capacity_at_rate(self, cfg: NetworkConfig, spec: FadingSpec, rate: float) -> float:
        rate = validate_positive("rate", rate)
        threshold = math.expm1(rate * LN2)
        return rate * self.broadcast_sum_distance(cfg, spec, threshold).distance_sum

    def broadcast_transport_capacity(self, cfg: NetworkConfig, spec: FadingSpec) -> CapacityResult:
        big_delta = cfg.big_delta
        unit_sum = self.broadcast_sum_distance(cfg, spec, 1.0).distance_sum
        if math.isclose(big_delta, 1.0, rel_tol=1e-12):
            # supremum approached as R -> 0
            return CapacityResult(r_opt=0.0, s_opt=0.0, capacity=unit_sum / LN2, bounded=True)
        if big_delta > 1.0:
            return CapacityResult(r_opt=None, s_opt=None, capacity=None, bounded=False)

        # y = R log 2 solves 1 - e^-y = big_delta y
        y = 1.0 / big_delta + specfun_util.lambert_w0(-math.exp(-1.0 / big_delta) / big_delta)
        s_opt = math.expm1(y)
        capacity = y / LN2 * unit_sum * s_opt ** (-big_delta)
        residual = 1.0 - big_delta * y / (-math.expm1(-y))

        y_lower = 1.0 / big_delta - big_delta
        s_opt_lower = math.expm1(y_lower)
        lower = y_lower / LN2 * unit_sum * s_opt_lower ** (-big_delta)
        return CapacityResult(r_opt=y / LN2, s_opt=s_opt, capacity=capacity, bounded=True, lower_bound=lower,
                              s_opt_lower_bound=s_opt_lower, optimality_residual=residual)

    def maximize_capacity_numerically(self, cfg: NetworkConfig, spec: FadingSpec) -> tuple[float, float]:
        big_delta = cfg.big_delta
        if big_delta >= 1.0:
            raise UnsupportedOperationException("maximize_capacity_numerically",
                                                "the supremum is approached as R -> 0 when big_delta >= 1")
        upper = 2.0 / (big_delta * LN2) + 1.0
        result = optimize.minimize_scalar(lambda r: -math.log(self.capacity_at_rate(cfg, spec, r)),
                                          bounds=(1e-9, upper), method="bounded", options={"xatol": 1e-12})
        return float(result.x), float(math.exp(-result.fun))

    def superposition_capacity_lower_bound(self, cfg: NetworkConfig) -> SuperpositionBound:
        c, delta, big_delta = cfg.c_d, cfg.delta, cfg.big_delta
        # with x = t^(1/big_delta): x^(big_delta-1) dx = dt/big_delta
        near_field = c * delta * integrate(lambda t: -math.log2(t) / big_delta ** 2 if t > 0 else 0.0,
                                           0.0, 1.0, "near-field rate-distance term")
        near_field_closed_form = c * delta / (big_delta ** 2 * LN2)
        if big_delta >= 1.0:
            return SuperpositionBound(bound=None, bounded=False, near_field=near_field,
                                      near_field_closed_form=near_field_closed_form)

        def integrand(t: float) -> float:
            if t == 0:
                return 0.0
            return math.log1p(t ** (-1.0 / big_delta)) / (big_delta * LN2)

        exact = c * delta * integrate_split(integrand, 0.0, 1.0, "superposition rate-distance sum")
        return SuperpositionBound(bound=c * delta / (big_delta * (1.0 - big_delta)), bounded=True,
                                  near_field=near_field, near_field_closed_form=near_field_closed_form, exact=exact)

    @staticmethod
    def _sum_distance_unfaded(cfg: NetworkConfig, s: float) -> float:
        return cfg.c_d * cfg.delta / cfg.big_delta * s ** (-cfg.big_delta)
