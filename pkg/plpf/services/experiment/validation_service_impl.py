import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy import special
from tqdm import tqdm

from plpf.configuration.config import Config
from plpf.constants import (
    CAPACITY_BOUND_GAP,
    LN2,
    MIN_TRIALS,
    REORDER_CLOSED_FORMS,
)
from plpf.error_handler.exceptions import DomainException
from plpf.models.estimate import Estimate
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import STANDARD_NETWORK, NetworkConfig
from plpf.models.validation_report import CheckResult, ValidationReport
from plpf.services.analytic.applications_service import ApplicationsService
from plpf.services.analytic.broadcast_service import BroadcastService
from plpf.services.analytic.connectivity_service import ConnectivityService
from plpf.services.analytic.path_loss_service import PathLossService
from plpf.services.experiment.validation_service import ValidationService
from plpf.services.fading_service import FadingService
from plpf.services.geometry_service import GeometryService
from plpf.services.monte_carlo.monte_carlo_service import MonteCarloService
from plpf.util import statistic_util
from plpf.util.logging_util import log_calls
from plpf.util.seed_util import child_stream
from plpf.util.validation_util import validate_count

logger = logging.getLogger("plpf.services.experiment")

N_SE = 4.0
# Pooled KS samples: points with faded loss below this value, about 31 per trial in the standard network
KS_LOSS_LIMIT = 10.0
KS_MAX_TRIALS = 400
CROSSING_LOSS = 10.0
GAIN_DELTA_MIN = 0.462
GAIN_DELTA_MIN_TOL = 0.005
MAX_DISTANCE_TIGHTNESS = 0.15
MAX_DISTANCE_BOUND_AT_0_1 = 6.36
SUFFICIENT_THRESHOLD_GAP = 0.07
LOCALIZATION_TRIALS = 100
LOCALIZATION_I_MAX = 200

RAYLEIGH = FadingSpec.rayleigh()


@dataclass(frozen=True)
class _RunSettings:
    seed: int
    trials: int
    n_jobs: int | None


def _mc_check(name: str, estimate: Estimate, reference: float) -> CheckResult:
    return CheckResult(
        name=name,
        passed=estimate.within(reference, N_SE),
        value=estimate.mean,
        reference=reference,
        tolerance=f"{N_SE:g} SE",
        detail=f"se={estimate.std_error:.4g} trials={estimate.n_trials} flagged={estimate.n_flagged}",
    )


def _close_check(name: str, value: float, reference: float, tolerance: float, relative: bool = False) -> CheckResult:
    error = abs(value - reference)
    if relative:
        error /= abs(reference)
    return CheckResult(
        name=name,
        passed=error <= tolerance,
        value=value,
        reference=reference,
        tolerance=f"{'rel' if relative else 'abs'} {tolerance:g}",
        detail=f"error={error:.3g}",
    )


def _flag_check(name: str, passed: bool, detail: str, value: float | None = None,
                reference: float | None = None) -> CheckResult:
    return CheckResult(name=name, passed=bool(passed), value=value, reference=reference, tolerance="condition",
                       detail=detail)


def _scaled(statistic, scale: float):
    def scaled(real, rng, params) -> float:
        return statistic(real, rng, params) / scale
    return scaled


@log_calls("plpf.services.experiment")
class ValidationServiceImpl(ValidationService):
    def __init__(self, fading_service: FadingService, geometry_service: GeometryService,
                 path_loss_service: PathLossService, connectivity_service: ConnectivityService,
                 broadcast_service: BroadcastService, applications_service: ApplicationsService,
                 monte_carlo_service: MonteCarloService):
        self.fading_service = fading_service
        self.geometry_service = geometry_service
        self.path_loss_service = path_loss_service
        self.connectivity_service = connectivity_service
        self.broadcast_service = broadcast_service
        self.applications_service = applications_service
        self.monte_carlo_service = monte_carlo_service
        self._groups = {
            "connectivity": self._check_connectivity,
            "gain-surface": self._check_gain_surface,
            "distribution": self._check_distribution,
            "reordering": self._check_reordering,
            "sum-distance": self._check_sum_distance,
            "capacity": self._check_capacity,
            "reachability": self._check_reachability,
            "retransmissions": self._check_retransmissions,
            "max-distance": self._check_max_distance,
            "localization": self._check_localization,
            "determinism": self._check_determinism,
        }

    def groups(self) -> tuple[str, ...]:
        return tuple(self._groups)

    def run(self, seed: int, trials: int, n_jobs: int | None = None, progress: bool | None = None,
            groups: tuple[str, ...] | None = None) -> ValidationReport:
        seed = validate_count("seed", seed, minimum=0)
        trials = validate_count("trials", trials, minimum=MIN_TRIALS)
        selected = tuple(self._groups) if not groups else tuple(groups)
        for group in selected:
            if group not in self._groups:
                raise DomainException("group", group, f"one of {', '.join(self._groups)}")

        settings = _RunSettings(seed=seed, trials=trials, n_jobs=n_jobs)
        report = ValidationReport(seed=seed, trials=trials)
        show = Config.PROGRESS if progress is None else progress
        for group in tqdm(selected, desc="validate", unit="group", disable=not show):
            checks = self._groups[group](settings)
            for check in checks:
                if not check.passed:
                    logger.warning("Check %s failed: value=%s reference=%s (%s)", check.name, check.value,
                                   check.reference, check.detail)
            report.checks.extend(checks)
        logger.info("Validation finished: %d checks, %d failed.", len(report.checks), len(report.failures))
        return report

    # --- check groups ---

    def _estimate(self, statistic, settings: _RunSettings, cfg: NetworkConfig, spec: FadingSpec,
                  params: dict) -> Estimate:
        return self.monte_carlo_service.estimate(statistic, settings.trials, settings.seed, cfg, spec,
                                                 params, n_jobs=settings.n_jobs)

    def _check_connectivity(self, settings: _RunSettings) -> list[CheckResult]:
        cfg, s = STANDARD_NETWORK, 0.1
        checks = []
        analytic = self.connectivity_service.expected_connected(cfg, RAYLEIGH, s)
        checks.append(_close_check("connectivity.analytic-10pi", analytic, 10.0 * math.pi, 1e-9, relative=True))
        for spec in (RAYLEIGH, FadingSpec.nakagami(2.0), FadingSpec.nakagami(5.0), FadingSpec.degenerate()):
            estimate = self._estimate(statistic_util.connected_count(self.geometry_service, s), settings, cfg, spec,
                                      {"loss_bound": 1.0 / s})
            checks.append(_mc_check(f"connectivity.count[{spec}]", estimate, 10.0 * math.pi))

        counts = self.monte_carlo_service.collect(
            lambda real, rng, params: [self.geometry_service.connected_set(real, s).count],
            settings.trials, settings.seed, cfg, RAYLEIGH, {"loss_bound": 1.0 / s}, n_jobs=settings.n_jobs)
        chi = self.monte_carlo_service.poisson_chi_square(counts, analytic)
        checks.append(_flag_check("connectivity.poisson-chi-square", chi.pass_at_1pct,
                                  f"statistic={chi.statistic:.4g} dof={chi.dof} p={chi.p_value:.3g}",
                                  value=chi.p_value, reference=0.01))
        return checks

    def _check_gain_surface(self, settings: _RunSettings) -> list[CheckResult]:
        s = 0.5
        checks = []
        for delta in (0.5, 1.0, 1.5):
            cfg = NetworkConfig.from_delta(2, delta)
            scale = cfg.c_d * s ** (-delta)
            for m in (1.0, 2.0, 5.0):
                spec = FadingSpec.nakagami(m)
                gain = self.connectivity_service.connectivity_gain(cfg, spec).gain
                estimate = self._estimate(_scaled(statistic_util.connected_count(self.geometry_service, s), scale),
                                          settings, cfg, spec, {"loss_bound": 1.0 / s})
                checks.append(_mc_check(f"gain-surface.gain[delta={delta:g},{spec}]", estimate, gain))
        delta_min, _ = self.connectivity_service.connectivity_gain_minimum(RAYLEIGH)
        checks.append(_close_check("gain-surface.minimum-location", delta_min, GAIN_DELTA_MIN, GAIN_DELTA_MIN_TOL))
        return checks

    def _check_distribution(self, settings: _RunSettings) -> list[CheckResult]:
        cfg = STANDARD_NETWORK
        checks = []
        norm = self.path_loss_service.mean_measure(cfg, KS_LOSS_LIMIT)

        def reference_cdf(x: float) -> float:
            return self.path_loss_service.mean_measure(cfg, min(max(x, 0.0), KS_LOSS_LIMIT)) / norm

        ks_trials = min(settings.trials, KS_MAX_TRIALS)
        for m in (1.0, 5.0):
            spec = FadingSpec.nakagami(m)
            pooled = self.monte_carlo_service.collect(statistic_util.faded_losses_below(KS_LOSS_LIMIT), ks_trials,
                                                      settings.seed, cfg, spec, {"loss_bound": KS_LOSS_LIMIT},
                                                      n_jobs=settings.n_jobs)
            ks = self.monte_carlo_service.empirical_cdf_ks(pooled, reference_cdf)
            checks.append(_flag_check(f"distribution.ks[{spec}]", ks.pass_at_1pct,
                                      f"D={ks.statistic:.4g} n={ks.n} p={ks.p_value:.3g}", value=ks.statistic))

        for m in (1, 2, 3):
            spec = FadingSpec.nakagami(float(m))
            fraction = math.exp((m - 1) * math.log(m) - m - special.gammaln(m))
            estimate = self._estimate(statistic_util.crossing_fraction(CROSSING_LOSS), settings, cfg, spec,
                                      {"loss_bound": CROSSING_LOSS})
            checks.append(_mc_check(f"distribution.crossing-fraction[{spec}]", estimate, fraction))
        return checks

    def _check_reordering(self, settings: _RunSettings) -> list[CheckResult]:
        checks = []
        for (i, j), closed in REORDER_CLOSED_FORMS.items():
            value = self.path_loss_service.reorder_probability(i, j, method="quadrature").probability
            checks.append(_close_check(f"reordering.quadrature[{i},{j}]", value, closed, 1e-6))

        limit = self.path_loss_service.reorder_probability(200, 3, method="quadrature").probability
        checks.append(_close_check("reordering.large-i-limit[200,3]", limit, 0.5, 5e-3))
        checks.append(_flag_check("reordering.large-i-below-half[200,3]", limit < 0.5, f"P={limit:.6f}"))

        for i, j in ((1, 1), (2, 2)):
            estimate = self._estimate(statistic_util.reorder_indicator(i, j), settings, STANDARD_NETWORK, RAYLEIGH,
                                      {"loss_bound": 10.0})
            checks.append(_mc_check(f"reordering.monte-carlo[{i},{j}]", estimate, REORDER_CLOSED_FORMS[(i, j)]))
        return checks

    def _check_sum_distance(self, settings: _RunSettings) -> list[CheckResult]:
        cfg = STANDARD_NETWORK
        checks = []
        for s in (0.1, 1.0):
            result = self.broadcast_service.broadcast_sum_distance(cfg, RAYLEIGH, s)
            estimate = self._estimate(statistic_util.connected_distance_sum(self.geometry_service, s), settings, cfg,
                                      RAYLEIGH, {"loss_bound": 1.0 / s})
            checks.append(_mc_check(f"sum-distance.monte-carlo[s={s:g}]", estimate, result.distance_sum))
            unfaded = 2.0 * math.pi / (3.0 * s ** 1.5)
            checks.append(_close_check(f"sum-distance.no-fading[s={s:g}]", result.report.without_fading, unfaded,
                                       1e-12, relative=True))
        return checks

    def _check_capacity(self, settings: _RunSettings) -> list[CheckResult]:
        checks = []
        worst_residual, worst_gap = 0.0, 0.0
        for big_delta in np.round(np.arange(0.30, 0.995, 0.01), 2):
            cfg = NetworkConfig.from_big_delta(2, float(big_delta))
            result = self.broadcast_service.broadcast_transport_capacity(cfg, FadingSpec.degenerate())
            worst_residual = max(worst_residual, abs(result.optimality_residual))
            worst_gap = max(worst_gap, (result.capacity - result.lower_bound) / result.capacity)
        checks.append(_flag_check("capacity.optimality-residual", worst_residual <= 1e-9,
                                  f"max residual={worst_residual:.3g}", value=worst_residual, reference=1e-9))
        checks.append(_flag_check("capacity.lower-bound-gap", 0.0 <= worst_gap <= CAPACITY_BOUND_GAP,
                                  f"max relative gap={worst_gap:.4%}", value=worst_gap, reference=CAPACITY_BOUND_GAP))

        for big_delta in (0.5, 0.75, 0.9):
            cfg = NetworkConfig.from_big_delta(2, big_delta)
            for spec in (FadingSpec.degenerate(), RAYLEIGH):
                closed = self.broadcast_service.broadcast_transport_capacity(cfg, spec)
                r_num, c_num = self.broadcast_service.maximize_capacity_numerically(cfg, spec)
                checks.append(_close_check(f"capacity.numeric-rate[Delta={big_delta:g},{spec}]", r_num, closed.r_opt,
                                           1e-4, relative=True))
                checks.append(_flag_check(f"capacity.numeric-value[Delta={big_delta:g},{spec}]",
                                          c_num <= closed.capacity * (1.0 + 1e-9)
                                          and c_num >= closed.capacity * (1.0 - 1e-8),
                                          f"numeric={c_num:.12g}", value=c_num, reference=closed.capacity))

        cfg = NetworkConfig.from_big_delta(2, 1.0)
        at_one = self.broadcast_service.broadcast_transport_capacity(cfg, FadingSpec.degenerate()).capacity
        checks.append(_close_check("capacity.unit-big-delta", at_one, 2.0 * math.pi / (3.0 * LN2), 1e-9))

        cfg = NetworkConfig.from_big_delta(2, 1.2)
        unbounded = self.broadcast_service.broadcast_transport_capacity(cfg, FadingSpec.degenerate())
        rates = (1.0, 0.5, 0.1, 0.01, 0.001)
        values = [self.broadcast_service.capacity_at_rate(cfg, FadingSpec.degenerate(), rate) for rate in rates]
        increasing = all(later > earlier for earlier, later in zip(values, values[1:]))
        checks.append(_flag_check("capacity.unbounded-above-one", not unbounded.bounded and increasing,
                                  "C(R) at R=" + ",".join(f"{r:g}" for r in rates) + ": "
                                  + ",".join(f"{v:.4g}" for v in values)))

        for big_delta in (0.5, 0.75):
            bound = self.broadcast_service.superposition_capacity_lower_bound(NetworkConfig.from_big_delta(2, big_delta))
            checks.append(_flag_check(f"capacity.superposition-bound[Delta={big_delta:g}]", bound.exact <= bound.bound,
                                      f"exact={bound.exact:.6g}", value=bound.exact, reference=bound.bound))
            checks.append(_close_check(f"capacity.near-field[Delta={big_delta:g}]", bound.near_field,
                                       bound.near_field_closed_form, 1e-8, relative=True))
        return checks

    def _check_reachability(self, settings: _RunSettings) -> list[CheckResult]:
        checks = []
        worst = 0.0
        for s_tilde in (0.01, 0.1, 0.5, 1.0, 2.0, 5.0):
            p = self.broadcast_service.broadcast_reach_probability(1, s_tilde).probability
            worst = max(worst, abs(p + math.expm1(-s_tilde) / s_tilde))
        checks.append(_flag_check("reachability.rayleigh-identity", worst <= 1e-12, f"max error={worst:.3g}",
                                  value=worst, reference=1e-12))

        for m in (1, 2, 3):
            for eps in (0.01, 0.05, 0.1):
                threshold = self.broadcast_service.epsilon_reachability_threshold(m, eps)
                at_exact = self.broadcast_service.broadcast_reach_probability(m, threshold.exact).probability
                at_sufficient = self.broadcast_service.broadcast_reach_probability(m, threshold.sufficient).probability
                checks.append(_flag_check(f"reachability.round-trip[m={m},eps={eps:g}]",
                                          at_sufficient >= 1.0 - eps and at_exact >= 1.0 - eps - 1e-12,
                                          f"p(sufficient)={at_sufficient:.12g} p(exact)={at_exact:.12g}",
                                          value=at_exact, reference=1.0 - eps))
                if m == 1:
                    checks.append(_close_check(f"reachability.lambert[eps={eps:g}]", at_exact, 1.0 - eps, 1e-9))
                    if eps < 0.1:
                        gap = (threshold.exact - threshold.sufficient) / threshold.exact
                        checks.append(_flag_check(f"reachability.sufficient-gap[eps={eps:g}]",
                                                  0.0 <= gap <= SUFFICIENT_THRESHOLD_GAP, f"gap={gap:.4%}",
                                                  value=gap, reference=SUFFICIENT_THRESHOLD_GAP))
        return checks

    def _check_retransmissions(self, settings: _RunSettings) -> list[CheckResult]:
        cfg, s = STANDARD_NETWORK, 1.0
        eps = Config.TRUNCATION_EPS
        checks = []
        estimates = {}
        for k, n in ((1, 3), (2, 3), (3, 6), (2, 6)):
            params = {"loss_bound": 1.0 / s, "truncation_eps": eps / n}
            estimate = self._estimate(statistic_util.retransmission_count(self.fading_service, RAYLEIGH, s, k, n),
                                      settings, cfg, RAYLEIGH, params)
            estimates[(k, n)] = estimate
            if (k, n) != (2, 6):
                checks.append(_mc_check(f"retransmissions.count[k={k},n={n}]", estimate, cfg.c_d / (k * s)))

        first, second = estimates[(2, 3)], estimates[(2, 6)]
        spread = N_SE * math.hypot(first.std_error, second.std_error)
        checks.append(_flag_check("retransmissions.independent-of-n[k=2]", abs(first.mean - second.mean) <= spread,
                                  f"n=3: {first.mean:.4g}, n=6: {second.mean:.4g}, allowed {spread:.3g}",
                                  value=first.mean - second.mean, reference=0.0))

        for n in (3, 6):
            total = sum(self.applications_service.retransmission_distribution(cfg, s, k, n).expected_count
                        for k in range(1, n + 1))
            union = self.connectivity_service.retransmission_connectivity(cfg, RAYLEIGH, s, n).expected_count
            checks.append(_close_check(f"retransmissions.sum-over-k[n={n}]", total, union, 1e-12, relative=True))
        return checks

    def _check_max_distance(self, settings: _RunSettings) -> list[CheckResult]:
        cfg = STANDARD_NETWORK
        checks = []
        for s in (0.05, 0.1, 0.5, 1.0):
            result = self.applications_service.max_distance(cfg, RAYLEIGH, s)
            estimate = self._estimate(statistic_util.max_connected_distance(self.geometry_service, s), settings, cfg,
                                      RAYLEIGH, {"loss_bound": 1.0 / s})
            checks.append(_mc_check(f"max-distance.exact-mean[s={s:g}]", estimate, result.mean))
            tight = (estimate.mean <= result.bound + N_SE * estimate.std_error
                     and estimate.mean >= (1.0 - MAX_DISTANCE_TIGHTNESS) * result.bound)
            checks.append(_flag_check(f"max-distance.bound[s={s:g}]", tight,
                                      f"ratio={estimate.mean / result.bound:.4f}", value=estimate.mean,
                                      reference=result.bound))
        bound = self.applications_service.max_distance(cfg, RAYLEIGH, 0.1).bound
        checks.append(_close_check("max-distance.bound-at-0.1", bound, MAX_DISTANCE_BOUND_AT_0_1, 0.01))
        return checks

    def _check_localization(self, settings: _RunSettings) -> list[CheckResult]:
        cfg = STANDARD_NETWORK
        c = cfg.c_d
        rng = child_stream(settings.seed, 0)
        gains = c / LOCALIZATION_I_MAX + (c - c / LOCALIZATION_I_MAX) * (1.0 - rng.random(LOCALIZATION_TRIALS))
        indices = np.arange(1, LOCALIZATION_I_MAX + 1)
        mismatches = 0
        for gain in gains:
            density = [self.path_loss_service.plpf_pdf(cfg, RAYLEIGH, int(i), 1.0 / gain) for i in indices]
            exhaustive = int(indices[int(np.argmax(density))])
            if exhaustive != math.ceil(c / gain) or exhaustive != self.path_loss_service.localize_from_gain(
                    cfg, RAYLEIGH, float(gain), LOCALIZATION_I_MAX):
                mismatches += 1
        checks = [_flag_check("localization.ceiling-rule", mismatches == 0,
                              f"{mismatches} of {LOCALIZATION_TRIALS} gains disagree", value=float(mismatches),
                              reference=0.0)]

        origin = self.applications_service.retransmission_distribution(cfg, 1.0, 6, 6).density(0.0)
        checks.append(_close_check("localization.retransmission-density-at-origin", origin, math.pi, 1e-12))
        return checks

    def _check_determinism(self, settings: _RunSettings) -> list[CheckResult]:
        statistic = statistic_util.connected_count(self.geometry_service, 1.0)
        params = {"loss_bound": 1.0}
        runs = [self.monte_carlo_service.estimate(statistic, MIN_TRIALS * 2, settings.seed, STANDARD_NETWORK,
                                                  RAYLEIGH, params, n_jobs=n_jobs) for n_jobs in (1, 1, 2)]
        identical = all(run == runs[0] for run in runs[1:])
        return [_flag_check("determinism.seeded-runs", identical,
                            "means=" + ",".join(repr(run.mean) for run in runs), value=runs[0].mean)]
