import logging
import math
from typing import Callable

import numpy as np
from joblib import Parallel, delayed
from scipy import stats

from plpf.configuration.config import Config
from plpf.constants import KS_CRITICAL_1PCT, MIN_KS_SAMPLES, MIN_TRIALS
from plpf.error_handler.exceptions import DomainException, StateException
from plpf.models.estimate import ChiSquareResult, DistributionEstimate, Estimate, KsResult
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.models.realization import PlpfRealization
from plpf.services.geometry_service import GeometryService
from plpf.services.monte_carlo.monte_carlo_service import MonteCarloService, Sampler, Statistic
from plpf.util.logging_util import log_calls
from plpf.util.seed_util import child_stream
from plpf.util.validation_util import validate_count, validate_positive

logger = logging.getLogger("plpf.services")

# Poisson bins with fewer expected counts are pooled with their neighbours
_MIN_EXPECTED = 5.0


def _realize(geometry_service: GeometryService, index: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
             params: dict) -> tuple[PlpfRealization, np.random.Generator]:
    rng = child_stream(base_seed, index)
    conditioned = params.get("conditioned")
    if conditioned is not None:
        n, a = conditioned
        return geometry_service.sample_conditioned(cfg, n, a, spec, rng), rng
    real = geometry_service.sample_network(cfg, spec, params["loss_bound"], rng, params.get("truncation_eps"))
    return real, rng


def _run_trial(geometry_service: GeometryService, func: Callable, index: int, base_seed: int, cfg: NetworkConfig,
               spec: FadingSpec, params: dict):
    real, rng = _realize(geometry_service, index, base_seed, cfg, spec, params)
    return func(real, rng, params)


def _pool_bins(observed: np.ndarray, expected: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Merge adjacent bins left to right until each expects at least _MIN_EXPECTED counts."""
    pooled_obs, pooled_exp = [], []
    acc_obs = acc_exp = 0.0
    for obs, exp in zip(observed, expected):
        acc_obs += obs
        acc_exp += exp
        if acc_exp >= _MIN_EXPECTED:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
            acc_obs = acc_exp = 0.0
    if acc_exp > 0 or acc_obs > 0:
        if pooled_exp:
            pooled_obs[-1] += acc_obs
            pooled_exp[-1] += acc_exp
        else:
            pooled_obs.append(acc_obs)
            pooled_exp.append(acc_exp)
    return np.array(pooled_obs), np.array(pooled_exp)


@log_calls("plpf.services")
class MonteCarloServiceImpl(MonteCarloService):
    def __init__(self, geometry_service: GeometryService):
        self.geometry_service = geometry_service

    def estimate(self, statistic: Statistic, trials: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
                 params: dict, n_jobs: int | None = None) -> Estimate:
        values = np.asarray(self._run(statistic, trials, base_seed, cfg, spec, params, n_jobs), dtype=float)
        return self._summarize(values)

    def collect(self, sampler: Sampler, trials: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
                params: dict, n_jobs: int | None = None) -> np.ndarray:
        chunks = self._run(sampler, trials, base_seed, cfg, spec, params, n_jobs)
        if not chunks:
            return np.empty(0)
        return np.concatenate([np.atleast_1d(np.asarray(chunk, dtype=float)) for chunk in chunks])

    def empirical_cdf_ks(self, samples, reference_cdf: Callable[[float], float]) -> KsResult:
        samples = np.asarray(samples, dtype=float).ravel()
        n = samples.size
        if n < MIN_KS_SAMPLES:
            raise DomainException("samples", f"{n} values", f"at least {MIN_KS_SAMPLES} values")
        result = stats.kstest(samples, np.vectorize(reference_cdf, otypes=[float]))
        statistic = float(result.statistic)
        return KsResult(statistic=statistic, n=n, pass_at_1pct=statistic < KS_CRITICAL_1PCT / math.sqrt(n),
                        p_value=float(result.pvalue))

    def estimate_distribution(self, statistic: Statistic, trials: int, base_seed: int, cfg: NetworkConfig,
                              spec: FadingSpec, params: dict, bins=None,
                              n_jobs: int | None = None) -> DistributionEstimate:
        values = np.asarray(self._run(statistic, trials, base_seed, cfg, spec, params, n_jobs), dtype=float)
        estimate = self._summarize(values)
        finite = values[np.isfinite(values)]
        if bins is None:
            bins = np.arange(-0.5, finite.max() + 1.5, 1.0)
        counts, edges = np.histogram(finite, bins=bins)
        variance = float(np.var(finite, ddof=1))
        dispersion = variance / estimate.mean if estimate.mean > 0 else math.nan
        return DistributionEstimate(estimate=estimate, counts=counts, bin_edges=edges, variance=variance,
                                    dispersion_index=dispersion)

    def poisson_chi_square(self, values, mean: float) -> ChiSquareResult:
        mean = validate_positive("mean", mean)
        values = np.asarray(values)
        if values.size < MIN_TRIALS or np.any(values < 0) or np.any(values != np.round(values)):
            raise DomainException("values", f"{values.size} values", f"at least {MIN_TRIALS} non-negative integers")
        values = values.astype(np.int64)
        top = int(max(values.max(), stats.poisson.ppf(1.0 - 1e-12, mean)))
        support = np.arange(top + 1)
        observed = np.bincount(values, minlength=top + 1).astype(float)
        expected = values.size * stats.poisson.pmf(support, mean)
        expected[-1] += values.size * stats.poisson.sf(top, mean)

        observed, expected = _pool_bins(observed, expected)
        expected *= observed.sum() / expected.sum()
        dof = observed.size - 1
        if dof < 1:
            raise StateException("Too few populated bins for a chi-square test.")
        result = stats.chisquare(observed, expected)
        p_value = float(result.pvalue)
        return ChiSquareResult(statistic=float(result.statistic), dof=dof, p_value=p_value,
                               pass_at_1pct=p_value > 0.01)

    def _run(self, func: Callable, trials: int, base_seed: int, cfg: NetworkConfig, spec: FadingSpec,
             params: dict, n_jobs: int | None) -> list:
        trials = validate_count("trials", trials, minimum=MIN_TRIALS)
        base_seed = validate_count("base_seed", base_seed, minimum=0)
        if "loss_bound" not in params and "conditioned" not in params:
            raise DomainException("params", sorted(params), "a mapping with 'loss_bound' or 'conditioned'")
        n_jobs = Config.N_JOBS if n_jobs is None else n_jobs
        # results come back in submission order, so reductions follow trial index
        return Parallel(n_jobs=n_jobs)(
            delayed(_run_trial)(self.geometry_service, func, index, base_seed, cfg, spec, params)
            for index in range(trials)
        )

    @staticmethod
    def _summarize(values: np.ndarray) -> Estimate:
        finite = np.isfinite(values)
        flagged = int(values.size - finite.sum())
        if flagged:
            logger.warning("%d of %d trials returned non-finite values and were excluded.", flagged, values.size)
        kept = values[finite]
        if kept.size < 2:
            raise StateException("Fewer than two trials returned finite values.")
        return Estimate(mean=float(kept.mean()), std_error=float(kept.std(ddof=1) / math.sqrt(kept.size)),
                        n_trials=int(values.size), n_flagged=flagged)
