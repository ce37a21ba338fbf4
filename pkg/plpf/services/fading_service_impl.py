import math

import numpy as np
from scipy import special, stats

from plpf.error_handler.exceptions import DivergenceException, DomainException, UnsupportedOperationException
from plpf.models.fading_spec import FadingSpec
from plpf.services.fading_service import FadingService
from plpf.util.logging_util import log_calls
from plpf.util.validation_util import validate_count, validate_finite


def _like(values: np.ndarray, x):
    """Return a float for scalar input and an array otherwise."""
    return float(values) if np.ndim(x) == 0 else values


@log_calls("plpf.services")
class FadingServiceImpl(FadingService):
    """
    Unit-mean power fading. Nakagami-m marks are gamma(shape=m, scale=1/m), so
    F(x) = P(m, m x) with P the regularized lower incomplete gamma function.
    """

    def cdf(self, spec: FadingSpec, x):
        x_arr = np.asarray(x, dtype=float)
        if spec.is_degenerate:
            values = (x_arr >= 1.0).astype(float)
        else:
            values = special.gammainc(spec.m, spec.m * np.clip(x_arr, 0.0, None))
        return _like(values, x)

    def survival(self, spec: FadingSpec, x):
        x_arr = np.asarray(x, dtype=float)
        if spec.is_degenerate:
            values = (x_arr < 1.0).astype(float)
        else:
            values = special.gammaincc(spec.m, spec.m * np.clip(x_arr, 0.0, None))
        return _like(values, x)

    def pdf(self, spec: FadingSpec, x):
        if spec.is_degenerate:
            raise UnsupportedOperationException("pdf", "the degenerate fading spec has no density")
        x_arr = np.asarray(x, dtype=float)
        if not np.all(np.isfinite(x_arr)) or np.any(x_arr <= 0):
            raise DomainException("x", x, "> 0")
        return _like(stats.gamma.pdf(x_arr, a=spec.m, scale=1.0 / spec.m), x)

    def sample(self, spec: FadingSpec, rng: np.random.Generator, size: int | None = None):
        if size is not None:
            size = validate_count("size", size, minimum=0)
        if spec.is_degenerate:
            return 1.0 if size is None else np.ones(size)
        # numpy's gamma sampler is Marsaglia-Tsang squeeze rejection for every shape
        draws = rng.gamma(shape=spec.m, scale=1.0 / spec.m, size=size)
        return float(draws) if size is None else draws

    def moment(self, spec: FadingSpec, nu: float) -> float:
        nu = validate_finite("nu", nu)
        if spec.is_degenerate:
            return 1.0
        m = spec.m
        if nu <= -m:
            raise DivergenceException(f"E[f^{nu:g}] for nakagami m={m:g}", "nu <= -m")
        return math.exp(special.gammaln(m + nu) - special.gammaln(m) - nu * math.log(m))
