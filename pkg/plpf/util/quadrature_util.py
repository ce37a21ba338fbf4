"""
Adaptive quadrature helpers.

All integrals in the analytic services go through ``integrate``/``integrate_2d`` so they
share tolerances from Config and so non-convergence surfaces as ``QuadratureException``
instead of a warning on stderr. Semi-infinite ranges are handled by QUADPACK's qagi
mapping of [a, ∞) onto (0, 1].
"""
import math
import warnings
from typing import Callable, Sequence

from scipy import integrate as _integrate
from scipy.integrate import IntegrationWarning

from plpf.configuration.config import Config
from plpf.error_handler.exceptions import QuadratureException


def integrate(func: Callable[[float], float], lower: float, upper: float, quantity: str,
              points: Sequence[float] | None = None) -> float:
    """
    Integrate ``func`` over [lower, upper] (upper may be math.inf).

    Args:
        func: Scalar integrand.
        lower, upper: Integration bounds.
        quantity: Human-readable name used in error diagnostics.
        points: Optional interior break points (finite ranges only).
    """
    opts = dict(Config.QUAD_OPTS)
    if points is not None and math.isfinite(upper):
        opts["points"] = [p for p in points if lower < p < upper]
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, abserr = _integrate.quad(func, lower, upper, **opts)
        except IntegrationWarning as w:
            raise QuadratureException(quantity, original_exception=w) from w
    if not math.isfinite(value):
        raise QuadratureException(quantity, estimate=value, abserr=abserr)
    return float(value)


def integrate_split(func: Callable[[float], float], lower: float, split: float, quantity: str) -> float:
    """Integrate over [lower, ∞) as [lower, split] + [split, ∞); keeps peaked integrands resolved."""
    return (integrate(func, lower, split, quantity)
            + integrate(func, split, math.inf, quantity))


def integrate_2d(func: Callable[[float, float], float], x_lower: float, x_upper: float,
                 y_lower: float, y_upper: float, quantity: str) -> float:
    """Integrate ``func(y, x)`` over the rectangle, scipy.integrate.dblquad argument order."""
    with warnings.catch_warnings():
        warnings.simplefilter("error", IntegrationWarning)
        try:
            value, abserr = _integrate.dblquad(func, x_lower, x_upper, y_lower, y_upper,
                                               epsabs=Config.QUAD_ABS_TOL, epsrel=Config.QUAD_REL_TOL)
        except IntegrationWarning as w:
            raise QuadratureException(quantity, original_exception=w) from w
    if not math.isfinite(value):
        raise QuadratureException(quantity, estimate=value, abserr=abserr)
    return float(value)
