"""
Special functions used by the closed-form results.

Thin, domain-checked wrappers around ``scipy.special``. Every function is pure,
works on scalars and raises ``DomainException`` outside its stated domain, so a
bad argument never turns into a silent NaN deep inside a formula.
"""
import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from plpf.constants import SPECFUN_ABS_TOL, SPECFUN_REL_TOL
from plpf.error_handler.exceptions import DomainException
from plpf.util.validation_util import validate_finite, validate_positive, validate_non_negative

_INV_E = math.exp(-1.0)


@dataclass(frozen=True)
class Accuracy:
    """
    Error bound a special-function value is guaranteed to meet.
    A value v is admitted against reference r when |v - r| <= abs_tol or |v - r| <= rel_tol * |r|.
    """
    abs_tol: float = SPECFUN_ABS_TOL
    rel_tol: float = SPECFUN_REL_TOL

    def __post_init__(self):
        if not self.abs_tol > 0:
            raise DomainException("abs_tol", self.abs_tol, "> 0")
        if not self.rel_tol > 0:
            raise DomainException("rel_tol", self.rel_tol, "> 0")

    def admits(self, value: float, reference: float) -> bool:
        err = abs(value - reference)
        return err <= self.abs_tol or err <= self.rel_tol * abs(reference)


ACCURACY = Accuracy()


def gamma(x: float) -> float:
    x = validate_positive("x", x)
    return float(special.gamma(x))

def log_gamma(x: float) -> float:
    x = validate_positive("x", x)
    return float(special.gammaln(x))

def gamma_ratio(a: float, b: float) -> float:
    """Γ(a)/Γ(b) evaluated in log space so large arguments do not overflow."""
    return math.exp(log_gamma(a) - log_gamma(b))

def upper_incomplete_gamma_regularized(a: float, x: float) -> float:
    """Q(a, x) = Γ_ic(a, x)/Γ(a)."""
    a = validate_positive("a", a)
    x = validate_non_negative("x", x)
    return float(special.gammaincc(a, x))

def lower_incomplete_gamma_regularized(a: float, x: float) -> float:
    """P(a, x) = 1 - Q(a, x)."""
    a = validate_positive("a", a)
    x = validate_non_negative("x", x)
    return float(special.gammainc(a, x))

def regularized_incomplete_beta(a: float, b: float, x: float) -> float:
    a = validate_positive("a", a)
    b = validate_positive("b", b)
    x = validate_finite("x", x)
    if not 0.0 <= x <= 1.0:
        raise DomainException("x", x, "in [0, 1]")
    return float(special.betainc(a, b, x))

def digamma(x: float) -> float:
    x = validate_positive("x", x)
    return float(special.digamma(x))

def lambert_w0(x: float) -> float:
    """
    Principal branch of the Lambert W function, w·e^w = x with w >= -1.
    Arguments within rounding of -1/e are snapped to the branch point.
    """
    x = validate_finite("x", x)
    if x < -_INV_E:
        if -_INV_E - x > 4 * np.finfo(float).eps:
            raise DomainException("x", x, ">= -1/e")
        return -1.0
    w = special.lambertw(x, k=0)
    return float(max(w.real, -1.0))

def erf(x: float) -> float:
    x = validate_finite("x", x)
    return float(special.erf(x))

def erfc(x: float) -> float:
    x = validate_finite("x", x)
    return float(special.erfc(x))

def harmonic_number(n: int, order: float = 1.0) -> float:
    """Generalized harmonic number Σ_{k=1}^{n} k^{-order}."""
    k = np.arange(1, int(n) + 1, dtype=float)
    return float(np.sum(k ** (-order)))
