import math
from numbers import Integral, Real

from plpf.error_handler.exceptions import DomainException


def validate_finite(name: str, value) -> float:
    if isinstance(value, bool) or not isinstance(value, Real) or not math.isfinite(value):
        raise DomainException(name, value, "a finite real number")
    return float(value)

def validate_positive(name: str, value) -> float:
    value = validate_finite(name, value)
    if value <= 0:
        raise DomainException(name, value, "> 0")
    return value

def validate_non_negative(name: str, value) -> float:
    value = validate_finite(name, value)
    if value < 0:
        raise DomainException(name, value, ">= 0")
    return value

def validate_probability_open(name: str, value) -> float:
    value = validate_finite(name, value)
    if not 0.0 < value < 1.0:
        raise DomainException(name, value, "in the open interval (0, 1)")
    return value

def validate_count(name: str, value, minimum: int = 1) -> int:
    if isinstance(value, bool) or not isinstance(value, Integral) or value < minimum:
        raise DomainException(name, value, f"an integer >= {minimum}")
    return int(value)
