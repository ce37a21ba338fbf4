"""
Parameter grids as written in config files and CLI flags.

    "0.5"             single value
    "1,2,5"           explicit list
    "0.1:1.0:0.05"    inclusive range start:stop:step
    "inf"             infinity (m = inf selects the degenerate fading spec)
"""
import math
import re

import numpy as np

from plpf.error_handler.exceptions import DomainException
from plpf.models.fading_spec import FadingSpec

_NUMBER = r"[-+]?(?:\d+\.?\d*(?:[eE][-+]?\d+)?|\.\d+(?:[eE][-+]?\d+)?|inf)"
_RANGE_PATTERN = re.compile(rf"^\s*(?P<start>{_NUMBER})\s*:\s*(?P<stop>{_NUMBER})\s*:\s*(?P<step>{_NUMBER})\s*$",
                            re.IGNORECASE)


def _to_number(token: str, name: str, integer: bool):
    token = token.strip()
    try:
        value = float(token)
    except ValueError:
        raise DomainException(name, token, "a number")
    if math.isnan(value):
        raise DomainException(name, token, "a number")
    if integer:
        if not math.isfinite(value) or not value.is_integer():
            raise DomainException(name, token, "an integer")
        return int(value)
    return value


def _range(text: str, name: str) -> np.ndarray | None:
    match = _RANGE_PATTERN.match(text)
    if not match:
        return None
    start, stop, step = (float(match.group(k)) for k in ("start", "stop", "step"))
    if not (math.isfinite(start) and math.isfinite(stop) and math.isfinite(step)) or step <= 0 or stop < start:
        raise DomainException(name, text, "a range start:stop:step with step > 0 and stop >= start")
    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    # rounding keeps printed grid values free of accumulated float noise
    return np.round(start + step * np.arange(count), 12)


def parse_grid(text, name: str = "grid", integer: bool = False) -> tuple:
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str) or not text.strip():
        raise DomainException(name, text, "a non-empty grid")
    values = _range(text, name)
    if values is not None:
        return tuple(_to_number(repr(float(v)), name, integer) for v in values)
    return tuple(_to_number(token, name, integer) for token in text.split(","))


def parse_fading_grid(text, name: str = "m") -> tuple[FadingSpec, ...]:
    """Grid of fading specs: numbers are Nakagami m values, "inf"/"none" is no fading."""
    if isinstance(text, (int, float)) and not isinstance(text, bool):
        text = str(text)
    if not isinstance(text, str) or not text.strip():
        raise DomainException(name, text, "a non-empty fading grid")
    values = _range(text, name)
    if values is not None:
        return tuple(FadingSpec.nakagami(float(v)) for v in values)

    specs = []
    for token in text.split(","):
        token = token.strip()
        try:
            m = float(token)
        except ValueError:
            specs.append(FadingSpec.parse(token))
            continue
        specs.append(FadingSpec.degenerate() if math.isinf(m) else FadingSpec.nakagami(m))
    return tuple(specs)
