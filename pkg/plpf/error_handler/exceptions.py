class PlpfException(Exception):
    """
    Base class for every error raised by the library.
    """
    def __init__(self, message: str):
        super().__init__(message)


class DomainException(PlpfException, ValueError):
    """
    Raised when an operation receives an argument outside its stated domain.
    Attributes:
        name (str): Parameter name.
        value (object): Offending value.
    """
    def __init__(self, name: str, value, requirement: str):
        self.name = name
        self.value = value
        self.requirement = requirement
        message = f"Invalid {name}={value!r}: must be {requirement}."
        super().__init__(message)


class DivergenceException(PlpfException):
    """
    Raised instead of returning an infinite value, e.g. a moment of order nu <= -m
    or the mean path loss under Rayleigh fading.
    """
    def __init__(self, quantity: str, condition: str):
        self.quantity = quantity
        self.condition = condition
        message = f"{quantity} diverges ({condition})."
        super().__init__(message)


class UnsupportedOperationException(PlpfException):
    def __init__(self, operation: str, reason: str):
        self.operation = operation
        self.reason = reason
        message = f"{operation} is not supported: {reason}."
        super().__init__(message)


class TruncationException(PlpfException):
    """
    Raised when a threshold asks for path losses the sampled window cannot represent
    without losing more than the allowed expected number of nodes.
    Attributes:
        loss_bound (float): Largest faded path loss the caller asked about (1/s).
        window (float): Largest path loss represented by the realization.
        expected_missed (float): Expected number of nodes lost by the truncation.
    """
    def __init__(self, loss_bound: float, window: float, expected_missed: float, tolerance: float):
        self.loss_bound = loss_bound
        self.window = window
        self.expected_missed = expected_missed
        self.tolerance = tolerance
        message = (f"Loss bound {loss_bound:.6g} is not safely sampled by window {window:.6g}: "
                   f"{expected_missed:.3g} nodes expected to be missed (allowed {tolerance:.3g}).")
        super().__init__(message)


class QuadratureException(PlpfException):
    """
    Raised when adaptive quadrature fails to reach the requested tolerance.
    Attributes:
        quantity (str): What was being integrated.
        estimate (float|None): Last estimate returned by the integrator.
        abserr (float|None): Reported absolute error.
        original_exception (Exception|None): The underlying exception or warning.
    """
    def __init__(self, quantity: str, estimate: float = None, abserr: float = None,
                 original_exception: Exception = None):
        self.quantity = quantity
        self.estimate = estimate
        self.abserr = abserr
        self.original_exception = original_exception
        details = f" (estimate={estimate:.10g}, abserr={abserr:.3g})" if estimate is not None else ""
        cause = f": {original_exception}" if original_exception is not None else ""
        message = f"Quadrature for {quantity} did not converge{details}{cause}"
        super().__init__(message)


class StateException(PlpfException):
    def __init__(self, message: str):
        super().__init__(message)


class UnknownExperimentException(PlpfException):
    def __init__(self, name: str, known):
        self.name = name
        message = f"Unknown experiment {name!r}. Known experiments: {', '.join(sorted(known))}."
        super().__init__(message)


class ExperimentOutputException(PlpfException):
    """
    Raised when an experiment cannot write its CSV output.
    """
    def __init__(self, path: str, original_exception: Exception = None):
        self.path = path
        self.original_exception = original_exception
        message = f"Unable to write experiment output to {path}."
        super().__init__(message)


class ValidationFailedException(PlpfException):
    """
    Raised by the validation suite when one or more cross-checks fail.
    Attributes:
        failures (list[str]): Names of the failed checks.
    """
    def __init__(self, failures: list):
        self.failures = list(failures)
        message = f"{len(self.failures)} validation check(s) failed: {', '.join(self.failures)}"
        super().__init__(message)
