from dataclasses import dataclass, field


@dataclass(frozen=True)
class CheckResult:
    """
    Outcome of one analytic-vs-Monte-Carlo or analytic-vs-closed-form cross-check.
    tolerance: human-readable acceptance rule, e.g. "4 SE" or "abs 1e-12"
    """
    name: str
    passed: bool
    value: float | None
    reference: float | None
    tolerance: str
    detail: str = ""


@dataclass
class ValidationReport:
    seed: int
    trials: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failures(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]

    @property
    def passed(self) -> bool:
        return not self.failures
