from abc import ABC, abstractmethod

from plpf.models.validation_report import ValidationReport


class ValidationService(ABC):
    """Analytic-vs-Monte-Carlo and analytic-vs-closed-form cross-checks of the whole library."""

    @abstractmethod
    def groups(self) -> tuple[str, ...]:
        """Names of the check groups, in execution order."""
        pass

    @abstractmethod
    def run(self, seed: int, trials: int, n_jobs: int | None = None, progress: bool | None = None,
            groups: tuple[str, ...] | None = None) -> ValidationReport:
        """
        Run the selected check groups (all by default). Monte Carlo checks accept the
        analytic value when it lies within 4 standard errors of the estimate.
        The report is deterministic for a fixed seed and trial count.
        """
        pass
