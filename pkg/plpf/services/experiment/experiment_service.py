from abc import ABC, abstractmethod

from plpf.models.experiment_result import ExperimentResult
from plpf.models.experiment_spec import ExperimentSpec


class ExperimentService(ABC):
    """Plot-data experiments over parameter grids and single analytic evaluations."""

    @abstractmethod
    def experiments(self) -> tuple[str, ...]:
        """Names accepted by run()."""
        pass

    @abstractmethod
    def run(self, spec: ExperimentSpec) -> ExperimentResult:
        """
        Evaluate the named experiment at every grid point. Identical specs (seed included)
        produce identical results.
        Raises UnknownExperimentException for an unknown name.
        """
        pass

    @abstractmethod
    def write(self, result: ExperimentResult, out: str | None = None) -> str:
        """Render the result as CSV, writing it to out when given. Returns the CSV text."""
        pass

    @abstractmethod
    def operations(self) -> tuple[str, ...]:
        """Analytic operations accepted by evaluate()."""
        pass

    @abstractmethod
    def evaluate(self, operation: str, params: dict) -> ExperimentResult:
        """
        Call one analytic operation with key=value text arguments and return its result
        flattened into (key, value) rows.
        """
        pass
