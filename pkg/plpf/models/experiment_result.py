from dataclasses import dataclass, field


@dataclass(frozen=True)
class ExperimentResult:
    """
    Rows of one experiment run, one per grid point.
    header_lines: documentation written as '#' comments above the CSV header
    """
    name: str
    columns: list[str]
    rows: list[dict]
    header_lines: list[str] = field(default_factory=list)
