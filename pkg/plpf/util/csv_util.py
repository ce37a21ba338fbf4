import csv
import io
import math
import os

from plpf.error_handler.exceptions import ExperimentOutputException


def format_value(value) -> str:
    """Deterministic text form: shortest round-trip repr for floats, empty for missing values."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return str(int(value))
    if isinstance(value, float):
        if math.isnan(value):
            return "nan"
        return repr(value)
    return str(value)


def render_csv(columns: list[str], rows: list[dict], header_lines: list[str] | None = None) -> str:
    buffer = io.StringIO()
    for line in header_lines or []:
        buffer.write(f"# {line}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([format_value(row.get(column)) for column in columns])
    return buffer.getvalue()


def write_csv(path: str, columns: list[str], rows: list[dict], header_lines: list[str] | None = None) -> str:
    text = render_csv(columns, rows, header_lines)
    try:
        directory = os.path.dirname(os.path.abspath(path))
        os.makedirs(directory, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as e:
        raise ExperimentOutputException(path, original_exception=e) from e
    return text
