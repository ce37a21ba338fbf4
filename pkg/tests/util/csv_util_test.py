import os

import pytest

from plpf.error_handler.exceptions import ExperimentOutputException
from plpf.util.csv_util import format_value, render_csv, write_csv


def test_format_value_is_deterministic():
    assert format_value(None) == ""
    assert format_value(True) == "1"
    assert format_value(0.1) == "0.1"
    assert format_value(1 / 3) == repr(1 / 3)
    assert format_value(float("inf")) == "inf"
    assert format_value(float("nan")) == "nan"
    assert format_value(7) == "7"


def test_render_csv_writes_header_comments_first():
    text = render_csv(["a", "b"], [{"a": 1, "b": 0.5}, {"a": 2}], ["first line", "second"])
    assert text.splitlines() == ["# first line", "# second", "a,b", "1,0.5", "2,"]


def test_write_csv_creates_directories(tmp_path):
    path = tmp_path / "nested" / "out.csv"
    text = write_csv(str(path), ["x"], [{"x": 1.5}])
    assert os.path.exists(path)
    assert path.read_text(encoding="utf-8") == text == "x\n1.5\n"


def test_write_csv_unwritable_path_raises(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    with pytest.raises(ExperimentOutputException):
        write_csv(str(blocker / "out.csv"), ["x"], [])
