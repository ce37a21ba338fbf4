import csv
import io
import json
import math
from unittest.mock import MagicMock

import pytest
from click.testing import CliRunner
from dependency_injector import providers

import plpf.cli
from plpf import create_app
from plpf.cli import cli
from plpf.models.validation_report import CheckResult, ValidationReport
from plpf.services.experiment.validation_service import ValidationService


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def _invoke(runner, *args):
    return runner.invoke(cli, ["--log-level", "WARNING", *args])


def _error(result) -> dict:
    # log lines may precede the payload on stderr
    return json.loads(result.stderr.strip().splitlines()[-1])["error"]


def _rows(text: str) -> list[dict]:
    lines = [line for line in text.splitlines() if not line.startswith("#")]
    return list(csv.DictReader(io.StringIO("\n".join(lines))))


# -------------------------------
# Experiments
# -------------------------------

def test_list(runner):
    result = _invoke(runner, "list")
    assert result.exit_code == 0
    assert result.stdout.startswith("experiments: gain-surface, opt-rates")
    assert "plpf_cdf" in result.stdout


def test_experiment_to_stdout(runner):
    result = _invoke(runner, "reach-threshold", "--m", "1", "--eps", "0.01,0.05")
    assert result.exit_code == 0, result.stderr
    assert result.stdout.startswith("# experiment: reach-threshold\n")
    rows = _rows(result.stdout)
    assert [row["eps"] for row in rows] == ["0.01", "0.05"]
    assert float(rows[0]["sufficient"]) == pytest.approx(0.02)


def test_experiment_output_is_reproducible(runner):
    first = _invoke(runner, "sample", "--s", "0.5", "--seed", "3")
    second = _invoke(runner, "sample", "--s", "0.5", "--seed", "3")
    assert first.exit_code == second.exit_code == 0
    assert first.stdout == second.stdout
    assert _rows(first.stdout)[0]["i"] == "1"


def test_experiment_to_file(runner, tmp_path):
    out = tmp_path / "gain.csv"
    result = _invoke(runner, "gain-surface", "--delta", "0:1:0.5", "--m", "1", "--out", str(out))
    assert result.exit_code == 0
    assert "3 rows written" in result.stdout
    rows = _rows(out.read_text())
    assert float(rows[1]["gain"]) == pytest.approx(math.sqrt(math.pi) / 2.0)


def test_config_file_and_flag_override(runner, tmp_path):
    config = tmp_path / "run.env"
    config.write_text("m=1,2\neps=0.05\nunrelated=7\n")
    result = _invoke(runner, "reach-threshold", "--config", str(config), "--m", "3")
    assert result.exit_code == 0, result.stderr
    rows = _rows(result.stdout)
    assert [(row["m"], row["eps"]) for row in rows] == [("3", "0.05")]


def test_bad_flag_value_is_usage_error(runner):
    result = _invoke(runner, "sample", "--seed", "-1")
    assert result.exit_code == 2


def test_conflicting_exponents(runner):
    result = _invoke(runner, "gain-surface", "--delta", "0.5", "--alpha", "4")
    assert result.exit_code == 2
    error = _error(result)
    assert error["code"] == "VALIDATION_ERROR"
    assert "delta" in error["fields"]


# -------------------------------
# eval
# -------------------------------

def test_eval_operation(runner):
    result = _invoke(runner, "eval", "plpf_cdf", "i=1", "x=0.8", "m=1")
    assert result.exit_code == 0, result.stderr
    rows = _rows(result.stdout)
    c = math.pi
    assert float(rows[0]["value"]) == pytest.approx(c * 0.8 / (1 + c * 0.8))


def test_eval_errors(runner):
    unknown = _invoke(runner, "eval", "no_such_operation")
    assert unknown.exit_code == 2
    assert _error(unknown)["code"] == "UNKNOWN_EXPERIMENT"

    malformed = _invoke(runner, "eval", "plpf_cdf", "i=1", "x")
    assert malformed.exit_code == 2

    divergent = _invoke(runner, "eval", "plpf_moments", "i=3", "m=1")
    assert divergent.exit_code == 3
    assert _error(divergent)["code"] == "DIVERGENT_QUANTITY"


# -------------------------------
# validate
# -------------------------------

def test_validate_group(runner):
    result = _invoke(runner, "validate", "--group", "reachability", "--trials", "100", "--seed", "1",
                     "--no-progress")
    assert result.exit_code == 0, result.stderr
    rows = _rows(result.stdout)
    assert rows
    assert all(row["passed"] == "1" for row in rows)


def test_validate_failure_exits_nonzero(runner, monkeypatch):
    mock_validation_service = MagicMock(spec=ValidationService)
    mock_validation_service.run.return_value = ValidationReport(seed=1, trials=100, checks=[
        CheckResult(name="capacity.unit-big-delta", passed=False, value=3.0, reference=3.02, tolerance="abs 1e-09"),
    ])

    def create_mocked_app(test_config=None):
        container = create_app(test_config)
        container.validation_service.override(providers.Object(mock_validation_service))
        return container

    monkeypatch.setattr(plpf.cli, "create_app", create_mocked_app)
    result = _invoke(runner, "validate", "--trials", "100", "--seed", "1")
    assert result.exit_code == 1
    error = _error(result)
    assert error["code"] == "VALIDATION_FAILED"
    assert error["failures"] == ["capacity.unit-big-delta"]
    assert "capacity.unit-big-delta,0" in result.stdout
    mock_validation_service.run.assert_called_once_with(1, 100, n_jobs=None, progress=None, groups=None)
