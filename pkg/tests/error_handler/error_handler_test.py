import json
import logging

import click
import pytest
from click.testing import CliRunner
from marshmallow import ValidationError

from plpf.error_handler.exceptions import (
    DivergenceException,
    DomainException,
    ExperimentOutputException,
    QuadratureException,
    StateException,
    TruncationException,
    UnknownExperimentException,
    UnsupportedOperationException,
    ValidationFailedException,
)
from plpf.error_handler.global_error_handler import ErrorHandlingGroup, error_payload


@pytest.fixture
# Minimal command group raising whatever exception the test hands it
def group():
    @click.group(cls=ErrorHandlingGroup)
    @click.pass_context
    def cli(ctx):
        pass

    @cli.command()
    @click.pass_obj
    def boom(exception):
        raise exception

    @cli.command()
    def fine():
        click.echo("ok")

    @cli.command()
    @click.option("--n", type=int, required=True)
    def usage(n):
        click.echo(n)

    return cli


def _invoke(group, exception):
    return CliRunner(mix_stderr=False).invoke(group, ["boom"], obj=exception)


@pytest.mark.parametrize("exception, code, status", [
    (DomainException("s", -1.0, "> 0"), "DOMAIN_ERROR", 2),
    (UnknownExperimentException("nope", ["sample"]), "UNKNOWN_EXPERIMENT", 2),
    (UnsupportedOperationException("plpf_moments", "delta != 1"), "UNSUPPORTED_OPERATION", 3),
    (DivergenceException("E xi_1", "m <= 1"), "DIVERGENT_QUANTITY", 3),
    (TruncationException(10.0, 5.0, 0.5, 1e-4), "TRUNCATION_ERROR", 4),
    (QuadratureException("cdf of xi_1", 0.5, 1e-3), "QUADRATURE_ERROR", 4),
    (StateException("no finite trials"), "STATE_ERROR", 4),
    (ExperimentOutputException("/nowhere/out.csv"), "OUTPUT_ERROR", 5),
])
def test_error_payload_codes(exception, code, status):
    payload, exit_status = error_payload(exception)
    assert exit_status == status
    assert payload == {"error": {"code": code, "message": str(exception)}}


def test_validation_error_payload_lists_fields():
    payload, status = error_payload(ValidationError({"seed": ["Must be greater than or equal to 0."]}))
    assert status == 2
    assert payload["error"]["code"] == "VALIDATION_ERROR"
    assert payload["error"]["fields"] == {"seed": ["Must be greater than or equal to 0."]}


def test_validation_failed_payload_lists_failures():
    payload, status = error_payload(ValidationFailedException(["capacity.unit-big-delta"]))
    assert status == 1
    assert payload["error"]["failures"] == ["capacity.unit-big-delta"]


def test_unhandled_exception_is_internal_error(caplog):
    caplog.set_level(logging.ERROR, logger="plpf.cli")
    payload, status = error_payload(KeyError("missing"))
    assert status == 1
    assert payload == {"error": {"code": "INTERNAL_ERROR", "message": "Unexpected error: KeyError"}}
    assert any("UNHANDLED EXCEPTION" in r.getMessage() for r in caplog.records)


def test_group_prints_payload_and_exits(group):
    result = _invoke(group, DomainException("trials", -3, ">= 0"))
    assert result.exit_code == 2
    assert result.stdout == ""
    assert json.loads(result.stderr) == {
        "error": {"code": "DOMAIN_ERROR", "message": "Invalid trials=-3: must be >= 0."}
    }


def test_group_passes_through_success_and_click_errors(group):
    runner = CliRunner(mix_stderr=False)
    ok = runner.invoke(group, ["fine"])
    assert ok.exit_code == 0 and ok.stdout == "ok\n"
    usage = runner.invoke(group, ["usage", "--n", "x"])
    assert usage.exit_code == 2
    assert "Invalid value" in usage.stderr
    assert "DOMAIN_ERROR" not in usage.stderr
