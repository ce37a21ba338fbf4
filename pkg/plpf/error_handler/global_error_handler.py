import json
import logging
import traceback

import click
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

logger = logging.getLogger("plpf.cli")

# Exit status 2 matches click's own usage errors
USAGE_EXIT = 2

# First matching entry wins
ERROR_TABLE = (
    (ValidationError, "VALIDATION_ERROR", USAGE_EXIT),
    (DomainException, "DOMAIN_ERROR", USAGE_EXIT),
    (UnknownExperimentException, "UNKNOWN_EXPERIMENT", USAGE_EXIT),
    (UnsupportedOperationException, "UNSUPPORTED_OPERATION", 3),
    (DivergenceException, "DIVERGENT_QUANTITY", 3),
    (TruncationException, "TRUNCATION_ERROR", 4),
    (QuadratureException, "QUADRATURE_ERROR", 4),
    (StateException, "STATE_ERROR", 4),
    (ExperimentOutputException, "OUTPUT_ERROR", 5),
    (ValidationFailedException, "VALIDATION_FAILED", 1),
)


def error_payload(exception: Exception) -> tuple[dict, int]:
    """
    Map an exception to the JSON error payload printed on stderr and the process exit status.
    Unknown exception types are logged with their traceback and reported as INTERNAL_ERROR.
    """
    for exception_type, code, status in ERROR_TABLE:
        if isinstance(exception, exception_type):
            if isinstance(exception, ValidationError):
                # err.messages is a dict of field -> list[str]
                return {"error": {"code": code, "message": "Invalid experiment configuration.",
                                  "fields": exception.messages}}, status
            if isinstance(exception, ValidationFailedException):
                return {"error": {"code": code, "message": str(exception),
                                  "failures": exception.failures}}, status
            return {"error": {"code": code, "message": str(exception)}}, status

    logger.error("UNHANDLED EXCEPTION: %s: %s", type(exception).__name__, exception)
    for line in traceback.format_exception(exception):
        for part in line.rstrip().split("\n"):
            if part.strip():
                logger.error(part)
    return {"error": {"code": "INTERNAL_ERROR", "message": f"Unexpected error: {type(exception).__name__}"}}, 1


class ErrorHandlingGroup(click.Group):
    """
    Command group that turns library exceptions into error payloads and exit statuses
    instead of Python tracebacks.
    """

    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.exceptions.ClickException, click.exceptions.Exit, click.exceptions.Abort):
            raise
        except Exception as exception:
            payload, status = error_payload(exception)
            click.echo(json.dumps(payload, sort_keys=True), err=True)
            ctx.exit(status)
