import logging

import click
from dependency_injector.wiring import Provide, inject
from dotenv import dotenv_values

from plpf import create_app
from plpf.container import Container
from plpf.error_handler.exceptions import ValidationFailedException
from plpf.error_handler.global_error_handler import ErrorHandlingGroup
from plpf.models.experiment_spec import ExperimentSpec
from plpf.schemas.experiment_spec_schema import ExperimentSpecSchema
from plpf.schemas.report_schema import CheckResultSchema
from plpf.services.experiment.experiment_service import ExperimentService
from plpf.services.experiment.validation_service import ValidationService
from plpf.util import csv_util

logger = logging.getLogger("plpf.cli")

EXPERIMENTS = {
    "gain-surface": "Connectivity fading gain E[f^delta] over delta and Nakagami m.",
    "opt-rates": "Capacity-maximizing broadcast rate and its lower bound over Delta.",
    "transport-capacity": "Broadcast transport capacity over Delta, with and without fading.",
    "max-distance": "Mean largest connected distance, its upper bound and a Monte Carlo estimate over s.",
    "retrans-densities": "Densities of nodes receiving exactly k of n transmissions.",
    "reach-probability": "Probability of reaching a node inside the no-fading range under Nakagami-m fading.",
    "reach-threshold": "Thresholds guaranteeing reach probability 1 - eps.",
    "sample": "Export one sampled realization (mode=ppp or mode=toy) with its fading marks.",
}

# CLI option name -> key understood by ExperimentSpecSchema
_SPEC_KEYS = {"big_delta": "Delta"}


def experiment_options(command):
    options = [
        click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
                     help="Flat key=value file; flags override its values."),
        click.option("--out", help="CSV output path (stdout when omitted)."),
        click.option("--seed", type=click.IntRange(min=0), help="Base seed of the Monte Carlo streams."),
        click.option("--trials", type=click.IntRange(min=0), help="Monte Carlo trials per grid point (0 skips)."),
        click.option("--mode", help="Sampling mode of the sample experiment: ppp or toy."),
        click.option("--upper", help="Upper distance of the toy placement interval."),
        click.option("--x", help="Path loss grid."),
        click.option("--k", help="Received-packet count grid."),
        click.option("--n", help="Transmission count grid (node count for toy samples)."),
        click.option("--eps", help="Target outage grid."),
        click.option("--s", help="Threshold grid."),
        click.option("--m", help="Nakagami m grid; inf or none for no fading."),
        click.option("--Delta", "big_delta", help="Grid of (d+1)/alpha."),
        click.option("--delta", help="Grid of d/alpha."),
        click.option("--alpha", help="Path loss exponent grid."),
        click.option("--d", help="Dimension grid."),
    ]
    for option in options:
        command = option(command)
    return command


def load_spec(name: str, options: dict) -> ExperimentSpec:
    """Merge the config file with the flags (flags win) and validate the result."""
    raw = {}
    config_path = options.pop("config_path", None)
    if config_path:
        raw.update(dotenv_values(config_path))
        if "big_delta" in raw:
            raw.setdefault("Delta", raw.pop("big_delta"))
    for key, value in options.items():
        if value is not None:
            raw[_SPEC_KEYS.get(key, key)] = value
    raw["name"] = name
    return ExperimentSpecSchema().load(raw)


@click.group(cls=ErrorHandlingGroup)
@click.option("--log-level", help="Overrides PLPF_LOG_LEVEL.")
@click.pass_context
def cli(ctx: click.Context, log_level: str | None):
    """Path loss processes with fading: plot-data experiments, analytic evaluation and validation."""
    ctx.obj = create_app({"LOG_LEVEL": log_level} if log_level else None)


@inject
def run_experiment(name: str, options: dict,
                   experiment_service: ExperimentService = Provide[Container.experiment_service]) -> None:
    spec = load_spec(name, options)
    result = experiment_service.run(spec)
    text = experiment_service.write(result, spec.out)
    if spec.out:
        logger.info("Wrote %d rows to %s", len(result.rows), spec.out)
        click.echo(f"{spec.name}: {len(result.rows)} rows written to {spec.out}")
    else:
        click.echo(text, nl=False)


def _register_experiment(name: str, help_text: str) -> None:
    @cli.command(name, help=help_text)
    @experiment_options
    def command(**options):
        run_experiment(name, options)


for _name, _help in EXPERIMENTS.items():
    _register_experiment(_name, _help)


@cli.command("validate")
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False),
              help="Flat key=value file with seed and trials.")
@click.option("--seed", type=click.IntRange(min=0), help="Base seed of the Monte Carlo streams.")
@click.option("--trials", type=click.IntRange(min=1), help="Monte Carlo trials per check.")
@click.option("--n-jobs", type=int, help="Parallel workers (joblib semantics, -1 for all cores).")
@click.option("--group", "groups", multiple=True, help="Run only this check group (repeatable).")
@click.option("--progress/--no-progress", default=None, help="Show a progress bar.")
@click.option("--out", help="CSV report path (stdout when omitted).")
@inject
def validate(config_path, seed, trials, n_jobs, groups, progress, out,
             validation_service: ValidationService = Provide[Container.validation_service]):
    """Run every analytic-vs-Monte-Carlo cross-check; exits nonzero if any fails."""
    spec = load_spec("validate", {"config_path": config_path, "seed": seed, "trials": trials, "out": out})
    report = validation_service.run(spec.seed, spec.trials, n_jobs=n_jobs, progress=progress,
                                    groups=tuple(groups) or None)

    schema = CheckResultSchema()
    rows = schema.dump(report.checks, many=True)
    header = [f"validate seed={report.seed} trials={report.trials}",
              f"{len(report.checks)} checks, {len(report.failures)} failed"]
    columns = list(schema.fields)
    if spec.out:
        csv_util.write_csv(spec.out, columns, rows, header)
        click.echo(f"validate: {len(report.checks)} checks written to {spec.out}")
    else:
        click.echo(csv_util.render_csv(columns, rows, header), nl=False)

    if not report.passed:
        raise ValidationFailedException(report.failures)


@cli.command("eval")
@click.argument("operation")
@click.argument("arguments", nargs=-1)
@click.option("--out", help="CSV output path (stdout when omitted).")
@inject
def evaluate(operation, arguments, out,
             experiment_service: ExperimentService = Provide[Container.experiment_service]):
    """
    Evaluate one analytic operation, e.g. `eval plpf_cdf i=3 x=0.5 m=2`.
    Network keys: d, alpha | delta | Delta; fading key: m (inf or none for no fading).
    """
    params = {}
    for argument in arguments:
        key, sep, value = argument.partition("=")
        if not sep or not key.strip():
            raise click.BadParameter(f"expected key=value, got {argument!r}", param_hint="ARGUMENTS")
        params[key.strip()] = value
    result = experiment_service.evaluate(operation, params)
    text = experiment_service.write(result, out)
    if out:
        click.echo(f"{operation}: {len(result.rows)} values written to {out}")
    else:
        click.echo(text, nl=False)


@cli.command("list")
@inject
def list_commands(experiment_service: ExperimentService = Provide[Container.experiment_service]):
    """List experiments and the operations accepted by eval."""
    click.echo("experiments: " + ", ".join(experiment_service.experiments()))
    click.echo("operations: " + ", ".join(experiment_service.operations()))
