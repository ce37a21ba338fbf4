import pytest
from marshmallow import ValidationError

from plpf.configuration.config import Config
from plpf.models.fading_spec import FadingSpec
from plpf.schemas.experiment_spec_schema import ExperimentSpecSchema


@pytest.fixture
def schema():
    return ExperimentSpecSchema()


def test_load_expands_grids(schema):
    spec = schema.load({"name": "gain-surface", "delta": " 0.5, 1 ", "m": "1,inf", "seed": "3", "trials": "0"})
    assert spec.name == "gain-surface"
    assert spec.grid["delta"] == (0.5, 1.0)
    assert spec.grid["m"] == (FadingSpec.rayleigh(), FadingSpec.degenerate())
    assert spec.seed == 3
    assert spec.trials == 0
    assert spec.out is None


def test_load_ranges_and_integer_grids(schema):
    spec = schema.load({"name": "retrans-densities", "x": "0:1:0.25", "n": "3", "k": "1,2"})
    assert spec.grid["x"] == (0.0, 0.25, 0.5, 0.75, 1.0)
    assert spec.grid["n"] == (3,)
    assert spec.grid["k"] == (1, 2)


def test_defaults_and_ignored_keys(schema):
    spec = schema.load({"name": "sample", "colour": "blue", "s": "", "out": None})
    assert spec.grid == {}
    assert spec.seed == Config.DEFAULT_SEED
    assert spec.trials == Config.DEFAULT_TRIALS


def test_big_delta_and_fading_alias(schema):
    spec = schema.load({"name": "transport-capacity", "Delta": "0.5:0.6:0.1", "fading": "nakagami:m=2.0,none",
                        "mode": "toy"})
    assert spec.grid["big_delta"] == (0.5, 0.6)
    assert spec.grid["m"] == (FadingSpec.nakagami(2.0), FadingSpec.degenerate())
    assert spec.grid["mode"] == ("toy",)


@pytest.mark.parametrize("payload, field", [
    ({}, "name"),
    ({"name": "sample", "seed": "-1"}, "seed"),
    ({"name": "sample", "trials": "many"}, "trials"),
    ({"name": "sample", "mode": "grid"}, "mode"),
    ({"name": "sample", "n": "2.5"}, "n"),
    ({"name": "sample", "s": "0:1"}, "s"),
    ({"name": "sample", "m": "0.2"}, "m"),
    ({"name": "sample", "m": "lognormal"}, "m"),
    ({"name": "sample", "alpha": "4", "delta": "0.5"}, "delta"),
    ({"name": "sample", "m": "1", "fading": "none"}, "fading"),
])
def test_invalid_payloads(schema, payload, field):
    with pytest.raises(ValidationError) as err:
        schema.load(payload)
    assert field in err.value.messages


def test_missing_name_message(schema):
    with pytest.raises(ValidationError) as err:
        schema.load({"seed": "1"})
    assert err.value.messages["name"] == ["Experiment name is required."]
