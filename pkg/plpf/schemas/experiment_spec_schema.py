from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, pre_load, validate, validates_schema

from plpf.configuration.config import Config
from plpf.error_handler.exceptions import DomainException
from plpf.models.experiment_spec import ExperimentSpec
from plpf.util.grid_util import parse_fading_grid, parse_grid

GRID_KEYS = ("d", "alpha", "delta", "big_delta", "m", "s", "eps", "n", "k", "x", "upper", "mode")
SAMPLING_MODES = ("ppp", "toy")


class GridField(fields.Field):
    """A grid string ("0.5", "1,2,5", "0.1:1:0.05") deserialized into a tuple of numbers."""

    def __init__(self, integer: bool = False, **kwargs):
        super().__init__(**kwargs)
        self.integer = integer

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_grid(value, name=attr, integer=self.integer)
        except DomainException as e:
            raise ValidationError(str(e)) from e


class FadingGridField(fields.Field):
    """A fading grid ("1,2,inf", "nakagami:m=2.0", "none") deserialized into FadingSpec values."""

    def _deserialize(self, value, attr, data, **kwargs):
        try:
            return parse_fading_grid(value, name=attr)
        except DomainException as e:
            raise ValidationError(str(e)) from e


class ExperimentSpecSchema(Schema):
    """
    Schema for the merged experiment configuration (config file values overridden by CLI flags).
    Every value arrives as text; grids are expanded here and the result is an ExperimentSpec.
    """
    class Meta:
        # Config files may carry keys for other experiments
        unknown = EXCLUDE

    @pre_load
    def strip_strings(self, data, **kwargs):
        """
        Trim whitespace and drop keys without a value (dotenv yields None for bare keys).
        """
        cleaned = {}
        for key, val in data.items():
            if isinstance(val, str):
                val = val.strip()
                if not val:
                    continue
            if val is None:
                continue
            cleaned[key] = val
        return cleaned

    name = fields.Str(
        required=True,
        validate=validate.Length(min=1),
        error_messages={"required": "Experiment name is required."}
    )

    d = GridField(integer=True, metadata={"description": "Dimension grid"})
    alpha = GridField(metadata={"description": "Path loss exponent grid"})
    delta = GridField(metadata={"description": "delta = d/alpha grid"})
    big_delta = GridField(data_key="Delta", metadata={"description": "Delta = (d+1)/alpha grid"})
    m = FadingGridField(metadata={"description": "Nakagami m grid; inf or none for no fading"})
    fading = FadingGridField(load_only=True, metadata={"description": "Alias of m"})
    s = GridField(metadata={"description": "Connectivity threshold grid (s̃ for reach-probability)"})
    eps = GridField()
    n = GridField(integer=True)
    k = GridField(integer=True)
    x = GridField(metadata={"description": "Path loss grid for density experiments"})
    upper = GridField(metadata={"description": "Upper end of the toy placement interval"})
    mode = fields.Str(
        validate=validate.OneOf(SAMPLING_MODES),
        error_messages={"invalid": "Mode must be 'ppp' or 'toy'."}
    )

    trials = fields.Int(
        validate=validate.Range(min=0),
        error_messages={"invalid": "Trials must be a non-negative integer."}
    )
    seed = fields.Int(
        validate=validate.Range(min=0),
        error_messages={"invalid": "Seed must be a non-negative integer."}
    )
    out = fields.Str(allow_none=True)

    @validates_schema
    def validate_exponent(self, data, **kwargs):
        given = [key for key in ("alpha", "delta", "big_delta") if key in data]
        if len(given) > 1:
            raise ValidationError("Give at most one of alpha, delta and Delta.", field_name=given[1])
        if "m" in data and "fading" in data:
            raise ValidationError("Give either m or fading, not both.", field_name="fading")

    @post_load
    def make_spec(self, data, **kwargs) -> ExperimentSpec:
        if "fading" in data:
            data["m"] = data.pop("fading")
        grid = {key: data[key] for key in GRID_KEYS if key in data and key != "mode"}
        if "mode" in data:
            grid["mode"] = (data["mode"],)
        return ExperimentSpec(name=data["name"], grid=grid, trials=data.get("trials", Config.DEFAULT_TRIALS),
                              seed=data.get("seed", Config.DEFAULT_SEED), out=data.get("out"))
