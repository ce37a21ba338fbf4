from marshmallow import EXCLUDE, Schema, fields


class EstimateSchema(Schema):
    """
    Flattens a Monte Carlo Estimate into CSV columns.
    """
    class Meta:
        unknown = EXCLUDE

    mean = fields.Float(dump_only=True)
    std_error = fields.Float(dump_only=True)
    ci_low = fields.Method("get_ci_low", dump_only=True)
    ci_high = fields.Method("get_ci_high", dump_only=True)
    n_trials = fields.Int(dump_only=True)
    n_flagged = fields.Int(dump_only=True)

    def get_ci_low(self, estimate) -> float:
        return estimate.ci95[0]

    def get_ci_high(self, estimate) -> float:
        return estimate.ci95[1]


class CheckResultSchema(Schema):
    """
    One row of the validation report.
    """
    class Meta:
        unknown = EXCLUDE

    name = fields.Str(dump_only=True)
    passed = fields.Bool(dump_only=True)
    value = fields.Float(dump_only=True, allow_none=True)
    reference = fields.Float(dump_only=True, allow_none=True)
    tolerance = fields.Str(dump_only=True)
    detail = fields.Str(dump_only=True)
