import dataclasses
import inspect
import math
from collections.abc import Callable

import numpy as np

from plpf.constants import LN2, MIN_TRIALS, TOY_UPPER_BOUND
from plpf.error_handler.exceptions import DomainException, UnknownExperimentException
from plpf.models.experiment_result import ExperimentResult
from plpf.models.experiment_spec import ExperimentSpec
from plpf.models.fading_spec import FadingSpec
from plpf.models.network_config import NetworkConfig
from plpf.schemas.report_schema import EstimateSchema
from plpf.services.analytic.applications_service import ApplicationsService
from plpf.services.analytic.broadcast_service import BroadcastService
from plpf.services.analytic.connectivity_service import ConnectivityService
from plpf.services.analytic.path_loss_service import PathLossService
from plpf.services.experiment.experiment_service import ExperimentService
from plpf.services.fading_service import FadingService
from plpf.services.geometry_service import GeometryService
from plpf.services.monte_carlo.monte_carlo_service import MonteCarloService
from plpf.util import csv_util
from plpf.util.grid_util import parse_fading_grid, parse_grid
from plpf.util.logging_util import log_calls
from plpf.util.seed_util import child_stream
from plpf.util.statistic_util import max_connected_distance
from plpf.util.validation_util import validate_non_negative

# Default grids, as grid strings
DEFAULT_GRIDS = {
    "gain-surface": {"delta": "0:1.5:0.05", "m": "1,2,3,4,5"},
    "opt-rates": {"big_delta": "0.5:1.0:0.01"},
    "transport-capacity": {"d": "2", "big_delta": "0.5:1.0:0.01", "m": "1,inf"},
    "max-distance": {"s": "0.05:1.0:0.05", "m": "1"},
    "retrans-densities": {"s": "1", "n": "6", "x": "0:2:0.02", "m": "1"},
    "reach-probability": {"m": "1,2,3,5,10", "s": "0.05:5:0.05"},
    "reach-threshold": {"m": "1,2,3", "eps": "0.01,0.05,0.1"},
    "sample": {"s": "1", "m": "1", "n": "20"},
}

_INTEGER_KEYS = ("d", "n", "k")
_NON_TEXT_PARAMETERS = {"rng", "real", "plp", "statistic", "sampler"}


def _m_value(spec: FadingSpec) -> float:
    return math.inf if spec.is_degenerate else spec.m


def _flatten(value, key: str, rows: list[dict]) -> None:
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        for field in dataclasses.fields(value):
            child = field.name if key == "value" else f"{key}.{field.name}"
            _flatten(getattr(value, field.name), child, rows)
    elif isinstance(value, (tuple, list, np.ndarray)):
        for idx, item in enumerate(value):
            _flatten(item, f"{key}[{idx}]", rows)
    elif callable(value):
        return
    else:
        if isinstance(value, np.generic):
            value = value.item()
        rows.append({"key": key, "value": value})


@log_calls("plpf.services.experiment")
class ExperimentServiceImpl(ExperimentService):
    def __init__(self, fading_service: FadingService, geometry_service: GeometryService,
                 path_loss_service: PathLossService, connectivity_service: ConnectivityService,
                 broadcast_service: BroadcastService, applications_service: ApplicationsService,
                 monte_carlo_service: MonteCarloService):
        self.fading_service = fading_service
        self.geometry_service = geometry_service
        self.path_loss_service = path_loss_service
        self.connectivity_service = connectivity_service
        self.broadcast_service = broadcast_service
        self.applications_service = applications_service
        self.monte_carlo_service = monte_carlo_service
        self._experiments: dict[str, Callable[[ExperimentSpec], ExperimentResult]] = {
            "gain-surface": self._gain_surface,
            "opt-rates": self._opt_rates,
            "transport-capacity": self._transport_capacity,
            "max-distance": self._max_distance,
            "retrans-densities": self._retrans_densities,
            "reach-probability": self._reach_probability,
            "reach-threshold": self._reach_threshold,
            "sample": self._sample,
        }
        self._operations = {
            name: service
            for service in (fading_service, geometry_service, path_loss_service, connectivity_service,
                            broadcast_service, applications_service)
            for name in self._public_methods(service)
        }

    def experiments(self) -> tuple[str, ...]:
        return tuple(self._experiments)

    def run(self, spec: ExperimentSpec) -> ExperimentResult:
        experiment = self._experiments.get(spec.name)
        if experiment is None:
            raise UnknownExperimentException(spec.name, self._experiments)
        return experiment(spec)

    def write(self, result: ExperimentResult, out: str | None = None) -> str:
        if out:
            return csv_util.write_csv(out, result.columns, result.rows, result.header_lines)
        return csv_util.render_csv(result.columns, result.rows, result.header_lines)

    def operations(self) -> tuple[str, ...]:
        return tuple(sorted(self._operations))

    def evaluate(self, operation: str, params: dict) -> ExperimentResult:
        service = self._operations.get(operation)
        if service is None:
            raise UnknownExperimentException(operation, self._operations)
        method = getattr(service, operation)
        params = {key: str(val).strip() for key, val in params.items()}
        arguments = {}
        for name, parameter in inspect.signature(method).parameters.items():
            if name == "cfg":
                arguments[name] = self._network_from_params(params)
            elif name == "spec":
                arguments[name] = self._fading_from_params(params)
            elif name in params:
                arguments[name] = self._convert(name, params[name], parameter.annotation)
            elif parameter.default is inspect.Parameter.empty:
                raise DomainException(name, None, f"given as {name}=<value> for {operation}")

        rows: list[dict] = []
        _flatten(method(**arguments), "value", rows)
        header = [f"operation: {operation}"] + [f"{key}={params[key]}" for key in sorted(params)]
        return ExperimentResult(name=operation, columns=["key", "value"], rows=rows, header_lines=header)

    # --- experiments ---

    def _gain_surface(self, spec: ExperimentSpec) -> ExperimentResult:
        deltas = self._grid(spec, "delta")
        rows = []
        for fading in self._fadings(spec):
            for delta in deltas:
                delta = validate_non_negative("delta", delta)
                rows.append({"delta": delta, "m": _m_value(fading), "gain": self.fading_service.moment(fading, delta)})
        return ExperimentResult(spec.name, ["delta", "m", "gain"], rows, [
            "experiment: gain-surface",
            "delta: d/alpha; m: Nakagami parameter (inf = no fading)",
            "gain: E[f^delta], expected connected nodes with fading over without fading",
        ])

    def _opt_rates(self, spec: ExperimentSpec) -> ExperimentResult:
        d = spec.value("d", 2)
        rows = []
        for big_delta in self._grid(spec, "big_delta"):
            cfg = NetworkConfig.from_big_delta(d, big_delta)
            result = self.broadcast_service.broadcast_transport_capacity(cfg, FadingSpec.degenerate())
            y_lower = max(1.0 / big_delta - big_delta, 0.0)
            rows.append({
                "big_delta": big_delta,
                "bounded": result.bounded,
                "r_opt": result.r_opt,
                "r_opt_lower_bound": y_lower / LN2 if big_delta <= 1.0 else None,
                "s_opt": result.s_opt,
                "s_opt_lower_bound": math.expm1(y_lower) if big_delta <= 1.0 else None,
            })
        return ExperimentResult(spec.name, ["big_delta", "bounded", "r_opt", "r_opt_lower_bound", "s_opt",
                                            "s_opt_lower_bound"], rows, [
            "experiment: opt-rates",
            "big_delta: (d+1)/alpha; r_opt: capacity-maximizing rate in bits/s/Hz (empty when unbounded)",
            "r_opt_lower_bound: (1/big_delta - big_delta)/log 2; s_opt = 2^r_opt - 1",
        ])

    def _transport_capacity(self, spec: ExperimentSpec) -> ExperimentResult:
        rows = []
        for fading in self._fadings(spec):
            for d in self._grid(spec, "d"):
                for big_delta in self._grid(spec, "big_delta"):
                    cfg = NetworkConfig.from_big_delta(d, big_delta)
                    result = self.broadcast_service.broadcast_transport_capacity(cfg, fading)
                    rows.append({
                        "d": d,
                        "big_delta": big_delta,
                        "m": _m_value(fading),
                        "bounded": result.bounded,
                        "r_opt": result.r_opt,
                        "capacity": result.capacity,
                        "lower_bound": result.lower_bound,
                    })
        return ExperimentResult(spec.name, ["d", "big_delta", "m", "bounded", "r_opt", "capacity", "lower_bound"],
                                rows, [
            "experiment: transport-capacity",
            "capacity: max over R of R times the expected connected distance sum at s = 2^R - 1",
            "capacity at big_delta = 1 is the supremum approached as R -> 0; empty when unbounded",
        ])

    def _max_distance(self, spec: ExperimentSpec) -> ExperimentResult:
        with_mc = spec.trials >= MIN_TRIALS
        estimate_schema = EstimateSchema()
        mc_columns = [f"mc_{name}" for name in estimate_schema.fields]
        rows = []
        for cfg in self._networks(spec):
            for fading in self._fadings(spec):
                for s in self._grid(spec, "s"):
                    result = self.applications_service.max_distance(cfg, fading, s)
                    row = {"d": cfg.d, "alpha": cfg.alpha, "m": _m_value(fading), "s": s,
                           "expected_connected": result.expected_connected, "mean": result.mean,
                           "bound": result.bound}
                    if with_mc:
                        estimate = self.monte_carlo_service.estimate(
                            max_connected_distance(self.geometry_service, s), spec.trials, spec.seed, cfg, fading,
                            {"loss_bound": 1.0 / s})
                        row.update({f"mc_{key}": val for key, val in estimate_schema.dump(estimate).items()})
                    rows.append(row)
        columns = ["d", "alpha", "m", "s", "expected_connected", "mean", "bound"] + (mc_columns if with_mc else [])
        header = [
            "experiment: max-distance",
            "mean: E max over connected nodes of r = x^(1/alpha); bound: upper bound (d = alpha, Rayleigh)",
        ]
        if with_mc:
            header.append(f"mc_*: Monte Carlo estimate, trials={spec.trials} seed={spec.seed}")
        return ExperimentResult(spec.name, columns, rows, header)

    def _retrans_densities(self, spec: ExperimentSpec) -> ExperimentResult:
        rows = []
        for cfg in self._networks(spec):
            for fading in self._fadings(spec):
                for s in self._grid(spec, "s"):
                    for n in self._grid(spec, "n"):
                        ks = spec.values("k") or tuple(range(1, n + 1))
                        for k in ks:
                            law = self.applications_service.retransmission_distribution(cfg, s, k, n, fading)
                            for x in self._grid(spec, "x"):
                                rows.append({"d": cfg.d, "alpha": cfg.alpha, "m": _m_value(fading), "s": s, "n": n,
                                             "k": k, "x": x, "density": law.density(x),
                                             "expected_count": law.expected_count})
        return ExperimentResult(spec.name, ["d", "alpha", "m", "s", "n", "k", "x", "density", "expected_count"],
                                rows, [
            "experiment: retrans-densities",
            "density: intensity at path loss x of nodes receiving exactly k of n transmissions",
            "expected_count: total expected number of such nodes",
        ])

    def _reach_probability(self, spec: ExperimentSpec) -> ExperimentResult:
        rows = []
        for fading in self._fadings(spec):
            for s_tilde in self._grid(spec, "s"):
                result = self.broadcast_service.broadcast_reach_probability(_m_value(fading), s_tilde)
                rows.append({"m": result.m, "s_tilde": s_tilde, "probability": result.probability,
                             "lower_bound": result.lower_bound, "upper_bound": result.upper_bound})
        return ExperimentResult(spec.name, ["m", "s_tilde", "probability", "lower_bound", "upper_bound"], rows, [
            "experiment: reach-probability",
            "probability: chance that a node inside the no-fading range is reached under Nakagami-m fading",
            "s_tilde: s times the largest unfaded path loss in range",
        ])

    def _reach_threshold(self, spec: ExperimentSpec) -> ExperimentResult:
        rows = []
        for fading in self._fadings(spec):
            for eps in self._grid(spec, "eps"):
                result = self.broadcast_service.epsilon_reachability_threshold(_m_value(fading), eps)
                rows.append({"m": result.m, "eps": eps, "sufficient": result.sufficient, "exact": result.exact,
                             "quadratic": result.quadratic})
        return ExperimentResult(spec.name, ["m", "eps", "sufficient", "exact", "quadratic"], rows, [
            "experiment: reach-threshold",
            "exact: largest s_tilde with reach probability 1 - eps; sufficient: Taylor-bound threshold",
        ])

    def _sample(self, spec: ExperimentSpec) -> ExperimentResult:
        cfg = self._networks(spec)[0]
        fading = self._fadings(spec)[0]
        s = self._grid(spec, "s")[0]
        rng = child_stream(spec.seed, 0)
        mode = spec.value("mode", "ppp")
        if mode == "toy":
            upper = spec.value("upper", TOY_UPPER_BOUND)
            real = self.geometry_service.sample_uniform_toy(cfg, self._grid(spec, "n")[0], upper, fading, rng)
        else:
            real = self.geometry_service.sample_network(cfg, fading, 1.0 / s, rng)
        rows = self.geometry_service.realization_rows(real, s)
        return ExperimentResult(spec.name, ["i", "r", "x", "f", "xi", "connected"], rows, [
            f"experiment: sample ({mode})",
            f"d={cfg.d} alpha={cfg.alpha!r} fading={fading} s={s!r} seed={spec.seed}",
            "r: distance; x = r^alpha; f: fading mark; xi = x/f; connected: xi < 1/s",
        ])

    # --- helpers ---

    def _grid(self, spec: ExperimentSpec, key: str) -> tuple:
        if key in spec.grid:
            return spec.values(key)
        default = DEFAULT_GRIDS.get(spec.name, {}).get(key)
        if default is None:
            default = {"d": "2", "s": "1", "n": "1"}.get(key)
        if default is None:
            raise DomainException(key, None, f"given for experiment {spec.name}")
        return parse_grid(default, name=key, integer=key in _INTEGER_KEYS)

    def _fadings(self, spec: ExperimentSpec) -> tuple[FadingSpec, ...]:
        if "m" in spec.grid:
            return spec.fading_specs()
        return parse_fading_grid(DEFAULT_GRIDS.get(spec.name, {}).get("m", "1"))

    def _networks(self, spec: ExperimentSpec) -> list[NetworkConfig]:
        configs = []
        for d in self._grid(spec, "d"):
            if "delta" in spec.grid:
                configs.extend(NetworkConfig.from_delta(d, delta) for delta in spec.values("delta"))
            elif "big_delta" in spec.grid:
                configs.extend(NetworkConfig.from_big_delta(d, big) for big in spec.values("big_delta"))
            else:
                configs.extend(NetworkConfig(d=d, alpha=alpha) for alpha in spec.values("alpha", (2.0,)))
        return configs

    @staticmethod
    def _network_from_params(params: dict) -> NetworkConfig:
        d = parse_grid(params.get("d", "2"), name="d", integer=True)[0]
        if "delta" in params:
            return NetworkConfig.from_delta(d, parse_grid(params["delta"], name="delta")[0])
        big_delta = params.get("big_delta", params.get("Delta"))
        if big_delta is not None:
            return NetworkConfig.from_big_delta(d, parse_grid(big_delta, name="Delta")[0])
        return NetworkConfig(d=d, alpha=parse_grid(params.get("alpha", "2"), name="alpha")[0])

    @staticmethod
    def _fading_from_params(params: dict) -> FadingSpec:
        text = params.get("m", params.get("fading", "1"))
        return parse_fading_grid(text, name="m")[0]

    @staticmethod
    def _convert(name: str, text: str, annotation):
        kind = getattr(annotation, "__name__", None) or str(annotation)
        if "bool" in kind:
            if text.lower() not in ("1", "0", "true", "false", "yes", "no"):
                raise DomainException(name, text, "a boolean")
            return text.lower() in ("1", "true", "yes")
        if "str" in kind:
            return text
        return parse_grid(text, name=name, integer="int" in kind)[0]

    @staticmethod
    def _public_methods(service) -> list[str]:
        # operations on realizations or random streams have no text form
        return [name for name, method in inspect.getmembers(service, inspect.ismethod)
                if not name.startswith("_") and not _NON_TEXT_PARAMETERS & set(inspect.signature(method).parameters)]
