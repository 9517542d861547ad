"""
    validated run description
"""
import math
import os.path as osp
from dataclasses import asdict, dataclass
from typing import Optional

import numpy as np

from Spectra.config.baseline import (AMPLITUDES, CROSSCHECK_TMAX_PER_GAMMA, DEFAULTS, FORMATS, MODELS,
                                     SCHEMES, TASKS, TMAX_PER_GAMMA)
from Spectra.dynamics.oracle import SolverGrid
from Spectra.models.emission import EmissionParams
from Spectra.models.reservoir import ReservoirModel
from Spectra.models.susceptibility import ProbeParams
from Spectra.utils.errors import ConfigError

CHOICES = dict(task=TASKS, model=MODELS, scheme=SCHEMES, amplitude=AMPLITUDES, format=FORMATS)
FLOAT_KEYS = ("beta", "dg1", "dg2", "dg", "gamma", "chi0", "omega", "delta", "grid_min", "grid_max", "tmax")
INT_KEYS = ("grid_points", "steps")
# text key -> dataclass field, where they differ
RENAMED = dict(format="output_format", out="output_path")


def _to_float(key, value):
    if value is None:
        return None
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigError("{}: expected a number, got '{}'".format(key, value))
    if not math.isfinite(number):
        raise ConfigError("{}: must be finite, got {}".format(key, value))
    return number


def _to_int(key, value):
    number = _to_float(key, value)
    if number != int(number):
        raise ConfigError("{}: expected an integer, got '{}'".format(key, value))
    return int(number)


def _require(condition, key, constraint):
    if not condition:
        raise ConfigError("{}: {}".format(key, constraint))


@dataclass(frozen=True)
class ScenarioConfig:
    task: str
    model: str
    beta: float
    dg1: Optional[float]
    dg2: Optional[float]
    dg: Optional[float]
    gamma: float
    chi0: float
    omega: float
    delta: float
    grid_min: float
    grid_max: float
    grid_points: int
    tmax: float
    steps: int
    scheme: str
    amplitude: str
    output_format: str
    output_path: Optional[str]

    @classmethod
    def from_mapping(cls, raw):
        """
            validate raw `key -> value` pairs (strings or numbers) and fill defaults
        """
        unknown = sorted(set(raw) - set(DEFAULTS))
        if unknown:
            raise ConfigError("unknown key '{}'".format(unknown[0]))
        values = dict(DEFAULTS)
        values.update({k: v for k, v in raw.items() if v is not None})
        if values["task"] is None:
            raise ConfigError("task required")
        for key, choices in CHOICES.items():
            if values[key] is not None:
                values[key] = str(values[key]).strip()
                _require(values[key] in choices, key, "must be one of {}, got '{}'".format(
                    "|".join(choices), values[key]))
        if values["model"] is None:
            raise ConfigError("model required (none|single|double)")
        for key in FLOAT_KEYS:
            values[key] = _to_float(key, values[key])
        for key in INT_KEYS:
            values[key] = _to_int(key, values[key])
        cls._check_model(values)
        cls._check_atom(values)
        _require(values["grid_points"] >= 2, "grid_points", "must be >= 2")
        _require(values["grid_min"] < values["grid_max"], "grid_min", "must be < grid_max")
        _require(values["steps"] >= 2, "steps", "must be >= 2")
        if values["tmax"] is None:
            per_gamma = CROSSCHECK_TMAX_PER_GAMMA if values["task"] == "crosscheck" else TMAX_PER_GAMMA
            values["tmax"] = per_gamma / values["gamma"] if values["gamma"] > 0 else per_gamma
        _require(values["tmax"] > 0, "tmax", "must be > 0")
        if values["out"] is not None:
            values["out"] = str(values["out"]).strip()
        kwargs = {RENAMED.get(key, key): value for key, value in values.items()}
        return cls(**kwargs)

    @staticmethod
    def _check_model(values):
        model = values["model"]
        if model == "double":
            for key in ("dg1", "dg2"):
                _require(values[key] is not None, key, "required for model=double")
            _require(values["dg"] is None, "dg", "only valid for model=single")
            _require(values["dg1"] < values["dg2"], "dg1/dg2", "gap width must be positive")
        elif model == "single":
            _require(values["dg"] is not None, "dg", "required for model=single")
            for key in ("dg1", "dg2"):
                _require(values[key] is None, key, "only valid for model=double")
        else:
            for key in ("dg1", "dg2"):
                _require(values[key] is None, key, "only valid for model=double")
            _require(values["dg"] is None, "dg", "only valid for model=single")
            _require(values["task"] != "density", "model", "task density needs a single or double band")
        _require(values["beta"] >= 0, "beta", "must be >= 0")

    @staticmethod
    def _check_atom(values):
        _require(values["gamma"] >= 0, "gamma", "must be >= 0")
        memory_only = values["task"] in ("dynamics", "density") and values["model"] != "none" and values["beta"] > 0
        _require(values["gamma"] > 0 or memory_only, "gamma", "must be > 0 for task {}".format(values["task"]))
        _require(values["chi0"] > 0, "chi0", "must be > 0")
        _require(values["omega"] > 0, "omega", "must be > 0")

    def reservoir(self) -> ReservoirModel:
        if self.model == "double":
            return ReservoirModel.double(self.dg1, self.dg2, beta=self.beta)
        if self.model == "single":
            return ReservoirModel.single(self.dg, beta=self.beta)
        return ReservoirModel(kind="none", beta=self.beta)

    def emission_params(self) -> EmissionParams:
        return EmissionParams(gamma=self.gamma, reservoir=self.reservoir())

    def probe_params(self) -> ProbeParams:
        return ProbeParams(gamma=self.gamma, reservoir=self.reservoir(), chi0=self.chi0)

    def solver_grid(self) -> SolverGrid:
        return SolverGrid(t_max=self.tmax, steps=self.steps, scheme=self.scheme)

    def detuning_grid(self) -> np.ndarray:
        return np.linspace(self.grid_min, self.grid_max, self.grid_points)

    def to_dict(self):
        """
            text keys -> values, None entries dropped
        """
        inverse = {v: k for k, v in RENAMED.items()}
        return {inverse.get(k, k): v for k, v in asdict(self).items() if v is not None}

    def to_text(self):
        """
            canonical `key = value` text; parse_config(to_text()) reproduces the config
        """
        lines = []
        for key, value in self.to_dict().items():
            lines.append("{} = {}".format(key, repr(value) if isinstance(value, float) else value))
        return "\n".join(lines) + "\n"

    def output_file(self, stem=None, directory=None):
        if self.output_path is not None:
            return self.output_path
        name = "{}.{}".format(stem or self.task, self.output_format)
        return osp.join(directory, name) if directory else name
