"""Experiment configuration, loaded from JSON with dBm-valued powers.

Every field has a default, so ``{}`` describes the baseline scenario
(M=64, N=200, 5 m BS-IRS distance, UE at 100 m) and runs all six
experiments.
"""

import json
from dataclasses import asdict, dataclass, field, replace

import numpy as np

from ..beamform import SCHEMES, AoOptions
from ..channel import PhysicalParams
from ..exceptions import InvalidConfigError
from ..geometry import SystemConfig
from ..training import default_rings

__all__ = [
    "EXPERIMENTS",
    "DEFAULT_SWEEPS",
    "ExperimentConfig",
    "config_from_dict",
    "configs_from_dict",
    "load_configs",
]

EXPERIMENTS = (
    "Convergence",
    "PowerDistribution",
    "BeamPattern",
    "SnrVsBsIrsDistance",
    "AccuracyVsUeDistance",
    "AchievableSnrVsUeDistance",
)

DEFAULT_SWEEPS = {
    "Convergence": [[200, 64], [100, 32], [200, 32], [400, 128]],
    "PowerDistribution": [5.0],
    "BeamPattern": [0.0],
    "SnrVsBsIrsDistance": [1, 2, 3, 4, 5, 7.5, 10, 12.5, 15, 20, 25, 30, 40, 50],
    "AccuracyVsUeDistance": [20, 40, 60, 80, 100, 120, 140, 160, 180, 200],
    "AchievableSnrVsUeDistance": [20, 40, 60, 80, 100, 120, 140, 160, 180, 200],
}

_SYSTEM_KEYS = {"M", "N", "bs_irs_distance", "bs_spacing", "irs_spacing"}
_PHYSICAL_KEYS = {"wavelength", "tx_power_dbm", "noise_power_dbm", "bs_gain", "irs_gain",
                  "ue_aperture"}
_AO_KEYS = {"epsilon", "max_iter", "restarts"}
_TRAINING_KEYS = {"K", "rings"}
_TOP_KEYS = {"experiment", "experiments", "system", "physical", "trials", "seed", "sweep",
             "schemes", "ue_distance", "ue_angle", "ao", "training", "pattern_points"}


@dataclass(frozen=True)
class ExperimentConfig:
    experiment: str
    system: SystemConfig = SystemConfig()
    physical: PhysicalParams = PhysicalParams()
    trials: int = 1000
    seed: int = 0
    sweep: tuple = ()
    schemes: tuple = SCHEMES
    ue_distance: float = 100.0
    ue_angle: float = 0.0
    ao_epsilon: float = 1e-6
    ao_max_iter: int = 500
    ao_restarts: int = 1
    training_K: int = 3
    training_rings: tuple = tuple(default_rings())
    pattern_points: int = 2001

    def __post_init__(self):
        if self.experiment not in EXPERIMENTS:
            raise InvalidConfigError(
                "experiment", f"unknown experiment {self.experiment!r}; expected one of {EXPERIMENTS}"
            )
        if not self.sweep:
            object.__setattr__(self, "sweep", _freeze(DEFAULT_SWEEPS[self.experiment]))
        _require_int("trials", self.trials, 1)
        _require_int("seed", self.seed, 0)
        _require_int("ao.max_iter", self.ao_max_iter, 1)
        _require_int("ao.restarts", self.ao_restarts, 1)
        _require_int("training.K", self.training_K, 1)
        _require_int("pattern_points", self.pattern_points, 2)
        if not self.ao_epsilon > 0:
            raise InvalidConfigError("ao.epsilon", f"must be > 0, got {self.ao_epsilon!r}")
        if not self.schemes:
            raise InvalidConfigError("schemes", "must list at least one scheme")
        for s in self.schemes:
            if s not in SCHEMES:
                raise InvalidConfigError("schemes", f"unknown scheme {s!r}; expected {SCHEMES}")
        if not self.ue_distance > 0:
            raise InvalidConfigError("ue_distance", f"must be > 0, got {self.ue_distance!r}")
        if not -1.0 <= self.ue_angle <= 1.0:
            raise InvalidConfigError("ue_angle", f"must lie in [-1, 1], got {self.ue_angle!r}")
        if not self.training_rings or min(self.training_rings) <= 0:
            raise InvalidConfigError("training.rings", "ring distances must be non-empty and > 0")
        self._check_sweep()

    def _check_sweep(self):
        if len(self.sweep) == 0:
            raise InvalidConfigError("sweep", "must be non-empty")
        if self.experiment == "Convergence":
            for pair in self.sweep:
                if len(pair) != 2 or any(int(v) != v or v < 1 for v in pair):
                    raise InvalidConfigError("sweep", f"expected [N, M] integer pairs, got {pair!r}")
            return
        values = np.asarray(self.sweep, dtype=float)
        if values.ndim != 1 or not np.all(np.isfinite(values)):
            raise InvalidConfigError("sweep", "expected a flat list of finite numbers")
        if self.experiment == "BeamPattern":
            if np.any(np.abs(values) > 1):
                raise InvalidConfigError("sweep", "codeword angles must lie in [-1, 1]")
        elif np.any(values <= 0):
            raise InvalidConfigError("sweep", "distances must be > 0")

    def ao_options(self):
        return AoOptions(epsilon=self.ao_epsilon, max_iter=self.ao_max_iter,
                         seed=self.seed, restarts=self.ao_restarts)

    def with_system(self, **changes):
        return replace(self, system=replace(self.system, **changes))

    def to_dict(self):
        """JSON-ready echo of the configuration, powers in dBm."""
        p = self.physical
        return {
            "experiment": self.experiment,
            "system": asdict(self.system),
            "physical": {
                "wavelength": p.wavelength,
                "tx_power_dbm": 10 * np.log10(p.tx_power) + 30,
                "noise_power_dbm": 10 * np.log10(p.noise_power) + 30,
                "bs_gain": p.bs_gain,
                "irs_gain": p.irs_gain,
                "ue_aperture": p.ue_aperture,
            },
            "trials": self.trials,
            "seed": self.seed,
            "sweep": _thaw(self.sweep),
            "schemes": list(self.schemes),
            "ue_distance": self.ue_distance,
            "ue_angle": self.ue_angle,
            "ao": {"epsilon": self.ao_epsilon, "max_iter": self.ao_max_iter,
                   "restarts": self.ao_restarts},
            "training": {"K": self.training_K, "rings": list(self.training_rings)},
            "pattern_points": self.pattern_points,
        }


def _freeze(sweep):
    return tuple(tuple(v) if isinstance(v, (list, tuple)) else v for v in sweep)


def _thaw(sweep):
    return [list(v) if isinstance(v, tuple) else v for v in sweep]


def _require_int(name, value, minimum):
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)) or value < minimum:
        raise InvalidConfigError(name, f"must be an integer >= {minimum}, got {value!r}")


def _unknown(section, data, allowed):
    extra = sorted(set(data) - allowed)
    if extra:
        prefix = f"{section}." if section else ""
        raise InvalidConfigError(prefix + extra[0], "unknown field")


def _section(data, name, allowed):
    sub = data.get(name, {})
    if not isinstance(sub, dict):
        raise InvalidConfigError(name, "must be a JSON object")
    _unknown(name, sub, allowed)
    return sub


def config_from_dict(data, experiment=None):
    """Build one :class:`ExperimentConfig` from a parsed JSON object."""
    if not isinstance(data, dict):
        raise InvalidConfigError("<root>", "config must be a JSON object")
    _unknown("", data, _TOP_KEYS)
    system = _section(data, "system", _SYSTEM_KEYS)
    physical = _section(data, "physical", _PHYSICAL_KEYS)
    ao = _section(data, "ao", _AO_KEYS)
    training = _section(data, "training", _TRAINING_KEYS)

    kwargs = {}
    for key in ("trials", "seed", "ue_distance", "ue_angle", "pattern_points"):
        if key in data:
            kwargs[key] = data[key]
    if "sweep" in data:
        if not isinstance(data["sweep"], list):
            raise InvalidConfigError("sweep", "must be a list")
        if len(data["sweep"]) == 0:
            raise InvalidConfigError("sweep", "must be non-empty")
        kwargs["sweep"] = _freeze(data["sweep"])
    if "schemes" in data:
        if not isinstance(data["schemes"], list):
            raise InvalidConfigError("schemes", "must be a list")
        kwargs["schemes"] = tuple(data["schemes"])
    for key in ("epsilon", "max_iter", "restarts"):
        if key in ao:
            kwargs[f"ao_{key}"] = ao[key]
    if "K" in training:
        kwargs["training_K"] = training["K"]
    if "rings" in training:
        rings = training["rings"]
        if not isinstance(rings, list):
            raise InvalidConfigError("training.rings", "must be a list")
        kwargs["training_rings"] = tuple(float(r) for r in rings)

    try:
        system_cfg = SystemConfig(**system)
    except InvalidConfigError as exc:
        raise InvalidConfigError(f"system.{exc.field}", str(exc).split(": ", 1)[1]) from None
    except TypeError as exc:
        raise InvalidConfigError("system", str(exc)) from None
    try:
        phys = dict(physical)
        phys_cfg = PhysicalParams.from_dbm(
            tx_power_dbm=phys.pop("tx_power_dbm", 40.0),
            noise_power_dbm=phys.pop("noise_power_dbm", -94.0),
            **phys,
        )
    except InvalidConfigError as exc:
        raise InvalidConfigError(f"physical.{exc.field}", str(exc).split(": ", 1)[1]) from None
    except TypeError as exc:
        raise InvalidConfigError("physical", str(exc)) from None

    name = experiment or data.get("experiment")
    if name is None:
        raise InvalidConfigError("experiment", "missing")
    try:
        return ExperimentConfig(experiment=name, system=system_cfg, physical=phys_cfg, **kwargs)
    except TypeError as exc:
        raise InvalidConfigError("<root>", str(exc)) from None


def configs_from_dict(data):
    """Expand a config object into one :class:`ExperimentConfig` per experiment.

    ``experiment`` selects a single experiment and ``experiments`` a list;
    with neither, all of :data:`EXPERIMENTS` run.
    """
    if not isinstance(data, dict):
        raise InvalidConfigError("<root>", "config must be a JSON object")
    if "experiment" in data and "experiments" in data:
        raise InvalidConfigError("experiments", "give either 'experiment' or 'experiments'")
    if "experiment" in data:
        names = [data["experiment"]]
    else:
        names = data.get("experiments", list(EXPERIMENTS))
        if not isinstance(names, list) or not names:
            raise InvalidConfigError("experiments", "must be a non-empty list")
    if "sweep" in data and len(names) > 1:
        raise InvalidConfigError("sweep", "a sweep can only be given for a single experiment")
    body = {k: v for k, v in data.items() if k not in ("experiment", "experiments")}
    return [config_from_dict(body, experiment=name) for name in names]


def load_configs(path):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise InvalidConfigError("<file>", f"invalid JSON: {exc}") from None
    return configs_from_dict(data)
