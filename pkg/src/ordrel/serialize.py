"""JSON loading and validation for all configuration objects.

Everything entering from a file passes jsonschema validation (unknown
fields rejected) before any object is constructed; theorem scenarios get a
second, per-id structural pass here because their shape depends on the id.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import jsonschema

from .copulas import Generator, generator_from_json
from .distributions import Distribution, dist_from_json
from .errors import ConfigError
from .grids import GridSpec
from .harness import THEOREM_IDS, TheoremCase
from .systems import SystemSpec


@lru_cache(maxsize=1)
def _schema() -> dict:
    path = resources.files("ordrel.schemas").joinpath("ordrel.schema.json")
    return json.loads(path.read_text())


@lru_cache(maxsize=None)
def _validator(def_name: str) -> jsonschema.Draft202012Validator:
    schema = {"$ref": f"#/$defs/{def_name}", "$defs": _schema()["$defs"]}
    return jsonschema.Draft202012Validator(schema)


def validate(obj, def_name: str) -> None:
    errors = sorted(_validator(def_name).iter_errors(obj), key=str)
    if errors:
        first = errors[0]
        path = "/".join(str(p) for p in first.absolute_path) or "<root>"
        raise ConfigError(f"invalid {def_name} at {path}: {first.message}")


def load_dist(obj: dict) -> Distribution:
    validate(obj, "dist")
    return dist_from_json(obj)


def load_system(obj: dict) -> SystemSpec:
    validate(obj, "system")
    return SystemSpec.from_json(obj)


def load_dist_or_system(obj: dict):
    """Auto-detect a DistSpec ("family") vs a SystemSpec ("kind")."""
    if not isinstance(obj, dict):
        raise ConfigError("spec must be a JSON object")
    if "kind" in obj:
        from .systems import OrderStatDist

        return OrderStatDist(load_system(obj))
    return load_dist(obj)


def load_generator(obj: dict) -> Generator:
    validate(obj, "generator")
    if obj["family"] != "independence" and "theta" not in obj:
        raise ConfigError(f"generator family {obj['family']!r} needs theta")
    return generator_from_json(obj)


def load_grid(obj: dict) -> GridSpec:
    validate(obj, "grid")
    return GridSpec.from_json(obj)


_SCENARIO_KEYS = {
    "T1": {"system_x", "system_y"},
    "T2": {"system_x", "system_y"},
    "T3": {"system_x", "system_y"},
    "T4": {"system_x", "system_y"},
    "T5": {"system_x", "system_y"},
    "C1": {"baseline_x", "baseline_y", "outlier_x", "outlier_y"},
    "C2": {"baseline_x", "baseline_y", "outlier_x", "outlier_y"},
    "T6": {"theta", "alphas", "alphas_star"},
    "T7": {"generator_x", "generator_y", "baseline_x", "baseline_y",
           "shifts_x", "shifts_y", "branch"},
    "T8": {"generator_x", "generator_y", "baseline_x", "baseline_y",
           "shifts_x", "shifts_y", "branch"},
    "Ex1": {"shape", "rates_x", "rates_y"},
    "Ex2": {"alphas_x", "alphas_y"},
}

_OPTIONAL_SCENARIO_IDS = ("Ex1", "Ex2")  # defaults fill missing fields
_OPTIONAL_KEYS = {"T7": {"branch"}, "T8": {"branch"}}


def load_case(obj: dict) -> TheoremCase:
    validate(obj, "theorem_case")
    tid = obj["id"]
    raw = obj["scenario"]
    allowed = _SCENARIO_KEYS[tid]
    unknown = set(raw) - allowed
    if unknown:
        raise ConfigError(f"{tid} scenario has unknown fields: {sorted(unknown)}")
    if tid not in _OPTIONAL_SCENARIO_IDS:
        missing = allowed - set(raw) - _OPTIONAL_KEYS.get(tid, set())
        if missing:
            raise ConfigError(f"{tid} scenario missing fields: {sorted(missing)}")
    scenario = {}
    try:
        for key, value in raw.items():
            if key.startswith("system_"):
                scenario[key] = load_system(value)
            elif key.startswith("generator_"):
                scenario[key] = load_generator(value)
            elif key.startswith("baseline_"):
                scenario[key] = load_dist(value)
            elif key.startswith("outlier_"):
                validate(value, "outlier_block")
                scenario[key] = dict(value)
            else:
                scenario[key] = value
    except ConfigError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"bad {tid} scenario: {exc}") from exc
    grids = {k: load_grid(v) for k, v in obj.get("grids", {}).items()}
    return TheoremCase(tid, scenario, grids=grids, n=obj.get("n", 256))


def load_scan_config(obj: dict) -> dict:
    validate(obj, "scan_config")
    box = None
    if "box" in obj:
        box = {k: (float(v[0]), float(v[1])) for k, v in obj["box"].items()}
    return {
        "theorem_id": obj["id"],
        "budget": obj["budget"],
        "strategy": obj.get("strategy", "random"),
        "seed": obj.get("seed", 0),
        "grid_n": obj.get("grid_n", 96),
        "box": box,
    }


def read_json_file(path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ConfigError(f"malformed JSON in {path}: {exc}") from exc


assert set(_SCENARIO_KEYS) == set(THEOREM_IDS)
