"""
Configuration: built-in defaults < YAML file < command-line flags.

The file comes from ``--config`` or, failing that, the ``CHROMASEG_CONFIG``
environment variable. Every flag maps to one ``section.key`` of the file.
"""

from __future__ import annotations

import argparse
import os
from dataclasses import dataclass, field, fields
from pathlib import Path
from typing import Any, Mapping

import yaml

from src.classify.classifier import ClassifierConfig, validate_classifier_config
from src.harness.bench import BenchConfig, validate_bench_config
from src.measure.geometry import Calibration, validate_calibration
from src.pipeline.pipeline import PipelineConfig
from src.segment.blobs import SegmentationConfig, validate_segmentation_config

CONFIG_ENV_VAR = "CHROMASEG_CONFIG"


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class AppConfig:
    pipeline: PipelineConfig = field(default_factory=PipelineConfig)
    bench: BenchConfig = field(default_factory=BenchConfig)


# flag dest -> (section, key, type)
FLAG_KEYS: dict[str, tuple[str, str, type]] = {
    "min_dominant": ("classifier", "min_dominant", int),
    "dominance_margin": ("classifier", "dominance_margin", int),
    "black_max": ("classifier", "black_max", int),
    "white_min": ("classifier", "white_min", int),
    "gap_px": ("segmentation", "gap_px", int),
    "min_area_px": ("segmentation", "min_area_px", int),
    "mm_per_px": ("calibration", "mm_per_px", float),
    "equalize": ("pipeline", "equalize", bool),
    "all_pairs": ("pipeline", "all_pairs", bool),
    "workers": ("pipeline", "workers", int),
    "frames": ("bench", "frames", int),
    "runs": ("bench", "runs", int),
    "warmup": ("bench", "warmup", int),
    "target_fps": ("bench", "target_fps", float),
    "camera_max_fps": ("bench", "camera_max_fps", float),
}

_SECTIONS = {
    "classifier": ClassifierConfig,
    "segmentation": SegmentationConfig,
    "calibration": Calibration,
    "pipeline": PipelineConfig,
    "bench": BenchConfig,
}
_PIPELINE_SCALARS = ("equalize", "all_pairs", "workers")


def _section_keys(section: str) -> set[str]:
    if section == "pipeline":
        return set(_PIPELINE_SCALARS)
    return {f.name for f in fields(_SECTIONS[section])}


def validate_config_doc(doc: Any) -> list[str]:
    """Check a parsed YAML document has only known sections and keys."""
    if doc is None:
        return []
    if not isinstance(doc, dict):
        return [f"config root must be a mapping, got {type(doc).__name__}"]
    errors = []
    for section, body in doc.items():
        if section not in _SECTIONS:
            errors.append(f"unknown config section {section!r}")
            continue
        if body is None:
            continue
        if not isinstance(body, dict):
            errors.append(f"config section {section!r} must be a mapping")
            continue
        unknown = sorted(set(body) - _section_keys(section))
        if unknown:
            errors.append(f"unknown key(s) in {section!r}: {', '.join(map(str, unknown))}")
    return errors


def resolve_config_path(explicit: str | os.PathLike | None, env: Mapping[str, str] | None = None) -> Path | None:
    env = os.environ if env is None else env
    if explicit:
        return Path(explicit)
    if env.get(CONFIG_ENV_VAR):
        return Path(env[CONFIG_ENV_VAR])
    return None


def load_config_doc(path: Path | None) -> dict:
    if path is None:
        return {}
    try:
        doc = yaml.safe_load(Path(path).read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"cannot read config {path}: {e}") from e
    except yaml.YAMLError as e:
        raise ConfigError(f"invalid YAML in {path}: {e}") from e
    errors = validate_config_doc(doc)
    if errors:
        raise ConfigError(f"{path}: " + "; ".join(errors))
    return doc or {}


def _coerce(value: Any, typ: type, where: str) -> Any:
    if typ is bool:
        if isinstance(value, bool):
            return value
        raise ConfigError(f"{where} must be true/false, got {value!r}")
    if typ is float and isinstance(value, int) and not isinstance(value, bool):
        return float(value)
    if typ is int and isinstance(value, float) and value.is_integer():
        return int(value)
    if not isinstance(value, typ) or isinstance(value, bool):
        raise ConfigError(f"{where} must be {typ.__name__}, got {value!r}")
    return value


def build_config(doc: Mapping[str, Any], overrides: Mapping[str, Any] | None = None) -> AppConfig:
    """Merge defaults, a config document and flag overrides (None values are ignored)."""
    merged: dict[str, dict[str, Any]] = {s: dict(doc.get(s) or {}) for s in _SECTIONS}
    for dest, value in (overrides or {}).items():
        if value is None:
            continue
        section, key, _ = FLAG_KEYS[dest]
        merged[section][key] = value

    types = {(s, k): t for s, k, t in FLAG_KEYS.values()}
    typed = {
        s: {k: _coerce(v, types[(s, k)], f"{s}.{k}") for k, v in body.items()}
        for s, body in merged.items()
    }

    pipeline = PipelineConfig(
        classifier=ClassifierConfig(**typed["classifier"]),
        segmentation=SegmentationConfig(**typed["segmentation"]),
        calibration=Calibration(**typed["calibration"]),
        **typed["pipeline"],
    )
    cfg = AppConfig(pipeline=pipeline, bench=BenchConfig(**typed["bench"]))
    errors = validate_app_config(cfg)
    if errors:
        raise ConfigError("; ".join(errors))
    return cfg


def validate_app_config(cfg: AppConfig) -> list[str]:
    errors = []
    p = cfg.pipeline
    errors.extend(validate_classifier_config(p.classifier))
    errors.extend(validate_segmentation_config(p.segmentation))
    errors.extend(validate_calibration(p.calibration))
    if isinstance(p.workers, bool) or not isinstance(p.workers, int) or p.workers < 1:
        errors.append(f"pipeline.workers must be an integer >= 1, got {p.workers!r}")
    errors.extend(validate_bench_config(cfg.bench))
    return errors


def load_config(
    path: str | os.PathLike | None = None,
    overrides: Mapping[str, Any] | None = None,
    env: Mapping[str, str] | None = None,
) -> AppConfig:
    return build_config(load_config_doc(resolve_config_path(path, env)), overrides)


def add_config_arguments(parser: argparse.ArgumentParser, groups: tuple[str, ...]) -> None:
    """Register ``--config`` plus the override flags of the given sections."""
    parser.add_argument("--config", default=None, help=f"YAML config (default: ${CONFIG_ENV_VAR})")
    for dest, (section, _, typ) in FLAG_KEYS.items():
        if section not in groups:
            continue
        flag = "--" + dest.replace("_", "-")
        if typ is bool:
            parser.add_argument(flag, dest=dest, action=argparse.BooleanOptionalAction, default=None)
        else:
            parser.add_argument(flag, dest=dest, type=typ, default=None)


def config_from_args(args: argparse.Namespace) -> AppConfig:
    overrides = {dest: getattr(args, dest) for dest in FLAG_KEYS if hasattr(args, dest)}
    return load_config(args.config, overrides)

