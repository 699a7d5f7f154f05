from __future__ import annotations

import argparse

import pytest
import yaml

from src.common.config import (
    CONFIG_ENV_VAR,
    FLAG_KEYS,
    AppConfig,
    ConfigError,
    add_config_arguments,
    config_from_args,
    load_config,
)
from src.common.paths import ProjectPaths
from tests.conftest import REPO_ROOT

# dest -> (default, file value, flag value)
VALUES = {
    "min_dominant": (100, 110, 120),
    "dominance_margin": (50, 40, 30),
    "black_max": (60, 50, 40),
    "white_min": (180, 190, 200),
    "gap_px": (10, 5, 3),
    "min_area_px": (1112, 500, 9),
    "mm_per_px": (1.5, 2.0, 0.5),
    "equalize": (False, True, False),
    "all_pairs": (False, True, False),
    "workers": (1, 2, 4),
    "frames": (60, 30, 10),
    "runs": (10, 5, 3),
    "warmup": (5, 2, 0),
    "target_fps": (15.0, 10.0, 12.5),
    "camera_max_fps": (30.0, 60.0, 25.0),
}


def lookup(cfg: AppConfig, dest: str):
    section, key, _ = FLAG_KEYS[dest]
    if section == "bench":
        return getattr(cfg.bench, key)
    if section == "pipeline":
        return getattr(cfg.pipeline, key)
    return getattr(getattr(cfg.pipeline, section), key)


def write_config(tmp_path, doc) -> str:
    path = tmp_path / "chromaseg.yaml"
    path.write_text(yaml.safe_dump(doc), encoding="utf-8")
    return str(path)


def test_every_flag_has_a_precedence_case():
    assert set(VALUES) == set(FLAG_KEYS)


def test_defaults_without_file():
    assert load_config(None, env={}) == AppConfig()


def test_bundled_config_matches_builtin_defaults():
    path = ProjectPaths(REPO_ROOT).default_config
    assert load_config(path, env={}) == AppConfig()


@pytest.mark.parametrize("dest", sorted(VALUES))
def test_flag_beats_file_beats_default(tmp_path, dest):
    default, file_value, flag_value = VALUES[dest]
    section, key, _ = FLAG_KEYS[dest]
    path = write_config(tmp_path, {section: {key: file_value}})

    assert lookup(load_config(None, env={}), dest) == default
    assert lookup(load_config(path, env={}), dest) == file_value
    assert lookup(load_config(path, {dest: flag_value}, env={}), dest) == flag_value
    assert lookup(load_config(None, {dest: flag_value}, env={}), dest) == flag_value


def test_none_override_means_not_given(tmp_path):
    path = write_config(tmp_path, {"segmentation": {"gap_px": 4}})
    assert load_config(path, {"gap_px": None}, env={}).pipeline.segmentation.gap_px == 4


def test_environment_variable_supplies_file(tmp_path):
    env_path = write_config(tmp_path, {"segmentation": {"gap_px": 7}})
    other = tmp_path / "other.yaml"
    other.write_text("segmentation:\n  gap_px: 2\n", encoding="utf-8")
    assert load_config(None, env={CONFIG_ENV_VAR: env_path}).pipeline.segmentation.gap_px == 7
    assert load_config(other, env={CONFIG_ENV_VAR: env_path}).pipeline.segmentation.gap_px == 2


def test_whole_numbers_in_yaml_are_accepted_for_either_type(tmp_path):
    path = write_config(tmp_path, {"segmentation": {"gap_px": 5.0}, "calibration": {"mm_per_px": 2}})
    cfg = load_config(path, env={})
    assert cfg.pipeline.segmentation.gap_px == 5
    assert cfg.pipeline.calibration.mm_per_px == 2.0


@pytest.mark.parametrize(
    "text",
    [
        "segmentation:\n  gap: 3\n",
        "colour:\n  black_max: 3\n",
        "segmentation: [1, 2]\n",
        "- 1\n- 2\n",
        "segmentation:\n  gap_px: ten\n",
        "pipeline:\n  equalize: 1\n",
        "classifier:\n  black_max: 200\n",
        "calibration:\n  mm_per_px: 0\n",
        "segmentation: {gap_px: 3\n",
        "bench:\n  target_fps: 45\n",
    ],
)
def test_bad_config_documents(tmp_path, text):
    path = tmp_path / "bad.yaml"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigError):
        load_config(path, env={})


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "absent.yaml", env={})


def test_invalid_flag_value():
    with pytest.raises(ConfigError):
        load_config(None, {"gap_px": 0}, env={})


def test_argument_groups_register_flags(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    parser = argparse.ArgumentParser()
    add_config_arguments(parser, ("segmentation", "pipeline"))
    args = parser.parse_args(["--gap-px", "4", "--equalize"])
    assert not hasattr(args, "black_max")
    cfg = config_from_args(args)
    assert cfg.pipeline.segmentation.gap_px == 4
    assert cfg.pipeline.equalize is True
    args = parser.parse_args(["--no-equalize"])
    assert config_from_args(args).pipeline.equalize is False
