"""
Per-stage throughput benchmark.

Each run pushes ``frames`` memory-resident raw-BGR frames through one stage
set and records wall-clock time. Stage sets are cumulative:

    baseline          decode + traverse every pixel, no algorithm
    classify          + dominant-channel classification
    classify+segment  + gap segmentation
    full              + measurement, report and annotation
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np
import pandas as pd

from src.common.rounding import round_to
from src.harness.scene import SceneSpec, gen_scene
from src.pipeline.pipeline import PipelineConfig, classify_stage, run_pipeline
from src.raster.ppm import load_raw, save_raw
from src.segment.segment import segment

logger = logging.getLogger("chromaseg")

STAGE_SETS = ("baseline", "classify", "classify+segment", "full")
DISTINCT_FRAMES = 8


class BenchError(ValueError):
    pass


@dataclass(frozen=True)
class BenchConfig:
    frames: int = 60
    runs: int = 10
    warmup: int = 5
    target_fps: float = 15.0
    camera_max_fps: float = 30.0


def validate_bench_config(cfg: BenchConfig) -> list[str]:
    errors = []
    for name, floor in (("frames", 1), ("runs", 1), ("warmup", 0)):
        v = getattr(cfg, name)
        if not isinstance(v, int) or isinstance(v, bool) or v < floor:
            errors.append(f"bench.{name} must be an integer >= {floor}, got {v!r}")
    for name in ("target_fps", "camera_max_fps"):
        v = getattr(cfg, name)
        if isinstance(v, bool) or not isinstance(v, (int, float)) or v <= 0:
            errors.append(f"bench.{name} must be > 0, got {v!r}")
    if not errors and cfg.target_fps > cfg.camera_max_fps:
        errors.append(f"bench.target_fps ({cfg.target_fps}) exceeds camera_max_fps ({cfg.camera_max_fps})")
    return errors


@dataclass(frozen=True)
class BenchRecord:
    elapsed: float
    frames: int

    def __post_init__(self) -> None:
        if self.frames < 1:
            raise BenchError(f"frames must be >= 1, got {self.frames}")
        if not self.elapsed > 0:
            raise BenchError(f"elapsed must be > 0, got {self.elapsed}")

    @property
    def fps(self) -> float:
        return self.frames / self.elapsed

    @property
    def sampling_period(self) -> float:
        return self.elapsed / self.frames


@dataclass(frozen=True)
class BenchSummary:
    stage_set: str
    mean_fps: float
    delta_vs_baseline: float | None
    percent_overhead: float | None
    margin_vs_target: float
    meets_target: bool

    def to_dict(self) -> dict:
        def r(v: float | None) -> float | None:
            return None if v is None else round_to(v, 4)
        return {
            "stage_set": self.stage_set,
            "mean_fps": r(self.mean_fps),
            "delta_fps": r(self.delta_vs_baseline),
            "percent": r(self.percent_overhead),
            "margin_vs_target": r(self.margin_vs_target),
            "meets_target": self.meets_target,
        }


def parse_stage_sets(text: str) -> list[str]:
    stages = [s.strip() for s in text.split(",") if s.strip()]
    if not stages:
        raise BenchError("no stage set given")
    unknown = [s for s in stages if s not in STAGE_SETS]
    if unknown:
        raise BenchError(f"unknown stage set(s) {unknown}; choose from {', '.join(STAGE_SETS)}")
    repeated = sorted({s for s in stages if stages.count(s) > 1})
    if repeated:
        raise BenchError(f"stage set(s) listed more than once: {repeated}")
    return stages


def summarize(records: Sequence[BenchRecord]) -> float:
    """Mean of the per-run (unrounded) fps values."""
    if not records:
        raise BenchError("cannot summarize an empty record list")
    return sum(r.fps for r in records) / len(records)


def overhead(baseline_mean: float, variant_mean: float) -> tuple[float, float]:
    """Return (fps lost, percent of baseline lost)."""
    if not baseline_mean > 0:
        raise BenchError(f"baseline mean must be > 0, got {baseline_mean}")
    delta = baseline_mean - variant_mean
    return delta, delta / baseline_mean * 100.0


def stage_processor(stage_set: str, cfg: PipelineConfig) -> Callable[[bytes], object]:
    if stage_set == "baseline":
        return lambda frame: int(load_raw(frame).pixels.sum(dtype=np.uint64))
    if stage_set == "classify":
        return lambda frame: classify_stage(load_raw(frame), cfg)
    if stage_set == "classify+segment":
        return lambda frame: segment(classify_stage(load_raw(frame), cfg), cfg.segmentation)
    if stage_set == "full":
        return lambda frame: run_pipeline(load_raw(frame), cfg)
    raise BenchError(f"unknown stage set {stage_set!r}")


def prepare_frames(scene: SceneSpec, count: int) -> list[bytes]:
    """Pre-render frames as raw-BGR bytes; auto scenes vary the seed per frame."""
    if scene.shapes:
        img, _ = gen_scene(scene)
        return [save_raw(img)]
    distinct = max(1, min(count, DISTINCT_FRAMES))
    out = []
    for i in range(distinct):
        img, _ = gen_scene(SceneSpec(
            seed=scene.seed + i,
            width=scene.width,
            height=scene.height,
            palette=scene.palette,
            min_gap_px=scene.min_gap_px,
            min_area_px=scene.min_area_px,
        ))
        out.append(save_raw(img))
    return out


def run_bench(
    stage_set: str,
    frames: int,
    runs: int,
    scene: SceneSpec,
    cfg: PipelineConfig = PipelineConfig(),
    warmup: int = 5,
    frame_data: Sequence[bytes] | None = None,
    clock: Callable[[], float] = time.perf_counter,
) -> list[BenchRecord]:
    if frames < 1:
        raise BenchError(f"frames must be >= 1, got {frames}")
    if runs < 1:
        raise BenchError(f"runs must be >= 1, got {runs}")
    process = stage_processor(stage_set, cfg)
    pool = list(frame_data) if frame_data is not None else prepare_frames(scene, frames)
    if not pool:
        raise BenchError("no frames to benchmark")

    records = []
    for run in range(runs):
        for i in range(warmup):
            process(pool[i % len(pool)])
        t0 = clock()
        for i in range(frames):
            process(pool[i % len(pool)])
        elapsed = max(clock() - t0, 1e-9)
        rec = BenchRecord(elapsed=elapsed, frames=frames)
        records.append(rec)
        logger.info(
            f"[bench] {stage_set} run {run + 1}/{runs}: {frames} frames "
            f"in {elapsed:.4f}s fps={rec.fps:.2f} sampling={rec.sampling_period:.4f}s"
        )
    return records


def build_summaries(results: dict[str, list[BenchRecord]], target_fps: float) -> list[BenchSummary]:
    baseline = summarize(results["baseline"]) if "baseline" in results else None
    out = []
    for stage_set, records in results.items():
        mean = summarize(records)
        delta = percent = None
        if baseline is not None:
            delta, percent = overhead(baseline, mean)
        out.append(BenchSummary(
            stage_set=stage_set,
            mean_fps=mean,
            delta_vs_baseline=delta,
            percent_overhead=percent,
            margin_vs_target=mean - target_fps,
            meets_target=mean >= target_fps,
        ))
    return out


def records_frame(results: dict[str, list[BenchRecord]]) -> pd.DataFrame:
    rows = []
    for stage_set, records in results.items():
        for i, r in enumerate(records, start=1):
            rows.append({
                "stage_set": stage_set,
                "run": i,
                "elapsed_s": r.elapsed,
                "frames": r.frames,
                "fps": r.fps,
                "sampling_s": r.sampling_period,
            })
    return pd.DataFrame(rows, columns=["stage_set", "run", "elapsed_s", "frames", "fps", "sampling_s"])
