"""Blob record and the shared component -> blob reduction."""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np
import pandas as pd

from src.classify.colors import ColorClass

# ceil(25 cm² / 2.25 mm² per px)
DEFAULT_MIN_AREA_PX = 1112


@dataclass(frozen=True)
class SegmentationConfig:
    gap_px: int = 10
    min_area_px: int = DEFAULT_MIN_AREA_PX


def validate_segmentation_config(cfg: SegmentationConfig) -> list[str]:
    errors = []
    for name in ("gap_px", "min_area_px"):
        v = getattr(cfg, name)
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            errors.append(f"segmentation.{name} must be an integer >= 1, got {v!r}")
    return errors


@dataclass(frozen=True)
class Blob:
    id: int
    color: ColorClass
    pixel_count: int
    sum_x: int
    sum_y: int
    min_x: int
    min_y: int
    max_x: int
    max_y: int

    @property
    def bbox(self) -> tuple[int, int, int, int]:
        return (self.min_x, self.min_y, self.max_x, self.max_y)


def filter_min_area(blobs: list[Blob], min_area_px: int) -> list[Blob]:
    """Keep blobs with at least ``min_area_px`` pixels; order and ids unchanged."""
    return [b for b in blobs if b.pixel_count >= min_area_px]


def blobs_from_components(
    xs: np.ndarray,
    ys: np.ndarray,
    colors: np.ndarray,
    components: np.ndarray,
    width: int,
    min_area_px: int,
) -> list[Blob]:
    """
    Reduce per-pixel component keys to Blob records.

    ``components`` holds one key per pixel (any integers, unique across
    colors). Blobs are ordered by their first pixel in raster order, passed
    through ``filter_min_area``, then renumbered 1..n.
    """
    if len(xs) == 0:
        return []
    df = pd.DataFrame({
        "component": components.astype(np.int64),
        "x": xs.astype(np.int64),
        "y": ys.astype(np.int64),
        "color": colors.astype(np.int64),
    })
    df["pos"] = df["y"] * width + df["x"]
    stats = df.groupby("component", sort=False).agg(
        color=("color", "first"),
        pixel_count=("x", "size"),
        sum_x=("x", "sum"),
        sum_y=("y", "sum"),
        min_x=("x", "min"),
        min_y=("y", "min"),
        max_x=("x", "max"),
        max_y=("y", "max"),
        first_pos=("pos", "min"),
    )
    stats = stats.sort_values("first_pos", kind="stable")

    blobs = []
    for i, row in enumerate(stats.itertuples(index=False), start=1):
        blobs.append(Blob(
            id=i,
            color=ColorClass(int(row.color)),
            pixel_count=int(row.pixel_count),
            sum_x=int(row.sum_x),
            sum_y=int(row.sum_y),
            min_x=int(row.min_x),
            min_y=int(row.min_y),
            max_x=int(row.max_x),
            max_y=int(row.max_y),
        ))
    kept = filter_min_area(blobs, min_area_px)
    return [replace(b, id=i) for i, b in enumerate(kept, start=1)]
