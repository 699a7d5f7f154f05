"""
Object measurements.

Image frame: x grows to the right, y grows downward. A target with a smaller
y than the reference is *above* it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from src.segment.blobs import Blob


class CentroidPx(NamedTuple):
    x: float
    y: float


class Horizontal(str, Enum):
    LEFT = "left"
    RIGHT = "right"
    ALIGNED = "aligned"


class Vertical(str, Enum):
    ABOVE = "above"
    BELOW = "below"
    ALIGNED = "aligned"


class RelativePosition(NamedTuple):
    horizontal: Horizontal
    vertical: Vertical


@dataclass(frozen=True)
class Calibration:
    """Physical size of one pixel. Defaults: 1.5 mm side, 2.25 mm² area."""

    mm_per_px: float = 1.5

    @property
    def mm2_per_px(self) -> float:
        return self.mm_per_px * self.mm_per_px


def validate_calibration(cal: Calibration) -> list[str]:
    v = cal.mm_per_px
    if isinstance(v, bool) or not isinstance(v, (int, float)) or not math.isfinite(v) or v <= 0:
        return [f"calibration.mm_per_px must be a finite number > 0, got {v!r}"]
    return []


def centroid(b: Blob) -> CentroidPx:
    return CentroidPx(b.sum_x / b.pixel_count, b.sum_y / b.pixel_count)


def bbox(b: Blob) -> tuple[int, int, int, int]:
    return (b.min_x, b.min_y, b.max_x, b.max_y)


def distance_px(a: CentroidPx, b: CentroidPx) -> float:
    return math.hypot(b.x - a.x, b.y - a.y)


def px_to_mm(d: float, cal: Calibration) -> float:
    if d < 0:
        raise ValueError(f"length must be >= 0, got {d}")
    return d * cal.mm_per_px


def area_mm2(pixel_count: int, cal: Calibration) -> float:
    if pixel_count < 0:
        raise ValueError(f"pixel count must be >= 0, got {pixel_count}")
    return pixel_count * cal.mm2_per_px


def relative_position(reference: CentroidPx, target: CentroidPx) -> RelativePosition:
    if target.x < reference.x:
        h = Horizontal.LEFT
    elif target.x > reference.x:
        h = Horizontal.RIGHT
    else:
        h = Horizontal.ALIGNED
    if target.y < reference.y:
        v = Vertical.ABOVE
    elif target.y > reference.y:
        v = Vertical.BELOW
    else:
        v = Vertical.ALIGNED
    return RelativePosition(h, v)


def frame_coverage_m2(width: int, height: int, cal: Calibration) -> float:
    """Floor area seen by a width x height frame (640x480 at 1.5 mm/px -> 0.6912 m²)."""
    return width * height * cal.mm2_per_px / 1e6


def min_area_px_for(area_cm2: float, cal: Calibration) -> int:
    """Smallest pixel count whose calibrated area reaches ``area_cm2``."""
    # round first so 2500/2.25 style ratios don't pick up float noise before ceil
    return math.ceil(round(area_cm2 * 100.0 / cal.mm2_per_px, 9))
