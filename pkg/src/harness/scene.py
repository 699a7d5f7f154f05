"""
Deterministic synthetic scenes with analytic ground truth.

Shapes are painted in saturated class colors on a white background. A pixel
(x, y) is treated as the unit square centred on (x + 0.5, y + 0.5); an ellipse
covers the pixels whose centres fall inside it, so rendered shapes are
symmetric about their analytic centre.
"""

from __future__ import annotations

import json
import logging
import math
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from tenacity import RetryError, retry, retry_if_exception_type, stop_after_attempt

from src.classify.colors import SATURATED_RGB, ColorClass
from src.raster.image import RasterImage
from src.segment.blobs import DEFAULT_MIN_AREA_PX

logger = logging.getLogger("chromaseg")

DEFAULT_PALETTE = (ColorClass.GREEN, ColorClass.RED, ColorClass.BLUE, ColorClass.BLACK, ColorClass.BLACK)
PLACEMENT_ATTEMPTS = 200
MAX_SIDE_PX = 120


class SceneSpecError(ValueError):
    pass


class _PlacementError(Exception):
    pass


class ShapeKind(str, Enum):
    RECTANGLE = "rectangle"
    ELLIPSE = "ellipse"


@dataclass(frozen=True)
class ShapeSpec:
    color: ColorClass
    kind: ShapeKind
    origin: tuple[int, int]
    size: tuple[int, int]

    @property
    def bbox(self) -> tuple[int, int, int, int]:
        x, y = self.origin
        w, h = self.size
        return (x, y, x + w - 1, y + h - 1)

    @property
    def analytic_centroid(self) -> tuple[float, float]:
        x, y = self.origin
        w, h = self.size
        return (x + w / 2 - 0.5, y + h / 2 - 0.5)

    @property
    def analytic_area(self) -> float:
        w, h = self.size
        if self.kind == ShapeKind.ELLIPSE:
            return math.pi * (w / 2) * (h / 2)
        return float(w * h)

    @classmethod
    def parse(cls, text: str) -> "ShapeSpec":
        """Parse ``color:kind:x,y:WxH`` (e.g. ``red:rect:100,100:50x50``)."""
        try:
            color_s, kind_s, origin_s, size_s = text.split(":")
            kind = {"rect": ShapeKind.RECTANGLE, "ellipse": ShapeKind.ELLIPSE}.get(kind_s) or ShapeKind(kind_s)
            x, y = (int(v) for v in origin_s.split(","))
            w, h = (int(v) for v in size_s.lower().split("x"))
            color = ColorClass.from_label(color_s)
        except ValueError as e:
            raise SceneSpecError(f"bad shape {text!r}: expected color:kind:x,y:WxH ({e})") from None
        return cls(color, kind, (x, y), (w, h))


@dataclass(frozen=True)
class SceneSpec:
    """
    Scene description. With no explicit ``shapes`` one shape per ``palette``
    entry is placed at random, seeded by ``seed``, keeping every pair of shapes
    more than ``min_gap_px`` apart and each shape at least ``min_area_px``.
    """

    seed: int = 0
    width: int = 640
    height: int = 480
    shapes: tuple[ShapeSpec, ...] = ()
    palette: tuple[ColorClass, ...] = DEFAULT_PALETTE
    min_gap_px: int = 10
    min_area_px: int = DEFAULT_MIN_AREA_PX


@dataclass(frozen=True)
class ShapeTruth:
    shape: ShapeSpec
    centroid: tuple[float, float]
    area_px: int
    bbox: tuple[int, int, int, int]

    def to_dict(self) -> dict:
        s = self.shape
        return {
            "color": s.color.label,
            "kind": s.kind.value,
            "origin": list(s.origin),
            "size": list(s.size),
            "centroid": list(self.centroid),
            "area_px": self.area_px,
            "analytic_area_px": s.analytic_area,
            "bbox": list(self.bbox),
        }


@dataclass(frozen=True)
class GroundTruth:
    seed: int
    width: int
    height: int
    shapes: tuple[ShapeTruth, ...] = field(default_factory=tuple)

    def to_json(self) -> str:
        doc = {
            "schema": 1,
            "seed": self.seed,
            "frame": {"w": self.width, "h": self.height},
            "shapes": [s.to_dict() for s in self.shapes],
        }
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def bbox_gap(a: tuple[int, int, int, int], b: tuple[int, int, int, int]) -> int:
    """Chebyshev distance between the closest pixels of two boxes (0 if they overlap)."""
    dx = max(0, b[0] - a[2], a[0] - b[2])
    dy = max(0, b[1] - a[3], a[1] - b[3])
    return max(dx, dy)


def shape_coverage(shape: ShapeSpec, width: int, height: int) -> np.ndarray:
    """Boolean (height, width) coverage of one shape."""
    cover = np.zeros((height, width), dtype=bool)
    x0, y0, x1, y1 = shape.bbox
    if shape.kind == ShapeKind.RECTANGLE:
        cover[y0:y1 + 1, x0:x1 + 1] = True
        return cover
    w, h = shape.size
    a, b = w / 2, h / 2
    cx, cy = x0 + a, y0 + b
    ys, xs = np.mgrid[y0:y1 + 1, x0:x1 + 1]
    inside = ((xs + 0.5 - cx) / a) ** 2 + ((ys + 0.5 - cy) / b) ** 2 <= 1.0
    cover[y0:y1 + 1, x0:x1 + 1] = inside
    return cover


def validate_scene_spec(spec: SceneSpec) -> list[str]:
    errors = []
    if spec.seed < 0:
        errors.append(f"seed must be >= 0, got {spec.seed}")
    if spec.width < 1 or spec.height < 1:
        errors.append(f"frame must be at least 1x1, got {spec.width}x{spec.height}")
        return errors
    for i, s in enumerate(spec.shapes):
        w, h = s.size
        x, y = s.origin
        if w < 1 or h < 1:
            errors.append(f"shape {i}: size must be >= 1x1, got {w}x{h}")
        elif x < 0 or y < 0 or x + w > spec.width or y + h > spec.height:
            errors.append(f"shape {i}: {w}x{h} at ({x},{y}) does not fit {spec.width}x{spec.height} frame")
        if not s.color.is_object:
            errors.append(f"shape {i}: color {s.color.label} is not an object class")
    if spec.min_gap_px < 0:
        errors.append(f"min_gap_px must be >= 0, got {spec.min_gap_px}")
    if spec.min_area_px < 1:
        errors.append(f"min_area_px must be >= 1, got {spec.min_area_px}")
    return errors


def _side_range(spec: SceneSpec, kind: ShapeKind) -> tuple[int, int]:
    # ellipses cover pi/4 of their box
    factor = 4 / math.pi if kind == ShapeKind.ELLIPSE else 1.0
    lo = math.ceil(math.sqrt(spec.min_area_px * factor)) + 2
    hi = max(lo, min(MAX_SIDE_PX, spec.width // 3, spec.height // 3))
    return lo, hi


def _auto_shapes(spec: SceneSpec, rng: np.random.Generator) -> tuple[ShapeSpec, ...]:
    placed: list[ShapeSpec] = []

    @retry(
        stop=stop_after_attempt(PLACEMENT_ATTEMPTS),
        retry=retry_if_exception_type(_PlacementError),
        reraise=False,
    )
    def _place(color: ColorClass) -> ShapeSpec:
        kind = ShapeKind.ELLIPSE if rng.random() < 0.5 else ShapeKind.RECTANGLE
        lo, hi = _side_range(spec, kind)
        if lo > spec.width or lo > spec.height:
            raise _PlacementError(f"minimum side {lo}px exceeds frame")
        w = int(rng.integers(lo, hi + 1))
        h = int(rng.integers(lo, hi + 1))
        if w > spec.width or h > spec.height:
            raise _PlacementError("shape larger than frame")
        x = int(rng.integers(0, spec.width - w + 1))
        y = int(rng.integers(0, spec.height - h + 1))
        cand = ShapeSpec(color, kind, (x, y), (w, h))
        if any(bbox_gap(cand.bbox, p.bbox) <= spec.min_gap_px for p in placed):
            raise _PlacementError("too close to a placed shape")
        return cand

    for color in spec.palette:
        try:
            placed.append(_place(color))
        except RetryError:
            raise SceneSpecError(
                f"could not place {color.label} shape #{len(placed) + 1} in "
                f"{spec.width}x{spec.height} after {PLACEMENT_ATTEMPTS} attempts"
            ) from None
    return tuple(placed)


def gen_scene(spec: SceneSpec) -> tuple[RasterImage, GroundTruth]:
    errors = validate_scene_spec(spec)
    if errors:
        raise SceneSpecError("; ".join(errors))

    rng = np.random.default_rng(spec.seed)
    shapes = spec.shapes or _auto_shapes(spec, rng)

    # later shapes paint over earlier ones; truth follows the final owner map
    owner = np.full((spec.height, spec.width), -1, dtype=np.int32)
    for i, s in enumerate(shapes):
        owner[shape_coverage(s, spec.width, spec.height)] = i

    bgr = np.full((spec.height, spec.width, 3), 255, dtype=np.uint8)
    truths = []
    for i, s in enumerate(shapes):
        ys, xs = np.nonzero(owner == i)
        r, g, b = SATURATED_RGB[s.color]
        bgr[ys, xs] = (b, g, r)
        if len(xs):
            box = (int(xs.min()), int(ys.min()), int(xs.max()), int(ys.max()))
        else:
            box = s.bbox
        truths.append(ShapeTruth(shape=s, centroid=s.analytic_centroid, area_px=int(len(xs)), bbox=box))
        if len(xs) < spec.min_area_px:
            logger.warning(f"[scene] shape {i} ({s.color.label}) covers {len(xs)} px < min_area {spec.min_area_px}")

    truth = GroundTruth(seed=spec.seed, width=spec.width, height=spec.height, shapes=tuple(truths))
    logger.debug(f"[scene] seed={spec.seed} {spec.width}x{spec.height} shapes={len(shapes)}")
    return RasterImage.from_bgr(bgr), truth
