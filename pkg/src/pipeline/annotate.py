"""Annotated output image: saturated class colors, obstacle frames, centroid marks."""

from __future__ import annotations

import numpy as np

from src.classify.classifier import ClassifierConfig, ClassMask, classify_image
from src.classify.colors import OBJECT_CLASSES, SATURATED_RGB, ColorClass
from src.common.rounding import round_half_up
from src.pipeline.report import SceneReport
from src.raster.image import RasterImage

# rgb; both fall outside every class under the default thresholds
OUTLINE_RGB = (255, 255, 0)
CENTROID_RGB = (255, 0, 255)


def _bgr(rgb: tuple[int, int, int]) -> tuple[int, int, int]:
    return (rgb[2], rgb[1], rgb[0])


def _draw_frame(px: np.ndarray, box: tuple[int, int, int, int], rgb: tuple[int, int, int]) -> None:
    h, w = px.shape[:2]
    x0, y0, x1, y1 = box
    x0, y0 = max(x0 - 1, 0), max(y0 - 1, 0)
    x1, y1 = min(x1 + 1, w - 1), min(y1 + 1, h - 1)
    color = _bgr(rgb)
    px[y0, x0:x1 + 1] = color
    px[y1, x0:x1 + 1] = color
    px[y0:y1 + 1, x0] = color
    px[y0:y1 + 1, x1] = color


def _draw_cross(px: np.ndarray, cx: int, cy: int, rgb: tuple[int, int, int]) -> None:
    h, w = px.shape[:2]
    color = _bgr(rgb)
    for dx, dy in ((0, 0), (-1, 0), (1, 0), (0, -1), (0, 1)):
        x, y = cx + dx, cy + dy
        if 0 <= x < w and 0 <= y < h:
            px[y, x] = color


def recolor(img: RasterImage, mask: ClassMask) -> np.ndarray:
    """Copy of the BGR pixels with every object-class pixel set to its saturated color."""
    px = img.pixels.copy()
    for color in OBJECT_CLASSES:
        px[mask.classes == color] = _bgr(SATURATED_RGB[color])
    return px


def annotate(
    img: RasterImage,
    report: SceneReport,
    mask: ClassMask | None = None,
    classifier: ClassifierConfig = ClassifierConfig(),
) -> RasterImage:
    """
    Render the detection result on top of ``img``.

    Pixels of the four object classes become their saturated color, each black
    object (obstacle) gets a 1-px frame one pixel outside its bbox, clamped to
    the image, and every object centroid gets a 3x3 cross. ``mask`` defaults to
    re-classifying ``img`` with ``classifier``.
    """
    if mask is None:
        mask = classify_image(img, classifier)
    px = recolor(img, mask)
    for obj in report.objects:
        if obj.color == ColorClass.BLACK:
            _draw_frame(px, obj.bbox, OUTLINE_RGB)
    for obj in report.objects:
        _draw_cross(px, round_half_up(obj.centroid_px.x), round_half_up(obj.centroid_px.y), CENTROID_RGB)
    return RasterImage.from_bgr(px)
