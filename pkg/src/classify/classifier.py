"""
Pixel classification by dominant channel.

Rule order, first match wins:

1. every channel <= ``black_max``                      -> BLACK
2. every channel >= ``white_min``                      -> BACKGROUND
3. dominant channel ``d`` >= ``min_dominant`` and
   ``d - max(other two) >= dominance_margin``          -> class of the dominant channel
4. otherwise                                           -> UNCLASSIFIED

Ties for the dominant channel resolve red, then green, then blue; a tie can
only pass rule 3 when ``dominance_margin`` is 0.
"""

from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from src.classify.colors import ColorClass
from src.raster.image import PixelRGB, RasterImage

logger = logging.getLogger("chromaseg")

_DOMINANT = (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE)


@dataclass(frozen=True)
class ClassifierConfig:
    min_dominant: int = 100
    dominance_margin: int = 50
    black_max: int = 60
    white_min: int = 180


def validate_classifier_config(cfg: ClassifierConfig) -> list[str]:
    """Check threshold invariants. Returns list of error messages."""
    errors = []
    for name in ("min_dominant", "dominance_margin", "black_max", "white_min"):
        v = getattr(cfg, name)
        if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v <= 255:
            errors.append(f"classifier.{name} must be an integer in [0, 255], got {v!r}")
    if errors:
        return errors
    if not cfg.black_max < cfg.white_min:
        errors.append(f"classifier.black_max ({cfg.black_max}) must be < white_min ({cfg.white_min})")
    if not cfg.min_dominant > cfg.black_max:
        errors.append(f"classifier.min_dominant ({cfg.min_dominant}) must be > black_max ({cfg.black_max})")
    return errors


@dataclass(frozen=True, eq=False)
class ClassMask:
    """Per-pixel classes as a read-only (height, width) uint8 array of ColorClass values."""

    classes: np.ndarray

    def __post_init__(self) -> None:
        if self.classes.ndim != 2 or self.classes.dtype != np.uint8:
            raise ValueError(f"expected (h, w) uint8 class grid, got {self.classes.dtype} {self.classes.shape}")
        if self.classes.flags.writeable:
            arr = self.classes.copy()
            arr.setflags(write=False)
            object.__setattr__(self, "classes", arr)

    @property
    def width(self) -> int:
        return int(self.classes.shape[1])

    @property
    def height(self) -> int:
        return int(self.classes.shape[0])

    def at(self, x: int, y: int) -> ColorClass:
        return ColorClass(int(self.classes[y, x]))

    def count(self, color: ColorClass) -> int:
        return int(np.count_nonzero(self.classes == color))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassMask):
            return NotImplemented
        return self.classes.shape == other.classes.shape and bool(np.array_equal(self.classes, other.classes))

    @classmethod
    def from_labels(cls, rows: list[str]) -> "ClassMask":
        """
        Build a mask from text rows, one char per pixel:
        ``.`` background, ``?`` unclassified, ``R G B K`` red/green/blue/black.
        """
        lookup = {
            ".": ColorClass.BACKGROUND,
            "?": ColorClass.UNCLASSIFIED,
            "R": ColorClass.RED,
            "G": ColorClass.GREEN,
            "B": ColorClass.BLUE,
            "K": ColorClass.BLACK,
        }
        grid = np.array([[lookup[ch] for ch in row] for row in rows], dtype=np.uint8)
        return cls(grid)


def _classify_bgr(bgr: np.ndarray, cfg: ClassifierConfig) -> np.ndarray:
    """Vectorized rules over a (..., 3) BGR block."""
    b, g, r = bgr[..., 0], bgr[..., 1], bgr[..., 2]
    hi = np.maximum(np.maximum(r, g), b)
    lo = np.minimum(np.minimum(r, g), b)
    # runner-up channel = median of the three
    mid = np.maximum(np.minimum(r, g), np.minimum(np.maximum(r, g), b))

    dominant = (hi >= cfg.min_dominant) & (hi.astype(np.int16) - mid >= cfg.dominance_margin)
    # first channel equal to the max wins: red, then green, then blue
    is_r = r == hi
    is_g = ~is_r & (g == hi)
    dom_class = np.where(is_r, ColorClass.RED, np.where(is_g, ColorClass.GREEN, ColorClass.BLUE)).astype(np.uint8)

    out = np.where(dominant, dom_class, np.uint8(ColorClass.UNCLASSIFIED)).astype(np.uint8)
    out[lo >= cfg.white_min] = ColorClass.BACKGROUND
    out[hi <= cfg.black_max] = ColorClass.BLACK
    return out


def classify_pixel(p: PixelRGB, cfg: ClassifierConfig) -> ColorClass:
    r, g, b = (int(v) for v in p)
    channels = (r, g, b)
    if max(channels) <= cfg.black_max:
        return ColorClass.BLACK
    if min(channels) >= cfg.white_min:
        return ColorClass.BACKGROUND
    d = max(channels)
    idx = channels.index(d)
    o = max(v for i, v in enumerate(channels) if i != idx)
    if d >= cfg.min_dominant and d - o >= cfg.dominance_margin:
        return _DOMINANT[idx]
    return ColorClass.UNCLASSIFIED


def classify_image(img: RasterImage, cfg: ClassifierConfig, workers: int = 1) -> ClassMask:
    """
    Classify every pixel. With ``workers > 1`` row bands are classified on a
    thread pool; bands are written back by position so the mask is identical
    to the sequential result.
    """
    px = img.pixels
    if workers <= 1 or img.height < 2:
        return ClassMask(_classify_bgr(px, cfg))

    bands = np.array_split(np.arange(img.height), min(workers, img.height))
    out = np.empty((img.height, img.width), dtype=np.uint8)

    def _run(rows: np.ndarray) -> None:
        lo, hi = int(rows[0]), int(rows[-1]) + 1
        out[lo:hi] = _classify_bgr(px[lo:hi], cfg)

    with ThreadPoolExecutor(max_workers=workers) as pool:
        list(pool.map(_run, [b for b in bands if len(b)]))
    logger.debug(f"[classify] {img.width}x{img.height} classified on {workers} workers")
    return ClassMask(out)
