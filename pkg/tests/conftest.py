from __future__ import annotations

import logging
import sys
from pathlib import Path

import numpy as np
import pytest

# same trick as the root entrypoint: make `import src...` resolve to this checkout
REPO_ROOT = Path(__file__).resolve().parent.parent
if str(REPO_ROOT) not in sys.path:
    sys.path.insert(0, str(REPO_ROOT))

from src.classify.classifier import ClassMask  # noqa: E402
from src.classify.colors import SATURATED_RGB, ColorClass  # noqa: E402
from src.common.logging import LOGGER_NAME  # noqa: E402
from src.raster.image import RasterImage  # noqa: E402
from src.segment.blobs import Blob  # noqa: E402


def paint(width: int, height: int, rects: list[tuple[ColorClass, int, int, int, int]]) -> RasterImage:
    """White image with saturated rectangles given as (color, x, y, w, h)."""
    rgb = np.full((height, width, 3), 255, dtype=np.uint8)
    for color, x, y, w, h in rects:
        rgb[y:y + h, x:x + w] = SATURATED_RGB[color]
    return RasterImage.from_rgb(rgb)


def mask_with(width: int, height: int, rects: list[tuple[ColorClass, int, int, int, int]]) -> ClassMask:
    grid = np.full((height, width), ColorClass.BACKGROUND, dtype=np.uint8)
    for color, x, y, w, h in rects:
        grid[y:y + h, x:x + w] = color
    return ClassMask(grid)


def blob_from_pixels(pixels: list[tuple[int, int]], color: ColorClass = ColorClass.RED, blob_id: int = 1) -> Blob:
    xs = [p[0] for p in pixels]
    ys = [p[1] for p in pixels]
    return Blob(
        id=blob_id,
        color=color,
        pixel_count=len(pixels),
        sum_x=sum(xs),
        sum_y=sum(ys),
        min_x=min(xs),
        min_y=min(ys),
        max_x=max(xs),
        max_y=max(ys),
    )


def random_mask(rng: np.random.Generator, width: int, height: int, density: float) -> ClassMask:
    """Random grid: each pixel is an object class with probability ``density``."""
    objects = np.array([ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE, ColorClass.BLACK], dtype=np.uint8)
    grid = np.where(
        rng.random((height, width)) < density,
        objects[rng.integers(0, 4, size=(height, width))],
        np.uint8(ColorClass.BACKGROUND),
    ).astype(np.uint8)
    return ClassMask(grid)


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240607)


@pytest.fixture(autouse=True)
def _reset_logger():
    # CLI mains bind the handler to the current sys.stderr, which capture swaps per test
    yield
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
