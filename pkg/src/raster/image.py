"""In-memory raster image: 8-bit, three channels, BGR byte order, row-major."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np


class PixelBoundsError(IndexError):
    pass


class PixelRGB(NamedTuple):
    r: int
    g: int
    b: int


@dataclass(frozen=True, eq=False)
class RasterImage:
    """
    Immutable image backed by a read-only ``(height, width, 3)`` uint8 array in BGR order.

    ``data`` exposes the same bytes as a flat row-major sequence
    (length ``width * height * 3``). Build instances with ``from_bgr``,
    ``from_rgb``, ``from_bytes`` or ``blank`` rather than the constructor.
    """

    pixels: np.ndarray

    def __post_init__(self) -> None:
        px = self.pixels
        if px.dtype != np.uint8 or px.ndim != 3 or px.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) uint8 array, got {px.dtype} {px.shape}")
        if px.shape[0] < 1 or px.shape[1] < 1:
            raise ValueError(f"image dimensions must be >= 1, got {px.shape[1]}x{px.shape[0]}")
        if px.flags.writeable:
            px = px.copy()
            px.setflags(write=False)
            object.__setattr__(self, "pixels", px)

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def data(self) -> bytes:
        return self.pixels.tobytes()

    @property
    def rgb(self) -> np.ndarray:
        """(h, w, 3) view in red-green-blue order."""
        return self.pixels[:, :, ::-1]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RasterImage):
            return NotImplemented
        return self.pixels.shape == other.pixels.shape and bool(np.array_equal(self.pixels, other.pixels))

    @classmethod
    def from_bgr(cls, bgr: np.ndarray) -> "RasterImage":
        return cls(np.ascontiguousarray(bgr, dtype=np.uint8))

    @classmethod
    def from_rgb(cls, rgb: np.ndarray) -> "RasterImage":
        arr = np.asarray(rgb)
        if arr.ndim != 3 or arr.shape[2] != 3:
            raise ValueError(f"expected (h, w, 3) array, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() > 255):
            raise ValueError("channel values must be in [0, 255]")
        return cls(np.ascontiguousarray(arr[:, :, ::-1], dtype=np.uint8))

    @classmethod
    def from_bytes(cls, width: int, height: int, data: bytes) -> "RasterImage":
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        if len(data) != width * height * 3:
            raise ValueError(f"data length {len(data)} != {width}*{height}*3")
        arr = np.frombuffer(data, dtype=np.uint8).reshape(height, width, 3)
        return cls(arr.copy())

    @classmethod
    def blank(cls, width: int, height: int, rgb: tuple[int, int, int] = (255, 255, 255)) -> "RasterImage":
        if width < 1 or height < 1:
            raise ValueError(f"image dimensions must be >= 1, got {width}x{height}")
        r, g, b = rgb
        arr = np.empty((height, width, 3), dtype=np.uint8)
        arr[:, :] = (b, g, r)
        return cls(arr)


def get_pixel(img: RasterImage, x: int, y: int) -> PixelRGB:
    """Return the pixel at column ``x``, row ``y`` in RGB order."""
    if not (0 <= x < img.width and 0 <= y < img.height):
        raise PixelBoundsError(f"pixel ({x}, {y}) outside {img.width}x{img.height} image")
    b, g, r = img.pixels[y, x]
    return PixelRGB(int(r), int(g), int(b))
