"""Raster images: BGR storage, PPM / raw-BGR codecs, histogram equalization."""

from src.raster.image import PixelBoundsError, PixelRGB, RasterImage, get_pixel
from src.raster.ppm import (
    HeaderError,
    ImageFormatError,
    MaxvalError,
    TruncatedDataError,
    UnsupportedMagicError,
    iter_ppm_frames,
    load_ppm,
    load_raw,
    read_image,
    save_ppm,
    save_raw,
)
from src.raster.equalize import equalize_histogram

__all__ = [
    "HeaderError",
    "ImageFormatError",
    "MaxvalError",
    "PixelBoundsError",
    "PixelRGB",
    "RasterImage",
    "TruncatedDataError",
    "UnsupportedMagicError",
    "equalize_histogram",
    "get_pixel",
    "iter_ppm_frames",
    "load_ppm",
    "load_raw",
    "read_image",
    "save_ppm",
    "save_raw",
]
