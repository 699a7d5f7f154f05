"""Per-channel histogram equalization (optional pre-filter before classification)."""

from __future__ import annotations

import numpy as np

from src.raster.image import RasterImage


def _equalization_lut(channel: np.ndarray) -> np.ndarray | None:
    """
    Lookup table for ``round((cdf(v) - cdf_min) / (N - cdf_min) * 255)``.

    Returns None when the channel holds a single intensity (cdf_min == N).
    Integer arithmetic keeps the half-up rounding exact.
    """
    n = int(channel.size)
    hist = np.bincount(channel.ravel(), minlength=256).astype(np.int64)
    cdf = np.cumsum(hist)
    cdf_min = int(cdf[np.flatnonzero(hist)[0]])
    den = n - cdf_min
    if den == 0:
        return None
    num = np.clip(cdf - cdf_min, 0, None) * 255
    lut = (2 * num + den) // (2 * den)
    return lut.astype(np.uint8)


def equalize_histogram(img: RasterImage) -> RasterImage:
    out = np.empty_like(img.pixels)
    for c in range(3):
        channel = img.pixels[:, :, c]
        lut = _equalization_lut(channel)
        out[:, :, c] = channel if lut is None else lut[channel]
    return RasterImage.from_bgr(out)
