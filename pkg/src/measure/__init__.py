"""Centroids, extents, distances and pixel-to-millimetre calibration."""

from src.measure.geometry import (
    Calibration,
    CentroidPx,
    Horizontal,
    RelativePosition,
    Vertical,
    area_mm2,
    bbox,
    centroid,
    distance_px,
    frame_coverage_m2,
    min_area_px_for,
    px_to_mm,
    relative_position,
    validate_calibration,
)

__all__ = [
    "Calibration",
    "CentroidPx",
    "Horizontal",
    "RelativePosition",
    "Vertical",
    "area_mm2",
    "bbox",
    "centroid",
    "distance_px",
    "frame_coverage_m2",
    "min_area_px_for",
    "px_to_mm",
    "relative_position",
    "validate_calibration",
]
