"""Validation functions for scene reports."""

from __future__ import annotations

import math

from src.pipeline.report import SceneReport


def validate_distance_refs(report: SceneReport) -> list[str]:
    """Check every distance entry points at existing object ids."""
    errors = []
    ids = {o.id for o in report.objects}
    if report.reference_id is not None and report.reference_id not in ids:
        errors.append(f"reference_id {report.reference_id} not among object ids")
    for d in report.distances:
        missing = [i for i in (d.from_id, d.to_id) if i not in ids]
        if missing:
            errors.append(f"distance {d.from_id}->{d.to_id} references unknown ids {missing}")
    return errors


def validate_centroids(report: SceneReport) -> list[str]:
    """Check centroids are finite and inside their bbox."""
    errors = []
    for o in report.objects:
        x, y = o.centroid_px
        x0, y0, x1, y1 = o.bbox
        if not (math.isfinite(x) and math.isfinite(y)):
            errors.append(f"object {o.id}: non-finite centroid ({x}, {y})")
        elif not (x0 <= x <= x1 and y0 <= y <= y1):
            errors.append(f"object {o.id}: centroid ({x:.2f}, {y:.2f}) outside bbox {o.bbox}")
    return errors


def validate_calibration_consistency(report: SceneReport, tol: float = 1e-9) -> list[str]:
    """Check mm values agree with px values under the report calibration."""
    errors = []
    cal = report.calibration
    for o in report.objects:
        if abs(o.area_mm2 - o.area_px * cal.mm2_per_px) > tol * max(1.0, o.area_mm2):
            errors.append(f"object {o.id}: area_mm2 {o.area_mm2} != area_px {o.area_px} * {cal.mm2_per_px}")
    for d in report.distances:
        if abs(d.mm - d.px * cal.mm_per_px) > tol * max(1.0, d.mm):
            errors.append(f"distance {d.from_id}->{d.to_id}: mm {d.mm} != px {d.px} * {cal.mm_per_px}")
    return errors


def validate_report(report: SceneReport) -> list[str]:
    errors = []
    errors.extend(validate_distance_refs(report))
    errors.extend(validate_centroids(report))
    errors.extend(validate_calibration_consistency(report))
    return errors
