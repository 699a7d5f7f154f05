"""
Scene pipeline: (equalize) -> classify -> segment -> measure -> reference ->
distances -> annotate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations

from src.classify.classifier import ClassifierConfig, ClassMask, classify_image
from src.classify.colors import ColorClass
from src.measure.geometry import (
    Calibration,
    area_mm2,
    bbox,
    centroid,
    distance_px,
    px_to_mm,
    relative_position,
)
from src.pipeline.annotate import annotate
from src.pipeline.report import DistanceRecord, ObjectRecord, SceneReport
from src.raster.equalize import equalize_histogram
from src.raster.image import RasterImage
from src.segment.blobs import Blob, SegmentationConfig
from src.segment.segment import segment

logger = logging.getLogger("chromaseg")

DISTANCE_TARGETS = (ColorClass.RED, ColorClass.BLUE)


@dataclass(frozen=True)
class PipelineConfig:
    classifier: ClassifierConfig = field(default_factory=ClassifierConfig)
    segmentation: SegmentationConfig = field(default_factory=SegmentationConfig)
    calibration: Calibration = field(default_factory=Calibration)
    equalize: bool = False
    all_pairs: bool = False
    workers: int = 1


def measure_blob(b: Blob, cal: Calibration) -> ObjectRecord:
    c = centroid(b)
    return ObjectRecord(
        id=b.id,
        color=b.color,
        centroid_px=c,
        centroid_mm=(px_to_mm(c.x, cal), px_to_mm(c.y, cal)),
        bbox=bbox(b),
        area_px=b.pixel_count,
        area_mm2=area_mm2(b.pixel_count, cal),
    )


def select_reference(objects: list[ObjectRecord]) -> int | None:
    """Largest green object; ties go to the lower id."""
    greens = [o for o in objects if o.color == ColorClass.GREEN]
    if not greens:
        return None
    return min(greens, key=lambda o: (-o.area_px, o.id)).id


def _distance(a: ObjectRecord, b: ObjectRecord, cal: Calibration) -> DistanceRecord:
    d = distance_px(a.centroid_px, b.centroid_px)
    return DistanceRecord(
        from_id=a.id,
        to_id=b.id,
        px=d,
        mm=px_to_mm(d, cal),
        relative=relative_position(a.centroid_px, b.centroid_px),
    )


def compute_distances(
    objects: list[ObjectRecord],
    reference_id: int | None,
    cal: Calibration,
    all_pairs: bool = False,
) -> list[DistanceRecord]:
    if all_pairs:
        ordered = sorted(objects, key=lambda o: o.id)
        return [_distance(a, b, cal) for a, b in combinations(ordered, 2)]
    if reference_id is None:
        return []
    ref = next(o for o in objects if o.id == reference_id)
    return [
        _distance(ref, o, cal)
        for o in objects
        if o.id != reference_id and o.color in DISTANCE_TARGETS
    ]


def build_report(
    blobs: list[Blob],
    width: int,
    height: int,
    cfg: PipelineConfig,
    source: str = "",
) -> SceneReport:
    objects = [measure_blob(b, cfg.calibration) for b in blobs]
    reference_id = select_reference(objects)
    distances = compute_distances(objects, reference_id, cfg.calibration, cfg.all_pairs)
    return SceneReport(
        width=width,
        height=height,
        source=source,
        objects=tuple(objects),
        reference_id=reference_id,
        distances=tuple(distances),
        calibration=cfg.calibration,
    )


def classify_stage(img: RasterImage, cfg: PipelineConfig) -> ClassMask:
    work = equalize_histogram(img) if cfg.equalize else img
    return classify_image(work, cfg.classifier, workers=cfg.workers)


def run_pipeline(
    img: RasterImage,
    cfg: PipelineConfig = PipelineConfig(),
    source: str = "",
) -> tuple[SceneReport, RasterImage]:
    mask = classify_stage(img, cfg)
    blobs = segment(mask, cfg.segmentation)
    report = build_report(blobs, img.width, img.height, cfg, source)
    annotated = annotate(img, report, mask)
    logger.debug(
        f"[pipeline] {source or '<memory>'}: objects={len(report.objects)} "
        f"reference={report.reference_id} distances={len(report.distances)}"
    )
    return report, annotated
