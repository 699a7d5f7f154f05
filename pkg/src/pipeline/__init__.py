"""End-to-end scene pipeline: classify, segment, measure, report, annotate."""

from src.pipeline.report import REPORT_SCHEMA, DistanceRecord, ObjectRecord, SceneReport
from src.pipeline.pipeline import PipelineConfig, measure_blob, run_pipeline, select_reference
from src.pipeline.annotate import annotate

__all__ = [
    "REPORT_SCHEMA",
    "DistanceRecord",
    "ObjectRecord",
    "PipelineConfig",
    "SceneReport",
    "annotate",
    "measure_blob",
    "run_pipeline",
    "select_reference",
]
