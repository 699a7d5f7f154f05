"""Gap-based grouping of same-class pixels into objects."""

from src.segment.blobs import Blob, SegmentationConfig, filter_min_area, validate_segmentation_config
from src.segment.segment import segment
from src.segment.oracle import ORACLE_MAX_PIXELS, OracleSizeError, segment_oracle

__all__ = [
    "ORACLE_MAX_PIXELS",
    "Blob",
    "OracleSizeError",
    "SegmentationConfig",
    "filter_min_area",
    "segment",
    "segment_oracle",
    "validate_segmentation_config",
]
