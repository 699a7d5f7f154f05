"""
Production segmentation.

Same-class pixels p, q belong to one object when a chain of same-class pixels
links them with every step at Chebyshev distance <= gap_px. Growing every
pixel of a class into a gap_px x gap_px block and labelling the union with
8-connectivity yields exactly those chains: two blocks touch or overlap iff
their pixels are within gap_px on both axes. Labelling runs per class so
different colors never merge.
"""

from __future__ import annotations

import logging

import numpy as np
from scipy import ndimage

from src.classify.classifier import ClassMask
from src.classify.colors import OBJECT_CLASSES
from src.segment.blobs import Blob, SegmentationConfig, blobs_from_components

logger = logging.getLogger("chromaseg")

_EIGHT = np.ones((3, 3), dtype=bool)


def _label_class(member: np.ndarray, gap_px: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Return (xs, ys, labels) for the member pixels of one class, in raster order."""
    rows = np.flatnonzero(member.any(axis=1))
    cols = np.flatnonzero(member.any(axis=0))
    # linking cells between two pixels never leave their joint bounding box
    y0, y1, x0, x1 = rows[0], rows[-1] + 1, cols[0], cols[-1] + 1
    crop = member[y0:y1, x0:x1]
    grown = crop.view(np.uint8)
    if gap_px > 1:
        grown = ndimage.maximum_filter(grown, size=gap_px, mode="constant", cval=0)
    labels, _ = ndimage.label(grown, structure=_EIGHT)
    ys, xs = np.nonzero(crop)
    return xs + x0, ys + y0, labels[ys, xs]


def segment(mask: ClassMask, cfg: SegmentationConfig) -> list[Blob]:
    classes = mask.classes
    parts_y, parts_x, parts_c, parts_k = [], [], [], []
    offset = 0
    for color in OBJECT_CLASSES:
        member = classes == color
        if not member.any():
            continue
        xs, ys, labels = _label_class(member, cfg.gap_px)
        parts_y.append(ys)
        parts_x.append(xs)
        parts_c.append(np.full(len(xs), int(color)))
        parts_k.append(labels.astype(np.int64) + offset)
        offset += int(labels.max()) + 1

    if not parts_x:
        return []
    blobs = blobs_from_components(
        np.concatenate(parts_x),
        np.concatenate(parts_y),
        np.concatenate(parts_c),
        np.concatenate(parts_k),
        mask.width,
        cfg.min_area_px,
    )
    logger.debug(f"[segment] gap={cfg.gap_px} min_area={cfg.min_area_px} -> {len(blobs)} blobs")
    return blobs
