"""Brute-force reference segmentation: pairwise Chebyshev distances, no windowing."""

from __future__ import annotations

import numpy as np

from src.classify.classifier import ClassMask
from src.classify.colors import OBJECT_CLASSES
from src.segment.blobs import Blob, SegmentationConfig, blobs_from_components

ORACLE_MAX_PIXELS = 128 * 128
_CHUNK = 128


class OracleSizeError(ValueError):
    pass


def _flood_components(pts: np.ndarray, gap_px: int) -> np.ndarray:
    """Component index per point; every unassigned point is compared against the frontier."""
    comp = np.full(len(pts), -1, dtype=np.int64)
    next_id = 0
    for seed in range(len(pts)):
        if comp[seed] >= 0:
            continue
        comp[seed] = next_id
        frontier = np.array([seed])
        while len(frontier):
            open_idx = np.flatnonzero(comp < 0)
            if not len(open_idx):
                break
            candidates = pts[open_idx]
            hit = np.zeros(len(open_idx), dtype=bool)
            for start in range(0, len(frontier), _CHUNK):
                f = pts[frontier[start:start + _CHUNK]]
                d = np.abs(f[:, None, :] - candidates[None, :, :]).max(axis=2)
                hit |= (d <= gap_px).any(axis=0)
            frontier = open_idx[hit]
            comp[frontier] = next_id
        next_id += 1
    return comp


def segment_oracle(mask: ClassMask, cfg: SegmentationConfig) -> list[Blob]:
    if mask.width * mask.height > ORACLE_MAX_PIXELS:
        raise OracleSizeError(
            f"oracle limited to {ORACLE_MAX_PIXELS} pixels, mask is {mask.width}x{mask.height}"
        )
    parts_y, parts_x, parts_c, parts_k = [], [], [], []
    offset = 0
    for color in OBJECT_CLASSES:
        ys, xs = np.nonzero(mask.classes == color)
        if not len(xs):
            continue
        pts = np.stack([xs, ys], axis=1).astype(np.int32)
        comp = _flood_components(pts, cfg.gap_px)
        parts_y.append(ys)
        parts_x.append(xs)
        parts_c.append(np.full(len(xs), int(color)))
        parts_k.append(comp + offset)
        offset += int(comp.max()) + 1

    if not parts_x:
        return []
    return blobs_from_components(
        np.concatenate(parts_x),
        np.concatenate(parts_y),
        np.concatenate(parts_c),
        np.concatenate(parts_k),
        mask.width,
        cfg.min_area_px,
    )
