"""Compare a scene report against generated ground truth."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from src.harness.scene import GroundTruth
from src.pipeline.report import SceneReport


@dataclass(frozen=True)
class SceneScore:
    expected: int
    detected: int
    max_centroid_error: float
    max_distance_error: float

    @property
    def detection_rate(self) -> float:
        return 1.0 if self.expected == 0 else self.detected / self.expected


def score_scene(report: SceneReport, truth: GroundTruth, min_area_px: int = 1) -> SceneScore:
    """
    Match each qualifying truth shape (area >= ``min_area_px``) to the unused
    same-color object whose centroid is nearest, provided that centroid lies
    inside the shape's bbox. Distance error compares every pair of matched
    shapes' centroid distance with the analytic one.
    """
    qualifying = [t for t in truth.shapes if t.area_px >= min_area_px]
    used: set[int] = set()
    matches = []
    for t in qualifying:
        tx, ty = t.centroid
        x0, y0, x1, y1 = t.bbox
        best = None
        for o in report.objects:
            if o.id in used or o.color != t.shape.color:
                continue
            ox, oy = o.centroid_px
            if not (x0 <= ox <= x1 and y0 <= oy <= y1):
                continue
            err = math.hypot(ox - tx, oy - ty)
            if best is None or err < best[0]:
                best = (err, o)
        if best is not None:
            used.add(best[1].id)
            matches.append((t, best[1], best[0]))

    max_c = max((m[2] for m in matches), default=0.0)
    max_d = 0.0
    for (ta, oa, _), (tb, ob, _) in combinations(matches, 2):
        true_d = math.dist(ta.centroid, tb.centroid)
        seen_d = math.dist(oa.centroid_px, ob.centroid_px)
        max_d = max(max_d, abs(true_d - seen_d))
    return SceneScore(
        expected=len(qualifying),
        detected=len(matches),
        max_centroid_error=max_c,
        max_distance_error=max_d,
    )
