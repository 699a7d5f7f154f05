"""Scene report records and their JSON form (schema 1)."""

from __future__ import annotations

import json
from dataclasses import dataclass

from src.classify.colors import ColorClass
from src.common.rounding import round_half_up, round_to
from src.measure.geometry import Calibration, CentroidPx, RelativePosition, px_to_mm

REPORT_SCHEMA = 1


@dataclass(frozen=True)
class ObjectRecord:
    id: int
    color: ColorClass
    centroid_px: CentroidPx
    centroid_mm: tuple[float, float]
    bbox: tuple[int, int, int, int]
    area_px: int
    area_mm2: float

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "color": self.color.label,
            "centroid_px": [round_half_up(self.centroid_px.x), round_half_up(self.centroid_px.y)],
            "centroid_mm": [round_to(self.centroid_mm[0], 1), round_to(self.centroid_mm[1], 1)],
            "bbox": list(self.bbox),
            "area_px": self.area_px,
            "area_mm2": round_to(self.area_mm2, 2),
        }


@dataclass(frozen=True)
class DistanceRecord:
    from_id: int
    to_id: int
    px: float
    mm: float
    relative: RelativePosition

    def to_dict(self, cal: Calibration) -> dict:
        # mm follows the rounded px value, as displayed (136 px -> 204 mm)
        px = round_half_up(self.px)
        return {
            "from": self.from_id,
            "to": self.to_id,
            "px": px,
            "mm": round_to(px_to_mm(px, cal), 1),
            "horizontal": self.relative.horizontal.value,
            "vertical": self.relative.vertical.value,
        }


@dataclass(frozen=True)
class SceneReport:
    width: int
    height: int
    source: str
    objects: tuple[ObjectRecord, ...]
    reference_id: int | None
    distances: tuple[DistanceRecord, ...]
    calibration: Calibration = Calibration()

    def object_by_id(self, object_id: int) -> ObjectRecord:
        for obj in self.objects:
            if obj.id == object_id:
                return obj
        raise KeyError(object_id)

    def to_dict(self) -> dict:
        return {
            "schema": REPORT_SCHEMA,
            "frame": {"w": self.width, "h": self.height, "source": self.source},
            "objects": [o.to_dict() for o in self.objects],
            "reference_id": self.reference_id,
            "distances": [d.to_dict(self.calibration) for d in self.distances],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
