from __future__ import annotations

from enum import IntEnum


class ColorClass(IntEnum):
    BACKGROUND = 0
    UNCLASSIFIED = 1
    RED = 2
    GREEN = 3
    BLUE = 4
    BLACK = 5

    @property
    def label(self) -> str:
        return self.name.lower()

    @property
    def is_object(self) -> bool:
        return self in OBJECT_CLASSES

    @classmethod
    def from_label(cls, label: str) -> "ColorClass":
        try:
            return cls[label.strip().upper()]
        except KeyError:
            raise ValueError(f"unknown color class {label!r}") from None


OBJECT_CLASSES = (ColorClass.RED, ColorClass.GREEN, ColorClass.BLUE, ColorClass.BLACK)

# rgb order
SATURATED_RGB: dict[ColorClass, tuple[int, int, int]] = {
    ColorClass.RED: (255, 0, 0),
    ColorClass.GREEN: (0, 255, 0),
    ColorClass.BLUE: (0, 0, 255),
    ColorClass.BLACK: (0, 0, 0),
    ColorClass.BACKGROUND: (255, 255, 255),
}
