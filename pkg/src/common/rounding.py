from __future__ import annotations
from decimal import Decimal, ROUND_HALF_UP


def round_half_up(x: float) -> int:
    """Round to the nearest integer, .5 away from zero (136.5 -> 137, -2.5 -> -3)."""
    return int(Decimal(repr(float(x))).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def round_to(x: float, places: int = 1) -> float:
    q = Decimal(1).scaleb(-places)
    return float(Decimal(repr(float(x))).quantize(q, rounding=ROUND_HALF_UP))
