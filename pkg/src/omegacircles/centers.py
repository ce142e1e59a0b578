"""Named triangle centers and circles used by the constructions."""
from __future__ import annotations

import math
from enum import Enum

from .areal import (
    ArealPoint,
    Circle,
    TriangleMetric,
    VERTICES,
    circle_on_diameter,
    join,
    second_intersection,
)
from .errors import DegenerateError
from .scalars import Approx


class CenterId(str, Enum):
    OMEGA = "omega"
    OMEGA_PRIME = "omega_prime"
    CENTROID = "centroid"
    ORTHOCENTER = "orthocenter"
    CIRCUMCENTER = "circumcenter"
    SYMMEDIAN = "symmedian"
    AH = "aH"
    BH = "bH"
    CH = "cH"


class CircleKind(str, Enum):
    CIRCUMCIRCLE = "circumcircle"
    SEVEN_POINT = "seven-point"
    ORTHOCENTROIDAL = "orthocentroidal"


def center(cid: CenterId | str, metric: TriangleMetric) -> ArealPoint:
    cid = CenterId(cid)
    a2, b2, c2 = metric.a2, metric.b2, metric.c2
    sa, sb, sc = metric.conway()
    if cid is CenterId.OMEGA:
        return ArealPoint(1 / b2, 1 / c2, 1 / a2)
    if cid is CenterId.OMEGA_PRIME:
        return ArealPoint(1 / c2, 1 / a2, 1 / b2)
    if cid is CenterId.CENTROID:
        return ArealPoint(1, 1, 1)
    if cid is CenterId.ORTHOCENTER:
        # (1/S_A : 1/S_B : 1/S_C) with denominators cleared; a right angle
        # puts H on that vertex
        return ArealPoint(sb * sc, sc * sa, sa * sb)
    if cid is CenterId.CIRCUMCENTER:
        return ArealPoint(a2 * sa, b2 * sb, c2 * sc)
    if cid is CenterId.SYMMEDIAN:
        return ArealPoint(a2, b2, c2)
    index = {CenterId.AH: 0, CenterId.BH: 1, CenterId.CH: 2}[cid]
    return median_point(index, metric)


def median_point(index: int, metric: TriangleMetric) -> ArealPoint:
    """Second meet of the median from vertex ``index`` with the orthocentroidal circle."""
    G = center(CenterId.CENTROID, metric)
    circle = named_circle(CircleKind.ORTHOCENTROIDAL, metric)
    return second_intersection(circle, G, join(VERTICES[index], G))


def named_circle(kind: CircleKind | str, metric: TriangleMetric) -> Circle:
    kind = CircleKind(kind)
    if kind is CircleKind.CIRCUMCIRCLE:
        return Circle(metric, 0, 0, 0)
    if metric.is_equilateral:
        raise DegenerateError(f"{kind.value} circle has zero radius for an equilateral triangle")
    if kind is CircleKind.SEVEN_POINT:
        return circle_on_diameter(center(CenterId.CIRCUMCENTER, metric), center(CenterId.SYMMEDIAN, metric), metric)
    return circle_on_diameter(center(CenterId.CENTROID, metric), center(CenterId.ORTHOCENTER, metric), metric)


def brocard_angle(metric: TriangleMetric) -> Approx:
    """Brocard angle from cot w = (a2 + b2 + c2) / (4 * area)."""
    four_area = math.sqrt(float(metric.area16_sq))
    return Approx(math.atan2(four_area, float(metric.a2 + metric.b2 + metric.c2)))
