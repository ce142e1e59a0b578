"""Constructions of the pivot-circle configurations.

A *pivot* J is one of Omega, Omega', H, the median points aH/bH/cH, or an
arbitrary point. Given a circle gamma through J, the cevians AJ, BJ, CJ meet
gamma again in three points labelled X, Y, Z according to ``LABELING``; the
circles BJC, CJA, AJB meet gamma again in U, V, W.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .areal import (
    A,
    B,
    C,
    VERTICES,
    ArealLine,
    ArealPoint,
    Circle,
    TriangleMetric,
    circle_center_r2,
    circle_from_center,
    circle_through,
    circumcircle,
    collinear,
    dist_sq,
    homothety,
    join,
    line_circle_intersections,
    meet,
    radical_axis,
    second_intersection,
    second_intersection_through,
)
from .centers import CenterId, CircleKind, center, named_circle
from .errors import DegenerateError, GeometryError, NoRealIntersection
from .scalars import rational


class PivotKind(str, Enum):
    OMEGA = "omega"
    OMEGA_PRIME = "omega_prime"
    ORTHOCENTER = "orthocenter"
    AH = "aH"
    BH = "bH"
    CH = "cH"
    CUSTOM = "custom"


# Label received by the second meet of the cevian from A, B, C. Each row
# follows the angle pattern at the pivot: if angle BJC = 180 - V1,
# CJA = 180 - V2, AJB = 180 - V3, then the cevian from A is labelled with the
# letter of V1, and so on.
LABELING = {
    PivotKind.OMEGA: ("Z", "X", "Y"),
    PivotKind.OMEGA_PRIME: ("Y", "Z", "X"),
    PivotKind.ORTHOCENTER: ("X", "Y", "Z"),
    PivotKind.AH: ("X", "Z", "Y"),
    PivotKind.BH: ("Z", "Y", "X"),
    PivotKind.CH: ("Y", "X", "Z"),
    PivotKind.CUSTOM: ("X", "Y", "Z"),
}

DIRECT_PIVOTS = frozenset({PivotKind.AH, PivotKind.BH, PivotKind.CH})
INDIRECT_PIVOTS = frozenset({PivotKind.OMEGA, PivotKind.OMEGA_PRIME, PivotKind.ORTHOCENTER})

VERTEX_OF_LABEL = {"X": A, "Y": B, "Z": C}

_CENTER_OF = {
    PivotKind.OMEGA: CenterId.OMEGA,
    PivotKind.OMEGA_PRIME: CenterId.OMEGA_PRIME,
    PivotKind.ORTHOCENTER: CenterId.ORTHOCENTER,
    PivotKind.AH: CenterId.AH,
    PivotKind.BH: CenterId.BH,
    PivotKind.CH: CenterId.CH,
}


@dataclass(frozen=True)
class Pivot:
    kind: PivotKind
    point: ArealPoint

    @classmethod
    def of(cls, kind, metric: TriangleMetric, point: ArealPoint | None = None) -> Pivot:
        kind = PivotKind(kind)
        if kind is PivotKind.CUSTOM:
            if point is None:
                raise ValueError("custom pivot needs a point")
            return cls(kind, point)
        return cls(kind, center(_CENTER_OF[kind], metric))

    @property
    def labels(self):
        return LABELING[self.kind]


# ---------------------------------------------------------------------------
# Circle specifications


@dataclass(frozen=True)
class ThroughTwoPoints:
    P: ArealPoint
    Q: ArealPoint


@dataclass(frozen=True)
class MNParams:
    m: object
    n: object

    def __post_init__(self):
        object.__setattr__(self, "m", rational(self.m))
        object.__setattr__(self, "n", rational(self.n))


@dataclass(frozen=True)
class NamedCircle:
    kind: CircleKind


def mn_points(m, n, metric: TriangleMetric):
    """The points X on B-Omega and Y on C-Omega with parameters m and n."""
    a2, b2, c2 = metric.a2, metric.b2, metric.c2
    X = ArealPoint(m / b2, 1, m / a2)
    Y = ArealPoint(n / b2, n / c2, 1)
    return X, Y


def build_gamma(pivot: Pivot, spec, metric: TriangleMetric) -> Circle:
    """The circle through the pivot described by ``spec``."""
    J = pivot.point
    if isinstance(spec, MNParams):
        if pivot.kind is not PivotKind.OMEGA:
            raise GeometryError("m, n parameters are defined for the Omega pivot only")
        X, Y = mn_points(spec.m, spec.n, metric)
        if X == J or Y == J:
            raise DegenerateError("m or n puts a defining point on Omega")
        return circle_through(X, Y, J, metric)
    if isinstance(spec, ThroughTwoPoints):
        if spec.P == J or spec.Q == J:
            raise DegenerateError("defining point coincides with the pivot")
        return circle_through(J, spec.P, spec.Q, metric)
    if isinstance(spec, NamedCircle):
        circle = named_circle(spec.kind, metric)
        if not circle.contains(tuple(J)):
            raise GeometryError(f"{CircleKind(spec.kind).value} circle does not pass through the pivot")
        return circle
    if isinstance(spec, Circle):
        if not spec.contains(tuple(J)):
            raise GeometryError("circle does not pass through the pivot")
        return spec
    raise TypeError(f"unknown circle spec {spec!r}")


# ---------------------------------------------------------------------------
# Figure


@dataclass
class Figure:
    metric: TriangleMetric
    pivot: Pivot
    gamma: Circle
    spec: object = None
    points: dict = field(default_factory=dict)
    circles: dict = field(default_factory=dict)
    lines: dict = field(default_factory=dict)
    flags: list = field(default_factory=list)
    similarity: object = None
    ledger: list = field(default_factory=list)

    def __getitem__(self, name):
        return self.points[name]

    def has(self, *names) -> bool:
        return all(n in self.points for n in names)

    @property
    def triangle(self):
        return self.points["X"], self.points["Y"], self.points["Z"]

    def partner(self, vertex_index: int) -> str:
        """Label of the cevian point paired with U, V or W in the perspector."""
        return self.pivot.labels[vertex_index]


def cevian_points(pivot: Pivot, gamma: Circle) -> dict:
    """Second meets of AJ, BJ, CJ with gamma, keyed by their labels."""
    J = pivot.point
    out = {}
    for V, label in zip(VERTICES, pivot.labels):
        if V == J:
            raise DegenerateError("pivot coincides with a vertex")
        out[label] = second_intersection_through(gamma, J, V)
    return out


def vertex_pivot_circles(J: ArealPoint, metric: TriangleMetric):
    """Circles BJC, CJA, AJB."""
    if any(collinear(J, P, Q) for P, Q in ((B, C), (C, A), (A, B))):
        raise DegenerateError("pivot lies on a side line")
    return (circle_through(B, J, C, metric), circle_through(C, J, A, metric), circle_through(A, J, B, metric))


def other_common_point(c1: Circle, c2: Circle, P: ArealPoint) -> ArealPoint:
    """Second common point of two circles sharing P (P itself if tangent)."""
    return second_intersection(c2, P, radical_axis(c1, c2))


def uvw_points(J: ArealPoint, gamma: Circle, vp_circles):
    """U, V, W: second meets of gamma with circles BJC, CJA, AJB."""
    return tuple(other_common_point(c, gamma, J) for c in vp_circles)


def perspector_P(points: dict, pivot: Pivot) -> tuple[ArealPoint, tuple]:
    """Meet of U, V, W with their partner cevian points; returns P and the three lines."""
    lines = tuple(join(points[u], points[lab]) for u, lab in zip("UVW", pivot.labels))
    return meet(lines[0], lines[1]), lines


def axis_points(points: dict, J: ArealPoint):
    """Meets VW^AJ, WU^BJ, UV^CJ and the line through them."""
    U, V, W = points["U"], points["V"], points["W"]
    meets = (
        meet(join(V, W), join(A, J)),
        meet(join(W, U), join(B, J)),
        meet(join(U, V), join(C, J)),
    )
    base = [p for p in (*meets, points["P"])]
    axis = None
    for i in range(len(base)):
        for k in range(i + 1, len(base)):
            if base[i] != base[k]:
                axis = join(base[i], base[k])
                break
        if axis is not None:
            break
    if axis is None:
        raise DegenerateError("axis points all coincide")
    return axis, meets


def point_S(metric: TriangleMetric, triples) -> tuple[ArealPoint, tuple]:
    """Common point of the circles through each vertex and two figure points.

    ``triples`` gives the three point triples, e.g. (A, V, W), (B, W, U),
    (C, U, V). Returns S and the three circles.
    """
    circles = tuple(circle_through(*t, metric) for t in triples)
    for i in range(3):
        for k in range(i + 1, 3):
            if circles[i].same_as(circles[k]):
                raise DegenerateError("two of the circles coincide")
    S = meet(radical_axis(circles[0], circles[1]), radical_axis(circles[1], circles[2]))
    return S, circles


def s_triples(points: dict):
    U, V, W = points["U"], points["V"], points["W"]
    return (A, V, W), (B, W, U), (C, U, V)


def s_triples_xyz(points: dict):
    X, Y, Z = points["X"], points["Y"], points["Z"]
    return (A, Y, Z), (B, Z, X), (C, X, Y)


def build_figure(metric: TriangleMetric, pivot: Pivot, spec, *, with_s: bool = True) -> Figure:
    """Construct gamma, X, Y, Z, U, V, W, P, the axis and S.

    Degenerate stages (tangency, coincidences) are recorded in ``flags`` and
    leave their dependent points unset.
    """
    gamma = build_gamma(pivot, spec, metric)
    fig = Figure(metric=metric, pivot=pivot, gamma=gamma, spec=spec)
    J = pivot.point
    fig.points["pivot"] = J
    fig.circles["gamma"] = gamma
    fig.points.update(cevian_points(pivot, gamma))
    if gamma.is_circumcircle:
        fig.flags.append("gamma-is-circumcircle")
        return fig
    try:
        vp = vertex_pivot_circles(J, metric)
    except DegenerateError as exc:
        fig.flags.append(f"vertex-circles: {exc}")
        return fig
    fig.circles.update(zip(("BJC", "CJA", "AJB"), vp))
    try:
        U, V, W = uvw_points(J, gamma, vp)
    except DegenerateError as exc:
        # gamma coincides with a vertex-pivot circle
        fig.flags.append(f"uvw: {exc}")
        return fig
    fig.points.update(U=U, V=V, W=W)
    for name, P in zip("UVW", (U, V, W)):
        if P == J:
            fig.flags.append(f"tangent-{name}")
    if any(f.startswith("tangent") for f in fig.flags):
        return fig
    try:
        P, lines = perspector_P(fig.points, pivot)
        fig.points["P"] = P
        fig.lines["perspector"] = lines
    except DegenerateError as exc:
        fig.flags.append(f"perspector: {exc}")
        return fig
    try:
        axis, meets = axis_points(fig.points, J)
        fig.lines["axis"] = axis
        fig.points.update(zip(("M1", "M2", "M3"), meets))
    except DegenerateError as exc:
        fig.flags.append(f"axis: {exc}")
    if with_s:
        for key, triples in (("S", s_triples), ("S_xyz", s_triples_xyz)):
            try:
                S, circles = point_S(metric, triples(fig.points))
            except DegenerateError as exc:
                fig.flags.append(f"{key}: {exc}")
                continue
            fig.points[key] = S
            fig.circles.update(zip((f"{key}_circle_a", f"{key}_circle_b", f"{key}_circle_c"), circles))
    return fig


def recover_lmn(fig: Figure):
    """Parameters with X ~ (m/b2, 1, m/a2), Y ~ (n/b2, n/c2, 1), Z ~ (1, l/c2, l/a2)."""
    if fig.pivot.kind is not PivotKind.OMEGA:
        raise GeometryError("l, m, n are defined for the Omega pivot only")
    X, Y, Z = fig.triangle
    a2, b2, c2 = fig.metric.a2, fig.metric.b2, fig.metric.c2
    if X.y == 0 or Y.z == 0 or Z.x == 0:
        raise DegenerateError("a cevian point sits at parameter infinity")
    m = b2 * X.x / X.y
    n = c2 * Y.y / Y.z
    l = c2 * Z.y / Z.x
    return l, m, n


# ---------------------------------------------------------------------------
# Median-point (direct) figures: J, K and the projection back to the circumcircle


@dataclass
class WoodProjection:
    J: ArealPoint
    K: ArealPoint
    disc: object
    factor: object  # 2**k, or 2**-k when gamma encloses the circumcircle
    sigma: Circle
    enlarged: tuple
    images: dict  # perspector name -> (A', B', C')


def jk_and_wood(fig: Figure, max_doublings: int = 64) -> WoodProjection:
    """Intersections J, K of gamma with the circumcircle and the projections
    A', B', C' of X, Y, Z from J (and from K) onto the circumcircle.

    If gamma misses the circumcircle it is enlarged about its center, together
    with X, Y, Z, by the smallest factor 2**k that makes it meet (2**-k when
    gamma encloses the circumcircle).
    """
    metric = fig.metric
    circ = circumcircle(metric)
    gamma = fig.gamma
    if gamma.is_circumcircle:
        raise DegenerateError("gamma is the circumcircle")
    ctr, r2 = circle_center_r2(gamma)
    # enlarging never helps when gamma already encloses the circumcircle; halve instead
    O = center(CenterId.CIRCUMCENTER, metric)
    rO = float(dist_sq(O, A, metric)) ** 0.5
    step = rational(2)
    if float(dist_sq(ctr, O, metric)) ** 0.5 + rO < float(r2) ** 0.5:
        step = rational(1, 2)
    factor = rational(1)
    sigma = gamma
    for _ in range(max_doublings + 1):
        try:
            axis = radical_axis(sigma, circ)
            if axis.is_at_infinity:
                raise NoRealIntersection("concentric with the circumcircle")
            J, K, disc = line_circle_intersections(axis, circ)
            break
        except NoRealIntersection:
            factor *= step
            sigma = circle_from_center(ctr, r2 * factor * factor, metric)
    else:
        raise DegenerateError("enlargement did not reach the circumcircle")
    X, Y, Z = fig.triangle
    enlarged = tuple(homothety(ctr, factor, P) for P in (X, Y, Z)) if factor != 1 else (X, Y, Z)
    images = {}
    for name, persp in (("J", J), ("K", K)):
        images[name] = tuple(second_intersection_through(circ, persp, P) for P in enlarged)
    return WoodProjection(J=J, K=K, disc=disc, factor=factor, sigma=sigma, enlarged=enlarged, images=images)
