"""Cartesian embedding, similarity classification and fitted similarity maps.

Similarities act on the plane viewed as complex numbers, kept as (re, im)
pairs so the exact tiers survive: z -> alpha*z + beta (direct) or
z -> alpha*conj(z) + beta (indirect).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from itertools import permutations

from .areal import (
    A,
    B,
    C,
    ArealPoint,
    TriangleMetric,
    circumcircle,
    collinear,
    dist_sq,
    join,
    meet,
    orientation,
)
from .centers import CenterId, CircleKind, center, named_circle
from .errors import DegenerateError, GeometryError
from .figures import VERTEX_OF_LABEL, Figure, other_common_point
from .scalars import Approx, approx_of, is_exact, is_zero, rational_sqrt, tier_of, tolerance


@dataclass(frozen=True)
class CartesianPoint:
    x: object
    y: object

    @property
    def tier(self) -> str:
        return tier_of((self.x, self.y))

    def __iter__(self):
        return iter((self.x, self.y))

    def to_float(self):
        return float(self.x), float(self.y)

    def same(self, other: CartesianPoint) -> bool:
        if is_exact(self.x) and is_exact(self.y) and is_exact(other.x) and is_exact(other.y):
            return self.x == other.x and self.y == other.y
        # one scale for both coordinates, so a near-zero coordinate is not held to 1e-12
        tol = tolerance()
        a, b = self.to_float(), other.to_float()
        scale = max(1.0, *(abs(v) for v in (*a, *b)))
        return all(abs(u - v) <= tol.abs + tol.rel * scale for u, v in zip(a, b))


@lru_cache(maxsize=256)
def _frame(metric: TriangleMetric):
    """(a, A_x, A_y) with B at the origin and C at (a, 0)."""
    if metric.embeddable:
        a = rational_sqrt(metric.a2)
        ay = rational_sqrt(metric.area16_sq) / (2 * a)
    else:
        a = Approx(math.sqrt(float(metric.a2)))
        ay = Approx(math.sqrt(float(metric.area16_sq))) / (2 * a)
    ax = (metric.a2 + metric.c2 - metric.b2) / (2 * a)
    return a, ax, ay


def embed(P: ArealPoint, metric: TriangleMetric) -> CartesianPoint:
    """Cartesian image; exact when the metric is embeddable, Approx otherwise."""
    if P.at_infinity:
        raise DegenerateError("cannot embed a point at infinity")
    a, ax, ay = _frame(metric)
    x, y, z = P.normalized()
    return CartesianPoint(x * ax + z * a, x * ay)


def unembed(Q: CartesianPoint, metric: TriangleMetric) -> ArealPoint:
    a, ax, ay = _frame(metric)
    x = Q.y / ay
    z = (Q.x - x * ax) / a
    return ArealPoint(x, 1 - x - z, z)


# ---------------------------------------------------------------------------
# Classification


class SimilarityClass(str, Enum):
    DIRECT = "Direct"
    INDIRECT = "Indirect"
    NONE = "None"


@dataclass(frozen=True)
class SimilarityVerdict:
    cls: SimilarityClass
    ratio_sq: object = None


def classify_similarity(T1, T2, metric: TriangleMetric) -> SimilarityVerdict:
    """Decide whether T1[i] -> T2[i] is a similarity, using squared distances only."""
    pairs = ((1, 2), (2, 0), (0, 1))
    d1 = [dist_sq(T1[i], T1[j], metric) for i, j in pairs]
    d2 = [dist_sq(T2[i], T2[j], metric) for i, j in pairs]
    if any(is_zero(v) for v in d1 + d2):
        raise DegenerateError("triangle has coincident vertices")
    o1, o2 = orientation(*T1), orientation(*T2)
    if o1 == 0 or o2 == 0:
        raise DegenerateError("triangle is collinear")
    # ratio equality by cross-multiplication avoids a division per pair
    if not (is_zero(d2[0] * d1[1] - d2[1] * d1[0]) and is_zero(d2[1] * d1[2] - d2[2] * d1[1])):
        return SimilarityVerdict(SimilarityClass.NONE)
    cls = SimilarityClass.DIRECT if o1 == o2 else SimilarityClass.INDIRECT
    return SimilarityVerdict(cls, d2[0] / d1[0])


def similar_under_any_labeling(T1, T2, metric: TriangleMetric) -> list:
    """Correspondences (as permutations of T2) under which T1 and T2 are similar."""
    hits = []
    for perm in permutations(range(3)):
        v = classify_similarity(T1, tuple(T2[i] for i in perm), metric)
        if v.cls is not SimilarityClass.NONE:
            hits.append((perm, v))
    return hits


# ---------------------------------------------------------------------------
# Maps


def _cmul(u, v):
    return (u[0] * v[0] - u[1] * v[1], u[0] * v[1] + u[1] * v[0])


def _cdiv(u, v):
    den = v[0] * v[0] + v[1] * v[1]
    if is_zero(den):
        raise ZeroDivisionError("complex division by zero")
    return ((u[0] * v[0] + u[1] * v[1]) / den, (u[1] * v[0] - u[0] * v[1]) / den)


def _csub(u, v):
    return (u[0] - v[0], u[1] - v[1])


def _cadd(u, v):
    return (u[0] + v[0], u[1] + v[1])


def _conj(u):
    return (u[0], -u[1])


@dataclass(frozen=True)
class SimilarityMap:
    kind: SimilarityClass
    alpha: tuple
    beta: CartesianPoint

    @property
    def ratio_sq(self):
        return self.alpha[0] * self.alpha[0] + self.alpha[1] * self.alpha[1]

    @property
    def tier(self) -> str:
        return tier_of((*self.alpha, *self.beta))

    def __call__(self, P: CartesianPoint) -> CartesianPoint:
        z = tuple(P)
        if self.kind is SimilarityClass.INDIRECT:
            z = _conj(z)
        return CartesianPoint(*_cadd(_cmul(self.alpha, z), tuple(self.beta)))

    def inverse(self) -> SimilarityMap:
        # w = alpha*s(z) + beta  =>  s(z) = (w - beta)/alpha
        inv = _cdiv((1, 0), self.alpha)
        shift = _cmul(inv, tuple(self.beta))
        if self.kind is SimilarityClass.INDIRECT:
            # z = conj(inv*w - shift) = conj(inv)*conj(w) - conj(shift)
            return SimilarityMap(self.kind, _conj(inv), CartesianPoint(*_conj((-shift[0], -shift[1]))))
        return SimilarityMap(self.kind, inv, CartesianPoint(-shift[0], -shift[1]))

    def apply_areal(self, P: ArealPoint, metric: TriangleMetric) -> ArealPoint:
        return unembed(self(embed(P, metric)), metric)


def fit_similarity(pairs, kind) -> SimilarityMap:
    """Solve alpha, beta from two (source, target) pairs; the third must agree."""
    kind = SimilarityClass(kind)
    if kind is SimilarityClass.NONE:
        raise ValueError("cannot fit a map for verdict None")
    (s0, t0), (s1, t1), (s2, t2) = [(tuple(s), tuple(t)) for s, t in pairs]
    ds = _csub(s1, s0)
    if is_zero(ds[0]) and is_zero(ds[1]):
        raise DegenerateError("source points coincide")
    cross = (s1[0] - s0[0]) * (s2[1] - s0[1]) - (s1[1] - s0[1]) * (s2[0] - s0[0])
    if is_zero(cross):
        raise DegenerateError("source points are collinear")
    if kind is SimilarityClass.INDIRECT:
        ds, s0c = _conj(ds), _conj(s0)
    else:
        s0c = s0
    alpha = _cdiv(_csub(t1, t0), ds)
    beta = _csub(t0, _cmul(alpha, s0c))
    fmap = SimilarityMap(kind, alpha, CartesianPoint(*beta))
    if not fmap(CartesianPoint(*s2)).same(CartesianPoint(*t2)):
        raise GeometryError("third pair does not fit the map")
    return fmap


def fit_triangle_map(T1, T2, metric: TriangleMetric, kind) -> SimilarityMap:
    """Map sending the areal triangle T1 onto T2 vertex by vertex."""
    return fit_similarity([(embed(s, metric), embed(t, metric)) for s, t in zip(T1, T2)], kind)


def fixed_point(fmap: SimilarityMap) -> CartesianPoint:
    p, q = fmap.alpha
    bx, by = fmap.beta
    if fmap.kind is SimilarityClass.DIRECT:
        if is_zero(p - 1) and is_zero(q):
            raise GeometryError("translation has no fixed point")
        return CartesianPoint(*_cdiv((bx, by), (1 - p, -q)))
    # x = p x + q y + bx ; y = q x - p y + by
    det = 1 - (p * p + q * q)
    if is_zero(det):
        raise GeometryError("glide reflection (ratio 1) has no center")
    x = ((1 + p) * bx + q * by) / det
    y = (q * bx + (1 - p) * by) / det
    return CartesianPoint(x, y)


@dataclass(frozen=True)
class CartesianLine:
    point: CartesianPoint
    angle: float  # direction in radians, in [0, pi)


def axis_of(fmap: SimilarityMap) -> tuple[CartesianLine, CartesianLine]:
    """The two invariant axes through the center of an indirect similarity.

    The first is the reflection axis (direction half the argument of alpha);
    the second is perpendicular to it.
    """
    if fmap.kind is not SimilarityClass.INDIRECT:
        raise GeometryError("axes are defined for indirect similarities")
    R = fixed_point(fmap)
    theta = math.atan2(float(fmap.alpha[1]), float(fmap.alpha[0])) / 2
    first = theta % math.pi
    return CartesianLine(R, first), CartesianLine(R, (first + math.pi / 2) % math.pi)


def direction(P: CartesianPoint, Q: CartesianPoint) -> float:
    (px, py), (qx, qy) = P.to_float(), Q.to_float()
    return math.atan2(qy - py, qx - px)


def bisector_directions(d1: float, d2: float):
    """The two angle-bisector directions of two line directions, mod pi."""
    first = ((d1 + d2) / 2) % math.pi
    return first, (first + math.pi / 2) % math.pi


def angle_mod_pi_gap(t1: float, t2: float) -> float:
    g = (t1 - t2) % math.pi
    return min(g, math.pi - g)


# ---------------------------------------------------------------------------
# Figure-level metric constructions


@dataclass
class FigureSimilarity:
    verdict: SimilarityVerdict
    fmap: SimilarityMap
    R: ArealPoint | None
    axes: tuple | None


def figure_similarity(fig: Figure) -> FigureSimilarity:
    """Classify A->X, B->Y, C->Z and fit the map; R is None without a center."""
    metric = fig.metric
    verdict = classify_similarity((A, B, C), fig.triangle, metric)
    if verdict.cls is SimilarityClass.NONE:
        raise GeometryError("XYZ is not similar to ABC")
    fmap = fit_triangle_map((A, B, C), fig.triangle, metric, verdict.cls)
    try:
        R = unembed(fixed_point(fmap), metric)
    except GeometryError:
        R = None
    axes = None
    if R is not None and verdict.cls is SimilarityClass.INDIRECT:
        axes = axis_of(fmap)
    return FigureSimilarity(verdict, fmap, R, axes)


@dataclass
class InverseImages:
    D: ArealPoint
    E: ArealPoint
    F: ArealPoint
    T: ArealPoint
    lines: tuple
    concurrent: bool


def inverse_images(fmap: SimilarityMap, U, V, W, metric: TriangleMetric, labels) -> InverseImages:
    """D, E, F = map^-1(U, V, W) and T, where the lines join each of D, E, F to
    the vertex whose image is the perspector partner of U, V, W."""
    inv = fmap.inverse()
    D, E, F = (inv.apply_areal(P, metric) for P in (U, V, W))
    lines = tuple(join(P, VERTEX_OF_LABEL[lab]) for P, lab in zip((D, E, F), labels))
    T = meet(lines[0], lines[1])
    return InverseImages(D, E, F, T, lines, lines[2].contains(tuple(T)))


def brocard_point_of(T, metric: TriangleMetric) -> ArealPoint:
    """(1/b'^2 : 1/c'^2 : 1/a'^2) relative to the triangle T, in ABC's coordinates."""
    P1, P2, P3 = (P.normalized() for P in T)
    a2 = dist_sq(T[1], T[2], metric)
    b2 = dist_sq(T[2], T[0], metric)
    c2 = dist_sq(T[0], T[1], metric)
    w = (1 / b2, 1 / c2, 1 / a2)
    return ArealPoint(*(w[0] * u + w[1] * v + w[2] * s for u, v, s in zip(P1, P2, P3)))


@dataclass
class OmegaLines:
    omega0: ArealPoint
    omega1: ArealPoint
    omega1_formula: ArealPoint
    seven0: ArealPoint | None
    seven1: ArealPoint | None


def omega0_omega1(fig: Figure, fmap: SimilarityMap) -> OmegaLines:
    """Omega0 on the circumcircle (preimage of Omega) and Omega1 on XYZ's side
    (image of Omega, also the Brocard point of XYZ); plus the same pair for the
    second meet of gamma with the seven-point circle when that exists."""
    metric = fig.metric
    omega = center(CenterId.OMEGA, metric)
    inv = fmap.inverse()
    omega0 = inv.apply_areal(omega, metric)
    omega1 = fmap.apply_areal(omega, metric)
    omega1_formula = brocard_point_of(fig.triangle, metric)
    seven0 = seven1 = None
    try:
        seven = named_circle(CircleKind.SEVEN_POINT, metric)
        if not seven.same_as(fig.gamma):
            Q = other_common_point(seven, fig.gamma, omega)
            if Q != omega:
                seven0 = inv.apply_areal(Q, metric)
                seven1 = fmap.apply_areal(Q, metric)
    except DegenerateError:
        pass
    return OmegaLines(omega0, omega1, omega1_formula, seven0, seven1)


def angle_at(vertex: ArealPoint, P: ArealPoint, Q: ArealPoint, metric: TriangleMetric) -> Approx:
    """Unsigned angle P-vertex-Q in radians."""
    if vertex == P or vertex == Q:
        raise DegenerateError("angle with coincident points")
    v, p, q = (embed(X, metric).to_float() for X in (vertex, P, Q))
    ux, uy = p[0] - v[0], p[1] - v[1]
    wx, wy = q[0] - v[0], q[1] - v[1]
    return Approx(math.atan2(abs(ux * wy - uy * wx), ux * wx + uy * wy))


def vertex_angles(metric: TriangleMetric):
    """Angles at A, B, C from the law of cosines."""
    a2, b2, c2 = (float(v) for v in (metric.a2, metric.b2, metric.c2))
    return (
        math.acos((b2 + c2 - a2) / (2 * math.sqrt(b2 * c2))),
        math.acos((c2 + a2 - b2) / (2 * math.sqrt(c2 * a2))),
        math.acos((a2 + b2 - c2) / (2 * math.sqrt(a2 * b2))),
    )


def rotation_about_O_check(T, T_image, metric: TriangleMetric, tol: float = 1e-9) -> Approx:
    """Common rotation angle taking T to T_image about the circumcenter.

    Raises GeometryError if the radii or the three angles disagree beyond tol.
    """
    O = embed(center(CenterId.CIRCUMCENTER, metric), metric).to_float()
    angles = []
    for P, Q in zip(T, T_image):
        px, py = (approx_of(v).value for v in embed(P, metric))
        qx, qy = (approx_of(v).value for v in embed(Q, metric))
        u = (px - O[0], py - O[1])
        w = (qx - O[0], qy - O[1])
        ru, rw = math.hypot(*u), math.hypot(*w)
        if abs(ru - rw) > tol * max(ru, 1.0):
            raise GeometryError("image is not at the same distance from O")
        angles.append(math.atan2(u[0] * w[1] - u[1] * w[0], u[0] * w[0] + u[1] * w[1]))
    for t in angles[1:]:
        gap = abs((t - angles[0] + math.pi) % (2 * math.pi) - math.pi)
        if gap > tol:
            raise GeometryError(f"rotation angles disagree by {gap:.3e}")
    return Approx(angles[0])


def on_circumcircle(P: ArealPoint, metric: TriangleMetric) -> bool:
    return circumcircle(metric).contains(tuple(P))


__all__ = [
    "CartesianPoint", "embed", "unembed", "SimilarityClass", "SimilarityVerdict", "classify_similarity",
    "similar_under_any_labeling", "SimilarityMap", "fit_similarity", "fit_triangle_map", "fixed_point",
    "CartesianLine", "axis_of", "direction", "bisector_directions", "angle_mod_pi_gap", "FigureSimilarity",
    "figure_similarity", "InverseImages", "inverse_images", "brocard_point_of", "OmegaLines", "omega0_omega1",
    "angle_at", "vertex_angles", "rotation_about_O_check", "on_circumcircle", "collinear",
]
