"""Points, lines, circles and conics in areal (barycentric) coordinates.

A circle is stored through the line part ``(p, q, r)`` of

    a2*y*z + b2*z*x + c2*x*y + (x + y + z)*(p*x + q*y + r*z) = 0

so the circumcircle is ``(0, 0, 0)`` and radical axes are differences of
line parts.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateError, GeometryError, NoRealIntersection, NotOnCurveError
from .linalg import det3, nullspace, solve
from .scalars import (
    QuadExt,
    Rational,
    format_rational,
    is_rational_square,
    is_zero,
    rational,
    rational_sqrt,
    scalar_from_json,
    scalar_to_json,
    sign,
)


def _lift(v):
    return rational(v) if isinstance(v, int) else v


def _demote(v):
    if isinstance(v, QuadExt) and v.b == 0:
        return v.a
    return v


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _canonical(x, y, z, by_sum=True):
    x, y, z = _lift(x), _lift(y), _lift(z)
    if by_sum:
        s = x + y + z
        if not is_zero(s):
            return x / s, y / s, z / s
    for c in (x, y, z):
        if not is_zero(c):
            return x / c, y / c, z / c
    raise DegenerateError("all-zero homogeneous triple")


@dataclass(frozen=True)
class TriangleMetric:
    """Squared side lengths a2 = BC^2, b2 = CA^2, c2 = AB^2."""

    a2: Rational
    b2: Rational
    c2: Rational

    def __post_init__(self):
        a2, b2, c2 = rational(self.a2), rational(self.b2), rational(self.c2)
        object.__setattr__(self, "a2", a2)
        object.__setattr__(self, "b2", b2)
        object.__setattr__(self, "c2", c2)
        if min(a2, b2, c2) <= 0:
            raise DegenerateError("squared sides must be positive")
        if self.area16_sq <= 0:
            raise DegenerateError("sides violate the strict triangle inequality")

    @classmethod
    def from_sides(cls, a, b, c) -> TriangleMetric:
        a, b, c = rational(a), rational(b), rational(c)
        if min(a, b, c) <= 0:
            raise DegenerateError("side lengths must be positive")
        return cls(a * a, b * b, c * c)

    @property
    def area16_sq(self) -> Rational:
        """16 * area^2, by Heron in squared form."""
        a2, b2, c2 = self.a2, self.b2, self.c2
        return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - a2 * a2 - b2 * b2 - c2 * c2

    @property
    def area_sq(self) -> Rational:
        return self.area16_sq / 16

    @property
    def embeddable(self) -> bool:
        """True when the Cartesian embedding is exactly rational."""
        return is_rational_square(self.a2) and is_rational_square(self.area16_sq)

    @property
    def area(self) -> Rational:
        return rational_sqrt(self.area16_sq) / 4

    def conway(self):
        """(S_A, S_B, S_C) = half of (b2+c2-a2, c2+a2-b2, a2+b2-c2)."""
        a2, b2, c2 = self.a2, self.b2, self.c2
        return (b2 + c2 - a2) / 2, (c2 + a2 - b2) / 2, (a2 + b2 - c2) / 2

    @property
    def is_right(self) -> bool:
        return any(s == 0 for s in self.conway())

    @property
    def is_equilateral(self) -> bool:
        return self.a2 == self.b2 == self.c2

    def swap_bc(self) -> TriangleMetric:
        """Metric of the triangle relabelled A, C, B."""
        return TriangleMetric(self.a2, self.c2, self.b2)

    def to_json(self) -> dict:
        return {"a2": format_rational(self.a2), "b2": format_rational(self.b2), "c2": format_rational(self.c2)}

    @classmethod
    def from_json(cls, obj) -> TriangleMetric:
        return cls(rational(obj["a2"]), rational(obj["b2"]), rational(obj["c2"]))


class ArealPoint:
    """Homogeneous areal triple, stored in canonical scale.

    Finite points are scaled to x + y + z = 1; points at infinity are
    scaled so their first nonzero coordinate is 1. Equality is therefore
    projective equality.
    """

    __slots__ = ("x", "y", "z")

    def __init__(self, x, y, z):
        self.x, self.y, self.z = (_demote(v) for v in _canonical(x, y, z))

    def __iter__(self):
        return iter((self.x, self.y, self.z))

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    @property
    def at_infinity(self) -> bool:
        return is_zero(self.x + self.y + self.z)

    def normalized(self):
        if self.at_infinity:
            raise DegenerateError("point at infinity has no normalized form")
        return self.x, self.y, self.z

    def __eq__(self, other):
        if not isinstance(other, ArealPoint):
            return NotImplemented
        return all(is_zero(c) for c in cross(tuple(self), tuple(other)))

    def __hash__(self):
        return hash((self.x, self.y, self.z))

    def __repr__(self):
        return f"ArealPoint({', '.join(_fmt(v) for v in self)})"

    def to_json(self):
        return [scalar_to_json(v) for v in self]

    @classmethod
    def from_json(cls, obj) -> ArealPoint:
        return cls(*(scalar_from_json(v) for v in obj))


class ArealLine:
    """Line l*x + m*y + n*z = 0, scaled so the first nonzero coefficient is 1."""

    __slots__ = ("l", "m", "n")

    def __init__(self, l, m, n):
        self.l, self.m, self.n = (_demote(v) for v in _canonical(l, m, n, by_sum=False))

    def __iter__(self):
        return iter((self.l, self.m, self.n))

    def __getitem__(self, i):
        return (self.l, self.m, self.n)[i]

    def value(self, P) -> object:
        return self.l * P[0] + self.m * P[1] + self.n * P[2]

    def contains(self, P) -> bool:
        return is_zero(self.value(P))

    @property
    def is_at_infinity(self) -> bool:
        return is_zero(self.l - self.m) and is_zero(self.m - self.n)

    def __eq__(self, other):
        if not isinstance(other, ArealLine):
            return NotImplemented
        return all(is_zero(c) for c in cross(tuple(self), tuple(other)))

    def __hash__(self):
        return hash((self.l, self.m, self.n))

    def __repr__(self):
        return f"ArealLine({', '.join(_fmt(v) for v in self)})"

    def to_json(self):
        return [scalar_to_json(v) for v in self]

    @classmethod
    def from_json(cls, obj) -> ArealLine:
        return cls(*(scalar_from_json(v) for v in obj))


def _fmt(v):
    s = scalar_to_json(v)
    return str(s) if not isinstance(s, str) else s


A = ArealPoint(1, 0, 0)
B = ArealPoint(0, 1, 0)
C = ArealPoint(0, 0, 1)
VERTICES = (A, B, C)
LINE_AT_INFINITY = ArealLine(1, 1, 1)


class Conic:
    """xx*x^2 + yy*y^2 + zz*z^2 + yz*y*z + zx*z*x + xy*x*y = 0."""

    __slots__ = ("coeffs", "degenerate")

    def __init__(self, xx, yy, zz, yz, zx, xy):
        coeffs = tuple(_lift(v) for v in (xx, yy, zz, yz, zx, xy))
        if all(is_zero(v) for v in coeffs):
            raise DegenerateError("all-zero conic")
        self.coeffs = coeffs
        self.degenerate = is_zero(det3(self.matrix2()))

    def matrix2(self):
        """Twice the symmetric matrix of the quadratic form."""
        xx, yy, zz, yz, zx, xy = self.coeffs
        return ((2 * xx, xy, zx), (xy, 2 * yy, yz), (zx, yz, 2 * zz))

    def value(self, P):
        xx, yy, zz, yz, zx, xy = self.coeffs
        x, y, z = P
        return xx * x * x + yy * y * y + zz * z * z + yz * y * z + zx * z * x + xy * x * y

    def polar2(self, P, Q):
        """Twice the bilinear form, so value(P + t*Q) = value(P) + t*polar2 + t^2*value(Q)."""
        xx, yy, zz, yz, zx, xy = self.coeffs
        px, py, pz = P
        qx, qy, qz = Q
        return (2 * (xx * px * qx + yy * py * qy + zz * pz * qz)
                + yz * (py * qz + pz * qy) + zx * (pz * qx + px * qz) + xy * (px * qy + py * qx))

    def contains(self, P) -> bool:
        return is_zero(self.value(P))

    def residue(self, P):
        return self.value(P)

    def proportional_to(self, other: Conic) -> bool:
        k = next(i for i, v in enumerate(self.coeffs) if not is_zero(v))
        if is_zero(other.coeffs[k]):
            return False
        f = other.coeffs[k] / self.coeffs[k]
        return all(is_zero(o - f * s) for s, o in zip(self.coeffs, other.coeffs))

    def __repr__(self):
        return f"Conic({', '.join(_fmt(v) for v in self.coeffs)})"


@dataclass(frozen=True, eq=False)
class Circle:
    """a2*yz + b2*zx + c2*xy + (x+y+z)(p*x + q*y + r*z) = 0."""

    metric: TriangleMetric
    p: object
    q: object
    r: object

    def __post_init__(self):
        for name in ("p", "q", "r"):
            object.__setattr__(self, name, _demote(_lift(getattr(self, name))))

    @property
    def line_part(self):
        return (self.p, self.q, self.r)

    def value(self, P):
        """Left-hand side at the raw homogeneous triple."""
        x, y, z = P
        m = self.metric
        return (m.a2 * y * z + m.b2 * z * x + m.c2 * x * y
                + (x + y + z) * (self.p * x + self.q * y + self.r * z))

    def residue(self, P):
        """Left-hand side at the normalized point (scale-independent)."""
        if isinstance(P, ArealPoint) and not P.at_infinity:
            return self.value(P.normalized())
        return self.value(P)

    def contains(self, P) -> bool:
        return is_zero(self.value(P))

    def polar2(self, P, Q):
        m = self.metric
        px, py, pz = P
        qx, qy, qz = Q
        sp, sq = px + py + pz, qx + qy + qz
        lp = self.p * px + self.q * py + self.r * pz
        lq = self.p * qx + self.q * qy + self.r * qz
        return (m.a2 * (py * qz + pz * qy) + m.b2 * (pz * qx + px * qz) + m.c2 * (px * qy + py * qx)
                + sp * lq + sq * lp)

    def as_conic(self) -> Conic:
        m = self.metric
        p, q, r = self.p, self.q, self.r
        return Conic(p, q, r, m.a2 + q + r, m.b2 + r + p, m.c2 + p + q)

    @property
    def is_circumcircle(self) -> bool:
        return all(is_zero(v) for v in self.line_part)

    def same_as(self, other: Circle) -> bool:
        return self.metric == other.metric and all(
            is_zero(a - b) for a, b in zip(self.line_part, other.line_part))

    def to_json(self) -> dict:
        return {"p": scalar_to_json(self.p), "q": scalar_to_json(self.q), "r": scalar_to_json(self.r)}

    @classmethod
    def from_json(cls, obj, metric: TriangleMetric) -> Circle:
        return cls(metric, scalar_from_json(obj["p"]), scalar_from_json(obj["q"]), scalar_from_json(obj["r"]))


def circumcircle(metric: TriangleMetric) -> Circle:
    return Circle(metric, 0, 0, 0)


# ---------------------------------------------------------------------------
# Incidence


def join(P: ArealPoint, Q: ArealPoint) -> ArealLine:
    v = cross(tuple(P), tuple(Q))
    if all(is_zero(c) for c in v):
        raise DegenerateError("cannot join a point to itself")
    return ArealLine(*v)


def meet(L: ArealLine, M: ArealLine) -> ArealPoint:
    v = cross(tuple(L), tuple(M))
    if all(is_zero(c) for c in v):
        raise DegenerateError("cannot meet a line with itself")
    return ArealPoint(*v)


def collinear(P, Q, R) -> bool:
    return is_zero(det3((tuple(P), tuple(Q), tuple(R))))


def concurrent(L, M, N) -> bool:
    return is_zero(det3((tuple(L), tuple(M), tuple(N))))


def midpoint(P: ArealPoint, Q: ArealPoint) -> ArealPoint:
    p, q = P.normalized(), Q.normalized()
    return ArealPoint(*((u + v) / 2 for u, v in zip(p, q)))


def homothety(center: ArealPoint, factor, P: ArealPoint) -> ArealPoint:
    """Image of P under the enlargement with the given center and factor."""
    c, p = center.normalized(), P.normalized()
    return ArealPoint(*(u + factor * (v - u) for u, v in zip(c, p)))


def points_on_line(L: ArealLine):
    """Two distinct points of L (its meets with the side lines, or infinity)."""
    found = []
    for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)):
        v = cross(tuple(L), e)
        if all(is_zero(c) for c in v):
            continue
        P = ArealPoint(*v)
        if all(P != F for F in found):
            found.append(P)
        if len(found) == 2:
            return tuple(found)
    raise DegenerateError("line has fewer than two distinct points")


# ---------------------------------------------------------------------------
# Metric


def dist_sq(P: ArealPoint, Q: ArealPoint, metric: TriangleMetric):
    """Squared distance from the normalized displacement (u, v, w)."""
    if P.at_infinity or Q.at_infinity:
        raise DegenerateError("distance to a point at infinity")
    u, v, w = (q - p for p, q in zip(P.normalized(), Q.normalized()))
    return -(metric.a2 * v * w + metric.b2 * w * u + metric.c2 * u * v)


def orientation(P: ArealPoint, Q: ArealPoint, R: ArealPoint) -> int:
    """+1 for the sense of ABC, -1 for the reverse, 0 when collinear."""
    return sign(det3((P.normalized(), Q.normalized(), R.normalized())))


# ---------------------------------------------------------------------------
# Circles


def circle_through(P: ArealPoint, Q: ArealPoint, R: ArealPoint, metric: TriangleMetric) -> Circle:
    """The unique circle through three non-collinear finite points."""
    rows, rhs = [], []
    for X in (P, Q, R):
        if X.at_infinity:
            raise DegenerateError("circle through a point at infinity")
        x, y, z = X.normalized()
        rows.append((x, y, z))
        rhs.append(-(metric.a2 * y * z + metric.b2 * z * x + metric.c2 * x * y))
    sol = solve(rows, rhs)
    if sol is None:
        raise DegenerateError("points are collinear or coincide")
    return Circle(metric, *sol)


def circle_center_r2(circle: Circle):
    """Center and squared radius."""
    M = circle.as_conic().matrix2()
    # pole of the line at infinity: adj(M) (1, 1, 1)
    adj_rows = [
        (M[1][1] * M[2][2] - M[1][2] * M[2][1], M[0][2] * M[2][1] - M[0][1] * M[2][2], M[0][1] * M[1][2] - M[0][2] * M[1][1]),
        (M[1][2] * M[2][0] - M[1][0] * M[2][2], M[0][0] * M[2][2] - M[0][2] * M[2][0], M[0][2] * M[1][0] - M[0][0] * M[1][2]),
        (M[1][0] * M[2][1] - M[1][1] * M[2][0], M[0][1] * M[2][0] - M[0][0] * M[2][1], M[0][0] * M[1][1] - M[0][1] * M[1][0]),
    ]
    center = ArealPoint(*(sum(row, start=0 * M[0][0]) for row in adj_rows))
    if center.at_infinity:
        raise DegenerateError("circle has no finite center")
    r2 = dist_sq(A, center, circle.metric) + circle.p
    return center, r2


def circle_from_center(center: ArealPoint, r2, metric: TriangleMetric) -> Circle:
    return Circle(metric, *(r2 - dist_sq(V, center, metric) for V in VERTICES))


def circle_on_diameter(P: ArealPoint, Q: ArealPoint, metric: TriangleMetric) -> Circle:
    if P == Q:
        raise DegenerateError("diameter endpoints coincide")
    return circle_from_center(midpoint(P, Q), dist_sq(P, Q, metric) / 4, metric)


def enlarge_circle(circle: Circle, factor) -> Circle:
    """Scale a circle about its own center by a linear factor."""
    center, r2 = circle_center_r2(circle)
    return circle_from_center(center, r2 * factor * factor, circle.metric)


def power_of_point(P: ArealPoint, circle: Circle):
    """dist_sq(P, center) - r^2, evaluated directly from the equation."""
    return -circle.value(P.normalized())


def radical_axis(C1: Circle, C2: Circle) -> ArealLine:
    """Line of equal power; the line at infinity for concentric circles."""
    if C1.metric != C2.metric:
        raise GeometryError("circles use different metrics")
    diff = tuple(a - b for a, b in zip(C1.line_part, C2.line_part))
    if all(is_zero(v) for v in diff):
        raise DegenerateError("identical circles have no radical axis")
    return ArealLine(*diff)


# ---------------------------------------------------------------------------
# Intersections


def _second_along(curve, P, Q):
    fq = curve.value(tuple(Q))
    b2 = curve.polar2(tuple(P), tuple(Q))
    if is_zero(fq) and is_zero(b2):
        raise DegenerateError("line lies on the curve")
    return ArealPoint(*(fq * p - b2 * q for p, q in zip(P, Q)))


def second_intersection(curve, P: ArealPoint, L: ArealLine) -> ArealPoint:
    """Other meet of L with the curve, given the meet P (P itself if tangent).

    Uses the root sum of the quadratic restricted to L, so the answer stays in
    the tier of the inputs.
    """
    if not curve.contains(tuple(P)):
        raise NotOnCurveError("P is not on the curve")
    if not L.contains(tuple(P)):
        raise NotOnCurveError("L does not pass through P")
    for Q in points_on_line(L):
        if Q != P:
            return _second_along(curve, P, Q)
    raise DegenerateError("no second point on the line")  # pragma: no cover


def second_intersection_through(curve, P: ArealPoint, Q: ArealPoint) -> ArealPoint:
    """second_intersection along the line PQ, with Q a known point of it."""
    if not curve.contains(tuple(P)):
        raise NotOnCurveError("P is not on the curve")
    if P == Q:
        raise DegenerateError("P and Q coincide")
    return _second_along(curve, P, Q)


def line_circle_intersections(L: ArealLine, curve):
    """The two meets of a line and a circle (or conic), and the discriminant.

    Coordinates live in Q(sqrt disc); when disc is a rational square they
    come back rational. Raises NoRealIntersection when disc < 0.
    """
    P0, Q0 = points_on_line(L)
    p0, q0 = tuple(P0), tuple(Q0)
    fp, fq = curve.value(p0), curve.value(q0)
    b = curve.polar2(p0, q0) / 2
    disc = _lift(b * b - fp * fq)
    if sign(disc) < 0:
        raise NoRealIntersection("line does not meet the curve", disc)
    if is_zero(fp) and is_zero(fq) and is_zero(b):
        raise DegenerateError("line lies on the curve")
    if is_zero(fp) and is_zero(fq):
        # both sample points already lie on the curve
        return P0, Q0, disc
    if isinstance(disc, Rational):
        s = QuadExt(0, 1, disc)
    else:
        s = disc ** 0.5
    out = []
    for sg in (1, -1):
        if not is_zero(fq):
            lam, mu = fq, -b + sg * s
        else:
            lam, mu = -b - sg * s, fp
        out.append(ArealPoint(*(lam * u + mu * v for u, v in zip(p0, q0))))
    return out[0], out[1], disc


def conic_through_five(*points: ArealPoint) -> Conic:
    """The conic through five points; raises if it is not unique."""
    if len(points) != 5:
        raise ValueError("need exactly five points")
    rows = []
    for P in points:
        x, y, z = P
        rows.append([x * x, y * y, z * z, y * z, z * x, x * y])
    basis = nullspace(rows)
    if len(basis) != 1:
        raise DegenerateError("five points do not determine a unique conic")
    return Conic(*basis[0])
