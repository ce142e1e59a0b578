from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from omegacircles.areal import (
    A,
    B,
    C,
    LINE_AT_INFINITY,
    ArealLine,
    ArealPoint,
    Circle,
    TriangleMetric,
    circle_center_r2,
    circle_from_center,
    circle_on_diameter,
    circle_through,
    circumcircle,
    collinear,
    conic_through_five,
    dist_sq,
    join,
    line_circle_intersections,
    meet,
    midpoint,
    orientation,
    power_of_point,
    radical_axis,
    second_intersection,
)
from omegacircles.centers import CenterId, center
from omegacircles.errors import DegenerateError, NoRealIntersection, NotOnCurveError
from omegacircles.scalars import QuadExt, rational
from omegacircles.similarity import embed

small = st.fractions(min_value=-20, max_value=20, max_denominator=30)
finite_points = st.tuples(small, small, small).filter(lambda t: sum(t) != 0).map(lambda t: ArealPoint(*t))


def test_metric_validation():
    with pytest.raises(DegenerateError):
        TriangleMetric.from_sides(3, 4, 8)
    with pytest.raises(DegenerateError):
        TriangleMetric.from_sides(1, 2, 3)
    with pytest.raises(DegenerateError):
        TriangleMetric(0, 1, 1)
    m = TriangleMetric.from_sides(13, 14, 15)
    assert m.area == 84 and m.embeddable
    assert not TriangleMetric(2, 3, 4).embeddable


def test_point_equality_is_projective():
    assert ArealPoint(2, 4, 6) == ArealPoint(1, 2, 3)
    assert ArealPoint(1, -1, 0) == ArealPoint(-3, 3, 0)
    assert ArealPoint(1, -1, 0).at_infinity
    with pytest.raises(DegenerateError):
        ArealPoint(0, 0, 0)


def test_join_examples(m131415):
    assert join(A, B) == ArealLine(0, 0, 1)
    assert join(B, C) == ArealLine(1, 0, 0)
    omega = center(CenterId.OMEGA, m131415)
    L = join(A, omega)
    assert L.value(tuple(A)) == 0 and L.value(tuple(omega)) == 0


def test_meet_examples():
    assert meet(ArealLine(0, 0, 1), ArealLine(0, 1, 0)) == A
    P, Q, R = ArealPoint(1, 2, 3), ArealPoint(-1, 5, 2), ArealPoint(4, 4, -1)
    assert meet(join(P, Q), join(Q, R)) == Q


@given(finite_points, finite_points, finite_points)
def test_join_meet_incidence(P, Q, R):
    if P == Q or Q == R or collinear(P, Q, R):
        return
    L = join(P, Q)
    assert L.contains(tuple(P)) and L.contains(tuple(Q))
    assert meet(join(P, Q), join(Q, R)) == Q


def test_dist_sq_sides(m131415):
    assert dist_sq(B, C, m131415) == 169
    assert dist_sq(A, B, m131415) == 225
    assert dist_sq(C, A, m131415) == 196


def test_dist_sq_against_cartesian_oracle(m131415):
    tri = oracle.Tri(13, 14, 15)
    G = ArealPoint(1, 1, 1)
    expected = oracle.d2(tri.A, tri.point(1, 1, 1))
    assert dist_sq(A, G, m131415) == expected
    assert embed(A, m131415).x == Fr(99, 13) and embed(A, m131415).y == Fr(168, 13)


@given(finite_points, finite_points)
@settings(max_examples=60)
def test_dist_sq_matches_oracle_randomly(P, Q):
    tri = oracle.Tri(13, 14, 15)
    m = TriangleMetric.from_sides(13, 14, 15)
    assert dist_sq(P, Q, m) == oracle.d2(tri.point(*P), tri.point(*Q))


def test_orientation():
    assert orientation(A, B, C) == 1
    assert orientation(A, C, B) == -1
    assert orientation(B, C, ArealPoint(0, 1, 3)) == 0


def test_circle_through_examples(m131415):
    circ = circle_through(A, B, C, m131415)
    assert (circ.p, circ.q, circ.r) == (0, 0, 0) and circ.is_circumcircle
    omega = center(CenterId.OMEGA, m131415)
    boc = circle_through(B, C, omega, m131415)
    assert (boc.p, boc.q, boc.r) == (-196, 0, 0)
    # expanded: 169yz + 196zx + 225xy - 196x(x+y+z) = 169yz + 29xy - 196x^2
    x, y, z = 3, 5, 7
    assert boc.value((x, y, z)) == 169 * y * z + 29 * x * y - 196 * x * x
    with pytest.raises(DegenerateError):
        circle_through(B, C, ArealPoint(0, 2, 5), m131415)


def test_circle_center_and_radius(m131415):
    O, r2 = circle_center_r2(circumcircle(m131415))
    assert O == ArealPoint(169, 154, 125)
    # R^2 = a^2 b^2 c^2 / (16 area^2)
    assert r2 == rational(169 * 196 * 225, 16 * 84 * 84)
    assert r2 == dist_sq(O, A, m131415)
    tri = oracle.Tri(13, 14, 15)
    ctr = oracle.circle_center(oracle.circle3(tri.A, tri.B, tri.C))
    assert tuple(O.normalized()) == tri.areal(ctr)


def test_circle_on_diameter(m131415):
    c = circle_on_diameter(B, C, m131415)
    assert c.contains(tuple(B)) and c.contains(tuple(C))
    ctr, _ = circle_center_r2(c)
    assert ctr == midpoint(B, C)
    G, H = center(CenterId.CENTROID, m131415), center(CenterId.ORTHOCENTER, m131415)
    og = circle_on_diameter(G, H, m131415)
    assert og.residue(G) == 0 and og.residue(H) == 0
    with pytest.raises(DegenerateError):
        circle_on_diameter(G, G, m131415)


def test_power_of_point(m131415):
    circ = circumcircle(m131415)
    assert power_of_point(A, circ) == 0
    G = ArealPoint(1, 1, 1)
    assert power_of_point(G, circ) == -rational(169 + 196 + 225, 9)
    O, r2 = circle_center_r2(circ)
    assert power_of_point(O, circ) == -r2


def test_radical_axis(m131415):
    omega = center(CenterId.OMEGA, m131415)
    boc = circle_through(B, omega, C, m131415)
    assert radical_axis(circumcircle(m131415), boc) == ArealLine(1, 0, 0)
    O, r2 = circle_center_r2(circumcircle(m131415))
    inner = circle_from_center(O, r2 / 4, m131415)
    assert radical_axis(circumcircle(m131415), inner) == LINE_AT_INFINITY
    with pytest.raises(DegenerateError):
        radical_axis(boc, boc)


def test_second_intersection(m131415):
    circ = circumcircle(m131415)
    assert second_intersection(circ, B, join(B, C)) == C
    # tangent at B is the polar line of B
    tangent = ArealLine(*(circ.polar2(tuple(B), e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))))
    assert second_intersection(circ, B, tangent) == B
    with pytest.raises(NotOnCurveError):
        second_intersection(circ, ArealPoint(1, 1, 1), join(ArealPoint(1, 1, 1), A))


def test_line_circle_intersections(m131415):
    circ = circumcircle(m131415)
    P, Q, disc = line_circle_intersections(join(B, C), circ)
    assert {tuple(P), tuple(Q)} == {tuple(B), tuple(C)}
    assert rational(disc).numerator >= 0
    O, _ = circle_center_r2(circ)
    L = join(O, ArealPoint(1, 2, 2))
    P, Q, disc = line_circle_intersections(L, circ)
    assert circ.contains(tuple(P)) and circ.contains(tuple(Q))
    assert midpoint(P, Q) == O
    assert isinstance(P.x, QuadExt) or isinstance(P.x, type(rational(0)))
    far = ArealLine(-2, -3, -3)  # x = 3 in normalized coordinates, parallel to BC beyond A
    with pytest.raises(NoRealIntersection):
        line_circle_intersections(far, circ)


def test_conic_through_five(m131415):
    circ = circumcircle(m131415)
    omega = center(CenterId.OMEGA, m131415)
    extra = [second_intersection(circ, A, join(A, omega)), second_intersection(circ, B, join(B, omega))]
    conic = conic_through_five(A, B, C, *extra)
    assert conic.proportional_to(circ.as_conic())
    pair = conic_through_five(A, B, ArealPoint(1, 1, 0), C, ArealPoint(1, 2, 3))
    assert pair.degenerate
    with pytest.raises(DegenerateError):
        conic_through_five(A, B, ArealPoint(1, 1, 0), ArealPoint(2, -1, 0), C)


def test_json_roundtrip(m131415):
    P = ArealPoint(rational(1, 3), rational(-2, 7), 5)
    assert ArealPoint.from_json(P.to_json()) == P
    c = circle_through(A, ArealPoint(1, 2, 3), ArealPoint(3, 1, 1), m131415)
    c2 = Circle.from_json(c.to_json(), m131415)
    assert (c2.p, c2.q, c2.r) == (c.p, c.q, c.r)
    assert TriangleMetric.from_json(m131415.to_json()) == m131415
