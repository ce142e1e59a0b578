from fractions import Fraction as Fr

import pytest

import oracle
from omegacircles.areal import A, B, C, ArealPoint, Circle, TriangleMetric, circle_center_r2, circumcircle, collinear
from omegacircles.centers import CenterId, CircleKind, center, named_circle
from omegacircles.construct import construct
from omegacircles.scalars import tier_of
from omegacircles.errors import DegenerateError, GeometryError
from omegacircles.figures import (
    LABELING,
    MNParams,
    NamedCircle,
    Pivot,
    PivotKind,
    ThroughTwoPoints,
    build_figure,
    build_gamma,
    jk_and_wood,
    mn_points,
    recover_lmn,
    vertex_pivot_circles,
)

M, N = Fr(2, 3), Fr(5, 7)

# Cartesian oracle (tests/oracle.py) on sides 13, 14, 15 with m = 2/3, n = 5/7,
# converted to normalized areal coordinates and frozen here.
FROZEN = {
    "X": (Fr(169, 50051), Fr(49686, 50051), Fr(196, 50051)),
    "Y": (Fr(225, 62161), Fr(196, 62161), Fr(61740, 62161)),
    "Z": (Fr(-517792024889, 700024547475), Fr(522362946014, 700024547475), Fr(3090905006, 3111220211)),
    "U": (Fr(525796215659, 1579585235985), Fr(491000109796, 1579585235985), Fr(12506420234, 35101894133)),
    "V": (Fr(44764472786741, 48942802849629088), Fr(77351443227653, 24471401424814544),
          Fr(48743335490387041, 48942802849629088)),
    "W": (Fr(146928216746025, 9591883166056043329), Fr(9548506144971754954, 9591883166056043329),
          Fr(43230092867542350, 9591883166056043329)),
    "P": (Fr(77780505275, 38615184120083), Fr(154702886455306, 347536657080747),
          Fr(192133746077966, 347536657080747)),
    "S": (Fr(87673644788913304933829478175, 87154937027812464498453602929),
          Fr(7351015022792555158760445800, 87154937027812464498453602929),
          Fr(-7869722783893395594136321046, 87154937027812464498453602929)),
}


@pytest.fixture
def omega_fig(m131415):
    return build_figure(m131415, Pivot.of(PivotKind.OMEGA, m131415), MNParams(M, N))


@pytest.mark.parametrize("name", sorted(FROZEN))
def test_omega_figure_matches_frozen_oracle(omega_fig, name):
    assert tuple(omega_fig[name].normalized()) == FROZEN[name]


def test_oracle_recomputes_frozen_values():
    tri = oracle.Tri(13, 14, 15)
    fig = oracle.omega_figure(tri, M, N)
    for name, expected in FROZEN.items():
        assert tri.areal(fig[name]) == expected


@pytest.mark.parametrize("sides,m,n", [((5, 5, 6), Fr(-3, 4), Fr(7, 2)), ((9, 10, 17), Fr(11, 5), Fr(1, 9)),
                                       ((25, 39, 56), Fr(-8, 3), Fr(-2, 13))])
def test_omega_figure_against_live_oracle(sides, m, n):
    metric = TriangleMetric.from_sides(*sides)
    fig = build_figure(metric, Pivot.of(PivotKind.OMEGA, metric), MNParams(m, n))
    tri = oracle.Tri(*sides)
    ref = oracle.omega_figure(tri, m, n)
    for name in "XYZUVWPS":
        assert tuple(fig[name].normalized()) == tri.areal(ref[name]), name
    assert oracle.on_circle(ref["circumcircle"], ref["S"]) == 0


def test_gamma_from_mn(m131415):
    omega = center(CenterId.OMEGA, m131415)
    gamma = build_gamma(Pivot.of(PivotKind.OMEGA, m131415), MNParams(M, N), m131415)
    X, Y = mn_points(M, N, m131415)
    assert [gamma.residue(P) for P in (omega, X, Y)] == [0, 0, 0]


def test_gamma_specs(m131415):
    pivot = Pivot.of(PivotKind.OMEGA, m131415)
    seven = build_gamma(pivot, NamedCircle(CircleKind.SEVEN_POINT), m131415)
    assert seven.same_as(named_circle(CircleKind.SEVEN_POINT, m131415))
    omega = pivot.point
    on_line = [ArealPoint(*(2 * a + b for a, b in zip(omega, A))), ArealPoint(*(a - 3 * b for a, b in zip(omega, A)))]
    with pytest.raises(DegenerateError):
        build_gamma(pivot, ThroughTwoPoints(*on_line), m131415)
    with pytest.raises(GeometryError):
        build_gamma(Pivot.of(PivotKind.ORTHOCENTER, m131415), NamedCircle(CircleKind.SEVEN_POINT), m131415)


def test_cevian_labels_omega(omega_fig, m131415):
    omega = center(CenterId.OMEGA, m131415)
    # A-Omega gives Z, B-Omega gives X, C-Omega gives Y
    assert collinear(A, omega, omega_fig["Z"])
    assert collinear(B, omega, omega_fig["X"])
    assert collinear(C, omega, omega_fig["Y"])


def test_cevian_labels_omega_prime(m131415):
    fig = build_figure(m131415, Pivot.of(PivotKind.OMEGA_PRIME, m131415),
                       ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(4, -1, 2)))
    J = fig.pivot.point
    assert collinear(A, J, fig["Y"]) and collinear(B, J, fig["Z"]) and collinear(C, J, fig["X"])


def test_labeling_table():
    assert LABELING[PivotKind.OMEGA] == ("Z", "X", "Y")
    assert LABELING[PivotKind.OMEGA_PRIME] == ("Y", "Z", "X")
    assert LABELING[PivotKind.ORTHOCENTER] == ("X", "Y", "Z")
    assert LABELING[PivotKind.BH] == ("Z", "Y", "X")


def test_pivot_on_vertex_is_rejected():
    right = TriangleMetric.from_sides(3, 4, 5)  # H = C
    with pytest.raises(DegenerateError):
        build_figure(right, Pivot.of(PivotKind.ORTHOCENTER, right), NamedCircle(CircleKind.CIRCUMCIRCLE))


def test_custom_pivot_on_circumcircle_flags(m131415):
    # (a2/u : b2/v : c2/w) is on the circumcircle when u + v + w = 0
    J = ArealPoint(m131415.a2 / -3, m131415.b2 / 1, m131415.c2 / 2)
    assert circumcircle(m131415).contains(tuple(J))
    fig = build_figure(m131415, Pivot.of(PivotKind.CUSTOM, m131415, J), NamedCircle(CircleKind.CIRCUMCIRCLE))
    assert "gamma-is-circumcircle" in fig.flags
    assert all(circumcircle(m131415).contains(tuple(fig[k])) for k in "XYZ")


def test_recover_lmn(omega_fig, m131415):
    l, m, n = recover_lmn(omega_fig)
    assert (m, n) == (M, N)
    X, Y, Z = omega_fig.triangle
    a2, b2, c2 = m131415.a2, m131415.b2, m131415.c2
    assert Z == ArealPoint(1, l / c2, l / a2)
    assert build_gamma(omega_fig.pivot, ThroughTwoPoints(X, Y), m131415).residue(Z) == 0


def test_vertex_pivot_circles(m131415, equilateral):
    boc, coa, aob = vertex_pivot_circles(center(CenterId.OMEGA, m131415), m131415)
    assert (boc.p, boc.q, boc.r) == (-196, 0, 0)
    radii = [circle_center_r2(c)[1] for c in vertex_pivot_circles(ArealPoint(1, 1, 1), equilateral)]
    assert radii[0] == radii[1] == radii[2]
    with pytest.raises(DegenerateError):
        vertex_pivot_circles(ArealPoint(0, 1, 2), m131415)


def test_uvw_residues(omega_fig):
    for name, key in zip("UVW", ("BJC", "CJA", "AJB")):
        assert omega_fig.gamma.residue(omega_fig[name]) == 0
        assert omega_fig.circles[key].residue(omega_fig[name]) == 0


def test_seven_point_uvw_rational(m131415):
    fig = build_figure(m131415, Pivot.of(PivotKind.OMEGA, m131415), NamedCircle(CircleKind.SEVEN_POINT))
    for name in "UVW":
        assert fig.gamma.residue(fig[name]) == 0
        assert tier_of(fig[name]) == "rational"


def test_perspector_and_axis(omega_fig):
    third = omega_fig.lines["perspector"][2]
    assert third.value(tuple(omega_fig["P"])) == 0
    axis = omega_fig.lines["axis"]
    assert all(axis.value(tuple(omega_fig[k])) == 0 for k in ("M1", "M2", "M3", "P"))


def test_tangency_is_flagged(m131415):
    pivot = Pivot.of(PivotKind.OMEGA, m131415)
    boc = vertex_pivot_circles(pivot.point, m131415)[0]
    # circles tangent to B-Omega-C at Omega: radical axis equal to the tangent line there
    J = tuple(pivot.point)
    tangent = [boc.polar2(J, e) for e in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    gamma = Circle(m131415, *(c + t for c, t in zip(boc.line_part, tangent)))
    assert gamma.contains(J)
    fig = build_figure(m131415, pivot, gamma)
    assert "tangent-U" in fig.flags and "P" not in fig.points


def test_s_concurrency(omega_fig):
    for key in ("S_circle_a", "S_circle_b", "S_circle_c"):
        assert omega_fig.circles[key].residue(omega_fig["S"]) == 0
    assert circumcircle(omega_fig.metric).residue(omega_fig["S"]) == 0


def test_bh_wood(m131415):
    fig = build_figure(m131415, Pivot.of(PivotKind.BH, m131415), ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(2, -1, 5)))
    wood = jk_and_wood(fig)
    circ = circumcircle(m131415)
    for P in (wood.J, wood.K):
        assert circ.value(tuple(P)) == 0 and wood.sigma.value(tuple(P)) == 0
    for image in wood.images.values():
        assert all(circ.value(tuple(P)) == 0 for P in image)


def test_wood_on_circumcircle_gamma_errors(m131415):
    J = ArealPoint(m131415.a2 / -3, m131415.b2 / 1, m131415.c2 / 2)
    fig = build_figure(m131415, Pivot.of(PivotKind.CUSTOM, m131415, J), NamedCircle(CircleKind.CIRCUMCIRCLE))
    with pytest.raises(DegenerateError):
        jk_and_wood(fig)


def test_construct_adds_metric_points(m131415):
    fig = construct(m131415, Pivot.of(PivotKind.OMEGA, m131415), MNParams(M, N))
    for k in ("R", "D", "E", "F", "T", "Omega0", "Omega1"):
        assert k in fig.points
    assert fig.ledger
    fig_bh = construct(m131415, Pivot.of(PivotKind.BH, m131415),
                       ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(2, -1, 5)))
    assert {"J", "K", "A1", "B1", "C1"} <= set(fig_bh.points)
