"""Named properties of the pivot-circle configurations and a seeded fuzzer.

Every property runs on one figure and returns a :class:`Verdict`. The fuzzer
draws a metric plus circle parameters per trial, builds the figures each
property needs, and aggregates verdicts in trial order, so a report depends
only on its :class:`TrialSpec`.
"""
from __future__ import annotations

import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from enum import Enum
from functools import lru_cache

from .areal import (
    A,
    B,
    C,
    VERTICES,
    ArealPoint,
    TriangleMetric,
    circle_through,
    circumcircle,
    conic_through_five,
    dist_sq,
    join,
    midpoint,
    radical_axis,
)
from .centers import CenterId, CircleKind, center, named_circle
from .errors import DegenerateError, GeometryError
from .figures import (
    DIRECT_PIVOTS,
    INDIRECT_PIVOTS,
    LABELING,
    Figure,
    MNParams,
    NamedCircle,
    Pivot,
    VERTEX_OF_LABEL,
    PivotKind,
    ThroughTwoPoints,
    build_figure,
    jk_and_wood,
)
from .linalg import det3
from .scalars import Approx, format_rational, is_exact, is_zero, rational, tier_of
from .similarity import (
    SimilarityClass,
    angle_at,
    angle_mod_pi_gap,
    bisector_directions,
    classify_similarity,
    direction,
    embed,
    figure_similarity,
    inverse_images,
    omega0_omega1,
    rotation_about_O_check,
    similar_under_any_labeling,
    vertex_angles,
)


class PropertyId(str, Enum):
    XYZ_SIMILAR_OMEGA = "xyz-similar-omega"
    XYZ_SIMILAR_OMEGA_PRIME = "xyz-similar-omega-prime"
    XYZ_SIMILAR_HAGGE = "xyz-similar-hagge"
    XYZ_DIRECT_BH = "xyz-direct-bh"
    PERSPECTOR_EXISTS = "perspector-exists"
    AXIS_COLLINEAR = "axis-collinear"
    S_ON_CIRCUMCIRCLE = "s-on-circumcircle"
    S_ON_CIRCUMCIRCLE_BH = "s-on-circumcircle-bh"
    MIDPOINT_CONIC = "midpoint-conic"
    HAGGE_R_EQUALS_P = "hagge-r-equals-p"
    SEVEN_POINT_R_EQUALS_P = "seven-point-r-equals-p"
    ANGLE_FACTS_OMEGA = "angle-facts-omega"
    ANGLE_FACTS_OMEGA_PRIME = "angle-facts-omega-prime"
    ANGLE_FACTS_BH = "angle-facts-bh"
    WOOD_ROTATION = "wood-rotation"
    APD_COLLINEAR_HAGGE = "apd-collinear-hagge"
    NEGATIVE_RANDOM_J = "negative-random-j"
    T_CONCURRENT = "t-concurrent"
    OMEGA0_OMEGA1_THROUGH_R = "omega0-omega1-through-r"
    SIMILARITY_AXIS_BISECTOR = "similarity-axis-bisector"


PASS, FAIL, SKIP, CANDIDATE = "pass", "fail", "skip", "counterexample-candidate"

ANGLE_TOL = 1e-10
RELATIVE_TOL = 1e-9


@dataclass
class Verdict:
    status: str
    tier: str = "exact"
    residual: object = "0/1"
    detail: str = ""

    def to_json(self) -> dict:
        return asdict(self)


class Skip(Exception):
    """The figure is degenerate for this property."""


class PropertyMismatch(ValueError):
    """Property run on a figure with the wrong pivot."""


def _exact_verdict(residuals, detail="", fail_status=FAIL) -> Verdict:
    """Pass iff every residual is exactly zero; report the first nonzero."""
    for r in residuals:
        if not is_zero(r):
            return Verdict(fail_status, "exact", _fmt(r), detail)
    return Verdict(PASS, "exact", "0/1", detail)


def _fmt(r):
    if isinstance(r, (Approx, float)):
        return float(r)
    try:
        return format_rational(r)
    except TypeError:
        return str(r)


def _need(fig: Figure, *names):
    if not fig.has(*names):
        missing = [n for n in names if n not in fig.points]
        raise Skip(f"missing {','.join(missing)}; flags={fig.flags}")


def _similarity(fig: Figure):
    if fig.similarity is None:
        try:
            fig.similarity = figure_similarity(fig)
        except DegenerateError as exc:
            raise Skip(str(exc)) from exc
    return fig.similarity


def _rel_distance(P: ArealPoint, Q: ArealPoint, metric: TriangleMetric) -> float:
    d2 = float(dist_sq(P, Q, metric))
    scale = float(dist_sq(center(CenterId.CIRCUMCENTER, metric), A, metric))
    return math.sqrt(abs(d2) / scale)


def _points_match(P, Q, metric, detail) -> Verdict:
    """Exact equality when both are exact, else relative distance < 1e-9."""
    if all(is_exact(v) for v in (*P, *Q)):
        return _exact_verdict([*(a - b for a, b in zip(P, Q))], detail)
    rel = _rel_distance(P, Q, metric)
    return Verdict(PASS if rel < RELATIVE_TOL else FAIL, "approx", rel, detail)


def _incidence(values, detail="") -> Verdict:
    """Exact residuals must vanish; approx residuals are already scale-free."""
    if all(is_exact(v) for v in values):
        return _exact_verdict(values, detail)
    worst = max(abs(float(v)) for v in values)
    return Verdict(PASS if worst < RELATIVE_TOL else FAIL, "approx", worst, detail)


def _unit(P):
    x = [float(v) for v in P.normalized()] if not P.at_infinity else [float(v) for v in P]
    r = math.sqrt(sum(v * v for v in x))
    return [v / r for v in x]


def _collinear_residual(P, Q, R):
    if all(is_exact(v) for v in (*P, *Q, *R)):
        return det3((tuple(P), tuple(Q), tuple(R)))
    return det3((_unit(P), _unit(Q), _unit(R)))


def _on_circumcircle_residual(P, metric):
    value = circumcircle(metric).residue(P)
    if is_exact(value):
        return value
    return float(value) / float(dist_sq(center(CenterId.CIRCUMCENTER, metric), A, metric))


def _same_point_residual(P, Q, metric):
    if all(is_exact(v) for v in (*P, *Q)):
        return dist_sq(P, Q, metric)
    return _rel_distance(P, Q, metric)


# ---------------------------------------------------------------------------
# Checks


def check_xyz_similar(fig: Figure, expected: SimilarityClass) -> Verdict:
    _need(fig, "X", "Y", "Z")
    try:
        v = classify_similarity((A, B, C), fig.triangle, fig.metric)
    except DegenerateError as exc:
        raise Skip(str(exc)) from exc
    status = PASS if v.cls is expected else FAIL
    return Verdict(status, "exact", _fmt(v.ratio_sq) if v.ratio_sq is not None else None, v.cls.value)


def check_perspector(fig: Figure) -> Verdict:
    _need(fig, "P")
    third = fig.lines["perspector"][2]
    return _exact_verdict([third.value(tuple(fig["P"]))], "third line through the meet of the first two")


def check_axis(fig: Figure) -> Verdict:
    _need(fig, "M1", "M2", "M3", "P")
    pts = [tuple(fig[k]) for k in ("M1", "M2", "M3", "P")]
    dets = [det3((pts[0], pts[1], pts[2])), det3((pts[0], pts[1], pts[3])),
            det3((pts[0], pts[2], pts[3])), det3((pts[1], pts[2], pts[3]))]
    return _exact_verdict(dets)


def _s_verdict(fig: Figure, key: str) -> Verdict:
    _need(fig, key)
    S = fig[key]
    circles = [fig.circles[f"{key}_circle_{s}"] for s in "abc"]
    on = [c.residue(S) for c in circles]
    if not all(is_zero(r) for r in on):
        return _exact_verdict(on, "circles are not concurrent")
    return _exact_verdict([circumcircle(fig.metric).residue(S)], "circumcircle residue at S", fail_status=CANDIDATE)


def check_s(fig: Figure) -> Verdict:
    return _s_verdict(fig, "S")


def check_s_median(fig: Figure) -> Verdict:
    v = _s_verdict(fig, "S")
    if "S_xyz" in fig.points:
        literal = circumcircle(fig.metric).residue(fig["S_xyz"])
        v.detail += f"; circles AYZ,BZX,CXY give circumcircle residue {_fmt(literal)}"
    return v


def check_midpoint_conic(fig: Figure) -> Verdict:
    _need(fig, "X", "Y", "Z", "U", "V", "W")
    sim = _similarity(fig)
    inv = inverse_images(sim.fmap, fig["U"], fig["V"], fig["W"], fig.metric, fig.pivot.labels)
    X, Y, Z = fig.triangle
    pairs = [(A, X), (B, Y), (C, Z), (inv.D, fig["U"]), (inv.E, fig["V"]), (inv.F, fig["W"])]
    mids = [midpoint(P, Q) for P, Q in pairs]
    try:
        conic = conic_through_five(*mids[:5])
    except DegenerateError as exc:
        raise Skip(str(exc)) from exc
    value = conic.value(tuple(mids[5]))
    if is_exact(value):
        return _exact_verdict([value], "sixth midpoint on the conic through five")
    scale = max(abs(float(c)) for c in conic.coeffs) * max(abs(float(c)) for c in mids[5]) ** 2
    rel = abs(float(value)) / scale
    return Verdict(PASS if rel < RELATIVE_TOL else FAIL, "approx", rel, "normalized residual")


def check_r_equals_p(fig: Figure) -> Verdict:
    _need(fig, "P")
    sim = _similarity(fig)
    if sim.R is None:
        raise Skip("similarity has no center")
    return _points_match(sim.R, fig["P"], fig.metric, "center of similarity vs perspector")


ANGLE_PATTERN = {kind: tuple("XYZ".index(lab) for lab in labels) for kind, labels in LABELING.items()}


def _directed_angle(J, P, Q, metric) -> float:
    v, p, q = (embed(X, metric).to_float() for X in (J, P, Q))
    ux, uy = p[0] - v[0], p[1] - v[1]
    wx, wy = q[0] - v[0], q[1] - v[1]
    return math.atan2(ux * wy - uy * wx, ux * wx + uy * wy)


def check_angle_facts(fig: Figure) -> Verdict:
    """Directed angles mod pi, so pivots outside the triangle are covered too.

    For a pivot inside ABC these are exactly the undirected identities.
    """
    J = fig.pivot.point
    metric = fig.metric
    angles = vertex_angles(metric)
    pattern = ANGLE_PATTERN[fig.pivot.kind]
    sense = 1 if _directed_angle(A, B, C, metric) > 0 else -1
    worst = 0.0
    for (P, Q), v in zip(((B, C), (C, A), (A, B)), pattern):
        if J == P or J == Q:
            raise Skip("pivot on a vertex")
        got = _directed_angle(J, P, Q, metric)
        worst = max(worst, angle_mod_pi_gap(got, sense * (math.pi - angles[v])))
    names = "ABC"
    detail = "BJC, CJA, AJB = pi - " + ", ".join(names[v] for v in pattern) + " (directed, mod pi)"
    return Verdict(PASS if worst < ANGLE_TOL else FAIL, "approx", worst, detail)


def check_wood(fig: Figure) -> Verdict:
    _need(fig, "X", "Y", "Z")
    try:
        wood = jk_and_wood(fig)
    except DegenerateError as exc:
        raise Skip(str(exc)) from exc
    metric = fig.metric
    circ = circumcircle(metric)
    axis = radical_axis(wood.sigma, circ)
    residues = []
    for P in (wood.J, wood.K):
        residues += [circ.value(tuple(P)), wood.sigma.value(tuple(P)), axis.value(tuple(P))]
    v = _exact_verdict(residues, "J, K on the circumcircle and the enlarged circle")
    if v.status != PASS:
        return v
    worst = 0.0
    for name, image in wood.images.items():
        cong = classify_similarity((A, B, C), image, metric)
        if cong.cls is not SimilarityClass.DIRECT or not is_zero(cong.ratio_sq - 1):
            return Verdict(FAIL, "exact", _fmt(cong.ratio_sq), f"perspector {name}: image not directly congruent")
        try:
            rotation_about_O_check((A, B, C), image, metric, tol=RELATIVE_TOL)
        except GeometryError as exc:
            return Verdict(FAIL, "approx", None, f"perspector {name}: {exc}")
    tier = tier_of((*wood.J, *wood.K))
    return Verdict(PASS, "approx", worst, f"J,K in {tier} tier; enlargement factor {wood.factor}")


def check_apd(fig: Figure) -> Verdict:
    _need(fig, "U", "V", "W", "P")
    sim = _similarity(fig)
    inv = inverse_images(sim.fmap, fig["U"], fig["V"], fig["W"], fig.metric, fig.pivot.labels)
    P = fig["P"]
    values = [_on_circumcircle_residual(X, fig.metric) for X in (inv.D, inv.E, inv.F)]
    values += [_collinear_residual(V, P, X) for V, X in zip(VERTICES, (inv.D, inv.E, inv.F))]
    return _incidence(values, "D, E, F on the circumcircle; APD, BPE, CPF straight")


def _special_points(metric):
    out = []
    for cid in (CenterId.OMEGA, CenterId.OMEGA_PRIME, CenterId.ORTHOCENTER, CenterId.AH, CenterId.BH, CenterId.CH):
        try:
            out.append(center(cid, metric))
        except GeometryError:
            pass
    return out


def check_negative_j(fig: Figure) -> Verdict:
    _need(fig, "X", "Y", "Z")
    if any(fig.pivot.point == P for P in _special_points(fig.metric)):
        raise Skip("random pivot hit a special point")
    try:
        hits = similar_under_any_labeling((A, B, C), fig.triangle, fig.metric)
    except DegenerateError as exc:
        raise Skip(str(exc)) from exc
    if hits:
        perm, v = hits[0]
        return Verdict(FAIL, "exact", _fmt(v.ratio_sq), f"similar under correspondence {perm} ({v.cls.value})")
    return Verdict(PASS, "exact", None, "XYZ similar to ABC under no correspondence")


def check_t(fig: Figure) -> Verdict:
    _need(fig, "U", "V", "W", "P")
    sim = _similarity(fig)
    inv = inverse_images(sim.fmap, fig["U"], fig["V"], fig["W"], fig.metric, fig.pivot.labels)
    T_image = sim.fmap.inverse().apply_areal(fig["P"], fig.metric)
    values = [_collinear_residual(inv.F, VERTEX_OF_LABEL[fig.pivot.labels[2]], inv.T),
              _same_point_residual(inv.T, T_image, fig.metric)]
    return _incidence(values, "three lines concurrent at the preimage of P")


def check_omega_lines(fig: Figure) -> Verdict:
    _need(fig, "X", "Y", "Z")
    sim = _similarity(fig)
    if sim.R is None:
        raise Skip("similarity has no center")
    ol = omega0_omega1(fig, sim.fmap)
    R = sim.R
    values = [_on_circumcircle_residual(ol.omega0, fig.metric),
              _same_point_residual(ol.omega1, ol.omega1_formula, fig.metric),
              _collinear_residual(ol.omega0, ol.omega1, R)]
    if ol.seven0 is not None:
        values.append(_collinear_residual(ol.seven0, ol.seven1, R))
    return _incidence(values, "Omega0 on circumcircle; Omega1 is XYZ's Brocard point; lines through R")


def check_axis_bisector(fig: Figure) -> Verdict:
    _need(fig, "X", "Y", "Z")
    sim = _similarity(fig)
    if sim.axes is None:
        raise Skip("no axis of similarity")
    metric = fig.metric
    X, Y, Z = (embed(P, metric) for P in fig.triangle)
    Ae, Be, Ce = (embed(P, metric) for P in (A, B, C))
    axis = sim.axes[0].angle
    worst = 0.0
    for (P, Q), (P2, Q2) in (((Be, Ce), (Y, Z)), ((Ce, Ae), (Z, X)), ((Ae, Be), (X, Y))):
        bis = bisector_directions(direction(P, Q), direction(P2, Q2))
        worst = max(worst, min(angle_mod_pi_gap(axis, b) for b in bis))
    return Verdict(PASS if worst < RELATIVE_TOL else FAIL, "approx", worst, "axis parallel to side-pair bisectors")


@dataclass(frozen=True)
class PropertyDef:
    check: object
    pivots: frozenset
    figures: tuple  # figure keys the fuzzer feeds this property


_SIMILAR = INDIRECT_PIVOTS | DIRECT_PIVOTS
_ALL = frozenset(PivotKind)

PROPERTIES = {
    PropertyId.XYZ_SIMILAR_OMEGA: PropertyDef(lambda f: check_xyz_similar(f, SimilarityClass.INDIRECT),
                                              frozenset({PivotKind.OMEGA}), ("omega-mn",)),
    PropertyId.XYZ_SIMILAR_OMEGA_PRIME: PropertyDef(lambda f: check_xyz_similar(f, SimilarityClass.INDIRECT),
                                                    frozenset({PivotKind.OMEGA_PRIME}), ("omega_prime",)),
    PropertyId.XYZ_SIMILAR_HAGGE: PropertyDef(lambda f: check_xyz_similar(f, SimilarityClass.INDIRECT),
                                              frozenset({PivotKind.ORTHOCENTER}), ("orthocenter",)),
    PropertyId.XYZ_DIRECT_BH: PropertyDef(lambda f: check_xyz_similar(f, SimilarityClass.DIRECT),
                                          DIRECT_PIVOTS, ("aH", "bH", "cH")),
    PropertyId.PERSPECTOR_EXISTS: PropertyDef(check_perspector, _ALL, ("omega-mn", "orthocenter", "bH", "custom")),
    PropertyId.AXIS_COLLINEAR: PropertyDef(check_axis, _ALL, ("omega-mn", "custom")),
    PropertyId.S_ON_CIRCUMCIRCLE: PropertyDef(check_s, _ALL, ("omega-mn",)),
    PropertyId.S_ON_CIRCUMCIRCLE_BH: PropertyDef(check_s_median, DIRECT_PIVOTS, ("bH",)),
    PropertyId.MIDPOINT_CONIC: PropertyDef(check_midpoint_conic, _SIMILAR, ("omega-mn",)),
    PropertyId.HAGGE_R_EQUALS_P: PropertyDef(check_r_equals_p, frozenset({PivotKind.ORTHOCENTER}), ("orthocenter",)),
    PropertyId.SEVEN_POINT_R_EQUALS_P: PropertyDef(check_r_equals_p, frozenset({PivotKind.OMEGA, PivotKind.OMEGA_PRIME}),
                                                   ("omega-seven",)),
    PropertyId.ANGLE_FACTS_OMEGA: PropertyDef(check_angle_facts, frozenset({PivotKind.OMEGA}), ("omega-mn",)),
    PropertyId.ANGLE_FACTS_OMEGA_PRIME: PropertyDef(check_angle_facts, frozenset({PivotKind.OMEGA_PRIME}),
                                                    ("omega_prime",)),
    PropertyId.ANGLE_FACTS_BH: PropertyDef(check_angle_facts, DIRECT_PIVOTS, ("bH",)),
    PropertyId.WOOD_ROTATION: PropertyDef(check_wood, DIRECT_PIVOTS, ("bH",)),
    PropertyId.APD_COLLINEAR_HAGGE: PropertyDef(check_apd, frozenset({PivotKind.ORTHOCENTER}), ("orthocenter",)),
    PropertyId.NEGATIVE_RANDOM_J: PropertyDef(check_negative_j, frozenset({PivotKind.CUSTOM}), ("custom",)),
    PropertyId.T_CONCURRENT: PropertyDef(check_t, _SIMILAR, ("omega-mn", "bH")),
    PropertyId.OMEGA0_OMEGA1_THROUGH_R: PropertyDef(check_omega_lines, frozenset({PivotKind.OMEGA}), ("omega-mn",)),
    PropertyId.SIMILARITY_AXIS_BISECTOR: PropertyDef(check_axis_bisector, INDIRECT_PIVOTS, ("omega-mn",)),
}


def run_property(pid: PropertyId | str, fig: Figure) -> Verdict:
    pid = PropertyId(pid)
    prop = PROPERTIES[pid]
    if fig.pivot.kind not in prop.pivots:
        raise PropertyMismatch(f"{pid.value} does not apply to pivot {fig.pivot.kind.value}")
    if pid is PropertyId.SEVEN_POINT_R_EQUALS_P:
        if not fig.gamma.same_as(named_circle(CircleKind.SEVEN_POINT, fig.metric)):
            raise PropertyMismatch("seven-point property needs gamma = seven-point circle")
    try:
        return prop.check(fig)
    except Skip as exc:
        return Verdict(SKIP, "exact", None, str(exc))
    except (DegenerateError, ZeroDivisionError) as exc:
        return Verdict(SKIP, "exact", None, f"degenerate: {exc}")


# ---------------------------------------------------------------------------
# Trials


def _heronian(max_side: int):
    out = []
    for a in range(1, max_side + 1):
        for b in range(a, max_side + 1):
            for c in range(b, min(a + b, max_side + 1)):
                s16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
                r = math.isqrt(s16)
                if r * r == s16 and r % 4 == 0 and a != c and a * a + b * b != c * c:
                    out.append((a, b, c))
    return tuple(out)


@lru_cache(maxsize=8)
def heronian_corpus(max_side: int = 60):
    """Non-right, non-equilateral integer triangles with integer area (sorted sides)."""
    return _heronian(max_side)


@dataclass(frozen=True)
class TrialSpec:
    seed: int = 42
    count: int = 100
    corpus: str = "heronian"  # heronian | rational
    bound: int = 1000  # |num|, |den| bound for m, n
    point_bound: int = 50  # bound for random areal points
    max_side: int = 60
    max_redraws: int = 20
    workers: int = 1

    def __post_init__(self):
        if self.corpus not in ("heronian", "rational"):
            raise ValueError(f"unknown corpus {self.corpus!r}")
        if self.count < 0:
            raise ValueError("count must be non-negative")

    def to_json(self) -> dict:
        d = asdict(self)
        d.pop("workers")
        return d


def _rand_rational(rng: random.Random, bound: int, positive=False):
    num = rng.randint(1, bound) if positive else rng.choice([-1, 1]) * rng.randint(1, bound)
    return rational(num, rng.randint(1, bound))


def _rand_point(rng: random.Random, bound: int) -> ArealPoint:
    while True:
        coords = [_rand_rational(rng, bound) for _ in range(3)]
        if sum(coords) != 0:
            return ArealPoint(*coords)


def _draw_metric(rng: random.Random, spec: TrialSpec) -> TriangleMetric:
    if spec.corpus == "heronian":
        sides = list(rng.choice(heronian_corpus(spec.max_side)))
        rng.shuffle(sides)
        return TriangleMetric.from_sides(*sides)
    while True:
        try:
            return TriangleMetric(*(rational(rng.randint(1, 100), rng.randint(1, 10)) for _ in range(3)))
        except DegenerateError:
            continue


@dataclass
class TrialParams:
    metric: TriangleMetric
    m: object
    n: object
    through: tuple
    custom_j: ArealPoint

    @classmethod
    def draw(cls, spec: TrialSpec, index: int, attempt: int) -> TrialParams:
        rng = random.Random(f"{spec.seed}/{index}/{attempt}")
        metric = _draw_metric(rng, spec)
        m = _rand_rational(rng, spec.bound)
        n = _rand_rational(rng, spec.bound)
        through = (_rand_point(rng, spec.point_bound), _rand_point(rng, spec.point_bound))
        return cls(metric, m, n, through, _rand_point(rng, spec.point_bound))

    def to_json(self) -> dict:
        return {
            "metric": self.metric.to_json(),
            "m": format_rational(self.m),
            "n": format_rational(self.n),
            "through": [P.to_json() for P in self.through],
            "custom_j": self.custom_j.to_json(),
        }

    @classmethod
    def from_json(cls, obj) -> TrialParams:
        return cls(
            TriangleMetric.from_json(obj["metric"]),
            rational(obj["m"]),
            rational(obj["n"]),
            tuple(ArealPoint.from_json(p) for p in obj["through"]),
            ArealPoint.from_json(obj["custom_j"]),
        )


class TrialContext:
    """Lazily built figures for one parameter draw."""

    def __init__(self, params: TrialParams):
        self.params = params
        self._cache = {}

    def figure(self, key: str) -> Figure:
        if key not in self._cache:
            try:
                self._cache[key] = self._build(key)
            except (GeometryError, ZeroDivisionError) as exc:
                self._cache[key] = exc
        fig = self._cache[key]
        if isinstance(fig, Exception):
            raise Skip(f"{key}: {fig}")
        return fig

    def _build(self, key: str) -> Figure:
        p = self.params
        metric = p.metric
        if key == "omega-mn":
            return build_figure(metric, Pivot.of(PivotKind.OMEGA, metric), MNParams(p.m, p.n))
        if key == "omega-seven":
            return build_figure(metric, Pivot.of(PivotKind.OMEGA, metric), NamedCircle(CircleKind.SEVEN_POINT))
        spec = ThroughTwoPoints(*p.through)
        if key == "custom":
            return build_figure(metric, Pivot.of(PivotKind.CUSTOM, metric, p.custom_j), spec)
        return build_figure(metric, Pivot.of(PivotKind(key), metric), spec)


def evaluate(ctx: TrialContext, pid: PropertyId) -> tuple[Verdict, str | None]:
    """Run a property on every figure it needs; the first non-pass decides."""
    verdicts = []
    for key in PROPERTIES[pid].figures:
        try:
            fig = ctx.figure(key)
        except Skip as exc:
            return Verdict(SKIP, "exact", None, str(exc)), key
        v = run_property(pid, fig)
        if v.status != PASS:
            return v, key
        verdicts.append(v)
    tiers = {v.tier for v in verdicts}
    v = verdicts[-1]
    if "approx" in tiers:
        worst = max((abs(x.residual) for x in verdicts if isinstance(x.residual, float)), default=0.0)
        return Verdict(PASS, "approx", worst, v.detail), None
    return v, None


def run_trial(spec: TrialSpec, index: int, properties) -> dict:
    """Evaluate one trial, redrawing degenerate parameter sets."""
    from .serialize import figure_to_json

    properties = [PropertyId(p) for p in properties]
    for attempt in range(spec.max_redraws + 1):
        params = TrialParams.draw(spec, index, attempt)
        ctx = TrialContext(params)
        results = {}
        for pid in properties:
            results[pid] = evaluate(ctx, pid)
        if all(v.status != SKIP for v, _ in results.values()) or attempt == spec.max_redraws:
            break
    out = {"index": index, "redraws": attempt, "verdicts": {}, "witnesses": []}
    for pid, (v, key) in results.items():
        out["verdicts"][pid.value] = v.to_json()
        if v.status in (FAIL, CANDIDATE):
            witness = {
                "property": pid.value,
                "trial": index,
                "attempt": attempt,
                "figure_key": key,
                "params": params.to_json(),
                "verdict": v.to_json(),
            }
            try:
                witness["figure"] = figure_to_json(ctx.figure(key))
            except Skip:
                pass
            out["witnesses"].append(witness)
    return out


def _run_chunk(args):
    spec, indices, properties = args
    return [run_trial(spec, i, properties) for i in indices]


class FuzzAborted(RuntimeError):
    pass


def fuzz(spec: TrialSpec, properties=None) -> dict:
    """Run ``spec.count`` trials and aggregate a deterministic report."""
    properties = [PropertyId(p) for p in (properties or list(PropertyId))]
    names = [p.value for p in properties]
    indices = list(range(spec.count))
    if spec.workers > 1 and spec.count > 1:
        size = max(1, math.ceil(spec.count / (spec.workers * 4)))
        chunks = [indices[i:i + size] for i in range(0, len(indices), size)]
        with ProcessPoolExecutor(max_workers=spec.workers) as pool:
            trials = [t for chunk in pool.map(_run_chunk, [(spec, c, names) for c in chunks]) for t in chunk]
    else:
        trials = [run_trial(spec, i, names) for i in indices]
    return aggregate(spec, names, trials)


def aggregate(spec: TrialSpec, names, trials) -> dict:
    summary = {n: {PASS: 0, FAIL: 0, SKIP: 0, CANDIDATE: 0, "max_residual": {"exact": "0/1", "approx": 0.0},
                   "tiers": []} for n in names}
    failures, candidates = [], []
    redraws = 0
    for t in sorted(trials, key=lambda t: t["index"]):
        redraws += t["redraws"]
        for name, v in t["verdicts"].items():
            s = summary[name]
            s[v["status"]] += 1
            if v["tier"] not in s["tiers"] and v["status"] != SKIP:
                s["tiers"].append(v["tier"])
            res = v["residual"]
            if v["tier"] == "approx" and isinstance(res, float):
                s["max_residual"]["approx"] = max(s["max_residual"]["approx"], res)
            elif v["tier"] == "exact" and isinstance(res, str) and v["status"] != PASS:
                s["max_residual"]["exact"] = res
        for w in t["witnesses"]:
            (candidates if w["verdict"]["status"] == CANDIDATE else failures).append(w)
    for s in summary.values():
        s["tiers"].sort()
    attempts = spec.count + redraws
    skip_rate = redraws / attempts if attempts else 0.0
    if spec.count and skip_rate > 0.5:
        raise FuzzAborted(f"skip rate {skip_rate:.2f} exceeds 0.5; check the trial distribution")
    any_fail = any(s[FAIL] for s in summary.values())
    exit_code = 2 if candidates else (1 if any_fail else 0)
    return {
        "spec": spec.to_json(),
        "properties": summary,
        "trials": spec.count,
        "redraws": redraws,
        "failures": failures,
        "counterexample_candidates": candidates,
        "exit_code": exit_code,
    }


def replay_witness(witness: dict) -> Verdict:
    """Rebuild a witness's figure from its parameters and rerun its property."""
    ctx = TrialContext(TrialParams.from_json(witness["params"]))
    return run_property(witness["property"], ctx.figure(witness["figure_key"]))
