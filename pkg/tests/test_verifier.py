import json
import math

import pytest

from omegacircles.areal import A, B, ArealPoint, TriangleMetric, circle_through
from omegacircles.figures import MNParams, Pivot, PivotKind, ThroughTwoPoints, build_figure
from omegacircles.scalars import rational
from omegacircles.serialize import dumps
from omegacircles.verifier import (
    CANDIDATE,
    FAIL,
    PASS,
    PropertyId,
    PropertyMismatch,
    TrialContext,
    TrialParams,
    TrialSpec,
    FuzzAborted,
    aggregate,
    evaluate,
    fuzz,
    heronian_corpus,
    replay_witness,
    run_property,
)

OMEGA_PROPS = [
    PropertyId.XYZ_SIMILAR_OMEGA,
    PropertyId.PERSPECTOR_EXISTS,
    PropertyId.AXIS_COLLINEAR,
    PropertyId.S_ON_CIRCUMCIRCLE,
    PropertyId.MIDPOINT_CONIC,
    PropertyId.ANGLE_FACTS_OMEGA,
    PropertyId.OMEGA0_OMEGA1_THROUGH_R,
]


@pytest.fixture
def omega_fig(m131415):
    return build_figure(m131415, Pivot.of(PivotKind.OMEGA, m131415), MNParams(rational(2, 3), rational(5, 7)))


def test_heronian_corpus():
    corpus = heronian_corpus(60)
    assert (13, 14, 15) in corpus and (5, 5, 6) in corpus
    assert (3, 4, 5) not in corpus
    for a, b, c in corpus:
        s16 = (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c)
        assert math.isqrt(s16) ** 2 == s16 and math.isqrt(s16) % 4 == 0
        assert a * a + b * b != c * c


def test_s_on_circumcircle_single(omega_fig):
    v = run_property(PropertyId.S_ON_CIRCUMCIRCLE, omega_fig)
    assert (v.status, v.tier, v.residual) == (PASS, "exact", "0/1")


def test_negative_random_j(m131415):
    fig = build_figure(m131415, Pivot.of(PivotKind.CUSTOM, m131415, ArealPoint(2, 3, 4)),
                       ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(2, -1, 5)))
    assert run_property("negative-random-j", fig).status == PASS


def test_equilateral_symmetric_gamma(equilateral):
    fig = build_figure(equilateral, Pivot.of(PivotKind.OMEGA, equilateral),
                       ThroughTwoPoints(ArealPoint(1, 3, 5), ArealPoint(1, 5, 3)))
    v = run_property(PropertyId.XYZ_SIMILAR_OMEGA, fig)
    assert v.status == PASS and v.tier == "exact"


def test_property_pivot_mismatch(omega_fig):
    with pytest.raises(PropertyMismatch):
        run_property(PropertyId.HAGGE_R_EQUALS_P, omega_fig)
    with pytest.raises(PropertyMismatch):
        run_property(PropertyId.SEVEN_POINT_R_EQUALS_P, omega_fig)


def test_counterexample_candidate_route(omega_fig, m131415):
    # three circles through a common point off the circumcircle
    Q = ArealPoint(1, 1, 1)
    fig = omega_fig
    fig.points["S"] = Q
    fig.circles["S_circle_a"] = circle_through(Q, A, ArealPoint(1, 2, 3), m131415)
    fig.circles["S_circle_b"] = circle_through(Q, B, ArealPoint(3, 1, 2), m131415)
    fig.circles["S_circle_c"] = circle_through(Q, ArealPoint(2, 2, 1), ArealPoint(5, 1, 1), m131415)
    v = run_property(PropertyId.S_ON_CIRCUMCIRCLE, fig)
    assert v.status == CANDIDATE and v.residual != "0/1"


def test_fail_when_s_off_its_circles(omega_fig):
    omega_fig.points["S"] = ArealPoint(1, 1, 1)
    assert run_property(PropertyId.S_ON_CIRCUMCIRCLE, omega_fig).status == FAIL


def test_omega_fuzz_seed_42():
    report = fuzz(TrialSpec(seed=42, count=100), OMEGA_PROPS)
    assert report["exit_code"] == 0
    for pid in OMEGA_PROPS:
        s = report["properties"][pid.value]
        assert s["pass"] == 100 and s["fail"] == 0


def test_determinism_and_workers():
    spec = TrialSpec(seed=42, count=12)
    a = dumps(fuzz(spec))
    b = dumps(fuzz(spec))
    c = dumps(fuzz(TrialSpec(seed=42, count=12, workers=2)))
    assert a == b == c


def test_zero_trials():
    report = fuzz(TrialSpec(count=0))
    assert report["exit_code"] == 0 and report["trials"] == 0
    assert all(s["pass"] == 0 for s in report["properties"].values())


def _trial(index, status, pid="s-on-circumcircle", redraws=0):
    v = {"status": status, "tier": "exact", "residual": "0/1" if status == PASS else "1/2", "detail": ""}
    w = [] if status == PASS else [{"property": pid, "verdict": v}]
    return {"index": index, "redraws": redraws, "verdicts": {pid: v}, "witnesses": w}


def test_exit_code_precedence():
    spec = TrialSpec(count=3)
    names = ["s-on-circumcircle"]
    assert aggregate(spec, names, [_trial(0, PASS), _trial(1, PASS), _trial(2, PASS)])["exit_code"] == 0
    assert aggregate(spec, names, [_trial(0, PASS), _trial(1, FAIL), _trial(2, PASS)])["exit_code"] == 1
    assert aggregate(spec, names, [_trial(0, CANDIDATE), _trial(1, FAIL), _trial(2, PASS)])["exit_code"] == 2


def test_skip_rate_abort():
    spec = TrialSpec(count=2)
    with pytest.raises(FuzzAborted):
        aggregate(spec, ["s-on-circumcircle"], [_trial(0, PASS, redraws=3), _trial(1, PASS, redraws=3)])


def test_replay_witness_matches():
    spec = TrialSpec(seed=9, count=1)
    params = TrialParams.draw(spec, 0, 0)
    v, _ = evaluate(TrialContext(params), PropertyId.AXIS_COLLINEAR)
    witness = json.loads(json.dumps({"property": "axis-collinear", "figure_key": "omega-mn",
                                     "params": params.to_json()}))
    assert replay_witness(witness).to_json() == v.to_json()


def test_rational_corpus_angle_facts_are_approx():
    report = fuzz(TrialSpec(seed=3, count=10, corpus="rational"), [PropertyId.ANGLE_FACTS_OMEGA])
    s = report["properties"]["angle-facts-omega"]
    assert s["tiers"] == ["approx"] and s["pass"] == 10
    assert s["max_residual"]["approx"] < 1e-10


def test_trial_spec_validation():
    with pytest.raises(ValueError):
        TrialSpec(corpus="nope")
    with pytest.raises(ValueError):
        TrialSpec(count=-1)
