"""JSON documents for figures, circle specs and similarity data.

Exact rationals always travel as "num/den" strings so a document reloads to
the identical exact values.
"""
from __future__ import annotations

import json

from .areal import ArealLine, ArealPoint, Circle, TriangleMetric
from .centers import CircleKind
from .figures import Figure, MNParams, NamedCircle, Pivot, PivotKind, ThroughTwoPoints
from .formulas import LedgerEntry
from .scalars import format_rational, scalar_from_json, scalar_to_json
from .similarity import FigureSimilarity


def spec_to_json(spec) -> dict | None:
    if spec is None:
        return None
    if isinstance(spec, MNParams):
        return {"type": "mn", "m": format_rational(spec.m), "n": format_rational(spec.n)}
    if isinstance(spec, ThroughTwoPoints):
        return {"type": "through", "P": spec.P.to_json(), "Q": spec.Q.to_json()}
    if isinstance(spec, NamedCircle):
        return {"type": "named", "kind": CircleKind(spec.kind).value}
    if isinstance(spec, Circle):
        return {"type": "circle", **spec.to_json()}
    raise TypeError(f"unknown circle spec {spec!r}")


def spec_from_json(obj, metric: TriangleMetric):
    if obj is None:
        return None
    kind = obj["type"]
    if kind == "mn":
        return MNParams(scalar_from_json(obj["m"]), scalar_from_json(obj["n"]))
    if kind == "through":
        return ThroughTwoPoints(ArealPoint.from_json(obj["P"]), ArealPoint.from_json(obj["Q"]))
    if kind == "named":
        return NamedCircle(CircleKind(obj["kind"]))
    if kind == "circle":
        return Circle.from_json(obj, metric)
    raise ValueError(f"unknown circle spec type {kind!r}")


def similarity_to_json(sim: FigureSimilarity | None) -> dict | None:
    if sim is None:
        return None
    axis = None
    if sim.axes is not None:
        axis = {"angle": sim.axes[0].angle, "perpendicular_angle": sim.axes[1].angle}
    return {
        "class": sim.verdict.cls.value,
        "ratio_sq": scalar_to_json(sim.verdict.ratio_sq),
        "alpha": [scalar_to_json(v) for v in sim.fmap.alpha],
        "beta": [scalar_to_json(v) for v in sim.fmap.beta],
        "tier": sim.fmap.tier,
        "R": sim.R.to_json() if sim.R is not None else None,
        "axis": axis,
    }


def figure_to_json(fig: Figure) -> dict:
    sim = fig.similarity
    return {
        "metric": fig.metric.to_json(),
        "pivot": {"kind": fig.pivot.kind.value, "point": fig.pivot.point.to_json()},
        "spec": spec_to_json(fig.spec),
        "gamma": fig.gamma.to_json(),
        "points": {name: P.to_json() for name, P in fig.points.items()},
        "circles": {name: c.to_json() for name, c in fig.circles.items()},
        "lines": {name: L.to_json() for name, L in fig.lines.items() if isinstance(L, ArealLine)},
        "flags": list(fig.flags),
        "ledger": [e.to_json() for e in fig.ledger],
        "similarity": sim if isinstance(sim, dict) or sim is None else similarity_to_json(sim),
    }


def figure_from_json(obj: dict) -> Figure:
    """Reload a figure document; similarity data stays as its JSON dict."""
    metric = TriangleMetric.from_json(obj["metric"])
    pivot = Pivot(PivotKind(obj["pivot"]["kind"]), ArealPoint.from_json(obj["pivot"]["point"]))
    fig = Figure(
        metric=metric,
        pivot=pivot,
        gamma=Circle.from_json(obj["gamma"], metric),
        spec=spec_from_json(obj.get("spec"), metric),
    )
    fig.points = {k: ArealPoint.from_json(v) for k, v in obj["points"].items()}
    fig.circles = {k: Circle.from_json(v, metric) for k, v in obj["circles"].items()}
    fig.lines = {k: ArealLine.from_json(v) for k, v in obj.get("lines", {}).items()}
    fig.flags = list(obj.get("flags", []))
    fig.ledger = [LedgerEntry(**e) for e in obj.get("ledger", [])]
    fig.similarity = obj.get("similarity")
    return fig


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
