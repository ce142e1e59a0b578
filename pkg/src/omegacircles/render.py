"""Static SVG drawings of figures."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

from .areal import A, B, C, Circle, TriangleMetric, circle_center_r2, circumcircle
from .errors import GeometryError
from .figures import Figure, PivotKind
from .similarity import embed

PIVOT_LABEL = {
    PivotKind.OMEGA: "\u03a9",
    PivotKind.OMEGA_PRIME: "\u03a9\u2032",
    PivotKind.ORTHOCENTER: "H",
    PivotKind.AH: "aH",
    PivotKind.BH: "bH",
    PivotKind.CH: "cH",
    PivotKind.CUSTOM: "Q",
}

DEFAULT_COLORS = {
    "triangle": "#222222",
    "xyz": "#1f6fb4",
    "circumcircle": "#444444",
    "gamma": "#c0392b",
    "aux-circle": "#9a9a9a",
    "perspector": "#27ae60",
    "axis": "#8e44ad",
    "point": "#000000",
    "label": "#000000",
}


@dataclass(frozen=True)
class RenderStyle:
    width: int = 800
    height: int = 800
    stroke: float = 1.5
    thin_stroke: float = 0.75
    font_size: float = 14.0
    point_radius: float = 3.0
    margin: float = 0.05
    aux_circles: bool = True
    colors: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0 or self.stroke <= 0 or self.font_size <= 0 or self.point_radius <= 0:
            raise ValueError("render dimensions must be positive")
        if not 0 <= self.margin < 0.5:
            raise ValueError("margin must be in [0, 0.5)")

    def color(self, element: str) -> str:
        return self.colors.get(element, DEFAULT_COLORS.get(element, "#000000"))


def fmt(v: float) -> str:
    s = f"{v:.9g}"
    return "0" if s in ("-0", "0") else s


class _Viewport:
    def __init__(self, xy, style: RenderStyle):
        xs = [p[0] for p in xy]
        ys = [p[1] for p in xy]
        x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
        span = max(x1 - x0, y1 - y0) or 1.0
        usable = min(style.width, style.height) * (1 - 2 * style.margin)
        self.k = usable / span
        self.ox = style.width / 2 - self.k * (x0 + x1) / 2
        self.oy = style.height / 2 + self.k * (y0 + y1) / 2

    def __call__(self, p):
        return self.ox + self.k * p[0], self.oy - self.k * p[1]


def _finite_xy(P, metric):
    if P.at_infinity:
        return None
    x, y = embed(P, metric).to_float()
    if not (math.isfinite(x) and math.isfinite(y)):
        return None
    return x, y


def _circle_xy(circle: Circle, metric):
    ctr, r2 = circle_center_r2(circle)
    c = _finite_xy(ctr, metric)
    r2 = float(r2)
    if c is None or r2 <= 0:
        return None
    return c, math.sqrt(r2)


def render_svg(fig: Figure | TriangleMetric, style: RenderStyle | None = None) -> str:
    """SVG 1.1 drawing: triangle, circles, XYZ, perspector segments and labeled points."""
    style = style or RenderStyle()
    if isinstance(fig, TriangleMetric):
        metric, points, circles, pairs = fig, {}, {}, []
        extra_points = {}
    else:
        metric = fig.metric
        points = dict(fig.points)
        circles = {"gamma": fig.gamma, **{k: fig.circles[k] for k in sorted(fig.circles) if k != "gamma"}}
        extra_points = {}
        sim = fig.similarity
        R = getattr(sim, "R", None)
        if R is not None and "R" not in points:
            extra_points["R"] = R
        pairs = []
        if fig.has("U", "V", "W"):
            for i, name in enumerate("UVW"):
                pairs.append((name, fig.partner(i)))

    comments = []
    named = {"A": A, "B": B, "C": C}
    if "pivot" in points:
        named[PIVOT_LABEL[fig.pivot.kind]] = points.pop("pivot")
    # sorted so a figure reloaded from JSON draws identically
    for name in sorted({**points, **extra_points}):
        named[name] = points.get(name, extra_points.get(name))

    xy = {}
    for name, P in named.items():
        p = _finite_xy(P, metric)
        if p is None:
            comments.append(f"point {name} at infinity or not finite; skipped")
        else:
            xy[name] = p
    view = _Viewport(list(xy.values()), style)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{style.width}" height="{style.height}" '
        f'viewBox="0 0 {style.width} {style.height}">',
        f'<rect x="0" y="0" width="{style.width}" height="{style.height}" fill="#ffffff"/>',
    ]

    def circle_el(key, circle, color_key, width):
        try:
            cr = _circle_xy(circle, metric)
        except (GeometryError, ZeroDivisionError):
            cr = None
        if cr is None:
            out.append(f"<!-- circle {escape(key)} degenerate; skipped -->")
            return
        (cx, cy), r = cr
        sx, sy = view((cx, cy))
        out.append(f'<circle id="circle-{escape(key)}" cx="{fmt(sx)}" cy="{fmt(sy)}" r="{fmt(r * view.k)}" '
                   f'fill="none" stroke="{style.color(color_key)}" stroke-width="{fmt(width)}"/>')

    circle_el("circumcircle", circumcircle(metric), "circumcircle", style.stroke)
    for key, circle in circles.items():
        if key == "gamma":
            circle_el(key, circle, "gamma", style.stroke)
        elif style.aux_circles:
            circle_el(key, circle, "aux-circle", style.thin_stroke)

    def polygon(names, color_key, el_id):
        if all(n in xy for n in names):
            pts = " ".join(f"{fmt(x)},{fmt(y)}" for x, y in (view(xy[n]) for n in names))
            out.append(f'<polygon id="{el_id}" points="{pts}" fill="none" '
                       f'stroke="{style.color(color_key)}" stroke-width="{fmt(style.stroke)}"/>')

    polygon("ABC", "triangle", "triangle-ABC")
    polygon("XYZ", "xyz", "triangle-XYZ")

    def segment(names, color_key, el_id):
        """Segment spanning the given collinear points."""
        pts = [xy[n] for n in names if n in xy]
        if len(pts) < 2:
            return
        dx, dy = pts[-1][0] - pts[0][0], pts[-1][1] - pts[0][1]
        ts = [(p[0] - pts[0][0]) * dx + (p[1] - pts[0][1]) * dy for p in pts]
        lo, hi = pts[ts.index(min(ts))], pts[ts.index(max(ts))]
        (x0, y0), (x1, y1) = view(lo), view(hi)
        out.append(f'<line id="{el_id}" x1="{fmt(x0)}" y1="{fmt(y0)}" x2="{fmt(x1)}" y2="{fmt(y1)}" '
                   f'stroke="{style.color(color_key)}" stroke-width="{fmt(style.thin_stroke)}"/>')

    for a, b in pairs:
        segment([a, b, "P"], "perspector", f"line-{a}{b}")
    segment(["M1", "M2", "M3", "P"], "axis", "line-axis")

    for name, p in xy.items():
        x, y = view(p)
        label = escape(name)
        el_id = name if name.isascii() else "pivot"
        out.append(f'<circle id="point-{el_id}" cx="{fmt(x)}" cy="{fmt(y)}" r="{fmt(style.point_radius)}" '
                   f'fill="{style.color("point")}"/>')
        out.append(f'<text x="{fmt(x + style.point_radius + 2)}" y="{fmt(y - style.point_radius - 2)}" '
                   f'font-family="sans-serif" font-size="{fmt(style.font_size)}" '
                   f'fill="{style.color("label")}">{label}</text>')
    out.extend(f"<!-- {escape(c)} -->" for c in comments)
    out.append("</svg>")
    return "\n".join(out) + "\n"

