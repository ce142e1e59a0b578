"""
Drawing a figure
================

Render the 13-14-15 omega figure to SVG. The output is byte-stable, which
makes it usable as a golden file.
"""

from pathlib import Path

from omegacircles.areal import TriangleMetric
from omegacircles.construct import construct
from omegacircles.figures import MNParams, Pivot, PivotKind
from omegacircles.render import RenderStyle, render_svg

metric = TriangleMetric.from_sides(13, 14, 15)
fig = construct(metric, Pivot.of(PivotKind.OMEGA, metric), MNParams(2, 3))

svg = render_svg(fig, RenderStyle(width=640, height=640))
out = Path("omega_13_14_15.svg")
out.write_text(svg, encoding="utf-8")
print(f"wrote {out} ({len(svg)} bytes)")
