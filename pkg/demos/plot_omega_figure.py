"""
An omega circle on the 13-14-15 triangle
========================================

Build the figure for a circle through the first Brocard point and look at
the triangle XYZ it cuts from the cevians, the perspector P and point S.
"""

from omegacircles.areal import TriangleMetric, circumcircle
from omegacircles.construct import construct
from omegacircles.figures import MNParams, Pivot, PivotKind

metric = TriangleMetric.from_sides(13, 14, 15)
omega = Pivot.of(PivotKind.OMEGA, metric)
fig = construct(metric, omega, MNParams(2, 3))

# every coordinate is an exact rational areal triple
for name in ("pivot", "X", "Y", "Z", "U", "V", "W", "P", "S"):
    print(f"{name:>5}: {fig.points[name]}")

# XYZ is oppositely similar to ABC with an exact squared ratio
sim = fig.similarity
print("similarity:", sim.verdict.cls.value, "ratio^2 =", sim.verdict.ratio_sq)

# S lands on the circumcircle with zero residue
print("S on circumcircle:", circumcircle(metric).contains(fig.points["S"]))
