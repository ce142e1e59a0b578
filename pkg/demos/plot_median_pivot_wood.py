"""
A median pivot and the rotation about O
=======================================

Pivots on the medians (here bH, on the median from B) give XYZ directly
similar to ABC. The second construction moves ABC by a rotation about the
circumcenter.
"""

from omegacircles.areal import ArealPoint, TriangleMetric, circumcircle
from omegacircles.construct import construct
from omegacircles.figures import Pivot, PivotKind, ThroughTwoPoints, jk_and_wood

metric = TriangleMetric.from_sides(13, 14, 15)
fig = construct(metric, Pivot.of(PivotKind.BH, metric), ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(3, 1, 1)))
print("bH =", fig.points["pivot"])
print("XYZ vs ABC:", fig.similarity.verdict.cls.value)

wood = jk_and_wood(fig)
# J and K have coordinates in a quadratic extension, still exact
circ = circumcircle(metric)
print("J, K on circumcircle:", circ.contains(wood.J), circ.contains(wood.K))
for name, image in sorted(wood.images.items()):
    print(f"projected from {name}:", [circ.contains(p) for p in image])
print("enlargement factor:", wood.factor)
