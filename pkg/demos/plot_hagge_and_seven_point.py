"""
Orthocenter pivot and the seven-point circle
============================================

With the orthocenter as pivot the similarity center R coincides with the
perspector P. The same happens for the Brocard pivot when gamma is the
seven-point circle.
"""

from omegacircles.areal import ArealPoint, TriangleMetric
from omegacircles.centers import CircleKind
from omegacircles.construct import construct
from omegacircles.figures import NamedCircle, Pivot, PivotKind, ThroughTwoPoints

metric = TriangleMetric.from_sides(13, 14, 15)

hagge = construct(metric, Pivot.of(PivotKind.ORTHOCENTER, metric), ThroughTwoPoints(ArealPoint(1, 2, 3), ArealPoint(3, 1, 1)))
print("H pivot:  R =", hagge.similarity.R, " P =", hagge.points["P"])
print("          same point:", hagge.similarity.R == hagge.points["P"])

seven = construct(metric, Pivot.of(PivotKind.OMEGA, metric), NamedCircle(CircleKind.SEVEN_POINT))
print("seven-point gamma:  R == P:", seven.similarity.R == seven.points["P"])
