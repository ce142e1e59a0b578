"""
Closed forms against the construction
=====================================

Each closed-form coordinate is evaluated literally and compared with the
constructed figure. Mismatches carry an exact residual; the circle through
B, the Brocard point and C is off by 2/c^2 at the pivot.
"""

from omegacircles.areal import TriangleMetric
from omegacircles.formulas import cross_check_formulas

metric = TriangleMetric.from_sides(13, 14, 15)
for e in cross_check_formulas(metric, 2, 3):
    print(f"{e.formula:18s} {e.reading:15s} {e.status:9s} {e.residual}")
