from fractions import Fraction as Fr

import pytest
import sympy as sp

from omegacircles.areal import TriangleMetric
from omegacircles.formulas import (
    FORMULA_IDS,
    circle_boc_printed,
    circle_boc_sign_corrected,
    cross_check_formulas,
)

EXPECTED_STATUS = [
    ("l-parameter", "printed", "mismatch"),
    ("l-parameter", "regrouped", "match"),
    ("omega-circle", "printed", "match"),
    ("circle-B-omega-C", "printed", "mismatch"),
    ("circle-B-omega-C", "sign-corrected", "match"),
    ("point-U", "printed", "mismatch"),
    ("point-U", "corrected", "match"),
    ("point-V", "printed", "match"),
    ("point-W", "printed", "match"),
    ("point-P", "printed", "match"),
]


def test_reference_ledger(m131415):
    entries = cross_check_formulas(m131415, Fr(2, 3), Fr(5, 7))
    assert [(e.formula, e.reading, e.status) for e in entries] == EXPECTED_STATUS
    boc = next(e for e in entries if e.formula == "circle-B-omega-C" and e.reading == "printed")
    assert boc.residual == "2/225"
    assert {e.formula for e in entries} == set(FORMULA_IDS)


def test_ledger_is_deterministic(m131415):
    a = cross_check_formulas(m131415, Fr(2, 3), Fr(5, 7))
    b = cross_check_formulas(m131415, Fr(2, 3), Fr(5, 7))
    assert a == b


@pytest.mark.parametrize("sides", [(5, 5, 6), (9, 10, 17), (25, 39, 56), (13, 20, 21)])
def test_boc_residual_is_two_over_c2(sides):
    metric = TriangleMetric.from_sides(*sides)
    entries = cross_check_formulas(metric, Fr(-3, 11), Fr(4, 9))
    boc = {e.reading: e for e in entries if e.formula == "circle-B-omega-C"}
    assert Fr(boc["printed"].residual) == Fr(2, sides[2] ** 2)
    assert boc["sign-corrected"].status == "match"


@pytest.mark.parametrize("sides,m,n", [((5, 5, 6), Fr(7, 2), Fr(-1, 3)), ((9, 10, 17), Fr(11, 5), Fr(1, 9))])
def test_status_pattern_holds_elsewhere(sides, m, n):
    entries = cross_check_formulas(TriangleMetric.from_sides(*sides), m, n)
    got = {(e.formula, e.reading): e.status for e in entries}
    for formula, reading in (("l-parameter", "regrouped"), ("omega-circle", "printed"), ("point-U", "corrected"),
                             ("point-V", "printed"), ("point-W", "printed"), ("point-P", "printed")):
        assert got[(formula, reading)] == "match", (formula, reading)


def test_boc_symbolic_oracle():
    """Solve for the circle through B, Omega, C with sympy and compare forms."""
    a2, b2, c2, x, y, z, p, q, r = sp.symbols("a2 b2 c2 x y z p q r")
    circle = a2 * y * z + b2 * z * x + c2 * x * y + (x + y + z) * (p * x + q * y + r * z)
    omega = (1 / b2, 1 / c2, 1 / a2)
    eqs = [circle.subs({x: 0, y: 1, z: 0}), circle.subs({x: 0, y: 0, z: 1}),
           circle.subs({x: omega[0], y: omega[1], z: omega[2]})]
    sol = sp.solve(eqs, [p, q, r], dict=True)[0]
    boc = sp.expand(circle.subs(sol))
    corrected = circle_boc_sign_corrected(a2, b2, c2, x, y, z)
    assert sp.simplify(boc - corrected) == 0
    printed = circle_boc_printed(a2, b2, c2, x, y, z)
    residual = sp.simplify(printed.subs({x: omega[0], y: omega[1], z: omega[2]}))
    assert sp.simplify(residual - 2 / c2) == 0
