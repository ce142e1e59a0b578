"""Closed-form coordinates for the Omega-circle family, checked against the
constructions.

Each formula is transcribed as published (``printed``). Where the published
form fails, the reading that agrees with the construction is kept alongside
it so the difference is visible in the ledger. The construction is always the
reference; these are never used to build figures.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from .areal import ArealPoint, Conic, TriangleMetric, circle_through, dist_sq, B, C
from .centers import CenterId, center
from .errors import DegenerateError
from .figures import MNParams, Pivot, PivotKind, build_figure, recover_lmn
from .scalars import format_rational, is_zero, rational

FORMULA_IDS = (
    "l-parameter",
    "omega-circle",
    "circle-B-omega-C",
    "point-U",
    "point-V",
    "point-W",
    "point-P",
)


@dataclass(frozen=True)
class LedgerEntry:
    formula: str
    reading: str
    status: str  # match | mismatch | unparseable
    residual: str

    def to_json(self) -> dict:
        return asdict(self)


def l_printed(a2, b2, c2, m, n):
    num = -a2 * b2 * c2 * (a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n))
    den = (a2 * a2 * b2 * (b2 * c2 + n * (c2 - m)) + a2 * c2 * b2 * b2 * (m - n)
           - b2 * m * (c2 + n) - c2 * m * n - b2 * b2 * c2 * m * n)
    return num / den


def l_regrouped(a2, b2, c2, m, n):
    """Same terms with the middle three grouped under a common a^2 c^2."""
    num = -a2 * b2 * c2 * (a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n))
    den = (a2 * a2 * b2 * (b2 * c2 + n * (c2 - m))
           + a2 * c2 * (b2 * b2 * (m - n) - b2 * m * (c2 + n) - c2 * m * n)
           - b2 * b2 * c2 * m * n)
    return num / den


def omega_circle_printed(a2, b2, c2, m, n, x, y, z):
    return (b2 * b2 * x * x * (a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n))
            + b2 * x * (y * (a2 * (b2 * b2 * c2 - b2 * (c2 * c2 + m * n) - c2 * c2 * n)
                             + c2 * m * (b2 * b2 - b2 * c2 - c2 * n))
                        + z * (a2 * a2 * n * (b2 + m) - a2 * (b2 * b2 * n + b2 * m * (c2 + n) + c2 * m * n)
                               - b2 * b2 * m * n))
            + a2 * (c2 * m * y * y * (b2 * (c2 + n) + c2 * n)
                    - c2 * y * z * (a2 * (b2 * b2 + b2 * (m + n) + m * n) + m * (b2 * b2 - b2 * c2 - c2 * n))
                    + b2 * n * z * z * (a2 * (b2 + m) + b2 * m)))


def circle_boc_printed(a2, b2, c2, x, y, z):
    return b2 * x * x - x * y * (c2 - b2) + a2 * y * z


def circle_boc_sign_corrected(a2, b2, c2, x, y, z):
    return -b2 * x * x + x * y * (c2 - b2) + a2 * y * z


def point_u_printed(a2, b2, c2, m, n):
    x = a2 * m * (b2 * c2 + n * (b2 + a2))
    y = b2 * n * (a2 * b2 + m * (a2 + c2))
    z = ((b2 * m * (a2 * (b2 * n + c2 * (m - n) + 2 * m * n) + m * n * (b2 - c2)) * (b2 * (c2 + n) + c2 * n))
         / (n * (a2 * (b2 + m) + b2 * m)))
    return x, y, z


def point_u_corrected(a2, b2, c2, m, n):
    """x uses n(b^2 + c^2) and y uses m(a^2 + b^2)."""
    x = a2 * m * (b2 * c2 + n * (b2 + c2))
    y = b2 * n * (a2 * b2 + m * (a2 + b2))
    _, _, z = point_u_printed(a2, b2, c2, m, n)
    return x, y, z


def point_v_printed(a2, b2, c2, m, n):
    k = a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n)
    x = (-(n * (a2 * (b2 + m) + b2 * m)
           * (a2 * a2 * (b2 * c2 + n * (c2 - m)) - a2 * c2 * (b2 * (c2 - m + n) + n * (c2 - m))
              - c2 * m * (b2 * (c2 + n) + c2 * n)))
         / (b2 * k))
    y = n * (a2 * (b2 + m) + b2 * m)
    return x, y, k


def point_w_printed(a2, b2, c2, m, n):
    k = a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n)
    x = a2 * m * (b2 * (c2 + n) + c2 * n)
    y = ((b2 * (a2 * c2 * (b2 * b2 + b2 * (m + n) + m * n) - b2 * b2 * m * n) * k)
         / (c2 * m * (b2 * (c2 + n) + c2 * n)))
    return x, y, b2 * k


def point_p_printed(a2, b2, c2, m, n):
    k = a2 * (b2 * c2 + n * (c2 - m)) + c2 * m * (b2 + n)
    x = (c2 * m * n * (a2 * (b2 + m) + b2 * m)) * (b2 * (c2 + n) + c2 * n)
    y = (b2 * n * (a2 * (b2 + m) + b2 * m)) * k
    z = (b2 * k) * (m * (b2 * (c2 + n) + c2 * n))
    return x, y, z


def _conic_from_poly(f) -> Conic:
    """Coefficients of a ternary quadratic given as a callable."""
    xx, yy, zz = f(1, 0, 0), f(0, 1, 0), f(0, 0, 1)
    return Conic(xx, yy, zz, f(0, 1, 1) - yy - zz, f(1, 0, 1) - xx - zz, f(1, 1, 0) - xx - yy)


def _entry(formula, reading, residual) -> LedgerEntry:
    status = "match" if is_zero(residual) else "mismatch"
    return LedgerEntry(formula, reading, status, format_rational(residual))


def _point_entry(formula, reading, triple, oracle: ArealPoint, metric) -> LedgerEntry:
    try:
        printed = ArealPoint(*triple)
    except (DegenerateError, ZeroDivisionError):
        return LedgerEntry(formula, reading, "unparseable", "zero triple")
    if printed.at_infinity or oracle.at_infinity:
        same = printed == oracle
        return LedgerEntry(formula, reading, "match" if same else "mismatch", "0/1" if same else "point at infinity")
    return _entry(formula, reading, dist_sq(printed, oracle, metric))


def cross_check_formulas(metric: TriangleMetric, m, n) -> list[LedgerEntry]:
    """Compare each published formula with the construction for one (metric, m, n).

    Residuals: parameter differences for l, the largest coefficient deviation
    after scaling for the circle, the equation value at the Brocard point
    (as the raw triple (1/b^2, 1/c^2, 1/a^2)) for circle B-Omega-C, and the
    squared distance to the constructed point for U, V, W, P.
    """
    m, n = rational(m), rational(n)
    a2, b2, c2 = metric.a2, metric.b2, metric.c2
    fig = build_figure(metric, Pivot.of(PivotKind.OMEGA, metric), MNParams(m, n), with_s=False)
    entries = []

    l_oracle, _, _ = recover_lmn(fig)
    for reading, fn in (("printed", l_printed), ("regrouped", l_regrouped)):
        try:
            entries.append(_entry("l-parameter", reading, fn(a2, b2, c2, m, n) - l_oracle))
        except ZeroDivisionError:
            entries.append(LedgerEntry("l-parameter", reading, "unparseable", "zero denominator"))

    printed = _conic_from_poly(lambda x, y, z: omega_circle_printed(a2, b2, c2, m, n, x, y, z))
    oracle = fig.gamma.as_conic()
    k = next(i for i, v in enumerate(oracle.coeffs) if v != 0)
    scale = printed.coeffs[k] / oracle.coeffs[k]
    dev = max(abs(p - scale * o) for p, o in zip(printed.coeffs, oracle.coeffs))
    entries.append(_entry("omega-circle", "printed", dev))

    omega_raw = (1 / b2, 1 / c2, 1 / a2)
    boc = circle_through(B, center(CenterId.OMEGA, metric), C, metric)
    for reading, fn in (("printed", circle_boc_printed), ("sign-corrected", circle_boc_sign_corrected)):
        residual = fn(a2, b2, c2, *omega_raw)
        poly = _conic_from_poly(lambda x, y, z: fn(a2, b2, c2, x, y, z))
        entry = _entry("circle-B-omega-C", reading, residual)
        if entry.status == "match" and not poly.proportional_to(boc.as_conic()):
            entry = LedgerEntry(entry.formula, reading, "mismatch", "passes the point but is not the circle")
        entries.append(entry)

    for formula, reading, fn, name in (
        ("point-U", "printed", point_u_printed, "U"),
        ("point-U", "corrected", point_u_corrected, "U"),
        ("point-V", "printed", point_v_printed, "V"),
        ("point-W", "printed", point_w_printed, "W"),
        ("point-P", "printed", point_p_printed, "P"),
    ):
        if name not in fig.points:
            entries.append(LedgerEntry(formula, reading, "unparseable", "construction degenerate"))
            continue
        try:
            triple = fn(a2, b2, c2, m, n)
        except ZeroDivisionError:
            entries.append(LedgerEntry(formula, reading, "unparseable", "zero denominator"))
            continue
        entries.append(_point_entry(formula, reading, triple, fig.points[name], metric))
    return entries
