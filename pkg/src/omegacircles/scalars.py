"""Scalar tiers: exact rationals, the quadratic extension Q(sqrt d), and
toleranced floating point.

Geometry code only uses ``+ - * /``, unary minus and the helpers
:func:`is_zero` and :func:`sign`, so the same routines run over every tier.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC

import gmpy2

Rational = type(gmpy2.mpq())


def rational(value, den=None) -> Rational:
    """Coerce ``value`` (int, Fraction, mpq, "p/q" string) to an exact rational."""
    if den is not None:
        return normalize(value, den)
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, (int, type(gmpy2.mpz()))):
        return gmpy2.mpq(value)
    if isinstance(value, _RationalABC):
        return gmpy2.mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def normalize(num: int, den: int) -> Rational:
    """Canonical num/den with den > 0 and gcd 1."""
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    return gmpy2.mpq(num, den)


def parse_rational(text: str) -> Rational:
    text = text.strip()
    if "/" in text:
        num, den = text.split("/")
        return normalize(int(num), int(den))
    if any(ch in text for ch in ".eE"):
        return rational(Fraction(text))
    return gmpy2.mpq(int(text))


def format_rational(r) -> str:
    """Serialize as the canonical string ``"num/den"`` (den always present)."""
    r = rational(r)
    return f"{r.numerator}/{r.denominator}"


def is_rational_square(r) -> bool:
    r = rational(r)
    return r >= 0 and gmpy2.is_square(r.numerator) and gmpy2.is_square(r.denominator)


def rational_sqrt(r) -> Rational:
    r = rational(r)
    if not is_rational_square(r):
        raise ValueError(f"{format_rational(r)} is not the square of a rational")
    return gmpy2.mpq(gmpy2.isqrt(r.numerator), gmpy2.isqrt(r.denominator))


# ---------------------------------------------------------------------------
# Quadratic extension


class QuadExt:
    """The number ``a + b*sqrt(d)`` with rational ``a, b, d`` and ``d >= 0``.

    Arithmetic between two values requires the same radicand. A radicand that
    is a perfect rational square is folded into ``a`` at construction.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=0):
        a, b, d = rational(a), rational(b), rational(d)
        if d < 0:
            raise ValueError("negative radicand")
        if b != 0 and is_rational_square(d):
            a, b = a + b * rational_sqrt(d), gmpy2.mpq(0)
        self.a, self.b, self.d = a, b, d

    def _lift(self, other) -> QuadExt | None:
        if isinstance(other, QuadExt):
            if other.d != self.d and self.b != 0 and other.b != 0:
                raise ValueError("mismatched radicands")
            return other
        try:
            return QuadExt(rational(other), 0, self.d)
        except TypeError:
            return None

    def _radicand(self, other: QuadExt):
        if self.b == 0:
            return other.d if other.b != 0 else self.d
        return self.d

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self._radicand(o))

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = self._radicand(o)
        return QuadExt(self.a * o.a + self.b * o.b * d, self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def conjugate(self) -> QuadExt:
        return QuadExt(self.a, -self.b, self.d)

    def norm(self) -> Rational:
        return self.a * self.a - self.b * self.b * self.d

    def inverse(self) -> QuadExt:
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt d)")
        return QuadExt(self.a / nrm, -self.b / nrm, self.d)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except ValueError:
            return False
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        return quad_sign(self)

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(float(self.d))

    def is_rational(self) -> bool:
        return self.b == 0

    def __repr__(self):
        return f"QuadExt({format_rational(self.a)}, {format_rational(self.b)}, {format_rational(self.d)})"

    def to_json(self) -> dict:
        return {"a": format_rational(self.a), "b": format_rational(self.b), "d": format_rational(self.d)}

    @classmethod
    def from_json(cls, obj: dict) -> QuadExt:
        return cls(parse_rational(obj["a"]), parse_rational(obj["b"]), parse_rational(obj["d"]))


def quad_mul(x: QuadExt, y: QuadExt) -> QuadExt:
    if x.d != y.d:
        raise ValueError("mismatched radicands")
    return x * y


def _rsign(r) -> int:
    return (r > 0) - (r < 0)


def quad_sign(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(d)."""
    sa, sb = _rsign(x.a), _rsign(x.b)
    if x.d == 0 or sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: compare a^2 with b^2 d
    return sa * _rsign(x.a * x.a - x.b * x.b * x.d)


# ---------------------------------------------------------------------------
# Approximate tier


@dataclass(frozen=True)
class Tolerance:
    rel: float = 1e-10
    abs: float = 1e-12

    def close(self, x: float, y: float) -> tuple[bool, str | None]:
        """Return whether x and y agree and which bound accepted them."""
        diff = abs(x - y)
        if diff <= self.abs:
            return True, "abs"
        if diff <= self.rel * max(abs(x), abs(y)):
            return True, "rel"
        return False, None


def _tolerance_from_env() -> Tolerance:
    raw = os.environ.get("OMEGA_TOL")
    if not raw:
        return Tolerance()
    parts = [float(p) for p in raw.split(",")]
    if len(parts) == 1:
        return Tolerance(rel=parts[0])
    return Tolerance(rel=parts[0], abs=parts[1])


_policy = _tolerance_from_env()


def tolerance() -> Tolerance:
    return _policy


def set_tolerance(tol: Tolerance) -> None:
    """Replace the global policy. Call before starting parallel work."""
    global _policy
    _policy = tol


class Approx:
    """A float carrying the tolerance policy used for its comparisons."""

    __slots__ = ("value", "tol")

    def __init__(self, value, tol: Tolerance | None = None):
        self.value = float(value)
        self.tol = tol if tol is not None else _policy

    def _f(self, other):
        if isinstance(other, Approx):
            return other.value
        try:
            return float(other)
        except (TypeError, ValueError):
            return None

    def _wrap(self, v):
        return Approx(v, self.tol)

    def __add__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(self.value + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(self.value - o)

    def __rsub__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(o - self.value)

    def __mul__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(self.value * o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(self.value / o)

    def __rtruediv__(self, other):
        o = self._f(other)
        return NotImplemented if o is None else self._wrap(o / self.value)

    def __neg__(self):
        return self._wrap(-self.value)

    def __abs__(self):
        return self._wrap(abs(self.value))

    def __float__(self):
        return self.value

    def close_to(self, other) -> tuple[bool, str | None]:
        return self.tol.close(self.value, self._f(other))

    def __eq__(self, other):
        o = self._f(other)
        if o is None:
            return NotImplemented
        return self.tol.close(self.value, o)[0]

    __hash__ = None

    def __lt__(self, other):
        return self.value < self._f(other) and not self == other

    def __gt__(self, other):
        return self.value > self._f(other) and not self == other

    def __le__(self, other):
        return self.value <= self._f(other) or self == other

    def __ge__(self, other):
        return self.value >= self._f(other) or self == other

    def __bool__(self):
        return not self.tol.close(self.value, 0.0)[0]

    def sqrt(self) -> Approx:
        return self._wrap(math.sqrt(self.value))

    def __repr__(self):
        return f"Approx({self.value!r})"


def approx_of(x) -> Approx:
    """Nearest float of an exact value; raises OverflowError out of range."""
    if isinstance(x, Approx):
        return x
    if isinstance(x, QuadExt):
        if x.b == 0:
            return Approx(float(x.a))
        # a + b*sqrt(d) evaluated as a sum of floats, or via the conjugate when the
        # two terms nearly cancel
        s = float(x.b) * math.sqrt(float(x.d))
        va = float(x.a)
        if va != 0 and s != 0 and (va > 0) != (s > 0) and abs(va + s) < 1e-6 * abs(va):
            return Approx(float(x.norm()) / (va - s))
        return Approx(va + s)
    return Approx(float(x))


def is_zero(x) -> bool:
    if isinstance(x, Approx):
        return not x
    if isinstance(x, float):
        return _policy.close(x, 0.0)[0]
    return x == 0


def sign(x) -> int:
    if isinstance(x, QuadExt):
        return quad_sign(x)
    if isinstance(x, Approx):
        return 0 if not x else (1 if x.value > 0 else -1)
    return _rsign(x)


def is_exact(x) -> bool:
    return not isinstance(x, (Approx, float))


def tier_of(values) -> str:
    """'rational', 'quadratic' or 'approx' for an iterable of scalars."""
    tier = "rational"
    for v in values:
        if isinstance(v, (Approx, float)):
            return "approx"
        if isinstance(v, QuadExt) and v.b != 0:
            tier = "quadratic"
    return tier


def sqrt_approx(x) -> Approx:
    return approx_of(x).sqrt()


def scalar_to_json(x):
    if isinstance(x, QuadExt):
        if x.b == 0:
            return format_rational(x.a)
        return x.to_json()
    if isinstance(x, (Approx, float)):
        return float(x)
    return format_rational(x)


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return QuadExt.from_json(obj)
    if isinstance(obj, float):
        return Approx(obj)
    return parse_rational(obj)
