"""Exact arithmetic in imaginary quadratic fields Q(sqrt(d)).

Elements are stored in the integral basis {1, w} where

    w = sqrt(d)          if d = 2, 3 (mod 4)
    w = (1 + sqrt(d))/2  if d = 1 (mod 4)

so that membership in the ring of integers is a coordinate test.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class OmegaKind(enum.Enum):
    SQRT_D = "sqrt_d"
    HALF_PLUS = "half_plus"


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class FieldData:
    d: int
    omega_kind: OmegaKind
    disc: int

    def __repr__(self):
        return f"FieldData(d={self.d})"

    @property
    def omega_sq(self) -> tuple[Fraction, Fraction]:
        """Coordinates (c0, c1) with w**2 = c0 + c1*w."""
        if self.omega_kind is OmegaKind.SQRT_D:
            return Fraction(self.d), Fraction(0)
        return Fraction(self.d - 1, 4), Fraction(1)

    def __call__(self, a=0, b=0) -> "FieldElem":
        return FieldElem(self, a, b)

    @property
    def one(self) -> "FieldElem":
        return FieldElem(self, 1, 0)

    @property
    def zero(self) -> "FieldElem":
        return FieldElem(self, 0, 0)

    @property
    def omega(self) -> "FieldElem":
        return FieldElem(self, 0, 1)

    @property
    def sqrt_d(self) -> "FieldElem":
        return self.from_sqrt_coords(0, 1)

    def from_sqrt_coords(self, p, q) -> "FieldElem":
        """The element p + q*sqrt(d)."""
        p, q = Fraction(p), Fraction(q)
        if self.omega_kind is OmegaKind.SQRT_D:
            return FieldElem(self, p, q)
        # sqrt(d) = 2w - 1
        return FieldElem(self, p - q, 2 * q)


@functools.lru_cache(maxsize=None)
def field_data(d: int) -> FieldData:
    """Return the basis convention and discriminant of Q(sqrt(d)).

    Raises ValueError unless d is a negative square-free integer.
    """
    if isinstance(d, bool) or not isinstance(d, int):
        raise TypeError(f"d must be an integer, got {d!r}")
    if d >= 0:
        raise ValueError(f"d must be negative, got {d}")
    if not _is_squarefree(d):
        raise ValueError(f"d must be square-free, got {d}")
    if d % 4 == 1:
        return FieldData(d, OmegaKind.HALF_PLUS, d)
    return FieldData(d, OmegaKind.SQRT_D, 4 * d)


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" or "p" strictly; rejects zero denominators and floats."""
    text = s.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(p, q)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class FieldElem:
    """a + b*w in F, with exact rational a and b."""

    __slots__ = ("field", "a", "b")

    def __init__(self, field: FieldData, a=0, b=0):
        self.field = field
        self.a = _as_fraction(a)
        self.b = _as_fraction(b)

    def _coerce(self, other) -> "FieldElem":
        if isinstance(other, FieldElem):
            if other.field is not self.field and other.field.d != self.field.d:
                raise ValueError(
                    f"field mismatch: d={self.field.d} vs d={other.field.d}")
            return other
        if isinstance(other, (int, Rational)):
            return FieldElem(self.field, other, 0)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return FieldElem(self.field, -self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElem(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        c0, c1 = self.field.omega_sq
        bb = self.b * o.b
        return FieldElem(self.field,
                         self.a * o.a + bb * c0,
                         self.a * o.b + self.b * o.a + bb * c1)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElem":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero field element")
        c = self.conjugate()
        return FieldElem(self.field, c.a / n, c.b / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = self.field.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, FieldElem):
            return self.field.d == other.field.d and self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.field.d, self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        p, q = self.sqrt_coords()
        return f"FieldElem(d={self.field.d}, {format_rational(p)} + {format_rational(q)}*sqrt(d))"

    def conjugate(self) -> "FieldElem":
        if self.field.omega_kind is OmegaKind.SQRT_D:
            return FieldElem(self.field, self.a, -self.b)
        # conj(w) = 1 - w
        return FieldElem(self.field, self.a + self.b, -self.b)

    def trace(self) -> Fraction:
        if self.field.omega_kind is OmegaKind.SQRT_D:
            return 2 * self.a
        return 2 * self.a + self.b

    def norm(self) -> Fraction:
        a, b, d = self.a, self.b, self.field.d
        if self.field.omega_kind is OmegaKind.SQRT_D:
            return a * a - d * b * b
        return a * a + a * b + b * b * Fraction(1 - d, 4)

    @property
    def real(self) -> Fraction:
        """Real part under the embedding sqrt(d) -> i*sqrt(|d|)."""
        return self.trace() / 2

    def sqrt_coords(self) -> tuple[Fraction, Fraction]:
        """(p, q) with self = p + q*sqrt(d)."""
        if self.field.omega_kind is OmegaKind.SQRT_D:
            return self.a, self.b
        return self.a + self.b / 2, self.b / 2

    def is_rational(self) -> bool:
        return self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1

    def to_complex(self) -> complex:
        p, q = self.sqrt_coords()
        return complex(float(p), float(q) * abs(self.field.d) ** 0.5)


def conjugate(x: FieldElem) -> FieldElem:
    return x.conjugate()


def is_in_scaled_ring(x: FieldElem, s: int) -> bool:
    """True iff s*x lies in the ring of integers."""
    if s < 1:
        raise ValueError("scale must be a positive integer")
    return (s * x.a).denominator == 1 and (s * x.b).denominator == 1


@dataclass(frozen=True)
class UnitGroup:
    field: FieldData
    elements: tuple[FieldElem, ...]

    @property
    def order(self) -> int:
        return len(self.elements)


@functools.lru_cache(maxsize=None)
def unit_group(f: FieldData) -> UnitGroup:
    one = f.one
    if f.d == -1:
        gen = f.omega            # i, order 4
    elif f.d == -3:
        gen = f.omega            # (1 + sqrt(-3))/2, order 6, gen**3 = -1
    else:
        gen = -one
    elems = [one]
    x = gen
    while x != one:
        elems.append(x)
        x = x * gen
    return UnitGroup(f, tuple(elems))


def multiplicity_a(f: FieldData) -> int:
    """|O_F^x / {+-1}|: the divisor multiplicity picked up under restriction."""
    return unit_group(f).order // 2
