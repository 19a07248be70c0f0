"""Exact scalar arithmetic: rationals and the quadratic extension Q(sqrt 3).

Everything in this package is computed exactly; there is no floating point
anywhere in a verdict path.  Plain rationals are ``fractions.Fraction``.  The
constructions built from the maximal so(3) inside sp(2) have sqrt(3) in their
entries, so those live over ``Sqrt3`` values, pairs (a, b) meaning
a + b*sqrt(3) with componentwise rational arithmetic:

    (a + b s)(c + d s) = (ac + 3bd) + (ad + bc) s,   s = sqrt(3).

``Sqrt3`` interoperates with ``int`` and ``Fraction`` through the reflected
operators, so matrices may mix the two scalar kinds and linear algebra code
stays generic.
"""

from __future__ import annotations

from fractions import Fraction

EXT_RATIONAL = "Q"
EXT_SQRT3 = "Q(sqrt3)"


class Sqrt3:
    """An element a + b*sqrt(3) of the real quadratic field Q(sqrt 3)."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = a if isinstance(a, Fraction) else Fraction(a)
        self.b = b if isinstance(b, Fraction) else Fraction(b)

    # -- ring structure ----------------------------------------------------

    def __add__(self, other):
        if isinstance(other, Sqrt3):
            return Sqrt3(self.a + other.a, self.b + other.b)
        if isinstance(other, (int, Fraction)):
            return Sqrt3(self.a + other, self.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Sqrt3):
            return Sqrt3(self.a - other.a, self.b - other.b)
        if isinstance(other, (int, Fraction)):
            return Sqrt3(self.a - other, self.b)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Sqrt3(other - self.a, -self.b)
        return NotImplemented

    def __neg__(self):
        return Sqrt3(-self.a, -self.b)

    def __mul__(self, other):
        if isinstance(other, Sqrt3):
            return Sqrt3(self.a * other.a + 3 * self.b * other.b,
                         self.a * other.b + self.b * other.a)
        if isinstance(other, (int, Fraction)):
            return Sqrt3(self.a * other, self.b * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        n = self.a * self.a - 3 * self.b * self.b
        if n == 0:
            # a^2 = 3 b^2 has no rational solutions besides a = b = 0
            raise ZeroDivisionError("division by zero in Q(sqrt3)")
        return Sqrt3(self.a / n, -self.b / n)

    def __truediv__(self, other):
        if isinstance(other, Sqrt3):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return Sqrt3(self.a / other, self.b / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return Sqrt3(other) * self.inverse()
        return NotImplemented

    # -- comparisons -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, Sqrt3):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, "sqrt3"))

    def __bool__(self):
        return self.a != 0 or self.b != 0

    def is_positive(self):
        """Exact sign test for a + b*sqrt(3) > 0 (no floating point)."""
        a, b = self.a, self.b
        if b == 0:
            return a > 0
        if a == 0:
            return b > 0
        if a > 0 and b > 0:
            return True
        if a < 0 and b < 0:
            return False
        if a > 0:  # b < 0: positive iff a^2 > 3 b^2
            return a * a > 3 * b * b
        return 3 * b * b > a * a  # a < 0 < b

    def __lt__(self, other):
        d = self - other if isinstance(other, Sqrt3) else self - Sqrt3(other)
        return bool(d) and not d.is_positive()

    def __gt__(self, other):
        d = self - other if isinstance(other, Sqrt3) else self - Sqrt3(other)
        return d.is_positive()

    def __le__(self, other):
        return not self.__gt__(other)

    def __ge__(self, other):
        return not self.__lt__(other)

    def __repr__(self):
        if self.b == 0:
            return f"Sqrt3({self.a})"
        return f"Sqrt3({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*s3"
        return f"{self.a}+{self.b}*s3"


def is_rational(x) -> bool:
    return isinstance(x, (int, Fraction)) or (isinstance(x, Sqrt3) and x.b == 0)


def scalar_is_positive(x) -> bool:
    """Exact positivity for Fraction, int or Sqrt3."""
    if isinstance(x, Sqrt3):
        return x.is_positive()
    return x > 0


def as_fraction(x) -> Fraction:
    if isinstance(x, Sqrt3):
        if x.b != 0:
            raise ValueError(f"{x} is not rational")
        return x.a
    return Fraction(x)


# -- JSON codec -----------------------------------------------------------
# Rationals serialize as the string "p/q" (or "p"); Q(sqrt3) values as a
# two-element list of such strings.  Round-trips are exact.

def encode_scalar(x):
    if isinstance(x, Sqrt3):
        if x.b == 0:
            return _frac_str(x.a)
        return [_frac_str(x.a), _frac_str(x.b)]
    return _frac_str(Fraction(x))


def decode_scalar(obj):
    if isinstance(obj, list):
        if len(obj) != 2:
            raise ValueError(f"bad scalar encoding: {obj!r}")
        return Sqrt3(Fraction(obj[0]), Fraction(obj[1]))
    return Fraction(obj)


def _frac_str(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
