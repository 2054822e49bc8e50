"""Exact Gaussian rationals: (a + b*i) / den with integer components.

The triple is kept normalized (gcd(a, b, den) = 1, den > 0), so equality is
component-wise and hashing is consistent with it.  A shared denominator
needs one gcd per arithmetic result, roughly halving the normalization work
of a pair of Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd, isqrt
from typing import Optional, Union

Rationalish = Union[int, Fraction]


def _fraction_sqrt(value: Fraction) -> Optional[Fraction]:
    """Exact square root of a nonnegative Fraction, or None if irrational."""
    if value < 0:
        return None
    num, den = value.numerator, value.denominator
    rn, rd = isqrt(num), isqrt(den)
    if rn * rn != num or rd * rd != den:
        return None
    return Fraction(rn, rd)


class GaussianRational:
    """Immutable element of Q(i)."""

    __slots__ = ("a", "b", "den")

    def __init__(self, re: Rationalish = 0, im: Rationalish = 0):
        if isinstance(re, int) and isinstance(im, int):
            self.a = re
            self.b = im
            self.den = 1
            return
        fre, fim = Fraction(re), Fraction(im)
        den = fre.denominator * fim.denominator // _int_gcd(
            fre.denominator, fim.denominator
        )
        self.a = fre.numerator * (den // fre.denominator)
        self.b = fim.numerator * (den // fim.denominator)
        self.den = den

    @classmethod
    def _raw(cls, a: int, b: int, den: int) -> "GaussianRational":
        value = object.__new__(cls)
        value.a = a
        value.b = b
        value.den = den
        return value

    @classmethod
    def _make(cls, a: int, b: int, den: int) -> "GaussianRational":
        if den < 0:
            a, b, den = -a, -b, -den
        g = _int_gcd(a, b, den)
        if g > 1:
            a //= g
            b //= g
            den //= g
        return cls._raw(a, b, den)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def _try_coerce(cls, value) -> Optional["GaussianRational"]:
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, int):
            return cls._raw(value, 0, 1)
        if isinstance(value, Fraction):
            return cls._raw(value.numerator, 0, value.denominator)
        return None

    # -- components -------------------------------------------------------

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.den)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.den)

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0 and self.den == 1

    def is_real(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.den + other.a * self.den,
            self.b * other.den + other.b * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational._raw(-self.a, -self.b, self.den)

    def __sub__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.den - other.a * self.den,
            self.b * other.den - other.b * self.den,
            self.den * other.den,
        )

    def __rsub__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return GaussianRational._make(
            self.a * other.a - self.b * other.b,
            self.a * other.b + self.b * other.a,
            self.den * other.den,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational._raw(self.a, -self.b, self.den)

    def norm(self) -> Fraction:
        """The rational a^2 + b^2 of the represented value."""
        return Fraction(self.a * self.a + self.b * self.b, self.den * self.den)

    def inverse(self) -> "GaussianRational":
        n = self.a * self.a + self.b * self.b
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational._make(self.den * self.a, -self.den * self.b, n)

    def __truediv__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("exponent must be an int")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def sqrt(self) -> Optional["GaussianRational"]:
        """An exact square root in Q(i), or None when none exists."""
        if self.is_zero():
            return ZERO
        if self.is_real():
            r = _fraction_sqrt(self.re)
            if r is not None:
                return GaussianRational(r)
            r = _fraction_sqrt(-self.re)
            return None if r is None else GaussianRational(0, r)
        s = _fraction_sqrt(self.norm())
        if s is None:
            return None
        u2 = (self.re + s) / 2
        u = _fraction_sqrt(u2)
        if u is None or not u:
            return None
        v = self.im / (2 * u)
        root = GaussianRational(u, v)
        return root if root * root == self else None

    # -- comparison ------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = GaussianRational._try_coerce(other)
        if other is None:
            return NotImplemented
        return self.a == other.a and self.b == other.b and self.den == other.den

    def __hash__(self):
        return hash((self.a, self.b, self.den))

    # -- formatting ------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        if self.a:
            parts.append(str(self.re))
        if self.b:
            im = self.im
            if im == 1:
                imag = "i"
            elif im == -1:
                imag = "-i"
            else:
                imag = f"{im}*i"
            if parts and self.b > 0:
                parts.append(f"+{imag}")
            else:
                parts.append(imag)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"GaussianRational({self.re!r}, {self.im!r})"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
