"""Truncated formal series in the deformation parameter h.

An HSeries of order N stores exactly N+1 rational-function coefficients over
one shared variable set; h itself is never a chart variable.  Mixed-order
arithmetic truncates to the smaller order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence, Tuple

from .errors import OrderTooLarge, VariableMismatch
from .gaussian import GaussianRational
from .polynomial import Polynomial, coeff_term_text
from .rational import RationalFunction


class HSeries:
    """Immutable h-truncated series with RationalFunction coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[RationalFunction]):
        cs = tuple(coeffs)
        if not cs:
            raise ValueError("a series needs at least the h^0 coefficient")
        head = cs[0].vars
        if "h" in head:
            raise VariableMismatch("'h' is the series parameter, never a chart variable")
        for c in cs[1:]:
            if c.vars != head:
                raise VariableMismatch("series coefficients do not share one variable set")
        self.coeffs = cs

    # -- builders -----------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str], order: int) -> "HSeries":
        z = RationalFunction.zero(variables)
        return cls((z,) * (order + 1))

    @classmethod
    def constant(cls, value: RationalFunction, order: int = 0) -> "HSeries":
        z = RationalFunction.zero(value.vars)
        return cls((value,) + (z,) * order)

    @classmethod
    def one(cls, variables: Sequence[str], order: int = 0) -> "HSeries":
        return cls.constant(RationalFunction.one(variables), order)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, order: int = 0) -> "HSeries":
        return cls.constant(RationalFunction.variable(variables, name), order)

    # -- structure ------------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.coeffs[0].vars

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def padded(self, order: int) -> "HSeries":
        """Extend with zero coefficients up to `order` (never truncates)."""
        if order <= self.order:
            return self
        z = RationalFunction.zero(self.vars)
        return HSeries(self.coeffs + (z,) * (order - self.order))

    def truncated(self, order: int) -> "HSeries":
        if order > self.order:
            raise OrderTooLarge(f"order {order} exceeds series order {self.order}")
        return HSeries(self.coeffs[: order + 1])

    def map_coefficients(self, fn: Callable[[RationalFunction], RationalFunction]) -> "HSeries":
        return HSeries(tuple(fn(c) for c in self.coeffs))

    # -- arithmetic ---------------------------------------------------------------

    def _coerce(self, other) -> "HSeries":
        if isinstance(other, HSeries):
            return other
        if isinstance(other, RationalFunction):
            return HSeries.constant(other, self.order)
        if isinstance(other, Polynomial):
            return HSeries.constant(RationalFunction.from_polynomial(other), self.order)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return HSeries.constant(RationalFunction.constant(self.vars, other), self.order)
        raise TypeError(f"cannot combine series with {other!r}")

    def _align(self, other) -> Tuple["HSeries", "HSeries"]:
        other = self._coerce(other)
        if self.vars != other.vars:
            raise VariableMismatch(f"variable sets differ: {self.vars} vs {other.vars}")
        n = min(self.order, other.order)
        return self.truncated(n), other.truncated(n)

    def __add__(self, other):
        a, b = self._align(other)
        return HSeries(tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return HSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        a, b = self._align(other)
        return HSeries(tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational, RationalFunction)):
            if isinstance(other, RationalFunction):
                return self.map_coefficients(lambda c: c * other)
            scalar = GaussianRational.coerce(other)
            return self.map_coefficients(lambda c: c * scalar)
        a, b = self._align(other)
        n = a.order
        zero = RationalFunction.zero(a.vars)
        out = [zero] * (n + 1)
        for i, ci in enumerate(a.coeffs):
            if ci.is_zero():
                continue
            for j in range(0, n + 1 - i):
                cj = b.coeffs[j]
                if cj.is_zero():
                    continue
                out[i + j] = out[i + j] + ci * cj
        return HSeries(tuple(out))

    __rmul__ = __mul__

    # -- comparison and formatting ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, HSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __str__(self) -> str:
        pieces = []
        for power, coeff in enumerate(self.coeffs):
            if coeff.is_zero():
                continue
            pieces.append(_series_term_text(coeff, power))
        if not pieces:
            return "0"
        first_sign, first_body = pieces[0]
        out = [first_body if first_sign == "+" else f"-{first_body}"]
        for sign, body in pieces[1:]:
            out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"HSeries({self})"


def _series_term_text(coeff: RationalFunction, power: int) -> Tuple[str, str]:
    h = "" if power == 0 else ("h" if power == 1 else f"h^{power}")
    if coeff.den.is_one():
        poly = coeff.num
        if not h:
            return "+", str(poly)
        if len(poly.terms) == 1:
            exp, c = next(iter(poly.terms.items()))
            sign, body = coeff_term_text(c, poly._monomial_text(exp), multiplied=True)
            if body == "1":
                return sign, h
            return sign, f"{body}*{h}"
        return "+", f"({poly})*{h}"
    num, den = coeff.num, coeff.den
    sign = "+"
    if len(num.terms) == 1:
        c = next(iter(num.terms.values()))
        term_sign, _ = coeff_term_text(c, "")
        if term_sign == "-":
            sign = "-"
            num = -num
    frac = f"({num})/({den})"
    return sign, frac if not h else f"{frac}*{h}"


def hs_mul(a: HSeries, b: HSeries) -> HSeries:
    return a * b


def hs_equal(a: HSeries, b: HSeries, upto: int) -> bool:
    """Exact coefficient equality through order `upto`."""
    if upto > a.order or upto > b.order:
        raise OrderTooLarge(f"order {upto} exceeds operand orders {a.order}, {b.order}")
    return a.coeffs[: upto + 1] == b.coeffs[: upto + 1]
