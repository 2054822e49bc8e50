"""Chart-level geometry: exterior forms, Mobius maps, and the quadric cover.

The central coordinate change is the double cover

    sigma : (x, y) |-> (z, p) = (x/y, -y^2/2),

a symplectomorphism from the punctured plane modulo the sign involution onto
the punctured cotangent chart with form dp^dz.  Its inverse on invariant
functions substitutes x = z*y and replaces y^2 by -2p, which is well defined
exactly for functions even under (x, y) |-> (-x, -y).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import (
    DegenerateMatrix,
    DegreeTooHigh,
    NotEven,
    SubstitutionPole,
    VariableMismatch,
)
from .gaussian import GaussianRational
from .polynomial import Polynomial
from .rational import RationalFunction

Matrix2 = Tuple[Tuple[GaussianRational, GaussianRational], Tuple[GaussianRational, GaussianRational]]


# -- exterior forms ------------------------------------------------------------


class ChartForm:
    """A 0-, 1- or 2-form with rational-function coefficients.

    Only strictly increasing index tuples are stored, so antisymmetry is
    built into the representation.
    """

    __slots__ = ("vars", "degree", "coeffs")

    def __init__(
        self,
        variables: Sequence[str],
        degree: int,
        coeffs: Mapping[Tuple[int, ...], RationalFunction],
    ):
        vs = tuple(variables)
        if degree not in (0, 1, 2):
            raise DegreeTooHigh(f"unsupported form degree {degree}")
        cleaned: Dict[Tuple[int, ...], RationalFunction] = {}
        for key, value in coeffs.items():
            key = tuple(key)
            if len(key) != degree:
                raise ValueError(f"index tuple {key} does not match degree {degree}")
            if any(i < 0 or i >= len(vs) for i in key):
                raise ValueError(f"index out of range in {key}")
            if list(key) != sorted(set(key)):
                raise ValueError(f"indices must be strictly increasing, got {key}")
            if value.vars != vs:
                raise VariableMismatch("coefficient variables do not match the chart")
            if not value.is_zero():
                cleaned[key] = value
        self.vars = vs
        self.degree = degree
        self.coeffs = cleaned

    @classmethod
    def function(cls, value: RationalFunction) -> "ChartForm":
        return cls(value.vars, 0, {(): value})

    @classmethod
    def one_form(cls, variables: Sequence[str], parts: Mapping[str, RationalFunction]) -> "ChartForm":
        vs = tuple(variables)
        return cls(vs, 1, {(vs.index(name),): value for name, value in parts.items()})

    @classmethod
    def zero(cls, variables: Sequence[str], degree: int) -> "ChartForm":
        return cls(variables, degree, {})

    def coefficient(self, *names: str) -> RationalFunction:
        key = tuple(self.vars.index(n) for n in names)
        return self.coeffs.get(key, RationalFunction.zero(self.vars))

    def __add__(self, other: "ChartForm") -> "ChartForm":
        if self.vars != other.vars or self.degree != other.degree:
            raise VariableMismatch("forms are not compatible")
        out = dict(self.coeffs)
        for key, value in other.coeffs.items():
            cur = out.get(key)
            out[key] = value if cur is None else cur + value
        return ChartForm(self.vars, self.degree, out)

    def __neg__(self) -> "ChartForm":
        return ChartForm(self.vars, self.degree, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other: "ChartForm") -> "ChartForm":
        return self + (-other)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChartForm):
            return NotImplemented
        return (
            self.vars == other.vars
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.vars, self.degree, frozenset(self.coeffs.items())))

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        pieces = []
        for key in sorted(self.coeffs):
            value = self.coeffs[key]
            basis = "^".join(f"d{self.vars[i]}" for i in key)
            pieces.append(f"({value})" + (f"*{basis}" if basis else ""))
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"ChartForm({self})"


def exterior_derivative(w: ChartForm) -> ChartForm:
    if w.degree == 0:
        f = w.coeffs.get((), RationalFunction.zero(w.vars))
        parts = {}
        for idx, name in enumerate(w.vars):
            d = f.derivative(name)
            if not d.is_zero():
                parts[(idx,)] = d
        return ChartForm(w.vars, 1, parts)
    if w.degree == 1:
        parts: Dict[Tuple[int, ...], RationalFunction] = {}
        for (j,), fj in w.coeffs.items():
            for i in range(len(w.vars)):
                if i == j:
                    continue
                d = fj.derivative(w.vars[i])
                if d.is_zero():
                    continue
                key, sign = ((i, j), 1) if i < j else ((j, i), -1)
                cur = parts.get(key, RationalFunction.zero(w.vars))
                parts[key] = cur + (d if sign > 0 else -d)
        return ChartForm(w.vars, 2, parts)
    raise DegreeTooHigh("three-forms are not representable here")


def pullback_form(w: ChartForm, bindings: Mapping[str, RationalFunction]) -> ChartForm:
    """Standard pullback along the map whose components are `bindings`."""
    if set(bindings) != set(w.vars):
        raise VariableMismatch(
            f"bindings {sorted(bindings)} do not cover form variables {w.vars}"
        )
    target: Optional[Tuple[str, ...]] = None
    for value in bindings.values():
        if target is None:
            target = value.vars
        elif value.vars != target:
            raise VariableMismatch("binding values do not share one variable set")
    assert target is not None

    grads: Dict[str, Tuple[RationalFunction, ...]] = {
        name: tuple(value.derivative(t) for t in target)
        for name, value in bindings.items()
    }

    if w.degree == 0:
        return ChartForm.function(w.coeffs.get((), RationalFunction.zero(w.vars)).substitute(bindings))

    if w.degree == 1:
        parts: Dict[Tuple[int, ...], RationalFunction] = {}
        for (j,), fj in w.coeffs.items():
            fsub = fj.substitute(bindings)
            for u, dphi in enumerate(grads[w.vars[j]]):
                if dphi.is_zero():
                    continue
                cur = parts.get((u,), RationalFunction.zero(target))
                parts[(u,)] = cur + fsub * dphi
        return ChartForm(target, 1, parts)

    parts = {}
    for (i, j), f in w.coeffs.items():
        fsub = f.substitute(bindings)
        gi = grads[w.vars[i]]
        gj = grads[w.vars[j]]
        for u in range(len(target)):
            for v in range(u + 1, len(target)):
                wedge = gi[u] * gj[v] - gi[v] * gj[u]
                if wedge.is_zero():
                    continue
                cur = parts.get((u, v), RationalFunction.zero(target))
                parts[(u, v)] = cur + fsub * wedge
    return ChartForm(target, 2, parts)


def liouville_symplectic(zp: Sequence[str] = ("z", "p")) -> ChartForm:
    """dp^dz on the cotangent chart (z, p); equals d(p*dz)."""
    vs = tuple(zp)
    return ChartForm(vs, 2, {(0, 1): RationalFunction.constant(vs, -1)})


# -- Mobius maps ----------------------------------------------------------------


class MobiusMap:
    """A projective-linear map of the line, stored as an invertible 2x2 matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix: Sequence[Sequence[object]]):
        rows = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in matrix)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("a Mobius map needs a 2x2 matrix")
        if self._det_of(rows).is_zero():
            raise DegenerateMatrix("matrix determinant is zero")
        self.matrix: Matrix2 = rows

    @staticmethod
    def _det_of(rows) -> GaussianRational:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]

    @classmethod
    def identity(cls) -> "MobiusMap":
        return cls(((1, 0), (0, 1)))

    @property
    def det(self) -> GaussianRational:
        return self._det_of(self.matrix)

    def compose(self, other: "MobiusMap") -> "MobiusMap":
        """self after other, i.e. z -> self(other(z))."""
        (a, b), (c, d) = self.matrix
        (e, f), (g, h) = other.matrix
        return MobiusMap(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))

    def inverse(self) -> "MobiusMap":
        (a, b), (c, d) = self.matrix
        return MobiusMap(((d, -b), (-c, a)))

    def scaled(self, factor) -> "MobiusMap":
        s = GaussianRational.coerce(factor)
        (a, b), (c, d) = self.matrix
        return MobiusMap(((a * s, b * s), (c * s, d * s)))

    def unimodular(self) -> Optional["MobiusMap"]:
        """A determinant-1 rescaling over Q(i), or None when no square root exists."""
        root = self.det.inverse().sqrt()
        return None if root is None else self.scaled(root)

    def proj_eq(self, other: "MobiusMap") -> bool:
        """Projective equality: the matrices are proportional."""
        flat_a = [v for row in self.matrix for v in row]
        flat_b = [v for row in other.matrix for v in row]
        for i in range(4):
            for j in range(i + 1, 4):
                if flat_a[i] * flat_b[j] != flat_a[j] * flat_b[i]:
                    return False
        return True

    def is_identity_projective(self) -> bool:
        return self.proj_eq(MobiusMap.identity())

    def apply_rf(self, value: RationalFunction, name: str) -> RationalFunction:
        """Compose value with z -> (a z + b)/(c z + d) in the variable `name`."""
        vs = value.vars
        (a, b), (c, d) = self.matrix
        zv = RationalFunction.variable(vs, name)
        den = zv * c + d
        if den.is_zero():
            raise SubstitutionPole("image lies outside the chart")
        bindings = {n: RationalFunction.variable(vs, n) for n in vs}
        bindings[name] = (zv * a + b) / den
        return value.substitute(bindings)

    def apply_point(self, point: GaussianRational) -> GaussianRational:
        (a, b), (c, d) = self.matrix
        den = c * point + d
        if den.is_zero():
            raise SubstitutionPole(f"point {point} maps to infinity")
        return (a * point + b) / den

    def __eq__(self, other) -> bool:
        if not isinstance(other, MobiusMap):
            return NotImplemented
        return self.proj_eq(other)

    def __repr__(self) -> str:
        (a, b), (c, d) = self.matrix
        return f"MobiusMap([[{a}, {b}], [{c}, {d}]])"


def cotangent_lift(
    m: MobiusMap, zp: Sequence[str] = ("z", "p")
) -> Tuple[RationalFunction, RationalFunction]:
    """The induced map of the cotangent chart.

    Returns the pair (Z, P) with Z = (a z + b)/(c z + d) and
    P = p (c z + d)^2 / det, which is independent of the matrix scaling and
    preserves the tautological one-form p*dz.
    """
    vs = tuple(zp)
    (a, b), (c, d) = m.matrix
    z = Polynomial.variable(vs, vs[0])
    p = Polynomial.variable(vs, vs[1])
    num_z = z * a + Polynomial.constant(vs, b)
    den_z = z * c + Polynomial.constant(vs, d)
    big_z = RationalFunction(num_z, den_z)
    big_p = RationalFunction(p * den_z * den_z, Polynomial.constant(vs, m.det))
    return big_z, big_p


# -- the quadric double cover ------------------------------------------------------


class EvenFunction:
    """A rational function in (x, y) invariant under (x, y) -> (-x, -y)."""

    __slots__ = ("value",)

    def __init__(self, value: RationalFunction):
        if len(value.vars) != 2:
            raise VariableMismatch("an even function lives on a two-variable chart")
        if not is_even(value):
            raise NotEven(f"{value} is not invariant under the sign involution")
        self.value = value

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.value.vars

    def __eq__(self, other) -> bool:
        if not isinstance(other, EvenFunction):
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(self.value)

    def __repr__(self) -> str:
        return f"EvenFunction({self.value})"


def is_even(value: RationalFunction) -> bool:
    """Invariance under negating every variable at once.

    For a canonical num/den pair this holds iff both have terms of one
    total-degree parity each, with matching product parity even.
    """
    def parity(p: Polynomial) -> Optional[int]:
        parities = {sum(exp) % 2 for exp in p.terms}
        return parities.pop() if len(parities) == 1 else None

    if value.is_zero():
        return True
    pn = parity(value.num)
    pd = parity(value.den)
    return pn is not None and pd is not None and pn == pd


def sigma_bindings(
    zp: Sequence[str] = ("z", "p"), xy: Sequence[str] = ("x", "y")
) -> Dict[str, RationalFunction]:
    """Bindings realizing (z, p) = (x/y, -y^2/2) for substitution."""
    xs = tuple(xy)
    x = RationalFunction.variable(xs, xs[0])
    y = RationalFunction.variable(xs, xs[1])
    return {
        zp[0]: x / y,
        zp[1]: y * y * Fraction(-1, 2),
    }


def sigma_pullback(
    F: RationalFunction,
    zp: Sequence[str] = ("z", "p"),
    xy: Sequence[str] = ("x", "y"),
) -> EvenFunction:
    """F(z, p) |-> F(x/y, -y^2/2); the result is automatically even."""
    if F.vars != tuple(zp):
        raise VariableMismatch(f"expected a function of {tuple(zp)}, got {F.vars}")
    return EvenFunction(F.substitute(sigma_bindings(zp, xy)))


def pushforward_even_pair(
    value: RationalFunction, xvar: str, yvar: str, zvar: str, pvar: str
) -> RationalFunction:
    """Invert the cover on one (x, y) pair inside any variable tuple.

    Substitutes x = z*y; by evenness in the pair the result is rational in
    y^2, and y^2 is then replaced by -2p.  Raises NotEven when an odd
    exponent survives.
    """
    vs = value.vars
    mid_vars = tuple(zvar if v == xvar else v for v in vs)
    bindings = {v: RationalFunction.variable(mid_vars, m) for v, m in zip(vs, mid_vars)}
    bindings[xvar] = (
        RationalFunction.variable(mid_vars, zvar) * RationalFunction.variable(mid_vars, yvar)
    )
    mixed = value.substitute(bindings)

    minus_two = GaussianRational(-2)

    def transform(e: int):
        if e % 2:
            raise NotEven(f"odd power of {yvar} after substitution")
        return e // 2, minus_two ** (e // 2)

    num = mixed.num.map_exponent(yvar, pvar, transform)
    den = mixed.den.map_exponent(yvar, pvar, transform)
    return RationalFunction._from_coprime(num, den)


def sigma_pushforward(
    E: EvenFunction, zp: Sequence[str] = ("z", "p")
) -> RationalFunction:
    """The unique F(z, p) with F(x/y, -y^2/2) = E(x, y)."""
    xv, yv = E.vars
    return pushforward_even_pair(E.value, xv, yv, zp[0], zp[1])
