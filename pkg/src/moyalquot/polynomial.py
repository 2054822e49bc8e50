"""Sparse multivariate polynomials over the Gaussian rationals.

A polynomial is an ordered tuple of variable names together with a dict
mapping exponent vectors (one int per variable) to nonzero GaussianRational
coefficients; the zero polynomial stores no terms.  The term order used for
printing, leading-term extraction and canonical forms is graded lexicographic
with respect to the declared variable order.

The gcd is computed by iterated content / primitive-part reduction to a
univariate Euclidean algorithm, with two fast paths that dominate in
practice: extraction of a common monomial factor, and a direct exact-division
test when one argument may divide the other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple

from .errors import UnknownVariable, VariableMismatch, ZeroDenominator
from .gaussian import GaussianRational, ONE as G_ONE, ZERO as G_ZERO

Exponent = Tuple[int, ...]
Terms = Dict[Exponent, GaussianRational]


def _grlex_key(exp: Exponent):
    return (sum(exp), exp)


def _coerce_coeff(value) -> GaussianRational:
    return GaussianRational.coerce(value)


class Polynomial:
    """Immutable sparse polynomial over Q(i)."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[Exponent, object]):
        vs = tuple(variables)
        if len(set(vs)) != len(vs):
            raise VariableMismatch(f"duplicate variable names in {vs}")
        cleaned: Terms = {}
        for exp, coeff in terms.items():
            exp = tuple(exp)
            if len(exp) != len(vs):
                raise VariableMismatch(
                    f"exponent vector {exp} does not match variables {vs}"
                )
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = _coerce_coeff(coeff)
            if not c.is_zero():
                cleaned[exp] = c
        self.vars = vs
        self.terms = cleaned

    @classmethod
    def _raw(cls, variables: Tuple[str, ...], terms: Terms) -> "Polynomial":
        """Trusted constructor: terms already clean and matching."""
        p = object.__new__(cls)
        p.vars = variables
        p.terms = terms
        return p

    # -- builders ----------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls._raw(tuple(variables), {})

    @classmethod
    def constant(cls, variables: Sequence[str], value) -> "Polynomial":
        vs = tuple(variables)
        c = _coerce_coeff(value)
        if c.is_zero():
            return cls._raw(vs, {})
        return cls._raw(vs, {(0,) * len(vs): c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "Polynomial":
        return cls.constant(variables, 1)

    @classmethod
    def variable(cls, variables: Sequence[str], name: str) -> "Polynomial":
        vs = tuple(variables)
        if name not in vs:
            raise UnknownVariable(f"{name!r} is not one of {vs}")
        exp = [0] * len(vs)
        exp[vs.index(name)] = 1
        return cls._raw(vs, {tuple(exp): G_ONE})

    @classmethod
    def monomial(cls, variables: Sequence[str], exponents: Exponent, coeff=1) -> "Polynomial":
        return cls(tuple(variables), {tuple(exponents): coeff})

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_one(self) -> bool:
        zero_exp = (0,) * len(self.vars)
        return set(self.terms) == {zero_exp} and self.terms[zero_exp].is_one()

    def constant_value(self) -> GaussianRational:
        if self.is_zero():
            return G_ZERO
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return next(iter(self.terms.values()))

    # -- degrees and leading data -------------------------------------------

    def total_degree(self) -> int:
        """Max total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree_in(self, name: str) -> int:
        idx = self._index(name)
        if not self.terms:
            return -1
        return max(e[idx] for e in self.terms)

    def leading_exponent(self) -> Exponent:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self) -> GaussianRational:
        return self.terms[self.leading_exponent()]

    def monic(self) -> "Polynomial":
        """Divide by the graded-lex leading coefficient."""
        if self.is_zero():
            return self
        lc = self.leading_coefficient()
        if lc.is_one():
            return self
        inv = lc.inverse()
        return Polynomial._raw(self.vars, {e: c * inv for e, c in self.terms.items()})

    def _index(self, name: str) -> int:
        try:
            return self.vars.index(name)
        except ValueError:
            raise UnknownVariable(f"{name!r} is not one of {self.vars}") from None

    def _check_same_vars(self, other: "Polynomial"):
        if self.vars != other.vars:
            raise VariableMismatch(f"variable sets differ: {self.vars} vs {other.vars}")

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce_operand(other)
        self._check_same_vars(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            c = out.get(exp, G_ZERO) + coeff
            if c.is_zero():
                out.pop(exp, None)
            else:
                out[exp] = c
        return Polynomial._raw(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_operand(other))

    def __rsub__(self, other):
        return self._coerce_operand(other) + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = _coerce_coeff(other)
            if c.is_zero():
                return Polynomial.zero(self.vars)
            return Polynomial._raw(self.vars, {e: v * c for e, v in self.terms.items()})
        other = self._coerce_operand(other)
        self._check_same_vars(other)
        out: Terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                exp = tuple(a + b for a, b in zip(e1, e2))
                c = out.get(exp, G_ZERO) + c1 * c2
                if c.is_zero():
                    out.pop(exp, None)
                else:
                    out[exp] = c
        return Polynomial._raw(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a nonnegative int")
        result = Polynomial.one(self.vars)
        for _ in range(exponent):
            result = result * self
        return result

    def _coerce_operand(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Polynomial.constant(self.vars, other)
        raise TypeError(f"cannot combine polynomial with {other!r}")

    # -- calculus and evaluation ---------------------------------------------

    def derivative(self, name: str) -> "Polynomial":
        idx = self._index(name)
        out: Terms = {}
        for exp, coeff in self.terms.items():
            e = exp[idx]
            if not e:
                continue
            new = list(exp)
            new[idx] = e - 1
            key = tuple(new)
            c = out.get(key, G_ZERO) + coeff * e
            if c.is_zero():
                out.pop(key, None)
            else:
                out[key] = c
        return Polynomial._raw(self.vars, out)

    def evaluate(self, point: Mapping[str, GaussianRational]) -> GaussianRational:
        for name in self.vars:
            if name not in point:
                raise UnknownVariable(f"no value supplied for {name!r}")
        total = G_ZERO
        for exp, coeff in self.terms.items():
            term = coeff
            for name, e in zip(self.vars, exp):
                if e:
                    term = term * (GaussianRational.coerce(point[name]) ** e)
            total = total + term
        return total

    # -- variable plumbing -----------------------------------------------------

    def with_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over a superset (or reordering) of the current variables."""
        vs = tuple(variables)
        positions = []
        for name in self.vars:
            if name not in vs:
                raise UnknownVariable(f"{name!r} missing from target variables {vs}")
            positions.append(vs.index(name))
        out: Terms = {}
        for exp, coeff in self.terms.items():
            new = [0] * len(vs)
            for pos, e in zip(positions, exp):
                new[pos] = e
            out[tuple(new)] = coeff
        return Polynomial._raw(vs, out)

    def permute_positions(self, mapping: Mapping[int, int]) -> "Polynomial":
        """Move exponents between variable slots; identity outside `mapping`."""
        out: Terms = {}
        for exp, coeff in self.terms.items():
            new = list(exp)
            for src, dst in mapping.items():
                new[dst] = exp[src]
            out[tuple(new)] = coeff
        return Polynomial._raw(self.vars, out)

    def map_exponent(self, name: str, target: str, transform) -> "Polynomial":
        """Replace slot `name` by `target`, sending each exponent e to
        transform(e) = (new exponent, coefficient multiplier)."""
        idx = self._index(name)
        vs = tuple(target if v == name else v for v in self.vars)
        out: Terms = {}
        for exp, coeff in self.terms.items():
            new_e, factor = transform(exp[idx])
            new = list(exp)
            new[idx] = new_e
            key = tuple(new)
            c = out.get(key, G_ZERO) + coeff * factor
            if c.is_zero():
                out.pop(key, None)
            else:
                out[key] = c
        return Polynomial._raw(vs, out)

    # -- comparison and formatting ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def sorted_terms(self):
        for exp in sorted(self.terms, key=_grlex_key, reverse=True):
            yield exp, self.terms[exp]

    def _monomial_text(self, exp: Exponent) -> str:
        factors = []
        for name, e in zip(self.vars, exp):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append(f"{name}^{e}")
        return "*".join(factors)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.sorted_terms():
            sign, body = coeff_term_text(coeff, self._monomial_text(exp))
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        out = [first_body if first_sign == "+" else f"-{first_body}"]
        for sign, body in pieces[1:]:
            out.append(f" {sign} {body}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self.vars!r}, {self})"


def _fraction_text(value: Fraction, multiplied: bool) -> str:
    text = str(value)
    if multiplied and value.denominator != 1:
        return f"({text})"
    return text


def coeff_term_text(coeff: GaussianRational, monomial: str, multiplied: bool = False) -> Tuple[str, str]:
    """Render coeff*monomial as (sign, body) with the sign pulled out.

    `multiplied` forces fraction parentheses even for a bare coefficient,
    for use inside larger products.
    """
    re, im = coeff.re, coeff.im
    if im == 0:
        sign = "+" if re >= 0 else "-"
        mag = abs(re)
        if monomial:
            body = monomial if mag == 1 else f"{_fraction_text(mag, True)}*{monomial}"
        else:
            body = _fraction_text(mag, multiplied)
        return sign, body
    if re == 0:
        sign = "+" if im >= 0 else "-"
        mag = abs(im)
        base = "i" if mag == 1 else f"{_fraction_text(mag, True)}*i"
        return sign, f"{base}*{monomial}" if monomial else base
    # mixed a + b*i: extract the sign of the real part
    sign = "+" if re > 0 else "-"
    c = coeff if re > 0 else -coeff
    if c.im > 0:
        inner = f"{c.re} + {_imag_text(c.im)}"
    else:
        inner = f"{c.re} - {_imag_text(-c.im)}"
    body = f"({inner})"
    return sign, f"{body}*{monomial}" if monomial else body


def _imag_text(mag: Fraction) -> str:
    return "i" if mag == 1 else f"{_fraction_text(mag, True)}*i"


# -- exact division -----------------------------------------------------------


def poly_try_divexact(p: Polynomial, d: Polynomial) -> Optional[Polynomial]:
    """Quotient p/d when d divides p exactly, else None."""
    p._check_same_vars(d)
    if d.is_zero():
        raise ZeroDenominator("division by the zero polynomial")
    if p.is_zero():
        return Polynomial.zero(p.vars)
    d_lead = max(d.terms, key=_grlex_key)
    d_coeff = d.terms[d_lead]
    remainder = dict(p.terms)
    quotient: Terms = {}
    while remainder:
        r_lead = max(remainder, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(r_lead, d_lead))
        if any(e < 0 for e in diff):
            return None
        c = remainder[r_lead] / d_coeff
        quotient[diff] = c
        for exp, coeff in d.terms.items():
            key = tuple(a + b for a, b in zip(exp, diff))
            v = remainder.get(key, G_ZERO) - coeff * c
            if v.is_zero():
                remainder.pop(key, None)
            else:
                remainder[key] = v
    return Polynomial._raw(p.vars, quotient)


def poly_divexact(p: Polynomial, d: Polynomial) -> Polynomial:
    q = poly_try_divexact(p, d)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


# -- gcd ----------------------------------------------------------------------


def _occurring(p: Polynomial) -> frozenset:
    seen = set()
    for exp in p.terms:
        for idx, e in enumerate(exp):
            if e:
                seen.add(idx)
    return frozenset(seen)


def _min_exponents(p: Polynomial) -> Exponent:
    mins = None
    for exp in p.terms:
        if mins is None:
            mins = list(exp)
        else:
            mins = [min(a, b) for a, b in zip(mins, exp)]
    return tuple(mins)


def _shift_down(p: Polynomial, shift: Exponent) -> Polynomial:
    if not any(shift):
        return p
    return Polynomial._raw(
        p.vars,
        {tuple(a - b for a, b in zip(exp, shift)): c for exp, c in p.terms.items()},
    )


def _shift_up(p: Polynomial, idx: int, amount: int) -> Polynomial:
    if not amount:
        return p
    out: Terms = {}
    for exp, coeff in p.terms.items():
        new = list(exp)
        new[idx] += amount
        out[tuple(new)] = coeff
    return Polynomial._raw(p.vars, out)


def _univar_dense(p: Polynomial, idx: int) -> list:
    deg = max(exp[idx] for exp in p.terms)
    coeffs = [G_ZERO] * (deg + 1)
    for exp, coeff in p.terms.items():
        coeffs[exp[idx]] = coeff
    return coeffs


def _dense_trim(c: list) -> list:
    while c and c[-1].is_zero():
        c.pop()
    return c


def _dense_mod_monic(a: list, b: list) -> list:
    """Remainder of dense univariate division by a monic divisor."""
    a = list(a)
    while len(a) >= len(b):
        factor = a[-1]
        shift = len(a) - len(b)
        for i, bc in enumerate(b[:-1]):
            a[i + shift] = a[i + shift] - factor * bc
        a.pop()
        _dense_trim(a)
        if not a:
            break
    return a


def _dense_monic(c: list) -> list:
    inv = c[-1].inverse()
    return [v * inv for v in c]


def _univar_gcd(p: Polynomial, q: Polynomial, idx: int) -> Polynomial:
    # each divisor is normalized to monic, which keeps coefficient sizes tame
    a = _dense_trim(_univar_dense(p, idx))
    b = _dense_trim(_univar_dense(q, idx))
    while b:
        b = _dense_monic(b)
        a, b = b, _dense_mod_monic(a, b)
    a = _dense_monic(a)
    terms: Terms = {}
    zero = [0] * len(p.vars)
    for e, coeff in enumerate(a):
        if coeff.is_zero():
            continue
        exp = list(zero)
        exp[idx] = e
        terms[tuple(exp)] = coeff
    return Polynomial._raw(p.vars, terms)


def _coefficients_in(p: Polynomial, idx: int) -> Dict[int, Polynomial]:
    buckets: Dict[int, Terms] = {}
    for exp, coeff in p.terms.items():
        e = exp[idx]
        stripped = list(exp)
        stripped[idx] = 0
        buckets.setdefault(e, {})[tuple(stripped)] = coeff
    return {e: Polynomial._raw(p.vars, t) for e, t in buckets.items()}


def _lead_in(p: Polynomial, idx: int) -> Tuple[int, Polynomial]:
    coeffs = _coefficients_in(p, idx)
    deg = max(coeffs)
    return deg, coeffs[deg]


def _content_in(p: Polynomial, idx: int) -> Polynomial:
    content = Polynomial.zero(p.vars)
    for part in _coefficients_in(p, idx).values():
        content = poly_gcd(content, part)
        if content.is_constant():
            break
    return content


def _primitive_in(p: Polynomial, idx: int) -> Polynomial:
    content = _content_in(p, idx)
    if content.is_one():
        return p
    return poly_divexact(p, content)


def _pseudo_rem(a: Polynomial, b: Polynomial, idx: int) -> Polynomial:
    db, lb = _lead_in(b, idx)
    r = a
    while not r.is_zero():
        dr, lr = _lead_in(r, idx)
        if dr < db:
            break
        r = lb * r - _shift_up(lr * b, idx, dr - db)
    return r


def _prs_ppgcd(a: Polynomial, b: Polynomial, idx: int) -> Polynomial:
    """Primitive PRS on inputs already primitive in the main variable."""
    if a.degree_in(a.vars[idx]) < b.degree_in(a.vars[idx]):
        a, b = b, a
    while not b.is_zero():
        r = _pseudo_rem(a, b, idx)
        a, b = b, (r if r.is_zero() else _primitive_in(r, idx))
    return a


def _eval_var(p: Polynomial, idx: int, t: GaussianRational) -> Polynomial:
    """Partial evaluation of one variable; the tuple keeps its slot at 0."""
    powers = {0: G_ONE}
    out: Terms = {}
    for exp, coeff in p.terms.items():
        e = exp[idx]
        value = powers.get(e)
        if value is None:
            value = powers[e] = t ** e
        if e:
            new = list(exp)
            new[idx] = 0
            key = tuple(new)
        else:
            key = exp
        c = out.get(key, G_ZERO) + coeff * value
        if c.is_zero():
            out.pop(key, None)
        else:
            out[key] = c
    return Polynomial._raw(p.vars, out)


def _interpolate(images, vidx: int, variables: Tuple[str, ...]) -> Polynomial:
    """Newton interpolation in one variable with polynomial values."""
    coeffs: list = []
    nodes: list = []
    for t, value in images:
        acc = value
        basis_at_t = G_ONE
        for c, tl in zip(coeffs, nodes):
            acc = acc - c * basis_at_t
            basis_at_t = basis_at_t * (t - tl)
        coeffs.append(acc * basis_at_t.inverse())
        nodes.append(t)
    result = Polynomial.zero(variables)
    basis = Polynomial.one(variables)
    v = Polynomial.variable(variables, variables[vidx])
    for c, tl in zip(coeffs, nodes):
        result = result + c * basis
        basis = basis * (v - tl)
    return result


def _modular_ppgcd(P: Polynomial, Q: Polynomial, xidx: int) -> Optional[Polynomial]:
    """Evaluation/interpolation gcd of inputs primitive in the main variable.

    One evaluation variable is specialized at integer points; images are
    gcds with one variable fewer, rescaled so their main-variable leading
    coefficient matches the leading-coefficient gcd, and interpolated back.
    The candidate is certified by exact division, so a None return (give up,
    caller falls back to the pseudo-remainder sequence) is the only way this
    can be wrong-shaped, never a wrong answer.
    """
    variables = P.vars
    candidates = (_occurring(P) | _occurring(Q)) - {xidx}
    if not candidates:
        return _univar_gcd(P, Q, xidx)
    vidx = min(
        candidates,
        key=lambda i: max(P.degree_in(variables[i]), Q.degree_in(variables[i])),
    )
    vname = variables[vidx]
    _, lc_p = _lead_in(P, xidx)
    _, lc_q = _lead_in(Q, xidx)
    gamma = poly_gcd(lc_p, lc_q)
    bound = (
        min(P.degree_in(vname), Q.degree_in(vname)) + max(gamma.degree_in(vname), 0) + 1
    )
    images = []
    best_degree: Optional[int] = None
    attempts = 0
    t_int = 0
    while attempts < bound + 32:
        t = GaussianRational(t_int)
        t_int = -t_int + (1 if t_int <= 0 else 0)
        attempts += 1
        if _eval_var(lc_p, vidx, t).is_zero() or _eval_var(lc_q, vidx, t).is_zero():
            continue
        image = poly_gcd(_eval_var(P, vidx, t), _eval_var(Q, vidx, t))
        dx = image.degree_in(variables[xidx])
        if dx == 0:
            # images can only overshoot the true degree, so 1 is certified
            return Polynomial.one(variables)
        if best_degree is None or dx < best_degree:
            best_degree = dx
            images = []
        if dx > best_degree:
            continue
        _, lc_image = _lead_in(image, xidx)
        scale = poly_try_divexact(_eval_var(gamma, vidx, t), lc_image)
        if scale is None:
            continue
        images.append((t, image * scale))
        if len(images) == bound:
            candidate = _primitive_in(_interpolate(images, vidx, variables), xidx)
            if (
                poly_try_divexact(P, candidate) is not None
                and poly_try_divexact(Q, candidate) is not None
            ):
                return candidate
            images = []
    return None


def poly_gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Monic graded-lex gcd over Q(i); gcd(0, 0) = 0."""
    p._check_same_vars(q)
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()

    shift = tuple(min(a, b) for a, b in zip(_min_exponents(p), _min_exponents(q)))
    ph = _shift_down(p, _min_exponents(p))
    qh = _shift_down(q, _min_exponents(q))
    base = Polynomial.monomial(p.vars, shift) if any(shift) else Polynomial.one(p.vars)

    if ph.is_constant() or qh.is_constant():
        return base
    common = _occurring(ph) & _occurring(qh)
    if not common:
        return base

    dp, dq = ph.total_degree(), qh.total_degree()
    if dp >= dq and poly_try_divexact(ph, qh) is not None:
        return (base * qh.monic()).monic()
    if dq >= dp and poly_try_divexact(qh, ph) is not None:
        return (base * ph.monic()).monic()

    occ_union = _occurring(ph) | _occurring(qh)
    if len(occ_union) == 1:
        idx = next(iter(occ_union))
        return (base * _univar_gcd(ph, qh, idx)).monic()

    xidx = min(common, key=lambda i: max(ph.degree_in(p.vars[i]), qh.degree_in(p.vars[i])))
    cp = _content_in(ph, xidx)
    cq = _content_in(qh, xidx)
    cg = poly_gcd(cp, cq)
    big_p = ph if cp.is_one() else poly_divexact(ph, cp)
    big_q = qh if cq.is_one() else poly_divexact(qh, cq)
    g = _modular_ppgcd(big_p, big_q, xidx)
    if g is None:
        g = _prs_ppgcd(big_p, big_q, xidx)
    return (base * cg * g).monic()
