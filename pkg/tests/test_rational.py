from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from moyalquot.errors import (
    SubstitutionPole,
    UnknownVariable,
    VariableMismatch,
    ZeroDenominator,
)
from moyalquot.gaussian import GaussianRational
from moyalquot.polynomial import Polynomial
from moyalquot.rational import RationalFunction, rf_derivative, rf_normalize, rf_substitute

XY = ("x", "y")
X = ("x",)


def rf(num_terms, den_terms=None, variables=XY):
    num = Polynomial(variables, num_terms)
    den = Polynomial(variables, den_terms) if den_terms else Polynomial.one(variables)
    return RationalFunction(num, den)


def test_normalize_cancels_gcd():
    x = Polynomial.variable(X, "x")
    result = rf_normalize(x * x - 1, x - 1)
    assert result == RationalFunction.from_polynomial(x + 1)


def test_normalize_trivial_cases():
    x = Polynomial.variable(X, "x")
    assert rf_normalize(x, Polynomial.one(X)) == RationalFunction.variable(X, "x")
    zero = rf_normalize(Polynomial.zero(X), x)
    assert zero.num.is_zero() and zero.den.is_one()


def test_normalize_monic_denominator():
    x = Polynomial.variable(X, "x")
    r = rf_normalize(x, x * 2 + 2)
    assert r.den.leading_coefficient().is_one()
    assert r == RationalFunction(x * Fraction(1, 2), x + 1)


def test_normalize_zero_denominator():
    with pytest.raises(ZeroDenominator):
        rf_normalize(Polynomial.one(X), Polynomial.zero(X))


def test_value_equal_inputs_identical_representation():
    x = Polynomial.variable(X, "x")
    a = rf_normalize((x + 1) * (x - 1), (x - 1) * x)
    b = rf_normalize(x + 1, x)
    assert a.num == b.num and a.den == b.den


def test_derivative_examples():
    x = RationalFunction.variable(XY, "x")
    y = RationalFunction.variable(XY, "y")
    assert rf_derivative(x * x * y, "x") == 2 * x * y
    assert rf_derivative(x / y, "y") == -x / (y * y)
    z = RationalFunction.variable(("z",), "z")
    one = RationalFunction.one(("z",))
    f = one / (z - 1)
    assert rf_derivative(f, "z") == -one / ((z - 1) * (z - 1))
    with pytest.raises(UnknownVariable):
        rf_derivative(x, "q")


def test_substitute_examples():
    x = RationalFunction.variable(XY, "x")
    y = RationalFunction.variable(XY, "y")
    ZY = ("z", "y")
    z = RationalFunction.variable(ZY, "z")
    ynew = RationalFunction.variable(ZY, "y")
    assert rf_substitute(x / y, {"x": z * ynew, "y": ynew}) == z

    ident = {"x": x, "y": y}
    assert rf_substitute(x * x, ident) == x * x

    with pytest.raises(SubstitutionPole):
        rf_substitute(1 / x, {"x": RationalFunction.zero(XY), "y": y})
    with pytest.raises(VariableMismatch):
        rf_substitute(x, {"x": z * ynew, "wrong": ynew})


coefficients = st.sampled_from(
    [GaussianRational(1), GaussianRational(-2), GaussianRational(0, 1), GaussianRational(Fraction(1, 2))]
)
exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
polys = st.dictionaries(exponents, coefficients, min_size=1, max_size=3).map(
    lambda terms: Polynomial(XY, terms)
)
rationals = st.tuples(polys, polys.filter(lambda p: not p.is_zero())).map(
    lambda pair: RationalFunction(*pair)
)


@settings(max_examples=50, deadline=None)
@given(rationals, rationals)
def test_leibniz_rule(f, g):
    for v in XY:
        lhs = (f * g).derivative(v)
        rhs = f.derivative(v) * g + f * g.derivative(v)
        assert lhs == rhs


@settings(max_examples=50, deadline=None)
@given(rationals)
def test_mixed_partials_commute(f):
    assert f.derivative("x").derivative("y") == f.derivative("y").derivative("x")


@settings(max_examples=30, deadline=None)
@given(rationals, rationals)
def test_substitute_distributes(f, g):
    ZW = ("z", "w")
    z = RationalFunction.variable(ZW, "z")
    w = RationalFunction.variable(ZW, "w")
    bindings = {"x": z + w, "y": z * w + 1}
    assert (f + g).substitute(bindings) == f.substitute(bindings) + g.substitute(bindings)
    assert (f * g).substitute(bindings) == f.substitute(bindings) * g.substitute(bindings)


@settings(max_examples=50, deadline=None)
@given(rationals, rationals)
def test_field_arithmetic(f, g):
    assert f + g == g + f
    assert f * g == g * f
    if not g.is_zero():
        assert (f / g) * g == f
    assert f - f == RationalFunction.zero(XY)
