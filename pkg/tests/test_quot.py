import pytest

from moyalquot.errors import (
    BadPermutation,
    InvalidPoint,
    NotInvariant,
    VariableMismatch,
)
from moyalquot.gaussian import GaussianRational
from moyalquot.polynomial import Polynomial
from moyalquot.quot import (
    ProductContext,
    QuotCellPoint,
    SymSeries,
    is_invariant,
    permute,
    product_star,
    quot_cell_star,
    quot_point_validate,
    support_divisor,
    symmetrize,
)
from moyalquot.atlas import KChartFunction, star_on_K
from moyalquot.moyal import MoyalContext, SymplecticSpace, moyal_star, poisson_bracket
from moyalquot.rational import RationalFunction
from moyalquot.sampling import SampleStream
from moyalquot.series import HSeries

I = GaussianRational(0, 1)


def ctx21(order=4):
    return ProductContext(d=2, r=1, order=order)


def ctx22(order=4):
    return ProductContext(d=2, r=2, order=order)


def poly_series(ctx, terms, order=None):
    order = ctx.order if order is None else order
    return HSeries.constant(
        RationalFunction.from_polynomial(Polynomial(ctx.vars, terms)), order
    )


def test_context_shape():
    ctx = ctx22()
    assert ctx.vars == ("z1", "p1", "z2", "p2", "u1", "v1", "u2", "v2")
    assert len(ctx.vars) == 2 * ctx.d * ctx.r
    assert ctx21().flat_pairs == ()
    with pytest.raises(InvalidPoint):
        ProductContext(d=0, r=1, order=2)


def test_block_space_brackets():
    ctx = ctx22(order=0)
    space = ctx.block_space()
    mctx = MoyalContext(space, 0)
    vs = ctx.vars
    z1, p1 = (RationalFunction.variable(vs, n) for n in ("z1", "p1"))
    u1, v1 = (RationalFunction.variable(vs, n) for n in ("u1", "v1"))
    z2 = RationalFunction.variable(vs, "z2")
    assert poisson_bracket(mctx, z1, p1) == RationalFunction.constant(vs, -1)
    assert poisson_bracket(mctx, u1, v1) == RationalFunction.one(vs)
    assert poisson_bracket(mctx, z1, z2).is_zero()
    assert poisson_bracket(mctx, z1, u1).is_zero()


def test_product_star_examples():
    ctx = ctx21()
    z1 = HSeries.variable(ctx.vars, "z1", ctx.order)
    z2 = HSeries.variable(ctx.vars, "z2", ctx.order)
    p1 = HSeries.variable(ctx.vars, "p1", ctx.order)
    assert product_star(ctx, z1, z2) == poly_series(ctx, {(1, 0, 1, 0): 1})

    got = product_star(ctx, z1, p1)
    assert got.coeffs[0] == RationalFunction.from_polynomial(
        Polynomial(ctx.vars, {(1, 1, 0, 0): 1})
    )
    assert got.coeffs[1] == RationalFunction.constant(ctx.vars, I * -1 / 2)

    ctx2 = ctx22()
    u1 = HSeries.variable(ctx2.vars, "u1", ctx2.order)
    v1 = HSeries.variable(ctx2.vars, "v1", ctx2.order)
    got = product_star(ctx2, u1, v1)
    assert got.coeffs[1] == RationalFunction.constant(ctx2.vars, I * 1 / 2)


def test_product_star_single_chart_block_matches_chart_star():
    ctx = ProductContext(d=1, r=1, order=4)
    s = SampleStream("quot-single-block")
    for _ in range(5):
        f_small = s.polynomial(("z1", "p1"), 2)
        g_small = s.polynomial(("z1", "p1"), 2)
        via_product = product_star(
            ctx,
            HSeries.constant(RationalFunction.from_polynomial(f_small.with_variables(ctx.vars)), 4),
            HSeries.constant(RationalFunction.from_polynomial(g_small.with_variables(ctx.vars)), 4),
        )
        via_chart = star_on_K(
            4,
            KChartFunction("A", HSeries.constant(RationalFunction.from_polynomial(f_small), 4)),
            KChartFunction("A", HSeries.constant(RationalFunction.from_polynomial(g_small), 4)),
        )
        lifted = HSeries(
            [
                RationalFunction(c.num.with_variables(ctx.vars), c.den.with_variables(ctx.vars))
                for c in via_chart.value.coeffs
            ]
        )
        assert via_product == lifted


def test_product_star_single_flat_block_matches_moyal():
    ctx = ProductContext(d=1, r=2, order=3)
    UV = ("u1", "v1")
    s = SampleStream("quot-flat-block")
    plane = MoyalContext(SymplecticSpace.standard(UV), 3)
    for _ in range(5):
        f_small = s.polynomial(UV, 2)
        g_small = s.polynomial(UV, 2)
        via_product = product_star(
            ctx,
            HSeries.constant(RationalFunction.from_polynomial(f_small.with_variables(ctx.vars)), 3),
            HSeries.constant(RationalFunction.from_polynomial(g_small.with_variables(ctx.vars)), 3),
        )
        via_plane = moyal_star(
            plane,
            HSeries.constant(RationalFunction.from_polynomial(f_small), 3),
            HSeries.constant(RationalFunction.from_polynomial(g_small), 3),
        )
        lifted = HSeries(
            [RationalFunction.from_polynomial(c.num.with_variables(ctx.vars)) for c in via_plane.coeffs]
        )
        assert via_product == lifted


def test_permute_examples():
    ctx = ctx21()
    z1 = HSeries.variable(ctx.vars, "z1", 1)
    assert permute(ctx, (1, 2), z1) == z1
    assert permute(ctx, (2, 1), z1) == HSeries.variable(ctx.vars, "z2", 1)
    z1p2 = poly_series(ctx, {(1, 0, 0, 1): 1}, order=1)
    z2p1 = poly_series(ctx, {(0, 1, 1, 0): 1}, order=1)
    assert permute(ctx, (2, 1), z1p2) == z2p1
    with pytest.raises(BadPermutation):
        permute(ctx, (1, 1), z1)
    with pytest.raises(BadPermutation):
        permute(ctx, (1,), z1)


def test_symmetrize_examples():
    ctx = ctx21()
    z1 = HSeries.variable(ctx.vars, "z1", 2)
    z2 = HSeries.variable(ctx.vars, "z2", 2)
    half = GaussianRational(1) / 2
    sym = symmetrize(ctx, z1)
    assert sym.value == (z1 + z2) * half

    z1z2 = poly_series(ctx, {(1, 0, 1, 0): 1}, order=2)
    assert symmetrize(ctx, z1z2).value == z1z2

    z1p1 = poly_series(ctx, {(1, 1, 0, 0): 1}, order=2)
    z2p2 = poly_series(ctx, {(0, 0, 1, 1): 1}, order=2)
    assert symmetrize(ctx, z1p1).value == (z1p1 + z2p2) * half


def test_is_invariant_examples():
    ctx = ctx21()
    z1 = HSeries.variable(ctx.vars, "z1", 1)
    z2 = HSeries.variable(ctx.vars, "z2", 1)
    assert is_invariant(ctx, z1 + z2)
    assert not is_invariant(ctx, z1 - z2)
    ctx3 = ProductContext(d=3, r=1, order=1)
    e2 = poly_series(
        ctx3,
        {(1, 0, 1, 0, 0, 0): 1, (1, 0, 0, 0, 1, 0): 1, (0, 0, 1, 0, 1, 0): 1},
        order=1,
    )
    assert is_invariant(ctx3, e2)


def test_quot_cell_star_examples():
    ctx = ctx21()
    e1 = symmetrize(ctx, HSeries.variable(ctx.vars, "z1", ctx.order) * 2)
    P1 = symmetrize(ctx, HSeries.variable(ctx.vars, "p1", ctx.order) * 2)
    got = quot_cell_star(ctx, e1, P1)
    plain = e1.value.coeffs[0] * P1.value.coeffs[0]
    assert got.value.coeffs[0] == plain
    assert got.value.coeffs[1] == RationalFunction.constant(ctx.vars, -I)

    one = SymSeries(HSeries.one(ctx.vars, ctx.order))
    f = symmetrize(ctx, poly_series(ctx, {(1, 1, 0, 0): 1}))
    assert quot_cell_star(ctx, one, f).value == f.value

    comm = quot_cell_star(ctx, e1, P1).value - quot_cell_star(ctx, P1, e1).value
    assert comm.coeffs[1] == RationalFunction.constant(ctx.vars, -2 * I)
    block = MoyalContext(ctx.block_space(), ctx.order)
    assert comm.coeffs[1] == I * poisson_bracket(
        block, e1.value.coeffs[0], P1.value.coeffs[0]
    )


def test_quot_cell_star_rejects_non_invariant():
    ctx = ctx21()
    z1 = SymSeries(HSeries.variable(ctx.vars, "z1", ctx.order))
    one = SymSeries(HSeries.one(ctx.vars, ctx.order))
    with pytest.raises(NotInvariant):
        quot_cell_star(ctx, z1, one)


def test_invariance_closure_random():
    ctx = ctx22()
    s = SampleStream("quot-closure")
    for _ in range(10):
        f = symmetrize(ctx, poly_series(ctx, {s.exponent(8, 2): s.coefficient()}))
        g = symmetrize(ctx, poly_series(ctx, {s.exponent(8, 2): s.coefficient()}))
        out = quot_cell_star(ctx, f, g)
        assert is_invariant(ctx, out.value)


def test_invariance_closure_three_factors():
    ctx = ProductContext(d=3, r=1, order=3)
    s = SampleStream("quot-closure-d3")
    for _ in range(6):
        f = symmetrize(ctx, poly_series(ctx, {s.exponent(6, 3): s.coefficient()}))
        g = symmetrize(ctx, poly_series(ctx, {s.exponent(6, 3): s.coefficient()}))
        out = quot_cell_star(ctx, f, g)
        assert is_invariant(ctx, out.value)
        assert out.value.coeffs[0] == f.value.coeffs[0] * g.value.coeffs[0]


def test_product_star_variable_mismatch():
    ctx = ctx21()
    with pytest.raises(VariableMismatch):
        product_star(ctx, HSeries.one(("a", "b"), 4), HSeries.one(("a", "b"), 4))


# -- cell points ------------------------------------------------------------------


def test_point_validation_examples():
    g = GaussianRational
    good = QuotCellPoint((g(0), g(1)), (g(1), g(1)), ((g(0), g(0)),))
    assert quot_point_validate(good).valid

    dup = QuotCellPoint((g(0), g(0)), (g(1), g(1)))
    report = quot_point_validate(dup)
    assert not report.valid and any("DuplicateSupport" in s for s in report.issues)

    zero_cov = QuotCellPoint((g(0), g(1)), (g(0), g(1)))
    report = quot_point_validate(zero_cov)
    assert not report.valid and any("ZeroCovector" in s for s in report.issues)

    with pytest.raises(InvalidPoint):
        QuotCellPoint((g(0),), (g(1), g(2)))


def test_support_divisor():
    g = GaussianRational
    pt = QuotCellPoint((g(0), g(1)), (g(1), g(1)))
    divisor = support_divisor(pt)
    assert divisor == {g(0): 1, g(1): 1}

    single = QuotCellPoint((g(5),), (g(2),))
    assert support_divisor(single) == {g(5): 1}

    swapped = QuotCellPoint((g(1), g(0)), (g(1), g(1)))
    assert support_divisor(pt) == support_divisor(swapped)

    bad = QuotCellPoint((g(0), g(1)), (g(0), g(1)))
    with pytest.raises(InvalidPoint):
        support_divisor(bad)


def test_r1_degenerate_flat_block():
    ctx = ProductContext(d=2, r=1, order=2)
    assert ctx.flat_pairs == ()
    assert len(ctx.vars) == 4
    one = SymSeries(HSeries.one(ctx.vars, 2))
    assert quot_cell_star(ctx, one, one).value == HSeries.one(ctx.vars, 2)
