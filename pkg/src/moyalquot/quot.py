"""The d-fold product star, symmetrization, and the quot-cell assembly.

The open cell carries d cotangent-chart pairs (z_i, p_i) and d(r-1) flat
pairs (u_j, v_j).  The product star pulls every chart pair back through its
own copy of the quadric cover, multiplies with one Moyal product on the
2dr-variable pullback space (where every block is standard), and pushes each
factor forward again; the flat pairs are untouched by the cover.  The
symmetric group acts by permuting the chart pairs, and the cell star is the
product star restricted to invariant series, which it preserves.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations as all_permutations
from math import factorial
from typing import Dict, List, Sequence, Tuple

from .errors import BadPermutation, InvalidPoint, NotInvariant, VariableMismatch
from .gaussian import GaussianRational
from .geometry import pushforward_even_pair
from .moyal import MoyalContext, SymplecticSpace
from .moyal import moyal_star as _moyal_star
from .rational import RationalFunction
from .series import HSeries


@dataclass(frozen=True)
class ProductContext:
    """Coordinates and truncation data for the open cell.

    d chart pairs (z_i, p_i) with form dp^dz each, plus d(r-1) flat pairs
    (u_j, v_j) with {u_j, v_j} = 1; the total variable count is 2dr.
    """

    d: int
    r: int
    order: int
    chart: str = "A"

    def __post_init__(self):
        if self.d < 1 or self.r < 1:
            raise InvalidPoint(f"need d >= 1 and r >= 1, got d={self.d}, r={self.r}")
        if self.order < 0:
            raise ValueError("order must be nonnegative")

    @property
    def chart_pairs(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((f"z{i}", f"p{i}") for i in range(1, self.d + 1))

    @property
    def flat_pairs(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((f"u{j}", f"v{j}") for j in range(1, self.d * (self.r - 1) + 1))

    @property
    def vars(self) -> Tuple[str, ...]:
        out: List[str] = []
        for pair in self.chart_pairs + self.flat_pairs:
            out.extend(pair)
        return tuple(out)

    @property
    def pullback_pairs(self) -> Tuple[Tuple[str, str], ...]:
        return tuple((f"x{i}", f"y{i}") for i in range(1, self.d + 1))

    @property
    def pullback_vars(self) -> Tuple[str, ...]:
        out: List[str] = []
        for pair in self.pullback_pairs + self.flat_pairs:
            out.extend(pair)
        return tuple(out)

    def block_space(self) -> SymplecticSpace:
        """The chart-side form: dp^dz per chart pair, du^dv per flat pair."""
        blocks = [(z, p, -1) for z, p in self.chart_pairs]
        blocks += [(u, v, 1) for u, v in self.flat_pairs]
        return SymplecticSpace.block(blocks)

    def pullback_space(self) -> SymplecticSpace:
        return SymplecticSpace.standard(self.pullback_vars)

    def _pull_bindings(self) -> Dict[str, RationalFunction]:
        target = self.pullback_vars
        bindings: Dict[str, RationalFunction] = {}
        for (zv, pv), (xv, yv) in zip(self.chart_pairs, self.pullback_pairs):
            x = RationalFunction.variable(target, xv)
            y = RationalFunction.variable(target, yv)
            bindings[zv] = x / y
            bindings[pv] = y * y * GaussianRational(-1) / 2
        for u, v in self.flat_pairs:
            bindings[u] = RationalFunction.variable(target, u)
            bindings[v] = RationalFunction.variable(target, v)
        return bindings


def product_star(ctx: ProductContext, f: HSeries, g: HSeries) -> HSeries:
    """Star product of the block structure on the open cell."""
    if f.vars != ctx.vars or g.vars != ctx.vars:
        raise VariableMismatch(
            f"operands must live on {ctx.vars}, got {f.vars} and {g.vars}"
        )
    bindings = ctx._pull_bindings()

    def pull(series: HSeries) -> HSeries:
        return series.padded(ctx.order).map_coefficients(lambda c: c.substitute(bindings))

    mctx = MoyalContext(ctx.pullback_space(), ctx.order)
    product = _moyal_star(mctx, pull(f), pull(g))

    def push(c: RationalFunction) -> RationalFunction:
        for (zv, pv), (xv, yv) in zip(ctx.chart_pairs, ctx.pullback_pairs):
            c = pushforward_even_pair(c, xv, yv, zv, pv)
        return c

    return product.map_coefficients(push)


def _check_permutation(ctx: ProductContext, perm: Sequence[int]) -> Tuple[int, ...]:
    p = tuple(perm)
    if sorted(p) != list(range(1, ctx.d + 1)):
        raise BadPermutation(f"{perm!r} is not a permutation of 1..{ctx.d}")
    return p


def permute(ctx: ProductContext, perm: Sequence[int], f: HSeries) -> HSeries:
    """Rename z_i -> z_L(i), p_i -> p_L(i); flat variables stay fixed."""
    p = _check_permutation(ctx, perm)
    if f.vars != ctx.vars:
        raise VariableMismatch(f"series must live on {ctx.vars}")
    mapping: Dict[int, int] = {}
    for i, image in enumerate(p, start=1):
        src = 2 * (i - 1)
        dst = 2 * (image - 1)
        if src != dst:
            mapping[src] = dst
            mapping[src + 1] = dst + 1
    if not mapping:
        return f

    def rename(c: RationalFunction) -> RationalFunction:
        num = c.num.permute_positions(mapping)
        den = c.den.permute_positions(mapping)
        return RationalFunction._from_coprime(num, den)

    return f.map_coefficients(rename)


@dataclass(frozen=True)
class SymSeries:
    """A series on the cell, intended to be symmetric in the chart pairs."""

    value: HSeries


def symmetrize(ctx: ProductContext, f: HSeries) -> SymSeries:
    """Average of f over all chart-pair permutations; a projection."""
    total = None
    for perm in all_permutations(range(1, ctx.d + 1)):
        moved = permute(ctx, perm, f)
        total = moved if total is None else total + moved
    scale = GaussianRational(1) / factorial(ctx.d)
    return SymSeries(total.map_coefficients(lambda c: c * scale))


def is_invariant(ctx: ProductContext, f: HSeries) -> bool:
    """Invariance under adjacent transpositions (they generate the group)."""
    for k in range(1, ctx.d):
        perm = list(range(1, ctx.d + 1))
        perm[k - 1], perm[k] = perm[k], perm[k - 1]
        if permute(ctx, perm, f) != f:
            return False
    return True


def quot_cell_star(ctx: ProductContext, f: SymSeries, g: SymSeries) -> SymSeries:
    """The assembled star product on invariant series of the open cell."""
    for name, operand in (("left", f), ("right", g)):
        if not is_invariant(ctx, operand.value):
            raise NotInvariant(f"{name} operand is not invariant")
    return SymSeries(product_star(ctx, f.value, g.value))


# -- cell points ---------------------------------------------------------------------


@dataclass(frozen=True)
class QuotCellPoint:
    """Coordinates of a point of the open cell.

    `support` holds the d chart base coordinates, `covectors` the d fiber
    coordinates, and `flat` the d(r-1) pairs (u_j, v_j).
    """

    support: Tuple[GaussianRational, ...]
    covectors: Tuple[GaussianRational, ...]
    flat: Tuple[Tuple[GaussianRational, GaussianRational], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "support", tuple(GaussianRational.coerce(v) for v in self.support)
        )
        object.__setattr__(
            self, "covectors", tuple(GaussianRational.coerce(v) for v in self.covectors)
        )
        object.__setattr__(
            self,
            "flat",
            tuple(
                (GaussianRational.coerce(a), GaussianRational.coerce(b))
                for a, b in self.flat
            ),
        )
        if len(self.support) != len(self.covectors):
            raise InvalidPoint(
                f"{len(self.support)} support entries vs {len(self.covectors)} covectors"
            )
        if not self.support:
            raise InvalidPoint("a cell point needs d >= 1")

    @property
    def d(self) -> int:
        return len(self.support)


@dataclass(frozen=True)
class PointReport:
    issues: Tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.issues

    def render_text(self) -> str:
        if self.valid:
            return "point: valid"
        lines = [f"point: invalid ({len(self.issues)} issues)"]
        lines.extend(f"  {issue}" for issue in self.issues)
        return "\n".join(lines)


def quot_point_validate(pt: QuotCellPoint) -> PointReport:
    """Report duplicate support points and vanishing covectors."""
    issues: List[str] = []
    for i in range(pt.d):
        for j in range(i + 1, pt.d):
            if pt.support[i] == pt.support[j]:
                issues.append(f"DuplicateSupport: z{i + 1} = z{j + 1} = {pt.support[i]}")
    for i, covector in enumerate(pt.covectors, start=1):
        if covector.is_zero():
            issues.append(f"ZeroCovector: p{i} = 0")
    return PointReport(tuple(issues))


def support_divisor(pt: QuotCellPoint) -> Counter:
    """The underlying degree-d divisor, forgetting covector and flat data."""
    report = quot_point_validate(pt)
    if not report.valid:
        raise InvalidPoint("; ".join(report.issues))
    return Counter(pt.support)
