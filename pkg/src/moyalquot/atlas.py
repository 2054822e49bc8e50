"""Projective atlases and the glued star product on cotangent charts.

Charts carry coordinate pairs (z, p); transitions between charts are Mobius
maps stored as raw 2x2 matrices so that validation can report degenerate or
non-unimodular entries instead of refusing to hold them.  Transport of
chart functions rides on the cotangent lift of a determinant-1
representative, and the star product is the Moyal product conjugated by the
quadric double cover, computed per chart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import (
    AtlasFormatError,
    ChartMismatch,
    DegenerateMatrix,
    MissingTransition,
    NotSymplectic,
    VariableMismatch,
)
from .gaussian import GaussianRational
from .geometry import MobiusMap, cotangent_lift, pushforward_even_pair, sigma_bindings
from .moyal import MoyalContext, SymplecticSpace, moyal_star
from .series import HSeries, hs_equal

Matrix2 = Tuple[Tuple[GaussianRational, GaussianRational], Tuple[GaussianRational, GaussianRational]]
TransitionKey = Tuple[str, str]


def _det2(m: Matrix2) -> GaussianRational:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def _coerce_matrix2(rows) -> Matrix2:
    out = tuple(tuple(GaussianRational.coerce(v) for v in row) for row in rows)
    if len(out) != 2 or any(len(r) != 2 for r in out):
        raise ValueError("transition matrices are 2x2")
    return out


@dataclass(frozen=True)
class ProjectiveAtlas:
    """Charts with coordinate pairs plus Mobius transition data.

    `witnesses` optionally designates an overlap point per transition for
    sanity evaluation during validation.
    """

    charts: Dict[str, Tuple[str, str]]
    transitions: Dict[TransitionKey, Matrix2]
    witnesses: Dict[TransitionKey, Tuple[GaussianRational, GaussianRational]] = field(
        default_factory=dict
    )

    def __post_init__(self):
        for cid, pair in self.charts.items():
            if len(pair) != 2 or pair[0] == pair[1]:
                raise AtlasFormatError(f"chart {cid!r} needs two distinct variables")
        for (src, dst), matrix in self.transitions.items():
            if src not in self.charts or dst not in self.charts:
                raise AtlasFormatError(f"transition {src}->{dst} references unknown charts")
            _coerce_matrix2(matrix)

    def chart_vars(self, cid: str) -> Tuple[str, str]:
        if cid not in self.charts:
            raise MissingTransition(f"unknown chart {cid!r}")
        return self.charts[cid]

    def transition_matrix(self, src: str, dst: str) -> Matrix2:
        key = (src, dst)
        if key not in self.transitions:
            raise MissingTransition(f"no transition {src}->{dst} declared")
        return self.transitions[key]

    def transition_map(self, src: str, dst: str) -> MobiusMap:
        matrix = self.transition_matrix(src, dst)
        det = _det2(matrix)
        if det.is_zero():
            raise DegenerateMatrix(f"transition {src}->{dst} is degenerate")
        if not det.is_one():
            raise NotSymplectic(
                f"transition {src}->{dst} has determinant {det}, expected 1"
            )
        return MobiusMap(matrix)


def normalize_unimodular(matrix) -> Optional[Matrix2]:
    """Rescale to determinant 1 over Q(i), or None when impossible."""
    m = _coerce_matrix2(matrix)
    det = _det2(m)
    if det.is_zero():
        return None
    if det.is_one():
        return m
    root = det.inverse().sqrt()
    if root is None:
        return None
    return tuple(tuple(v * root for v in row) for row in m)


def standard_cp1_atlas() -> ProjectiveAtlas:
    """The two-chart atlas of the projective line with transition w = 1/z."""
    i = GaussianRational(0, 1)
    one = GaussianRational(1)
    flip: Matrix2 = ((GaussianRational(0), i), (i, GaussianRational(0)))
    return ProjectiveAtlas(
        charts={"A": ("z", "p"), "B": ("w", "q")},
        transitions={("A", "B"): flip, ("B", "A"): flip},
        witnesses={("A", "B"): (one, one), ("B", "A"): (one, one)},
    )


# -- validation -----------------------------------------------------------------


@dataclass(frozen=True)
class AtlasReport:
    issues: Tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.issues

    def render_text(self) -> str:
        if self.valid:
            return "atlas: valid"
        lines = [f"atlas: invalid ({len(self.issues)} issues)"]
        lines.extend(f"  {issue}" for issue in self.issues)
        return "\n".join(lines)


def atlas_validate(atlas: ProjectiveAtlas) -> AtlasReport:
    """Check determinants, cocycle identities, and witness sanity."""
    issues: List[str] = []
    usable: Dict[TransitionKey, MobiusMap] = {}
    for key in sorted(atlas.transitions):
        matrix = atlas.transitions[key]
        det = _det2(matrix)
        if det.is_zero():
            issues.append(f"DegenerateMatrix: transition {key[0]}->{key[1]} has determinant 0")
            continue
        if not det.is_one():
            issues.append(
                f"NonUnitDeterminant: transition {key[0]}->{key[1]} has determinant {det}"
            )
        usable[key] = MobiusMap(matrix)

    for (src, dst), fwd in sorted(usable.items()):
        back = usable.get((dst, src))
        if back is not None and src < dst:
            if not fwd.compose(back).is_identity_projective():
                issues.append(f"CocycleFailure: {src}->{dst}->{src} is not the identity")
    for (a, b), t_ab in sorted(usable.items()):
        for (b2, c), t_bc in sorted(usable.items()):
            if b2 != b or (a, c) not in usable or a == c:
                continue
            if not t_bc.compose(t_ab).proj_eq(usable[(a, c)]):
                issues.append(f"CocycleFailure: {a}->{b}->{c} differs from {a}->{c}")

    for key, point in sorted(atlas.witnesses.items()):
        m = usable.get(key)
        if m is None:
            continue
        try:
            m.apply_point(point[0])
        except Exception:
            issues.append(
                f"WitnessPole: overlap witness {point[0]} of {key[0]}->{key[1]} maps to infinity"
            )
    return AtlasReport(tuple(issues))


# -- chart functions and transport ---------------------------------------------------


@dataclass(frozen=True)
class KChartFunction:
    """A truncated series expressed in one chart's (z, p) coordinates."""

    chart: str
    value: HSeries

    def __post_init__(self):
        if len(self.value.vars) != 2:
            raise VariableMismatch("chart functions live on two-variable charts")


def transport(atlas: ProjectiveAtlas, f: KChartFunction, target: str) -> KChartFunction:
    """Express f in the target chart, pulling back along the declared transition."""
    if target == f.chart:
        atlas.chart_vars(target)
        return f
    src_vars = atlas.chart_vars(f.chart)
    dst_vars = atlas.chart_vars(target)
    mob = atlas.transition_map(target, f.chart)
    big_z, big_p = cotangent_lift(mob, dst_vars)
    bindings = {src_vars[0]: big_z, src_vars[1]: big_p}
    moved = f.value.map_coefficients(lambda c: c.substitute(bindings))
    return KChartFunction(target, moved)


def _internal_xy(avoid: Sequence[str]) -> Tuple[str, str]:
    for candidate in (("x", "y"), ("x0", "y0"), ("xx", "yy")):
        if not set(candidate) & set(avoid):
            return candidate
    raise VariableMismatch(f"cannot pick cover variables distinct from {avoid}")


def star_on_K(order: int, f: KChartFunction, g: KChartFunction) -> KChartFunction:
    """The glued star product on one chart.

    Both operands are pulled back through the quadric cover, multiplied with
    the Moyal product on the standard plane, and pushed forward again; the
    scalar term is the plain product and the first-order commutator matches
    the (z, p) bracket of the form dp^dz.
    """
    if f.chart != g.chart or f.value.vars != g.value.vars:
        raise ChartMismatch(f"operands live on {f.chart} and {g.chart}")
    zv, pv = f.value.vars
    xv, yv = _internal_xy((zv, pv))
    bindings = sigma_bindings((zv, pv), (xv, yv))

    def pull(series: HSeries) -> HSeries:
        return series.padded(order).map_coefficients(lambda c: c.substitute(bindings))

    space = SymplecticSpace.standard((xv, yv))
    ctx = MoyalContext(space, order)
    product = moyal_star(ctx, pull(f.value), pull(g.value))
    pushed = product.map_coefficients(
        lambda c: pushforward_even_pair(c, xv, yv, zv, pv)
    )
    return KChartFunction(f.chart, pushed)


def chart_independence_check(
    atlas: ProjectiveAtlas,
    f: KChartFunction,
    g: KChartFunction,
    other: str,
    order: int,
) -> bool:
    """transport(f*g) = transport(f)*transport(g), exactly up to `order`."""
    starred_then_moved = transport(atlas, star_on_K(order, f, g), other)
    moved_then_starred = star_on_K(
        order, transport(atlas, f, other), transport(atlas, g, other)
    )
    return hs_equal(starred_then_moved.value, moved_then_starred.value, order)


# -- atlas file format ----------------------------------------------------------------


def parse_atlas(text: str) -> ProjectiveAtlas:
    """Parse the line-oriented atlas format.

    Lines: `chart <id> <zvar> <pvar>` and
    `transition <from> <to> <a> <b> <c> <d>` with Gaussian-rational entries
    like `1`, `-1/2`, `i`, `2/3*i`, `1+2*i`; `#` starts a comment.
    Transitions are rescaled to determinant 1 when a Q(i) rescaling exists.
    """
    from .expr import parse_gaussian

    charts: Dict[str, Tuple[str, str]] = {}
    transitions: Dict[TransitionKey, Matrix2] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "chart":
            if len(fields) != 4:
                raise AtlasFormatError(f"line {lineno}: chart needs an id and two variables")
            cid, zvar, pvar = fields[1:]
            if cid in charts:
                raise AtlasFormatError(f"line {lineno}: duplicate chart {cid!r}")
            charts[cid] = (zvar, pvar)
        elif fields[0] == "transition":
            if len(fields) != 7:
                raise AtlasFormatError(
                    f"line {lineno}: transition needs two charts and four entries"
                )
            src, dst = fields[1], fields[2]
            try:
                a, b, c, d = (parse_gaussian(t) for t in fields[3:])
            except AtlasFormatError:
                raise
            except Exception as exc:
                raise AtlasFormatError(f"line {lineno}: bad matrix entry ({exc})") from exc
            key = (src, dst)
            if key in transitions:
                raise AtlasFormatError(f"line {lineno}: duplicate transition {src}->{dst}")
            matrix: Matrix2 = ((a, b), (c, d))
            det = _det2(matrix)
            if not det.is_zero() and not det.is_one():
                normalized = normalize_unimodular(matrix)
                if normalized is None:
                    raise AtlasFormatError(
                        f"line {lineno}: determinant {det} admits no Q(i) rescaling to 1"
                    )
                matrix = normalized
            transitions[key] = matrix
        else:
            raise AtlasFormatError(f"line {lineno}: unknown directive {fields[0]!r}")
    if not charts:
        raise AtlasFormatError("atlas declares no charts")
    for (src, dst) in transitions:
        if src not in charts or dst not in charts:
            raise AtlasFormatError(f"transition {src}->{dst} references unknown charts")
    return ProjectiveAtlas(charts=charts, transitions=transitions)


def load_atlas(path) -> ProjectiveAtlas:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_atlas(handle.read())
