"""Command-line surface: star products, brackets, transport, validation.

Exit codes: 0 success, 1 verification failure, 2 parse/lowering error,
3 domain error, 4 usage error.  The default truncation order comes from
--order, then the MOYALQUOT_ORDER environment variable, then 6.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence, Tuple

from .atlas import (
    KChartFunction,
    ProjectiveAtlas,
    atlas_validate,
    load_atlas,
    standard_cp1_atlas,
    star_on_K,
    transport,
)
from .errors import (
    DomainError,
    MoyalQuotError,
    ParseFailure,
    UsageFailure,
)
from .expr import (
    parse_expr,
    lower_expr,
    lower_rational,
    parse_gaussian,
    rational_document,
    series_document,
)
from .moyal import MoyalContext, SymplecticSpace, moyal_star, poisson_bracket
from .quot import ProductContext, SymSeries, quot_cell_star, QuotCellPoint, quot_point_validate
from .suites import SuiteConfig, run_suite

EXIT_OK = 0
EXIT_VERIFICATION = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_USAGE = 4

DEFAULT_ORDER = 6
DEFAULT_SAMPLES = 100


class _Parser(argparse.ArgumentParser):
    """argparse that reports usage problems through the error taxonomy."""

    def error(self, message):
        raise UsageFailure(message)


def _default_order() -> int:
    raw = os.environ.get("MOYALQUOT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise UsageFailure(f"MOYALQUOT_ORDER must be an integer, got {raw!r}")
    if value < 0:
        raise UsageFailure("MOYALQUOT_ORDER must be nonnegative")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="moyalquot", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, space=True):
        if space:
            p.add_argument(
                "--space",
                choices=("flat2", "flatN", "kchart", "product"),
                default="flat2",
            )
        p.add_argument("--order", type=int, default=None)
        p.add_argument("--d", type=int, default=2)
        p.add_argument("--r", type=int, default=2)
        p.add_argument("--output", choices=("text", "structured"), default="text")

    star = sub.add_parser("star", help="star product of two expressions")
    add_common(star)
    star.add_argument("left")
    star.add_argument("right")

    poisson = sub.add_parser("poisson", help="Poisson bracket of two expressions")
    add_common(poisson)
    poisson.add_argument("left")
    poisson.add_argument("right")

    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("suite")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    verify.add_argument("--order", type=int, default=None)
    verify.add_argument("--d", type=int, default=2)
    verify.add_argument("--r", type=int, default=2)
    verify.add_argument("--atlas", default=None)
    verify.add_argument("--output", choices=("text", "structured"), default="text")

    tr = sub.add_parser("transport", help="move a chart function to another chart")
    tr.add_argument("expression")
    tr.add_argument("--atlas", default=None)
    tr.add_argument("--from", dest="source", required=True)
    tr.add_argument("--to", dest="target", required=True)
    tr.add_argument("--order", type=int, default=None)
    tr.add_argument("--output", choices=("text", "structured"), default="text")

    va = sub.add_parser("validate-atlas", help="validate an atlas file")
    va.add_argument("atlas")
    va.add_argument("--output", choices=("text", "structured"), default="text")

    vp = sub.add_parser("validate-point", help="validate open-cell point coordinates")
    vp.add_argument("--d", type=int, default=None)
    vp.add_argument("--r", type=int, default=None)
    vp.add_argument("--support", required=True, help="comma-separated entries")
    vp.add_argument("--covectors", required=True, help="comma-separated entries")
    vp.add_argument("--flat", default="", help="comma-separated pairs, flattened")
    vp.add_argument("--output", choices=("text", "structured"), default="text")

    return parser


def _resolve_order(value: Optional[int]) -> int:
    if value is None:
        return _default_order()
    if value < 0:
        raise UsageFailure("--order must be nonnegative")
    return value


def _load_atlas_arg(path: Optional[str]) -> ProjectiveAtlas:
    if path is None:
        return standard_cp1_atlas()
    try:
        return load_atlas(path)
    except OSError as exc:
        raise UsageFailure(f"cannot read atlas file: {exc}")


def _emit(args, text: str, document: dict) -> None:
    if args.output == "structured":
        print(json.dumps(document, sort_keys=True, separators=(",", ":")))
    else:
        print(text)


def _cmd_star(args) -> int:
    order = _resolve_order(args.order)
    if args.space == "flat2":
        variables: Tuple[str, ...] = ("x", "y")
        space = SymplecticSpace.standard(variables)
        compute = lambda f, g: moyal_star(MoyalContext(space, order), f, g)
    elif args.space == "flatN":
        if args.d < 1:
            raise UsageFailure("--d must be at least 1 for flatN")
        variables = tuple(
            name for k in range(1, args.d + 1) for name in (f"x{k}", f"y{k}")
        )
        space = SymplecticSpace.standard(variables)
        compute = lambda f, g: moyal_star(MoyalContext(space, order), f, g)
    elif args.space == "kchart":
        variables = ("z", "p")
        compute = lambda f, g: star_on_K(
            order, KChartFunction("A", f), KChartFunction("A", g)
        ).value
    else:
        ctx = ProductContext(d=args.d, r=args.r, order=order)
        variables = ctx.vars
        compute = lambda f, g: quot_cell_star(ctx, SymSeries(f), SymSeries(g)).value

    left = lower_expr(parse_expr(args.left, variables), variables, order)
    right = lower_expr(parse_expr(args.right, variables), variables, order)
    result = compute(left, right)
    _emit(args, str(result), series_document(result, args.space, order))
    return EXIT_OK


def _cmd_poisson(args) -> int:
    if args.space == "flat2":
        variables: Tuple[str, ...] = ("x", "y")
        space = SymplecticSpace.standard(variables)
    elif args.space == "flatN":
        variables = tuple(
            name for k in range(1, args.d + 1) for name in (f"x{k}", f"y{k}")
        )
        space = SymplecticSpace.standard(variables)
    elif args.space == "kchart":
        variables = ("z", "p")
        space = SymplecticSpace.block([("z", "p", -1)])
    else:
        ctx = ProductContext(d=args.d, r=args.r, order=0)
        variables = ctx.vars
        space = ctx.block_space()
    left = lower_rational(parse_expr(args.left, variables, allow_h=False), variables)
    right = lower_rational(parse_expr(args.right, variables, allow_h=False), variables)
    result = poisson_bracket(MoyalContext(space, 0), left, right)
    _emit(args, str(result), rational_document(result, args.space))
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        samples=args.samples,
        order=_resolve_order(args.order),
        d=args.d,
        r=args.r,
        atlas=_load_atlas_arg(args.atlas) if args.atlas is not None else None,
    )
    report = run_suite(args.suite, cfg)
    _emit(args, report.render_text(), report.to_document())
    return EXIT_OK if report.ok else EXIT_VERIFICATION


def _cmd_transport(args) -> int:
    order = _resolve_order(args.order)
    atlas = _load_atlas_arg(args.atlas)
    source_vars = atlas.chart_vars(args.source)
    series = lower_expr(parse_expr(args.expression, source_vars), source_vars, order)
    moved = transport(atlas, KChartFunction(args.source, series), args.target)
    _emit(
        args,
        str(moved.value),
        series_document(moved.value, f"chart:{moved.chart}", order),
    )
    return EXIT_OK


def _cmd_validate_atlas(args) -> int:
    atlas = _load_atlas_arg(args.atlas)
    report = atlas_validate(atlas)
    document = {"valid": report.valid, "issues": list(report.issues)}
    _emit(args, report.render_text(), document)
    return EXIT_OK if report.valid else EXIT_DOMAIN


def _parse_entries(text: str, what: str):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(parse_gaussian(piece) for piece in text.split(","))
    except MoyalQuotError:
        raise
    except Exception as exc:
        raise ParseFailure(f"bad {what} entry: {exc}")


def _cmd_validate_point(args) -> int:
    support = _parse_entries(args.support, "support")
    covectors = _parse_entries(args.covectors, "covector")
    flat_values = _parse_entries(args.flat, "flat")
    if len(flat_values) % 2:
        raise UsageFailure("--flat needs an even number of entries (u, v pairs)")
    flat = tuple(
        (flat_values[2 * k], flat_values[2 * k + 1])
        for k in range(len(flat_values) // 2)
    )
    if args.d is not None and len(support) != args.d:
        raise UsageFailure(f"--d {args.d} does not match {len(support)} support entries")
    if args.d is not None and args.r is not None:
        expected = args.d * (args.r - 1)
        if len(flat) != expected:
            raise UsageFailure(
                f"--d {args.d} --r {args.r} needs {expected} flat pairs, got {len(flat)}"
            )
    point = QuotCellPoint(support, covectors, flat)
    report = quot_point_validate(point)
    document = {"valid": report.valid, "issues": list(report.issues)}
    _emit(args, report.render_text(), document)
    return EXIT_OK if report.valid else EXIT_DOMAIN


_COMMANDS = {
    "star": _cmd_star,
    "poisson": _cmd_poisson,
    "verify": _cmd_verify,
    "transport": _cmd_transport,
    "validate-atlas": _cmd_validate_atlas,
    "validate-point": _cmd_validate_point,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except UsageFailure as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseFailure as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
