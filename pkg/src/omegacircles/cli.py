"""Command line: construct, verify, cross-check, render."""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .areal import ArealPoint, TriangleMetric
from .centers import CircleKind
from .errors import GeometryError
from .figures import MNParams, NamedCircle, Pivot, PivotKind, ThroughTwoPoints
from .formulas import cross_check_formulas
from .render import RenderStyle, render_svg
from .scalars import parse_rational
from .serialize import dumps, figure_from_json, figure_to_json

EXIT_OK, EXIT_FAIL, EXIT_CANDIDATE, EXIT_USAGE, EXIT_DATA = 0, 1, 2, 64, 65

PIVOT_NAMES = {
    "omega": PivotKind.OMEGA,
    "omega-prime": PivotKind.OMEGA_PRIME,
    "omega_prime": PivotKind.OMEGA_PRIME,
    "orthocenter": PivotKind.ORTHOCENTER,
    "hagge": PivotKind.ORTHOCENTER,
    "aH": PivotKind.AH,
    "bH": PivotKind.BH,
    "cH": PivotKind.CH,
    "custom": PivotKind.CUSTOM,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _triple(text: str):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 3:
        raise UsageError(f"expected three comma-separated values, got {text!r}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number in {text!r}: {exc}") from exc


def _pair(text: str):
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != 2:
        raise UsageError(f"expected two comma-separated values, got {text!r}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad number in {text!r}: {exc}") from exc


def _metric(args) -> TriangleMetric:
    if args.sides and args.sides_sq:
        raise UsageError("give --sides or --sides-sq, not both")
    if args.sides:
        return TriangleMetric.from_sides(*_triple(args.sides))
    if args.sides_sq:
        return TriangleMetric(*_triple(args.sides_sq))
    raise UsageError("one of --sides or --sides-sq is required")


def _circle_spec(args):
    given = [s for s in (args.mn, args.through, args.named) if s]
    if len(given) != 1:
        raise UsageError("give exactly one of --mn, --through, --named")
    if args.mn:
        return MNParams(*_pair(args.mn))
    if args.through:
        return ThroughTwoPoints(*(ArealPoint(*_triple(t)) for t in args.through))
    try:
        return NamedCircle(CircleKind(args.named))
    except ValueError as exc:
        raise UsageError(f"unknown circle {args.named!r}") from exc


def _write(text: str, path: str | None):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _add_metric_args(p):
    p.add_argument("--sides", help="side lengths a,b,c (rationals)")
    p.add_argument("--sides-sq", help="squared side lengths a2,b2,c2")


def cmd_construct(args) -> int:
    from .construct import construct

    metric = _metric(args)
    kind = PIVOT_NAMES[args.pivot]
    point = None
    if kind is PivotKind.CUSTOM:
        if not args.pivot_point:
            raise UsageError("--pivot custom needs --pivot-point x,y,z")
        point = ArealPoint(*_triple(args.pivot_point))
    elif args.pivot_point:
        raise UsageError("--pivot-point only applies to --pivot custom")
    spec = _circle_spec(args)
    fig = construct(metric, Pivot.of(kind, metric, point), spec)
    _write(dumps(figure_to_json(fig)), args.out)
    if args.svg:
        _write(render_svg(fig, _style(args)), args.svg)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verifier import PropertyId, TrialSpec, fuzz, replay_witness

    if args.replay:
        witness = json.loads(Path(args.replay).read_text(encoding="utf-8"))
        verdict = replay_witness(witness)
        _write(dumps(verdict.to_json()), args.out)
        return EXIT_OK if verdict.status == "pass" else (EXIT_CANDIDATE if verdict.status == "counterexample-candidate" else EXIT_FAIL)
    if args.properties == "all":
        props = list(PropertyId)
    else:
        try:
            props = [PropertyId(p) for p in args.properties.split(",") if p]
        except ValueError as exc:
            raise UsageError(f"{exc}; known: {', '.join(p.value for p in PropertyId)}") from exc
    if args.trials < 0:
        raise UsageError("--trials must be non-negative")
    spec = TrialSpec(seed=args.seed, count=args.trials, corpus=args.corpus, bound=args.bound, workers=args.workers)
    report = fuzz(spec, props)
    _write(dumps(report), args.out)
    return report["exit_code"]


def cmd_cross_check(args) -> int:
    metric = _metric(args)
    m, n = _pair(args.mn)
    entries = cross_check_formulas(metric, m, n)
    _write(dumps([e.to_json() for e in entries]), args.out)
    return EXIT_OK


def _style(args) -> RenderStyle:
    return RenderStyle(width=args.width, height=args.height, aux_circles=not args.no_aux)


def cmd_render(args) -> int:
    text = Path(args.figure).read_text(encoding="utf-8")
    fig = figure_from_json(json.loads(text))
    _write(render_svg(fig, _style(args)), args.out)
    return EXIT_OK


def _add_style_args(p):
    p.add_argument("--width", type=int, default=800)
    p.add_argument("--height", type=int, default=800)
    p.add_argument("--no-aux", action="store_true", help="omit auxiliary circles")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="omegacircles", description="Circles through a pivot point and the triangles they carry.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("construct", help="build a figure and write it as JSON")
    _add_metric_args(p)
    p.add_argument("--pivot", choices=sorted(PIVOT_NAMES), default="omega")
    p.add_argument("--pivot-point", help="areal x,y,z for --pivot custom")
    p.add_argument("--mn", help="circle through Omega by parameters m,n")
    p.add_argument("--through", nargs=2, metavar="X,Y,Z", help="two more points on the circle")
    p.add_argument("--named", help="named circle: " + ", ".join(k.value for k in CircleKind))
    p.add_argument("--out", help="JSON output path (default stdout)")
    p.add_argument("--svg", help="also write an SVG drawing here")
    _add_style_args(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run the seeded property fuzzer")
    p.add_argument("--properties", default="all", help="all, or a comma list of property ids")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--corpus", choices=["heronian", "rational"], default="heronian")
    p.add_argument("--bound", type=int, default=1000, help="numerator/denominator bound for m, n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--replay", help="rerun a witness JSON instead of fuzzing")
    p.add_argument("--out", help="report path (default stdout)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("cross-check", help="compare closed-form coordinates with the construction")
    _add_metric_args(p)
    p.add_argument("--mn", required=True, help="m,n")
    p.add_argument("--out")
    p.set_defaults(func=cmd_cross_check)

    p = sub.add_parser("render", help="draw a figure JSON as SVG")
    p.add_argument("figure", help="figure JSON from construct")
    p.add_argument("--out", help="SVG path (default stdout)")
    _add_style_args(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"omegacircles: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GeometryError, ZeroDivisionError, ValueError, KeyError, OSError, RuntimeError) as exc:
        print(f"omegacircles: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
