"""Command-line front end.

    composita composita SPEC -n N [--format plain|csv|json]
    composita solve-fe SPEC -n N
    composita central forward SPEC -n N [--show-a] [--show-triangle]
    composita central invert SPEC -n N [--check] [--method series|lemma]
    composita compare {forward,invert,solve-fe,series,composita} SPEC FIXTURE [-n COUNT]
    composita builtins list

Every command accepts ``--out PATH`` (written atomically) and prints exact
rationals only.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .catalog import BUILTINS, BuiltinError
from .central import central_forward, central_inverse, solve_functional_equation
from .engine import CompositaError, composita_of
from .series import SeriesError
from .seqfile import BFileError, FIXTURES, atomic_write, cmd_compare, fixture_path
from .textio import (
    SpecParseError,
    format_rational,
    format_values,
    parse_spec,
    render_series,
    render_triangle,
    triangle_to_json,
)

DEFAULT_ORDER = 10
TRIANGLE_FORMATS = ("plain", "csv", "json")
SERIES_FORMATS = ("plain", "csv", "json", "bfile")


class CliError(Exception):
    pass


def _spec_and_order(args):
    spec = parse_spec(args.spec)
    order = args.order if args.order is not None else spec.order
    if order is None:
        order = DEFAULT_ORDER
    if order < 1:
        raise CliError("--order must be >= 1")
    return spec, order


def cmd_composita(args) -> str:
    spec, n = _spec_and_order(args)
    if args.format not in TRIANGLE_FORMATS:
        raise CliError(f"format {args.format!r} is not available for triangles")
    tri = composita_of(spec.triangle_series(n), n)
    return render_triangle(tri, args.format)


def cmd_solve_fe(args) -> str:
    spec, n = _spec_and_order(args)
    a = solve_functional_equation(spec.series(n - 1), n)
    if args.format == "plain":
        return render_series(list(a.coeffs), "plain")
    # a(0) = 0 is not part of the sequence
    return render_series(list(a.coeffs[1:]), args.format, offset=1)


def cmd_central_forward(args) -> str:
    spec, n = _spec_and_order(args)
    # enough terms that every displayed triangle row is exact, not just the centre
    res = central_forward(spec.series(2 * n - 2), n)
    f = list(res.central_gf.coeffs)
    extras = args.show_a or args.show_triangle
    if args.format == "json":
        doc = {"F": [format_rational(v) for v in f]}
        if args.show_a:
            doc["A"] = [format_rational(v) for v in res.a_series.coeffs]
        if args.show_triangle:
            doc["triangle"] = triangle_to_json(res.triangle)
        return json.dumps(doc) + "\n"
    if args.format != "plain" or not extras:
        return render_series(f, args.format)
    out = "F: " + format_values(f) + "\n"
    if args.show_a:
        out += "A: " + format_values(res.a_series.coeffs) + "\n"
    if args.show_triangle:
        out += "\n" + render_triangle(res.triangle, "plain")
    return out


def cmd_central_invert(args) -> str:
    spec, n = _spec_and_order(args)
    res = central_inverse(spec.series(n - 1), n, method=args.method, check=args.check)
    h = list(res.h_series.coeffs)
    if args.format == "json":
        return json.dumps(
            {"H": [format_rational(v) for v in h], "triangle": triangle_to_json(res.triangle)}
        ) + "\n"
    if args.format == "csv":
        return render_triangle(res.triangle, "csv")
    if args.format == "bfile":
        return render_series(h, "bfile")
    return "H: " + format_values(h, ", ") + "\n\n" + render_triangle(res.triangle, "plain")


def _computed_sequence(source: str, spec, n: int) -> list:
    if source == "forward":
        return list(central_forward(spec.series(2 * n - 2), n).central_gf.coeffs)
    if source == "invert":
        return list(central_inverse(spec.series(n - 1), n).h_series.coeffs)
    if source == "solve-fe":
        return list(solve_functional_equation(spec.series(n - 1), n).coeffs[1:])
    if source == "series":
        return list(spec.series(n - 1).coeffs)
    if source == "composita":
        tri = composita_of(spec.triangle_series(n), n)
        return [v for _, _, v in tri]
    raise CliError(f"unknown source {source!r}")


def cmd_compare_cli(args) -> tuple[str, int]:
    spec = parse_spec(args.spec)
    path = fixture_path(args.fixture) if args.fixture in FIXTURES else Path(args.fixture)
    count = args.order if args.order is not None else (spec.order or DEFAULT_ORDER)
    # a triangle of `count` rows holds more than `count` entries
    n = count if args.source != "composita" else max(1, _rows_for_entries(count))
    report = cmd_compare(_computed_sequence(args.source, spec, n), path, count)
    return str(report) + "\n", 0 if report.matched else 1


def _rows_for_entries(count: int) -> int:
    rows = 0
    while rows * (rows + 1) // 2 < count:
        rows += 1
    return rows


def cmd_builtins(args) -> str:
    lines = []
    for name in sorted(BUILTINS):
        b = BUILTINS[name]
        sig = name + ("(" + ",".join("ab"[: b.arity]) + ")" if b.arity else "")
        lines.append(f"{sig:<16} kind={b.kind}  {b.description}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--order", type=int, default=None,
                        help=f"number of rows / terms (default {DEFAULT_ORDER})")
    common.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(
        prog="composita",
        description="Exact compositae and central-coefficient transforms of generating functions.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("composita", parents=[common], help="triangle of a series")
    c.add_argument("spec")
    c.add_argument("--format", choices=TRIANGLE_FORMATS, default="plain")
    c.set_defaults(func=cmd_composita)

    s = sub.add_parser("solve-fe", parents=[common], help="solve A = x H(A)")
    s.add_argument("spec")
    s.add_argument("--format", choices=SERIES_FORMATS, default="plain")
    s.set_defaults(func=cmd_solve_fe)

    central = sub.add_parser("central", help="central-coefficient transforms")
    csub = central.add_subparsers(dest="direction", required=True)
    fwd = csub.add_parser("forward", parents=[common], help="H -> generating function of central coefficients")
    fwd.add_argument("spec")
    fwd.add_argument("--format", choices=SERIES_FORMATS, default="plain")
    fwd.add_argument("--show-a", action="store_true", help="also print A")
    fwd.add_argument("--show-triangle", action="store_true", help="also print the triangle")
    fwd.set_defaults(func=cmd_central_forward)
    inv = csub.add_parser("invert", parents=[common], help="central coefficients -> unique H and triangle")
    inv.add_argument("spec")
    inv.add_argument("--format", choices=SERIES_FORMATS, default="plain")
    inv.add_argument("--method", choices=("series", "lemma"), default="series")
    inv.add_argument("--check", action="store_true", help="verify the round trip through the forward transform")
    inv.set_defaults(func=cmd_central_invert)

    cmp_ = sub.add_parser("compare", parents=[common], help="compare against a b-file")
    cmp_.add_argument("source", choices=("forward", "invert", "solve-fe", "series", "composita"))
    cmp_.add_argument("spec")
    cmp_.add_argument("fixture", help=f"b-file path or one of {', '.join(FIXTURES)}")
    cmp_.set_defaults(func=cmd_compare_cli)

    b = sub.add_parser("builtins", help="builtin series")
    b.add_argument("action", choices=("list",))
    b.add_argument("--out", metavar="PATH")
    b.add_argument("-v", "--verbose", action="store_true")
    b.set_defaults(func=cmd_builtins)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    try:
        result = args.func(args)
    except (SpecParseError, SeriesError, CompositaError, BuiltinError, BFileError,
            CliError, ValueError, OSError) as exc:
        print(f"composita: error: {exc}", file=sys.stderr)
        return 1
    text, code = result if isinstance(result, tuple) else (result, 0)
    if args.out:
        atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
