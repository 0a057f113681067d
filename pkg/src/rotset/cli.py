"""Command-line interface.

Subcommands: count, orbits, sets, containing, verify, pullback, render.
Data goes to stdout (or the file named by --out), diagnostics to stderr.
Exit status: 0 on success, 1 on a red verify report or a pullback
obstruction, 2 on unusable flags or inputs.
"""

from __future__ import annotations

import argparse
import json
import sys

from .circle import InvalidAngle, InvalidDigit, InvalidItinerary
from .counting import count_sets
from .emit import (
    ParseError,
    RenderOptions,
    SchemaError,
    from_json,
    orbit_dict,
    set_dict,
    to_json,
    to_svg,
)
from .laminations import Lamination, PullbackObstruction, polygons_of, pullback
from .orbits import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    NotPeriodic,
    enumerate_rotational_orbits,
    format_rotation,
    orbit_from_itinerary,
    parse_rotation,
)
from .oracle import cross_check
from .rotsets import enumerate_sets, sets_containing, validate_set


def _rotation(text: str):
    try:
        return parse_rotation(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _degree(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree must be an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"degree must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rotset",
        description=(
            "Count, enumerate, and render rotational orbits and sets of the "
            "angle d-tupling map."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="closed-form count of rotational sets")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--rotation", type=_rotation, required=True, metavar="P/Q")
    p.add_argument("--orbits", type=int, required=True, metavar="K")

    p = sub.add_parser("orbits", help="enumerate rotational orbits")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--rotation", type=_rotation, required=True, metavar="P/Q")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("sets", help="enumerate rotational sets")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--rotation", type=_rotation, required=True, metavar="P/Q")
    p.add_argument("--orbits", type=int, required=True, metavar="K")
    p.add_argument("--limit", type=int, default=None, metavar="N")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("containing", help="rotational sets containing an orbit")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--itinerary", required=True, metavar="W")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("verify", help="cross-check formula against brute force")
    p.add_argument("--degree-max", type=_degree, required=True, metavar="D")
    p.add_argument("--period-max", type=int, required=True, metavar="Q")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--json", metavar="FILE", help="also write the report as JSON")
    p.add_argument("--table", metavar="FILE", help="also write a TSV table")
    p.add_argument("--figure", metavar="FILE", help="also write a summary chart")

    p = sub.add_parser("pullback", help="grow a pullback lamination")
    p.add_argument("--degree", type=_degree, required=True)
    p.add_argument("--itinerary", required=True, metavar="W")
    p.add_argument(
        "--with",
        dest="partners",
        action="append",
        default=[],
        metavar="W2",
        help="additional orbit itineraries merged into the seed set",
    )
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True, metavar="FILE")

    p = sub.add_parser("render", help="render a lamination JSON file to SVG")
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.add_argument("--out", required=True, metavar="FILE")
    p.add_argument("--geodesic", action="store_true")
    p.add_argument("--labels", action="store_true")
    p.add_argument("--size", type=int, default=800)
    p.add_argument("--precision", type=int, default=6)

    return parser


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _orbit_line(orbit) -> str:
    points = ",".join(f"{x.numerator}/{x.denominator}" for x in orbit.points)
    return f"{orbit.itinerary}\t{format_rotation(orbit.rotation)}\t{points}"


def _set_line(rset) -> str:
    names = "+".join(str(o.itinerary) for o in rset.orbits)
    points = ",".join(f"{x.numerator}/{x.denominator}" for x in rset.points)
    return f"{names}\t{format_rotation(rset.rotation)}\t{points}"


def cmd_count(args) -> int:
    if args.orbits < 1:
        return _fail(f"--orbits must be >= 1, got {args.orbits}")
    print(count_sets(args.degree, args.rotation.denominator, args.orbits))
    return 0


def cmd_orbits(args) -> int:
    orbits = enumerate_rotational_orbits(args.degree, args.rotation)
    if args.json:
        print(json.dumps([orbit_dict(o) for o in orbits], indent=2))
    else:
        for orbit in orbits:
            print(_orbit_line(orbit))
    return 0


def cmd_sets(args) -> int:
    if args.orbits < 1:
        return _fail(f"--orbits must be >= 1, got {args.orbits}")
    sets = enumerate_sets(args.degree, args.rotation, args.orbits)
    if args.limit is not None:
        sets = sets[: args.limit]
    if args.json:
        print(json.dumps([set_dict(s) for s in sets], indent=2))
    else:
        for rset in sets:
            print(_set_line(rset))
    return 0


def cmd_containing(args) -> int:
    orbit = orbit_from_itinerary(args.itinerary, args.degree)
    sets = sets_containing(orbit, maximal_only=args.maximal)
    if args.json:
        print(json.dumps([set_dict(s) for s in sets], indent=2))
    else:
        for rset in sets:
            print(_set_line(rset))
    return 0


def cmd_verify(args) -> int:
    if args.period_max < 1:
        return _fail(f"--period-max must be >= 1, got {args.period_max}")
    report = cross_check(args.degree_max, args.period_max, budget=args.budget)
    print(report.table())
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(to_json(report))
    if args.table:
        with open(args.table, "w", encoding="utf-8") as fh:
            fh.write(report.tsv())
    if args.figure:
        from .figures import save_report_figure

        save_report_figure(report, args.figure)
    return 0 if report.green else 1


def cmd_pullback(args) -> int:
    if args.steps < 0:
        return _fail(f"--steps must be >= 0, got {args.steps}")
    orbits = [orbit_from_itinerary(args.itinerary, args.degree)]
    for text in args.partners:
        orbits.append(orbit_from_itinerary(text, args.degree))
    rset = validate_set(orbits)
    seed = Lamination(args.degree, (polygons_of(rset),), step=0)
    lam = pullback(seed, args.steps)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_json(lam))
    print(
        f"wrote {len(lam.polygons)} polygons after {args.steps} steps to {args.out}",
        file=sys.stderr,
    )
    return 0


def cmd_render(args) -> int:
    try:
        opts = RenderOptions(
            size=args.size,
            geodesic=args.geodesic,
            labels=args.labels,
            precision=args.precision,
        )
    except ValueError as exc:
        return _fail(str(exc))
    with open(args.infile, "r", encoding="utf-8") as fh:
        value = from_json(fh.read())
    if not isinstance(value, Lamination):
        return _fail(f"{args.infile} does not contain a lamination")
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(to_svg(value, opts))
    return 0


_HANDLERS = {
    "count": cmd_count,
    "orbits": cmd_orbits,
    "sets": cmd_sets,
    "containing": cmd_containing,
    "verify": cmd_verify,
    "pullback": cmd_pullback,
    "render": cmd_render,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except PullbackObstruction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (
        InvalidAngle,
        InvalidDigit,
        InvalidItinerary,
        NotPeriodic,
        ParseError,
        SchemaError,
        ValueError,
        OSError,
    ) as exc:
        return _fail(str(exc))


def entry() -> None:  # console_scripts hook
    sys.exit(main())


if __name__ == "__main__":
    entry()
