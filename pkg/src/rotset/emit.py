"""JSON persistence and SVG rendering of orbits, sets, laminations, reports.

Angles serialize as exact "num/den" strings, so every round trip is
lossless.  SVG output is plain SVG 1.1 text built deterministically: the
same value and options always produce byte-identical documents.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .circle import format_angle, parse_angle, parse_itinerary
from .laminations import Lamination, Polygon
from .oracle import CheckRecord, OracleReport
from .orbits import RotationalOrbit, format_rotation, parse_rotation
from .rotsets import RotationalSet, placement_of, validate_set

__all__ = [
    "ParseError",
    "SchemaError",
    "RenderOptions",
    "to_json",
    "from_json",
    "orbit_dict",
    "set_dict",
    "lamination_dict",
    "report_dict",
    "to_svg",
]


class ParseError(ValueError):
    """Malformed JSON text; the message carries the location."""


class SchemaError(ValueError):
    """Well-formed JSON that does not describe a known value."""


def orbit_dict(orbit: RotationalOrbit) -> dict:
    return {
        "degree": orbit.degree,
        "rotation": format_rotation(orbit.rotation),
        "itinerary": str(orbit.itinerary),
        "points": [format_angle(x) for x in orbit.points],
    }


def set_dict(rset: RotationalSet) -> dict:
    k = rset.orbit_count
    return {
        "degree": rset.degree,
        "rotation": format_rotation(rset.rotation),
        "k": k,
        "orbits": [orbit_dict(o) for o in rset.orbits],
        "groups": [
            list(range(i * k + 1, (i + 1) * k + 1)) for i in range(rset.q)
        ],
        "placement": list(placement_of(rset).labels),
    }


def lamination_dict(lam: Lamination) -> dict:
    return {
        "degree": lam.degree,
        "step": lam.step,
        "polygons": [[format_angle(v) for v in p.vertices] for p in lam.polygons],
    }


def report_dict(report: OracleReport) -> dict:
    return {
        "degree_max": report.degree_max,
        "period_max": report.period_max,
        "green": report.green,
        "records": [
            {
                "degree": r.degree,
                "p": r.p,
                "q": r.q,
                "k": r.k,
                "formula": r.formula,
                "brute_force": r.brute_force,
                "enumerated": r.enumerated,
                "sets_equal": r.sets_equal,
                "match": r.match,
            }
            for r in report.records
        ],
        "totals": {
            "records": len(report.records),
            "mismatches": len(report.mismatches),
        },
    }


def to_json(value, indent: int = 2) -> str:
    """Serialize an orbit, set, lamination, or oracle report."""
    if isinstance(value, RotationalOrbit):
        data = orbit_dict(value)
    elif isinstance(value, RotationalSet):
        data = set_dict(value)
    elif isinstance(value, Lamination):
        data = lamination_dict(value)
    elif isinstance(value, OracleReport):
        data = report_dict(value)
    else:
        raise SchemaError(f"cannot serialize values of type {type(value).__name__}")
    return json.dumps(data, indent=indent) + "\n"


def from_json(text: str):
    """Rebuild the value serialized by to_json, re-validating everything."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from exc
    if not isinstance(data, dict):
        raise SchemaError(f"expected a JSON object, got {type(data).__name__}")
    try:
        if "polygons" in data:
            return _lamination_from_dict(data)
        if "records" in data:
            return _report_from_dict(data)
        if "orbits" in data:
            return _set_from_dict(data)
        if "itinerary" in data:
            return _orbit_from_dict(data)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise SchemaError(f"invalid record: {exc}") from exc
    raise SchemaError(f"unrecognized record with keys {sorted(data)}")


def _orbit_from_dict(data: dict) -> RotationalOrbit:
    degree = int(data["degree"])
    rotation = parse_rotation(data["rotation"])
    points = tuple(parse_angle(t) for t in data["points"])
    itinerary = parse_itinerary(data["itinerary"], degree)
    return RotationalOrbit(degree, points, rotation, itinerary)


def _set_from_dict(data: dict) -> RotationalSet:
    orbits = tuple(_orbit_from_dict(o) for o in data["orbits"])
    rset = validate_set(orbits)
    serialized = set_dict(rset)
    for key in ("degree", "rotation", "k", "groups", "placement"):
        if data[key] != serialized[key]:
            raise SchemaError(
                f"set field {key!r} is {data[key]!r}, "
                f"inconsistent with its orbits ({serialized[key]!r})"
            )
    return rset


def _lamination_from_dict(data: dict) -> Lamination:
    polygons = tuple(
        Polygon(tuple(parse_angle(t) for t in verts))
        for verts in data["polygons"]
    )
    return Lamination(int(data["degree"]), polygons, step=int(data["step"]))


def _report_from_dict(data: dict) -> OracleReport:
    records = tuple(
        CheckRecord(
            int(r["degree"]),
            int(r["p"]),
            int(r["q"]),
            int(r["k"]),
            int(r["formula"]),
            int(r["brute_force"]),
            int(r["enumerated"]),
            bool(r["sets_equal"]),
        )
        for r in data["records"]
    )
    return OracleReport(int(data["degree_max"]), int(data["period_max"]), records)


@dataclass(frozen=True)
class RenderOptions:
    size: int = 800
    geodesic: bool = False
    labels: bool = False
    precision: int = 6

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError(f"size must be positive, got {self.size}")
        if not 1 <= self.precision <= 12:
            raise ValueError(f"precision must be in 1..12, got {self.precision}")


def _fmt(value: float, precision: int) -> str:
    rounded = round(value, precision)
    if rounded == 0:
        rounded = 0.0  # avoid "-0.000000"
    return f"{rounded:.{precision}f}"


def to_svg(lam: Lamination, opts: RenderOptions = RenderOptions()) -> str:
    """Render a lamination: unit circle, one path per leaf, vertex dots.

    Angle t sits at (cos 2*pi*t, sin 2*pi*t) with the y axis flipped for
    screen coordinates, so angles increase counterclockwise on screen.
    Geodesic mode draws the arc of the circle orthogonal to the unit circle
    through both endpoints, falling back to the straight diameter for
    antipodal endpoints.
    """
    size = opts.size
    cx = cy = size / 2
    radius = size * 0.45
    prec = opts.precision

    def screen(t: Fraction) -> tuple[float, float]:
        angle = 2 * math.pi * (t.numerator / t.denominator)
        return cx + radius * math.cos(angle), cy - radius * math.sin(angle)

    def point(t: Fraction) -> str:
        x, y = screen(t)
        return f"{_fmt(x, prec)} {_fmt(y, prec)}"

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{size}" height="{size}" viewBox="0 0 {size} {size}">',
        f'  <circle cx="{_fmt(cx, prec)}" cy="{_fmt(cy, prec)}" '
        f'r="{_fmt(radius, prec)}" fill="none" stroke="#888888" stroke-width="1"/>',
    ]

    for leaf in lam.leaves():
        lines.append(f'  <path d="{_leaf_path(leaf, opts, cx, cy, radius)}" '
                     f'fill="none" stroke="#1b3f8f" stroke-width="1.5"/>')

    vertices: dict[Fraction, None] = {}
    for p in lam.polygons:
        for v in p.vertices:
            vertices.setdefault(v)
    for v in sorted(vertices):
        x, y = screen(v)
        lines.append(
            f'  <circle cx="{_fmt(x, prec)}" cy="{_fmt(y, prec)}" '
            f'r="3" fill="#b22222"/>'
        )
        if opts.labels:
            lx = cx + radius * 1.06 * math.cos(2 * math.pi * float(v))
            ly = cy - radius * 1.06 * math.sin(2 * math.pi * float(v))
            lines.append(
                f'  <text x="{_fmt(lx, prec)}" y="{_fmt(ly, prec)}" '
                f'font-size="{max(8, size // 60)}" text-anchor="middle">'
                f"{format_angle(v)}</text>"
            )

    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def _leaf_path(leaf, opts: RenderOptions, cx, cy, radius) -> str:
    prec = opts.precision
    a, b = leaf.a, leaf.b

    def screen(t: Fraction) -> tuple[float, float]:
        angle = 2 * math.pi * (t.numerator / t.denominator)
        return cx + radius * math.cos(angle), cy - radius * math.sin(angle)

    x1, y1 = screen(a)
    x2, y2 = screen(b)
    start = f"{_fmt(x1, prec)} {_fmt(y1, prec)}"
    end = f"{_fmt(x2, prec)} {_fmt(y2, prec)}"
    antipodal = (b - a) == Fraction(1, 2)
    if not opts.geodesic or antipodal:
        return f"M {start} L {end}"

    # Circle orthogonal to the unit circle through both endpoints: its
    # center c solves c.u = 1 and c.v = 1 on the unit-coordinate frame.
    ua, va = 2 * math.pi * float(a), 2 * math.pi * float(b)
    ux, uy = math.cos(ua), math.sin(ua)
    vx, vy = math.cos(va), math.sin(va)
    det = ux * vy - uy * vx
    gx = (vy - uy) / det
    gy = (ux - vx) / det
    arc_r = math.sqrt(gx * gx + gy * gy - 1) * radius
    # Screen-frame center and sweep direction (minor arc bows inward).
    sx_c, sy_c = cx + radius * gx, cy - radius * gy
    cross = (x1 - sx_c) * (y2 - sy_c) - (y1 - sy_c) * (x2 - sx_c)
    sweep = 1 if cross > 0 else 0
    r_text = _fmt(arc_r, prec)
    return f"M {start} A {r_text} {r_text} 0 0 {sweep} {end}"
