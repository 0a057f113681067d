"""Periodic orbits of the d-tupling map and rotation-number machinery.

A periodic orbit is *rotational* when one application of the map advances
every point the same number p of slots in the circular (spatial) order; p/q
is then its rotation number, with q the exact period.  Fixed points are
admitted with rotation number 0/1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional

from .circle import (
    CircleAngle,
    Itinerary,
    as_angle,
    check_degree,
    dtupling,
    itinerary_of,
    parse_itinerary,
)

__all__ = [
    "DEFAULT_BUDGET",
    "BudgetExceeded",
    "NotPeriodic",
    "NoPrincipal",
    "OrbitRecord",
    "RotationalOrbit",
    "make_rotation",
    "parse_rotation",
    "format_rotation",
    "orbit_of",
    "rotation_number",
    "rotational_orbit_of",
    "orbit_from_itinerary",
    "canonical_itinerary",
    "principal_preimage",
    "enumerate_rotational_orbits",
]

# Exhaustive sweeps touch all d**q points of period q; refuse anything bigger
# unless the caller raises the budget explicitly.
DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Raised when an exhaustive sweep would exceed its enumeration budget."""


class NotPeriodic(ValueError):
    """Raised when an operation needs a single periodic orbit and got something else."""


class NoPrincipal(ValueError):
    """Raised for fixed points, whose principal-preimage gap degenerates."""


def make_rotation(p: int, q: int) -> Fraction:
    """Canonical rotation number: p/q reduced into [0, 1)."""
    if not isinstance(q, int) or q < 1:
        raise ValueError(f"rotation denominator must be a positive integer, got {q!r}")
    if not isinstance(p, int):
        raise ValueError(f"rotation numerator must be an integer, got {p!r}")
    return Fraction(p, q) % 1


def parse_rotation(text: str) -> Fraction:
    """Parse a strict "p/q" rotation: lowest terms, 0 <= p < q."""
    parts = text.strip().split("/")
    if len(parts) != 2:
        raise ValueError(f"expected rotation of the form 'p/q', got {text!r}")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected rotation of the form 'p/q', got {text!r}") from None
    if q < 1:
        raise ValueError(f"rotation denominator must be positive in {text!r}")
    if p < 0 or p >= q and (p, q) != (0, 1):
        raise ValueError(f"rotation {text!r} must satisfy 0 <= p < q")
    if math.gcd(p, q) != 1:
        raise ValueError(f"rotation {text!r} is not in lowest terms")
    return Fraction(p, q)


def format_rotation(rot: Fraction) -> str:
    return f"{rot.numerator}/{rot.denominator}"


@dataclass(frozen=True)
class OrbitRecord:
    """Forward orbit of a point: temporal points, exact period, preperiod length."""

    points: tuple[CircleAngle, ...]
    period: int
    preperiod: int


def orbit_of(x: CircleAngle, d: int) -> OrbitRecord:
    """Iterate the d-tupling map until repetition."""
    check_degree(d)
    x = as_angle(x)
    seen: dict[Fraction, int] = {}
    seq: list[Fraction] = []
    y = x
    while y not in seen:
        seen[y] = len(seq)
        seq.append(y)
        y = (y * d) % 1
    start = seen[y]
    return OrbitRecord(tuple(seq), len(seq) - start, start)


def rotation_number(points: Iterable[CircleAngle], d: int) -> Optional[Fraction]:
    """Rotation number p/q of a single periodic orbit, or None if not rotational.

    Raises NotPeriodic unless the points are exactly one periodic orbit of the
    degree-d map (closed under the map, visited in full from any point).
    """
    check_degree(d)
    pts = tuple(sorted({as_angle(x) for x in points}))
    if not pts:
        raise NotPeriodic("empty point set")
    q = len(pts)
    index = {x: i for i, x in enumerate(pts)}
    images = []
    for x in pts:
        y = dtupling(x, d)
        if y not in index:
            raise NotPeriodic(f"point {x} leaves the set: image {y} is not a member")
        images.append(index[y])
    # Single orbit: walking the map from any point must visit everything.
    visited = 1
    i = images[0]
    while i != 0:
        i = images[i]
        visited += 1
        if visited > q:  # pragma: no cover - images is a permutation
            raise NotPeriodic("map walk does not close up")
    if visited != q:
        raise NotPeriodic(f"points form more than one orbit ({visited} of {q} reachable)")
    p = images[0]
    if all(images[i] == (i + p) % q for i in range(q)):
        return Fraction(p, q)
    return None


@dataclass(frozen=True)
class RotationalOrbit:
    """One rotational periodic orbit: sorted points, rotation p/q, itinerary.

    Construction re-checks every invariant, so any reachable instance is a
    genuine rotational orbit of its degree.
    """

    degree: int
    points: tuple[CircleAngle, ...]
    rotation: Fraction
    itinerary: Itinerary

    def __post_init__(self):
        d = check_degree(self.degree)
        pts = tuple(as_angle(x) for x in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("orbit must contain at least one point")
        if any(a >= b for a, b in zip(pts, pts[1:])):
            raise ValueError("orbit points must be strictly increasing")
        q = len(pts)
        p = self.rotation.numerator
        if self.rotation.denominator != q or not 0 <= self.rotation < 1:
            raise ValueError(
                f"rotation {self.rotation} does not match an orbit of {q} points"
            )
        for i, x in enumerate(pts):
            y = dtupling(x, d)
            if y != pts[(i + p) % q]:
                raise ValueError(
                    f"point {x} maps to {y}, not the point {p} slots ahead"
                )
        if self.itinerary != itinerary_of(pts[0], d):
            raise ValueError(
                f"itinerary {self.itinerary} does not match smallest point {pts[0]}"
            )

    @property
    def period(self) -> int:
        return len(self.points)


def rotational_orbit_of(x: CircleAngle, d: int) -> RotationalOrbit:
    """Wrap the periodic orbit of x as a RotationalOrbit; error if not rotational."""
    rec = orbit_of(x, d)
    if rec.preperiod:
        raise NotPeriodic(
            f"{as_angle(x)} is preperiodic (enters its cycle after {rec.preperiod} steps)"
        )
    pts = tuple(sorted(rec.points))
    rot = rotation_number(pts, d)
    if rot is None:
        raise ValueError(f"orbit of {as_angle(x)} under degree {d} is not rotational")
    return RotationalOrbit(d, pts, rot, itinerary_of(pts[0], d))


def orbit_from_itinerary(w: Itinerary | str, d: int) -> RotationalOrbit:
    """Rotational orbit named by a purely periodic itinerary such as "(012)"."""
    if isinstance(w, str):
        w = parse_itinerary(w, d)
    if w.preperiod:
        raise ValueError(f"itinerary {w} is preperiodic and names no periodic orbit")
    from .circle import angle_of

    return rotational_orbit_of(angle_of(w, d), d)


def canonical_itinerary(orbit: RotationalOrbit) -> Itinerary:
    """Itinerary of the orbit's spatially smallest point."""
    return itinerary_of(orbit.points[0], orbit.degree)


def principal_preimage(orbit: RotationalOrbit) -> CircleAngle:
    """The distinguished preimage of 0 separating the orbit's wrap-around images.

    It lies strictly between the (q-p)-th and (q-p+1)-th points spatially; when
    several preimages of 0 fall in that gap the smallest is returned.
    """
    q = orbit.period
    if q < 2:
        raise NoPrincipal("fixed points have no principal preimage gap")
    d = orbit.degree
    p = orbit.rotation.numerator
    lo = orbit.points[q - p - 1]
    hi = orbit.points[q - p]
    for j in range(1, d):
        y = Fraction(j, d)
        if lo < y < hi:
            return y
    raise AssertionError(
        f"no preimage of 0 in ({lo}, {hi}); rotational-orbit invariant violated"
    )  # pragma: no cover


def _cycles_of_period(d: int, q: int, budget: int) -> Iterator[list[int]]:
    """Sorted numerator cycles of exact period q over denominator d**q - 1."""
    if budget is not None and d**q > budget:
        raise BudgetExceeded(
            f"period-{q} sweep for degree {d} needs {d**q} points; budget is {budget}"
        )
    modulus = d**q - 1
    seen = bytearray(modulus)
    for start in range(modulus):
        if seen[start]:
            continue
        cycle = []
        m = start
        while not seen[m]:
            seen[m] = 1
            cycle.append(m)
            m = m * d % modulus
        if len(cycle) == q:
            yield sorted(cycle)


def _int_rotation(sorted_ms: list[int], d: int, modulus: int) -> Optional[int]:
    """Spatial advance p if the integer cycle is rotational, else None."""
    q = len(sorted_ms)
    index = {m: i for i, m in enumerate(sorted_ms)}
    p = index[sorted_ms[0] * d % modulus]
    for i, m in enumerate(sorted_ms):
        if index[m * d % modulus] != (i + p) % q:
            return None
    return p


def enumerate_rotational_orbits(
    d: int, rot: Fraction, budget: int = DEFAULT_BUDGET
) -> tuple[RotationalOrbit, ...]:
    """All rotational orbits of degree d with the given rotation number.

    Found by exhaustive sweep over the d**q - 1 candidate numerators, so this
    doubles as an independent oracle for single-orbit counts.  Orbits are
    returned sorted by smallest point.
    """
    check_degree(d)
    rot = make_rotation(rot.numerator, rot.denominator)
    q = rot.denominator
    modulus = d**q - 1
    out = []
    for ms in _cycles_of_period(d, q, budget):
        p = _int_rotation(ms, d, modulus)
        if p != rot.numerator:
            continue
        pts = tuple(Fraction(m, modulus) for m in ms)
        out.append(RotationalOrbit(d, pts, rot, itinerary_of(pts[0], d)))
    return tuple(out)
