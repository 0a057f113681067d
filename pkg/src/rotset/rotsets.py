"""Rotational sets: validation, gap structure, placement reconstruction,
and exhaustive enumeration.

A rotational set is k interleaved rotational orbits sharing one rotation
number p/q.  Its q*k points fall into q groups of k consecutive points; the
whole configuration is pinned down by where the d-2 "free" preimages of 0
sit among the q*k+1 gaps (angle 0 and the principal preimage account for the
other two).  Gap labels run 0..q*k: label g names the gap just above the
g-th smallest point, label 0 the gap between angle 0 and the smallest point.

The digit of the t-th point (1-based, spatially) equals the number of
non-zero preimages of 0 strictly below it, which is

    |{free labels < t}| + [principal label < t],     principal label = (q-p)*k.

Reading those digits from an orbit's smallest point while jumping p*k spatial
slots per step yields the orbit's itinerary, which determines it exactly.
That is what set_from_placement implements; enumerate_placements walks every
admissible multiset of free labels exactly once.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .circle import CircleAngle, Itinerary, angle_of
from .counting import max_intra_preimages
from .orbits import (
    RotationalOrbit,
    enumerate_rotational_orbits,
    make_rotation,
    rotational_orbit_of,
)

__all__ = [
    "DegreeMismatch",
    "RotationMismatch",
    "NotRotationalSet",
    "ReconstructionInconsistent",
    "InvalidPlacement",
    "Group",
    "RotationalSet",
    "GapPlacement",
    "GapClassification",
    "validate_set",
    "classify_gaps",
    "placement_of",
    "set_from_placement",
    "enumerate_placements",
    "enumerate_sets",
    "sets_containing",
]


class DegreeMismatch(ValueError):
    """Orbits of different degrees cannot form one rotational set."""


class RotationMismatch(ValueError):
    """Orbits with different rotation numbers cannot form one rotational set."""


class NotRotationalSet(ValueError):
    """The merged points violate one of the rotational-set conditions."""


class ReconstructionInconsistent(RuntimeError):
    """A gap placement failed to reconstruct into a valid rotational set."""


class InvalidPlacement(ValueError):
    """A label multiset that cannot describe any rotational set."""


@dataclass(frozen=True)
class Group:
    """The i-th points spatially of each orbit (1-based group index)."""

    index: int
    members: tuple[CircleAngle, ...]


@dataclass(frozen=True)
class RotationalSet:
    degree: int
    rotation: Fraction
    orbit_count: int
    points: tuple[CircleAngle, ...]
    orbits: tuple[RotationalOrbit, ...]

    @property
    def q(self) -> int:
        return self.rotation.denominator

    @property
    def groups(self) -> tuple[Group, ...]:
        k = self.orbit_count
        return tuple(
            Group(i + 1, self.points[i * k : (i + 1) * k]) for i in range(self.q)
        )


class GapClassification(NamedTuple):
    intra: tuple[int, ...]
    inter: tuple[int, ...]
    principal: int


@dataclass(frozen=True)
class GapPlacement:
    """Multiset of gap labels for the d-2 free preimages of 0.

    Valid placements put at least one label in every non-zero residue class
    mod k (counting distinct labels), which is exactly what keeps the k
    orbits of the reconstructed set distinct.
    """

    degree: int
    rotation: Fraction
    orbit_count: int
    labels: tuple[int, ...]

    def __post_init__(self):
        d, k = self.degree, self.orbit_count
        if d < 2:
            raise InvalidPlacement(f"degree must be >= 2, got {d}")
        if k < 1:
            raise InvalidPlacement(f"orbit count must be >= 1, got {k}")
        rot = make_rotation(self.rotation.numerator, self.rotation.denominator)
        if rot != self.rotation:
            raise InvalidPlacement(f"rotation {self.rotation} is not canonical")
        q = rot.denominator
        labels = tuple(sorted(int(g) for g in self.labels))
        object.__setattr__(self, "labels", labels)
        if len(labels) != d - 2:
            raise InvalidPlacement(
                f"need exactly {d - 2} labels for degree {d}, got {len(labels)}"
            )
        if labels and not 0 <= labels[0] <= labels[-1] <= q * k:
            raise InvalidPlacement(f"labels {labels} outside 0..{q * k}")
        classes = {g % k for g in labels if g % k != 0}
        if classes != set(range(1, k)):
            missing = sorted(set(range(1, k)) - classes)
            raise InvalidPlacement(
                f"labels {labels} leave residue classes {missing} (mod {k}) empty"
            )


def validate_set(orbits: Sequence[RotationalOrbit]) -> RotationalSet:
    """Merge orbits and check the rotational-set conditions literally.

    (1) the map permutes the merged points, (2) any k cyclically consecutive
    points lie in k different orbits, (3) the point at spatial index i maps
    to spatial index i + p*k (mod q*k).  The first violating 1-based index is
    reported.
    """
    orbits = tuple(orbits)
    if not orbits:
        raise ValueError("a rotational set needs at least one orbit")
    d = orbits[0].degree
    if any(o.degree != d for o in orbits):
        degrees = sorted({o.degree for o in orbits})
        raise DegreeMismatch(f"orbits mix degrees {degrees}")
    rot = orbits[0].rotation
    if any(o.rotation != rot for o in orbits):
        rotations = sorted({o.rotation for o in orbits})
        raise RotationMismatch(f"orbits mix rotation numbers {rotations}")
    k = len(orbits)
    p, q = rot.numerator, rot.denominator
    n = q * k

    owner: dict[CircleAngle, int] = {}
    for oi, orbit in enumerate(orbits):
        for x in orbit.points:
            if x in owner:
                raise NotRotationalSet(f"point {x} appears in two orbits")
            owner[x] = oi
    points = tuple(sorted(owner))
    index = {x: i for i, x in enumerate(points)}

    for i, x in enumerate(points):
        y = (x * d) % 1
        j = index.get(y)
        if j is None:
            raise NotRotationalSet(f"image of point {i + 1} ({x}) leaves the set")
        if j != (i + p * k) % n:
            raise NotRotationalSet(
                f"point {i + 1} maps to spatial slot {j + 1}, "
                f"expected {(i + p * k) % n + 1}"
            )

    ids = [owner[x] for x in points]
    for i in range(n):
        window = {ids[(i + t) % n] for t in range(k)}
        if len(window) != k:
            raise NotRotationalSet(
                f"the {k} consecutive points starting at index {i + 1} "
                f"fall in only {len(window)} orbits"
            )

    ordered = tuple(sorted(orbits, key=lambda o: o.points[0]))
    return RotationalSet(d, rot, k, points, ordered)


def classify_gaps(rset: RotationalSet) -> GapClassification:
    """Intra-group labels, inter-group labels, and the principal gap label."""
    q, k, p = rset.q, rset.orbit_count, rset.rotation.numerator
    intra = tuple(g for g in range(1, q * k) if g % k != 0)
    inter = tuple(range(0, q * k + 1, k))
    return GapClassification(intra, inter, (q - p) * k)


def _gap_label(points: Sequence[CircleAngle], y: CircleAngle) -> int:
    """Label of the gap containing y: the number of set points below it."""
    lo, hi = 0, len(points)
    while lo < hi:
        mid = (lo + hi) // 2
        if points[mid] < y:
            lo = mid + 1
        else:
            hi = mid
    return lo


def placement_of(rset: RotationalSet) -> GapPlacement:
    """Reverse-engineer the free-preimage placement of a rotational set.

    All non-zero preimages of 0 are located in gaps; one occurrence of the
    principal gap label is removed (the principal preimage is not free).
    """
    d = rset.degree
    labels = sorted(
        _gap_label(rset.points, Fraction(j, d)) for j in range(1, d)
    )
    principal = classify_gaps(rset).principal
    try:
        labels.remove(principal)
    except ValueError:  # pragma: no cover - guaranteed by set validity
        raise AssertionError(
            f"no preimage of 0 in principal gap {principal} of {rset.points}"
        ) from None
    return GapPlacement(d, rset.rotation, rset.orbit_count, tuple(labels))


def set_from_placement(placement: GapPlacement) -> RotationalSet:
    """Reconstruct the unique rotational set described by a gap placement."""
    d, k = placement.degree, placement.orbit_count
    rot = placement.rotation
    p, q = rot.numerator, rot.denominator
    n = q * k
    principal = (q - p) * k

    below = [0] * (n + 1)  # below[t] = free labels strictly under point t (1-based)
    for g in placement.labels:
        for t in range(g + 1, n + 1):
            below[t] += 1
    digits = [below[t] + (1 if principal < t else 0) for t in range(n + 1)]

    orbits = []
    for m in range(1, k + 1):
        word = tuple(
            digits[1 + ((m - 1) + j * p * k) % n] for j in range(q)
        )
        try:
            itin = Itinerary(d, (), word)
            x = angle_of(itin, d)
            orbit = rotational_orbit_of(x, d)
        except ValueError as exc:
            raise ReconstructionInconsistent(
                f"placement {placement.labels} digit word {word} does not "
                f"name a rotational orbit: {exc}"
            ) from exc
        if orbit.rotation != rot:
            raise ReconstructionInconsistent(
                f"placement {placement.labels} rebuilt an orbit with rotation "
                f"{orbit.rotation}, expected {rot}"
            )
        orbits.append(orbit)
    try:
        return validate_set(orbits)
    except ValueError as exc:
        raise ReconstructionInconsistent(
            f"placement {placement.labels} rebuilt an invalid set: {exc}"
        ) from exc


def enumerate_placements(
    d: int, rot: Fraction, k: int
) -> tuple[GapPlacement, ...]:
    """Every admissible gap placement for (d, p/q, k), each exactly once.

    For each i in k-1..min(q(k-1), d-2): choose an i-subset of intra labels
    covering all non-zero classes mod k, then a multiset of d-2-i extra
    labels over (chosen intra labels + all inter labels).  The distinct intra
    labels of the final multiset recover the chosen subset, so no two choices
    collide.
    """
    rot = make_rotation(rot.numerator, rot.denominator)
    if k < 1:
        raise ValueError(f"orbit count must be >= 1, got {k}")
    q = rot.denominator
    intra = [g for g in range(1, q * k) if g % k != 0]
    inter = list(range(0, q * k + 1, k))
    wanted = set(range(1, k))
    out = []
    for i in range(k - 1, max_intra_preimages(d, q, k) + 1):
        for chosen in itertools.combinations(intra, i):
            if {g % k for g in chosen} != wanted:
                continue
            pool = sorted(set(chosen) | set(inter))
            for extra in itertools.combinations_with_replacement(pool, d - 2 - i):
                out.append(
                    GapPlacement(d, rot, k, tuple(sorted(chosen + extra)))
                )
    return tuple(out)


def enumerate_sets(d: int, rot: Fraction, k: int) -> tuple[RotationalSet, ...]:
    """All rotational sets for (d, p/q, k), reconstructed from placements and
    sorted by smallest point."""
    sets = [set_from_placement(pl) for pl in enumerate_placements(d, rot, k)]
    return tuple(sorted(sets, key=lambda s: s.points))


def sets_containing(
    orbit: RotationalOrbit, maximal_only: bool = False
) -> tuple[RotationalSet, ...]:
    """All rotational sets of 2..d-1 orbits containing the given orbit.

    Found by validating unions of the orbit with other rotational orbits of
    the same degree and rotation number, grown one orbit at a time (every
    sub-union of a rotational set is itself rotational, so growth is
    exhaustive).  With maximal_only, sets strictly contained in another
    returned set are dropped.
    """
    d = orbit.degree
    others = [
        o
        for o in enumerate_rotational_orbits(d, orbit.rotation)
        if o.points != orbit.points
    ]
    found: list[RotationalSet] = []
    frontier: list[tuple[int, ...]] = [()]
    for _ in range(2, d):
        grown: list[tuple[int, ...]] = []
        for combo in frontier:
            start = combo[-1] + 1 if combo else 0
            for j in range(start, len(others)):
                members = (orbit, *(others[i] for i in combo), others[j])
                try:
                    rset = validate_set(members)
                except NotRotationalSet:
                    continue
                grown.append(combo + (j,))
                found.append(rset)
        frontier = grown
    if maximal_only:
        point_sets = [set(s.points) for s in found]
        found = [
            s
            for i, s in enumerate(found)
            if not any(
                i != j and point_sets[i] < point_sets[j]
                for j in range(len(found))
            )
        ]
    return tuple(sorted(found, key=lambda s: (s.orbit_count, s.points)))
