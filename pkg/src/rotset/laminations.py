"""Finite laminations seeded by rotational polygons, and their pullbacks.

A lamination here is a finite set of polygons (chords and convex polygons
inscribed in the unit circle) whose leaves pairwise do not cross and whose
polygon vertex sets are forward invariant under the d-tupling map.

One pullback step replaces every polygon by a full family of d preimage
polygons.  For an m-gon the d*m preimage points, in circular order, repeat
the image's vertex cycle d times; a preimage family is a partition of those
points into d pairwise non-crossing m-blocks, each containing one preimage
of every image vertex.  Such partitions are exactly the non-crossing
partitions into blocks of m circularly "step-1 mod m" points (blocks may
nest, as they must whenever an invariant polygon is among its own preimage
points).  The family chosen for each polygon is the canonically smallest one
that (a) keeps every already-present polygon whose vertices appear among the
preimage points, and (b) crosses no leaf already committed to the new
lamination.  If no family survives, the step fails loudly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .circle import CircleAngle, as_angle, check_degree
from .rotsets import RotationalSet

__all__ = [
    "PullbackObstruction",
    "Leaf",
    "Polygon",
    "Lamination",
    "polygons_of",
    "lamination_of",
    "crossing_violations",
    "pullback",
]


class PullbackObstruction(RuntimeError):
    """No preimage family satisfies the preservation and crossing rules."""


@dataclass(frozen=True)
class Leaf:
    """An unordered chord of the circle, stored with endpoints sorted."""

    a: CircleAngle
    b: CircleAngle

    def __post_init__(self):
        a, b = sorted((as_angle(self.a), as_angle(self.b)))
        if a == b:
            raise ValueError(f"leaf endpoints must be distinct, got {a} twice")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def crosses(self, other: "Leaf") -> bool:
        """True when the chords cross strictly (shared endpoints do not cross)."""
        if self.a in (other.a, other.b) or self.b in (other.a, other.b):
            return False
        return (self.a < other.a < self.b) != (self.a < other.b < self.b)


@dataclass(frozen=True)
class Polygon:
    """Distinct circle points in circular order; a 2-gon is a single leaf."""

    vertices: tuple[CircleAngle, ...]

    def __post_init__(self):
        verts = tuple(sorted(as_angle(v) for v in self.vertices))
        if len(verts) < 2:
            raise ValueError(f"a polygon needs at least 2 vertices, got {verts}")
        if len(set(verts)) != len(verts):
            raise ValueError(f"polygon vertices must be distinct, got {verts}")
        object.__setattr__(self, "vertices", verts)

    def leaves(self) -> tuple[Leaf, ...]:
        verts = self.vertices
        if len(verts) == 2:
            return (Leaf(verts[0], verts[1]),)
        return tuple(
            Leaf(verts[i], verts[(i + 1) % len(verts)]) for i in range(len(verts))
        )


@dataclass(frozen=True)
class Lamination:
    """A finite, non-crossing, forward-invariant set of polygons."""

    degree: int
    polygons: tuple[Polygon, ...]
    step: int = 0

    def __post_init__(self):
        d = check_degree(self.degree)
        polys = tuple(sorted(set(self.polygons), key=lambda p: p.vertices))
        object.__setattr__(self, "polygons", polys)
        violations = crossing_violations(self)
        if violations:
            a, b = violations[0]
            raise ValueError(f"leaves {a} and {b} cross")
        present = {frozenset(p.vertices) for p in polys}
        for p in polys:
            image = frozenset((v * d) % 1 for v in p.vertices)
            if len(image) > 1 and image not in present:
                raise ValueError(
                    f"not forward invariant: image of {p.vertices} is missing"
                )

    def leaves(self) -> tuple[Leaf, ...]:
        seen: dict[Leaf, None] = {}
        for p in self.polygons:
            for leaf in p.leaves():
                seen.setdefault(leaf)
        return tuple(seen)


def polygons_of(rset: RotationalSet) -> Polygon:
    """The polygon spanned by a rotational set's points in circular order."""
    return Polygon(rset.points)


def lamination_of(rset: RotationalSet) -> Lamination:
    """Seed lamination holding just the rotational set's polygon."""
    return Lamination(rset.degree, (polygons_of(rset),), step=0)


def crossing_violations(lam: Lamination) -> tuple[tuple[Leaf, Leaf], ...]:
    """All strictly crossing leaf pairs; empty for a valid lamination."""
    leaves = lam.leaves() if isinstance(lam, Lamination) else tuple(lam)
    return tuple(
        (u, v) for u, v in itertools.combinations(leaves, 2) if u.crosses(v)
    )


def _block_index_families(
    total: int, m: int
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Partitions of positions 0..total-1 into non-crossing blocks of size m.

    Positions are circularly ordered; consecutive chosen positions within a
    block must skip a multiple of m others (which nest inside), and the same
    holds for the region outside the block.  Anchoring on the first position
    of each region makes the circular case identical to the linear one.
    """

    def fill(region: tuple[int, ...]) -> Iterator[tuple[tuple[int, ...], ...]]:
        if not region:
            yield ()
            return
        n = len(region)

        def members(chosen: list[int]) -> Iterator[list[int]]:
            if len(chosen) == m:
                if (n - chosen[-1] - 1) % m == 0:
                    yield list(chosen)
                return
            pos = chosen[-1] + 1
            while pos < n:
                yield from members(chosen + [pos])
                pos += m

        for picked in members([0]):
            block = tuple(region[j] for j in picked)
            gaps = [
                region[picked[t] + 1 : picked[t + 1]] for t in range(m - 1)
            ]
            gaps.append(region[picked[-1] + 1 :])
            for parts in itertools.product(*(fill(g) for g in gaps)):
                yield (block,) + tuple(itertools.chain.from_iterable(parts))

    yield from fill(tuple(range(total)))


def _polygon_leaf_pairs(vertices: Sequence[CircleAngle]) -> list[tuple]:
    if len(vertices) == 2:
        return [(vertices[0], vertices[1])]
    return [
        tuple(sorted((vertices[i], vertices[(i + 1) % len(vertices)])))
        for i in range(len(vertices))
    ]


def _crosses_any(pair, committed) -> bool:
    a, b = pair
    for c, e in committed:
        if a == c or a == e or b == c or b == e:
            continue
        if (a < c < b) != (a < e < b):
            return True
    return False


def _pull_once(lam: Lamination) -> Lamination:
    d = lam.degree
    old = lam.polygons
    committed: list[tuple] = [
        (leaf.a, leaf.b) for p in old for leaf in p.leaves()
    ]
    new_polys: list[Polygon] = []
    for target in old:
        m = len(target.vertices)
        pre_points = sorted(
            Fraction(v.numerator + j * v.denominator, d * v.denominator)
            for v in target.vertices
            for j in range(d)
        )
        point_set = set(pre_points)
        forced = [
            frozenset(p.vertices)
            for p in old
            if set(p.vertices) <= point_set
        ]
        best = None
        for fam in _block_index_families(d * m, m):
            blocks = tuple(
                tuple(pre_points[j] for j in idxs) for idxs in fam
            )
            if forced:
                block_sets = {frozenset(b) for b in blocks}
                if any(f not in block_sets for f in forced):
                    continue
            leaf_pairs = [
                pair for b in blocks for pair in _polygon_leaf_pairs(b)
            ]
            if any(_crosses_any(pair, committed) for pair in leaf_pairs):
                continue
            key = tuple(sorted(blocks))
            if best is None or key < best[0]:
                best = (key, blocks, leaf_pairs)
        if best is None:
            raise PullbackObstruction(
                f"no non-crossing preimage family of {target.vertices} "
                f"preserves the current lamination"
            )
        _, blocks, leaf_pairs = best
        new_polys.extend(Polygon(b) for b in blocks)
        committed.extend(leaf_pairs)
    return Lamination(d, tuple(new_polys), step=lam.step + 1)


def pullback(lam: Lamination, steps: int) -> Lamination:
    """Replace the polygon set by its full preimage family, `steps` times."""
    if steps < 0:
        raise ValueError(f"steps must be >= 0, got {steps}")
    for _ in range(steps):
        lam = _pull_once(lam)
    return lam
