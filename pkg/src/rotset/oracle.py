"""Brute-force enumeration used to certify the closed-form count.

Everything here works by definition-checking rather than reconstruction:
periodic orbits come from sweeping every point of period q, and rotational
sets from validating unions of rotational orbits.  cross_check compares
three independent routes to the same number - the formula, this brute-force
search, and the placement enumeration - over a whole parameter box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .circle import CircleAngle, check_degree, itinerary_of
from .counting import count_sets
from .orbits import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    RotationalOrbit,
    _cycles_of_period,
    _int_rotation,
)
from .rotsets import NotRotationalSet, RotationalSet, enumerate_sets, validate_set

__all__ = [
    "BudgetExceeded",
    "PeriodicOrbit",
    "CheckRecord",
    "OracleReport",
    "brute_force_orbits",
    "brute_force_sets",
    "cross_check",
]


@dataclass(frozen=True)
class PeriodicOrbit:
    """A period-q orbit with its rotation number, or None when not rotational."""

    points: tuple[CircleAngle, ...]
    rotation: Optional[Fraction]


def brute_force_orbits(
    d: int, q: int, budget: int = DEFAULT_BUDGET
) -> tuple[PeriodicOrbit, ...]:
    """All orbits of exact period q under the degree-d map, tagged rotational-or-not."""
    check_degree(d)
    if q < 1:
        raise ValueError(f"period must be >= 1, got {q}")
    modulus = d**q - 1
    out = []
    for ms in _cycles_of_period(d, q, budget):
        p = _int_rotation(ms, d, modulus)
        rotation = None if p is None else Fraction(p, q)
        out.append(PeriodicOrbit(tuple(Fraction(m, modulus) for m in ms), rotation))
    return tuple(out)


def brute_force_sets(
    d: int, rot: Fraction, k: int, budget: int = DEFAULT_BUDGET
) -> tuple[RotationalSet, ...]:
    """All k-orbit rotational sets with rotation rot, by union validation.

    Unions are grown one orbit at a time; since every sub-union of a
    rotational set is itself a rotational set, growing only from valid
    unions loses nothing.
    """
    check_degree(d)
    if k < 1:
        raise ValueError(f"orbit count must be >= 1, got {k}")
    base = _rotational_orbits(d, rot, budget)
    results: list[RotationalSet] = []
    frontier: list[tuple[int, ...]] = [()]
    for size in range(1, k + 1):
        grown: list[tuple[int, ...]] = []
        for combo in frontier:
            start = combo[-1] + 1 if combo else 0
            for j in range(start, len(base)):
                members = tuple(base[i] for i in combo) + (base[j],)
                try:
                    rset = validate_set(members)
                except NotRotationalSet:
                    continue
                grown.append(combo + (j,))
                if size == k:
                    results.append(rset)
        frontier = grown
    return tuple(sorted(results, key=lambda s: s.points))


def _rotational_orbits(d, rot, budget) -> tuple[RotationalOrbit, ...]:
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


@dataclass(frozen=True)
class CheckRecord:
    """One comparison of the three counting routes at fixed (d, p, q, k)."""

    degree: int
    p: int
    q: int
    k: int
    formula: int
    brute_force: int
    enumerated: int
    sets_equal: bool

    @property
    def match(self) -> bool:
        return self.formula == self.brute_force == self.enumerated


@dataclass(frozen=True)
class OracleReport:
    """Sweep result; green means every record agrees on counts and on the
    actual sets."""

    degree_max: int
    period_max: int
    records: tuple[CheckRecord, ...]

    @property
    def green(self) -> bool:
        return all(r.match and r.sets_equal for r in self.records)

    @property
    def mismatches(self) -> tuple[CheckRecord, ...]:
        return tuple(r for r in self.records if not (r.match and r.sets_equal))

    def table(self) -> str:
        header = f"{'d':>2} {'p/q':>5} {'k':>2} {'formula':>9} {'brute':>9} {'enum':>9}  ok"
        lines = [header, "-" * len(header)]
        for r in self.records:
            ok = "yes" if r.match and r.sets_equal else "NO"
            lines.append(
                f"{r.degree:>2} {f'{r.p}/{r.q}':>5} {r.k:>2} "
                f"{r.formula:>9} {r.brute_force:>9} {r.enumerated:>9}  {ok}"
            )
        verdict = "GREEN" if self.green else "RED"
        lines.append(
            f"{len(self.records)} records, {len(self.mismatches)} mismatches -> {verdict}"
        )
        return "\n".join(lines)

    def tsv(self) -> str:
        lines = ["d\tp\tq\tk\tformula\tbrute_force\tenumerated\tmatch"]
        for r in self.records:
            ok = "yes" if r.match and r.sets_equal else "no"
            lines.append(
                f"{r.degree}\t{r.p}\t{r.q}\t{r.k}\t{r.formula}\t"
                f"{r.brute_force}\t{r.enumerated}\t{ok}"
            )
        return "\n".join(lines) + "\n"


def cross_check(
    d_max: int, q_max: int, budget: int = DEFAULT_BUDGET
) -> OracleReport:
    """Compare formula, brute force, and placement enumeration over the box
    d <= d_max, q <= q_max, all p coprime to q, all k <= d-1."""
    if d_max < 2 or q_max < 1:
        raise ValueError(f"need d_max >= 2 and q_max >= 1, got {d_max}, {q_max}")
    records = []
    for d in range(2, d_max + 1):
        for q in range(1, q_max + 1):
            ps = (0,) if q == 1 else tuple(
                p for p in range(1, q) if math.gcd(p, q) == 1
            )
            for p in ps:
                rot = Fraction(p, q)
                for k in range(1, d):
                    formula = count_sets(d, q, k)
                    brute = brute_force_sets(d, rot, k, budget)
                    enum = enumerate_sets(d, rot, k)
                    same = {s.points for s in brute} == {s.points for s in enum}
                    records.append(
                        CheckRecord(
                            d, p, q, k, formula, len(brute), len(enum), same
                        )
                    )
    return OracleReport(d_max, q_max, tuple(records))
