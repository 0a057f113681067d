"""Closed-form counts of rotational sets, in arbitrary-precision arithmetic.

The count for degree d, rotation denominator q and k orbits per set is a sum
over i (the number of preimages of 0 placed in intra-group gaps) of

    C(d+q-2, d-2-i) * (number of i-subsets of intra-gap labels that touch
                       every non-zero residue class mod k)

where the second factor is evaluated by inclusion-exclusion over the missed
classes.  Everything is exact integer arithmetic; the rotation numerator p
never enters.
"""

from __future__ import annotations

import math

__all__ = ["binomial", "max_intra_preimages", "count_coverings", "count_sets"]


def binomial(n: int, r: int) -> int:
    """C(n, r) with the convention that out-of-range r yields 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got {n}")
    if r < 0 or r > n:
        return 0
    return math.comb(n, r)


def _check_query(d: int, q: int, k: int) -> None:
    if d < 2:
        raise ValueError(f"degree must be >= 2, got {d}")
    if q < 1:
        raise ValueError(f"period must be >= 1, got {q}")
    if k < 1:
        raise ValueError(f"orbit count must be >= 1, got {k}")


def max_intra_preimages(d: int, q: int, k: int) -> int:
    """Most preimages of 0 that can sit in intra-group gaps: min(q(k-1), d-2)."""
    _check_query(d, q, k)
    return min(q * (k - 1), d - 2)


def count_coverings(q: int, k: int, i: int) -> int:
    """Number of i-subsets of the q(k-1) intra-gap labels covering every
    non-zero residue class mod k, by inclusion-exclusion over missed classes."""
    if q < 1 or k < 1 or i < 0:
        raise ValueError(f"invalid covering query q={q}, k={k}, i={i}")
    return sum(
        (-1) ** j * binomial(k - 1, j) * binomial(q * (k - 1 - j), i)
        for j in range(k)
    )


def count_sets(d: int, q: int, k: int) -> int:
    """Number of rotational sets of k orbits with any fixed rotation p/q
    (in lowest terms) under the degree-d map.  Zero whenever k > d-1."""
    _check_query(d, q, k)
    upper = max_intra_preimages(d, q, k)
    return sum(
        binomial(d + q - 2, d - 2 - i) * count_coverings(q, k, i)
        for i in range(k - 1, upper + 1)
    )
