"""Inner-group orbit analysis: connectivity, rack profiles, degree.

The inner group of a rack is generated by its left translations.  Because
every translation has finite order, its inverse is a positive power of it,
so orbit computations close under the generators alone.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .core import ClassFlags, RackTable, is_braided, is_crossed_set, is_quandle
from .errors import RackError
from .perm import CycleProfile, compose, cycle_lengths, order, pattern


class NotIndecomposable(RackError):
    """Raised by operations that are only defined on indecomposable racks."""


class ProfileConstancyError(RackError):
    """Internal consistency failure: translation patterns differ.

    On an indecomposable rack all translations are conjugate, so a
    mismatch indicates a bug or a decomposable input slipping past the
    connectivity check.
    """


@dataclass(frozen=True)
class OrbitPartition:
    """Orbits of the carrier under the inner group, sorted by minimum."""

    orbits: tuple[frozenset[int], ...]


@lru_cache(maxsize=256)
def orbit_partition(r: RackTable) -> OrbitPartition:
    """Partition the carrier into inner-group orbits.

    Forward closure under all translations; neighbours of a point y are
    exactly the entries of column y.
    """
    cols = tuple(map(frozenset, zip(*r.rows)))
    unseen = set(range(r.n))
    orbits = []
    while unseen:
        start = min(unseen)
        comp = {start}
        frontier = [start]
        while frontier:
            fresh = cols[frontier.pop()] - comp
            comp |= fresh
            frontier.extend(fresh)
        orbits.append(frozenset(comp))
        unseen -= comp
    return OrbitPartition(tuple(orbits))


def is_indecomposable(r: RackTable) -> bool:
    """True if the inner group acts transitively on the carrier."""
    return len(orbit_partition(r).orbits) == 1


def per_point_patterns(r: RackTable) -> tuple[tuple[int, CycleProfile], ...]:
    """Cycle pattern of every translation, in carrier order."""
    return tuple((x, pattern(r.rows[x])) for x in range(r.n))


@lru_cache(maxsize=256)
def rack_profile(r: RackTable) -> CycleProfile:
    """The common cycle pattern of all translations.

    Only defined for indecomposable racks; conjugacy makes the pattern
    independent of the chosen point, but this is re-verified across the
    whole carrier rather than trusted, and a mismatch raises
    :class:`ProfileConstancyError`.
    """
    if not is_indecomposable(r):
        raise NotIndecomposable(
            "rack is decomposable, so it has no single profile; "
            "use per_point_patterns for the pattern of every translation"
        )
    reference = sorted(cycle_lengths(r.rows[0]))
    for x in range(1, r.n):
        if sorted(cycle_lengths(r.rows[x])) != reference:
            raise ProfileConstancyError(
                f"translation patterns differ between points 0 and {x}"
            )
    return CycleProfile.from_cycle_lengths(reference)


def degree(r: RackTable) -> int:
    """Order of any translation of an indecomposable rack."""
    if not is_indecomposable(r):
        raise NotIndecomposable("degree is only defined for indecomposable racks")
    return order(r.rows[0])


def hayashi_holds_for(r: RackTable) -> bool:
    """True if every non-trivial profile length divides the largest one."""
    lengths = rack_profile(r).moving_lengths()
    if not lengths:
        return True
    largest = lengths[-1]
    return all(largest % l == 0 for l in lengths)


class _Exceeded:
    """Singleton marker: the inner-group closure passed its cap."""

    def __repr__(self) -> str:
        return "Exceeded"

    def __bool__(self) -> bool:
        return False


EXCEEDED = _Exceeded()


def inner_group_order(r: RackTable, cap: int = 1_000_000):
    """Size of the group generated by the translations, or EXCEEDED.

    Diagnostic only: closes the set of distinct permutations under
    composition with the generators, aborting once more than ``cap``
    elements have been found.
    """
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    gens = tuple(set(r.rows))
    known = set(gens)
    frontier = list(known)
    while frontier:
        nxt = []
        for f in frontier:
            for g in gens:
                h = compose(f, g)
                if h not in known:
                    known.add(h)
                    if len(known) > cap:
                        return EXCEEDED
                    nxt.append(h)
        frontier = nxt
    return len(known)


def classify(r: RackTable) -> ClassFlags:
    """Evaluate every classification predicate on one table."""
    return ClassFlags(
        is_quandle=is_quandle(r),
        is_crossed_set=is_crossed_set(r),
        is_braided=is_braided(r),
        is_indecomposable=is_indecomposable(r),
        degree=math.lcm(*(order(row) for row in r.rows)),
    )
