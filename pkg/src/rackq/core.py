"""Finite rack tables: axiom validation, classification, subracks.

A finite rack on {0, ..., n-1} is stored as an n-by-n table whose row x is
the image array of the left translation by x, i.e. ``rows[x][y]`` is the
result of applying x to y.  The two axioms are

* R1: every row is a permutation of the carrier, and
* R2: the operation is left self-distributive.

Tables are immutable after construction and every function here is pure,
so values can be shared freely across threads.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import RackError
from .perm import Perm, is_permutation, power


class TableValidationError(RackError):
    """An axiom failed; carries the first witness in row-major scan order."""


class OutOfRangeEntry(TableValidationError):
    def __init__(self, x: int, y: int, value: int, n: int):
        self.x, self.y, self.value = x, y, value
        super().__init__(f"entry at row {x}, column {y} is {value!r}, outside 0..{n - 1}")


class R1Violation(TableValidationError):
    def __init__(self, row: int):
        self.row = row
        super().__init__(f"row {row} is not a permutation of the carrier")


class R2Violation(TableValidationError):
    def __init__(self, x: int, y: int, z: int):
        self.x, self.y, self.z = x, y, z
        super().__init__(f"self-distributivity fails at triple ({x}, {y}, {z})")


@dataclass(frozen=True)
class RackTable:
    """An n-by-n operation table; the single source of truth for a rack.

    Construct untrusted tables through :func:`validate`.  The constructor
    itself performs no axiom checks, so that constructors whose defining
    formulas guarantee the axioms can skip the cubic re-validation.
    """

    n: int
    rows: tuple[tuple[int, ...], ...]

    def __hash__(self):
        # Hashing an n^2 table is linear in its size; memoized because
        # cached analyses hash the same table repeatedly.
        h = self.__dict__.get("_hash")
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h


@dataclass(frozen=True)
class ClassFlags:
    """Classification summary of one table.

    ``degree`` is the common order of the left translations when the rack
    is indecomposable; for decomposable tables it is the lcm of all their
    orders.
    """

    is_quandle: bool
    is_crossed_set: bool
    is_braided: bool
    is_indecomposable: bool
    degree: int


def validate(n: int, raw_table) -> RackTable:
    """Check both rack axioms and wrap the table.

    Scans in row-major order and raises on the first violation found:
    :class:`OutOfRangeEntry`, then :class:`R1Violation` for the first
    non-bijective row, then :class:`R2Violation` with the first failing
    triple.  Error witnesses are therefore deterministic.
    """
    if n < 1:
        raise ValueError(f"carrier size must be positive, got {n}")
    rows = tuple(tuple(row) for row in raw_table)
    if len(rows) != n or any(len(row) != n for row in rows):
        raise ValueError(f"expected an {n}x{n} table")
    for x, row in enumerate(rows):
        for y, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise OutOfRangeEntry(x, y, v, n)
    for x, row in enumerate(rows):
        if not is_permutation(row):
            raise R1Violation(x)
    for x in range(n):
        rx = rows[x]
        for y in range(n):
            ry = rows[y]
            rv = rows[rx[y]]
            for z in range(n):
                if rx[ry[z]] != rv[rx[z]]:
                    raise R2Violation(x, y, z)
    return RackTable(n, rows)


def inner_map(r: RackTable, x: int) -> Perm:
    """The left translation by x as a permutation (row x of the table)."""
    if not 0 <= x < r.n:
        raise IndexError(f"point {x} outside 0..{r.n - 1}")
    return r.rows[x]


def is_quandle(r: RackTable) -> bool:
    """True if every point is fixed by its own translation."""
    return all(r.rows[x][x] == x for x in range(r.n))


def is_crossed_set(r: RackTable) -> bool:
    """True for quandles where fixing is symmetric.

    Whenever y leaves x fixed, x must leave y fixed as well.
    """
    if not is_quandle(r):
        return False
    rows = r.rows
    for x in range(r.n):
        for y in range(r.n):
            if rows[y][x] == x and rows[x][y] != y:
                return False
    return True


def is_braided(r: RackTable) -> bool:
    """True if every pair satisfies one of the two braiding equations.

    For all x, y: either x fixes y, or applying x to the result of y
    acting on x gives back y.
    """
    rows = r.rows
    for x in range(r.n):
        rx = rows[x]
        for y in range(r.n):
            if rx[y] != y and rx[rows[y][x]] != y:
                return False
    return True


def subrack_closure(r: RackTable, seed) -> frozenset[int]:
    """Smallest superset of ``seed`` closed under the rack operation.

    Worklist saturation over pairs.  Closure under the binary operation
    alone suffices for finite racks: a finite subset closed under the
    operation is closed under each translation, and a bijection restricted
    to a finite invariant set is bijective on it, so the subset is itself
    a rack.
    """
    members = set(seed)
    if not members:
        raise ValueError("seed must be non-empty")
    if any(not 0 <= p < r.n for p in members):
        raise ValueError(f"seed points must lie in 0..{r.n - 1}")
    rows = r.rows
    queue = sorted(members)
    while queue:
        z = queue.pop()
        for a in tuple(members):
            for w in (rows[a][z], rows[z][a]):
                if w not in members:
                    members.add(w)
                    queue.append(w)
    return frozenset(members)


def is_subrack(r: RackTable, points) -> bool:
    """True if ``points`` is non-empty and closed under the operation."""
    pts = frozenset(points)
    if not pts:
        return False
    rows = r.rows
    return all(rows[a][b] in pts for a in pts for b in pts)


def fixed_set(r: RackTable, x: int, t: int) -> frozenset[int]:
    """Points fixed by the t-th power of the translation by x."""
    if t < 1:
        raise ValueError(f"power must be >= 1, got {t}")
    pw = power(inner_map(r, x), t)
    return frozenset(y for y in range(r.n) if pw[y] == y)
