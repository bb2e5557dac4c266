"""Constructors for the classical rack and quandle families.

All constructors return tables whose defining formulas satisfy the rack
axioms, so they skip the cubic re-validation; the test suite re-validates
sampled instances of every family through :func:`rackq.core.validate`.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import RackTable
from .errors import RackError
from .perm import Perm, checked, compose, inverse


class NonInvertibleAlpha(RackError):
    """The supplied matrix does not act bijectively on the group."""


class ClassTooLarge(RackError):
    """The requested conjugacy class exceeds the construction guard."""


def trivial(n: int) -> RackTable:
    """The trivial quandle: every translation is the identity."""
    if n < 1:
        raise ValueError(f"carrier size must be positive, got {n}")
    row = tuple(range(n))
    return RackTable(n, (row,) * n)


def cyclic_rack(n: int) -> RackTable:
    """The cyclic-type rack on Z_n: every translation adds one.

    A rack but not a quandle for n >= 2; its translations have no fixed
    point.
    """
    if n < 1:
        raise ValueError(f"carrier size must be positive, got {n}")
    row = tuple((y + 1) % n for y in range(n))
    return RackTable(n, (row,) * n)


def dihedral(n: int) -> RackTable:
    """The dihedral quandle on Z_n: x acting on y gives 2x - y mod n."""
    if n < 1:
        raise ValueError(f"carrier size must be positive, got {n}")
    return RackTable(n, tuple(tuple((2 * x - y) % n for y in range(n)) for x in range(n)))


@dataclass(frozen=True)
class AffineSpec:
    """An abelian group Z_{n_1} x ... x Z_{n_m} with an automorphism.

    ``alpha`` is an m-by-m integer matrix acting on column vectors, the
    i-th output component taken mod ``moduli[i]``.  Elements are
    enumerated in mixed-radix little-endian order: the first coordinate
    varies fastest, so index k encodes the tuple
    ``((k // stride_i) % n_i)`` with ``stride_i`` the product of the
    earlier moduli.
    """

    moduli: tuple[int, ...]
    alpha: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "moduli", tuple(int(v) for v in self.moduli))
        object.__setattr__(self, "alpha", tuple(tuple(int(v) for v in row) for row in self.alpha))
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise ValueError(f"moduli must be positive integers, got {self.moduli!r}")
        m = len(self.moduli)
        if len(self.alpha) != m or any(len(row) != m for row in self.alpha):
            raise ValueError(f"alpha must be a {m}x{m} matrix")

    @property
    def size(self) -> int:
        size = 1
        for m in self.moduli:
            size *= m
        return size

    def elements(self) -> list[tuple[int, ...]]:
        """All group elements in mixed-radix little-endian order."""
        out = []
        for k in range(self.size):
            tup = []
            rem = k
            for m in self.moduli:
                tup.append(rem % m)
                rem //= m
            out.append(tuple(tup))
        return out

    def index_of(self, element: tuple[int, ...]) -> int:
        idx = 0
        stride = 1
        for coord, m in zip(element, self.moduli):
            idx += (coord % m) * stride
            stride *= m
        return idx

    def apply_alpha(self, element: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(
            sum(self.alpha[i][j] * element[j] for j in range(len(self.moduli))) % self.moduli[i]
            for i in range(len(self.moduli))
        )


def affine(spec: AffineSpec) -> RackTable:
    """The affine (Alexander) quandle for ``spec``.

    x acting on y gives (1 - alpha)(x) + alpha(y).  Raises
    :class:`NonInvertibleAlpha` if the matrix is not a bijection on the
    group, which is checked by enumeration at construction.

    A field presentation Aff(F_{p^k}, alpha) with k > 1 is covered by this
    same code path: write the field as (Z_p)^k and pass the matrix of
    multiplication by alpha in a basis.
    """
    n = spec.size
    moduli = spec.moduli
    if len(moduli) == 1:
        # Single cyclic factor: indices are the group elements themselves,
        # and each row is "add a constant" composed with the alpha image,
        # i.e. a rotation lookup applied to one precomputed row.
        mod = moduli[0]
        a = spec.alpha[0][0] % mod
        alpha_img = tuple((a * y) % mod for y in range(mod))
        if len(set(alpha_img)) != mod:
            raise NonInvertibleAlpha(f"alpha={a} is not invertible mod {mod}")
        rows = []
        for x in range(mod):
            c = (x - alpha_img[x]) % mod
            shift = tuple(range(c, mod)) + tuple(range(c))
            rows.append(tuple(map(shift.__getitem__, alpha_img)))
        return RackTable(mod, tuple(rows))

    elements = spec.elements()
    images = [spec.apply_alpha(e) for e in elements]
    if len(set(images)) != n:
        raise NonInvertibleAlpha(f"alpha={spec.alpha!r} is not a bijection on the group")
    m = len(moduli)
    rows = []
    for x, ex in enumerate(elements):
        ax = images[x]
        shift = tuple((ex[i] - ax[i]) % moduli[i] for i in range(m))
        row = []
        for y in range(n):
            ay = images[y]
            row.append(spec.index_of(tuple(shift[i] + ay[i] for i in range(m))))
        rows.append(tuple(row))
    return RackTable(n, tuple(rows))


CLASS_SIZE_GUARD = 10_000


def conjugation_class_quandle(degree: int, rep: Perm) -> RackTable:
    """The conjugation quandle on the conjugacy class of ``rep``.

    The carrier is the conjugacy class of ``rep`` inside the symmetric
    group on ``degree`` points, sorted lexicographically by image array;
    x acting on y is the conjugate x y x^-1.  Raises
    :class:`ClassTooLarge` past the CLASS_SIZE_GUARD.
    """
    if degree < 1:
        raise ValueError(f"degree must be positive, got {degree}")
    rep = checked(rep)
    if len(rep) != degree:
        raise ValueError(f"representative acts on {len(rep)} points, expected {degree}")
    transpositions = []
    for i in range(degree):
        for j in range(i + 1, degree):
            images = list(range(degree))
            images[i], images[j] = j, i
            transpositions.append(tuple(images))
    # The class is the orbit of rep under conjugation; transpositions
    # generate the group, so closing under them reaches the whole class.
    members = {rep}
    frontier = [rep]
    while frontier:
        nxt = []
        for g in frontier:
            for t in transpositions:
                h = compose(t, compose(g, t))  # t g t^-1; transpositions are involutions
                if h not in members:
                    members.add(h)
                    if len(members) > CLASS_SIZE_GUARD:
                        raise ClassTooLarge(
                            f"conjugacy class exceeds {CLASS_SIZE_GUARD} elements"
                        )
                    nxt.append(h)
        frontier = nxt
    carrier = sorted(members)
    index = {g: i for i, g in enumerate(carrier)}
    rows = []
    for g in carrier:
        ginv = inverse(g)
        rows.append(tuple(index[compose(g, compose(h, ginv))] for h in carrier))
    return RackTable(len(carrier), tuple(rows))
