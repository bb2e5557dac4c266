"""Decision procedures on abstract cycle profiles.

A profile query is a multiset of cycle lengths >= 2 with multiplicities,
plus a fixed-point count m0.  Three exclusion rules are implemented; their
wire identifiers are

* ``Prop35``  - some contiguous split of the sorted lengths has prefix and
  suffix lcms that do not divide each other (excludes all racks);
* ``Cor34``   - generalized, non-contiguous bipartition form of the same
  lcm test (excludes all racks; an extension, reported separately);
* ``Prop315`` - the three-length, multiplicity-one exclusion for crossed
  sets, with its prime-exponent length decomposition as witness.

Verdicts serialize to JSON as {kind, scope, witness, rules_consulted}.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, replace
from functools import lru_cache

from .errors import RackError
from .perm import CycleProfile

MAX_LENGTH = 2**32

SCOPE_RACKS = "racks"
SCOPE_CROSSED_SETS = "crossed-sets"
SCOPES = (SCOPE_RACKS, SCOPE_CROSSED_SETS)

EXCLUDED_PROP35 = "ExcludedProp35"
EXCLUDED_COR34 = "ExcludedCor34"
EXCLUDED_PROP315 = "ExcludedProp315"
NOT_EXCLUDED = "NotExcluded"
NOT_APPLICABLE = "NotApplicable"


class ProfileError(RackError):
    """Base class for profile parsing and guard errors."""


class ProfileSyntaxError(ProfileError):
    pass


class DuplicateLength(ProfileError):
    pass


class NonPositive(ProfileError):
    pass


class TooManyLengths(ProfileError):
    pass


@dataclass(frozen=True)
class ProfileQuery:
    """An abstract profile: fixed-point count plus lengths >= 2."""

    m0: int
    lengths: tuple[int, ...]
    mults: tuple[int, ...]

    def __post_init__(self):
        if self.m0 < 0:
            raise ValueError(f"m0 must be >= 0, got {self.m0}")
        if list(self.lengths) != sorted(set(self.lengths)):
            raise ValueError(f"lengths must be strictly increasing: {self.lengths!r}")
        if any(l < 2 for l in self.lengths):
            raise ValueError(f"lengths must be >= 2: {self.lengths!r}")
        if any(l > MAX_LENGTH for l in self.lengths):
            raise ValueError(f"lengths are capped at 2^32: {self.lengths!r}")
        if len(self.mults) != len(self.lengths) or any(m < 1 for m in self.mults):
            raise ValueError("mults must be positive and aligned with lengths")

    @classmethod
    def from_profile(cls, profile: CycleProfile) -> "ProfileQuery":
        return cls(profile.m0, profile.moving_lengths(), profile.moving_mults())

    def __str__(self) -> str:
        terms = []
        if self.m0:
            terms.append(f"1^{self.m0}")
        terms.extend(f"{l}^{m}" for l, m in zip(self.lengths, self.mults))
        return " ".join(terms)


_TERM = re.compile(r"(\d+)(?:\^(\d+))?\Z")


def parse_profile(text: str) -> ProfileQuery:
    """Parse "1^2.2^2.3^4.6^4" or "1^1 2 3" style profile strings.

    Terms are separated by dots or whitespace; each term is ``L`` or
    ``L^M``.  At most one term may have L=1, and it populates m0.
    """
    terms = [t for t in re.split(r"[.\s]+", text.strip()) if t]
    if not terms:
        raise ProfileSyntaxError("empty profile")
    m0 = 0
    seen_one = False
    by_length: dict[int, int] = {}
    for term in terms:
        m = _TERM.match(term)
        if not m:
            raise ProfileSyntaxError(f"bad profile term {term!r}")
        length = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) else 1
        if length < 1 or mult < 1:
            raise NonPositive(f"lengths and multiplicities must be >= 1: {term!r}")
        if length == 1:
            if seen_one:
                raise DuplicateLength("more than one length-1 term")
            seen_one = True
            m0 = mult
        else:
            if length in by_length:
                raise DuplicateLength(f"length {length} appears more than once")
            by_length[length] = mult
    lengths = tuple(sorted(by_length))
    return ProfileQuery(m0, lengths, tuple(by_length[l] for l in lengths))


@dataclass(frozen=True)
class ObstructionVerdict:
    """Outcome of applying exclusion rules to one profile."""

    kind: str
    scope: str
    witness: object
    rules_consulted: tuple[str, ...]

    @property
    def excluded(self) -> bool:
        return self.kind.startswith("Excluded")


def prop35_verdict(pf: ProfileQuery) -> ObstructionVerdict:
    """Contiguous-split lcm exclusion over the sorted lengths.

    Excluded if for some split index i the lcm of the first i lengths and
    the lcm of the rest do not divide each other.  The witness records the
    first such split.
    """
    ls = pf.lengths
    for i in range(1, len(ls)):
        p = math.lcm(*ls[:i])
        q = math.lcm(*ls[i:])
        if q % p != 0 and p % q != 0:
            return ObstructionVerdict(
                EXCLUDED_PROP35, SCOPE_RACKS, {"i": i, "P": p, "Q": q}, ("Prop35",)
            )
    return ObstructionVerdict(NOT_EXCLUDED, SCOPE_RACKS, None, ("Prop35",))


MAX_BIPARTITION_LENGTHS = 20


def cor34_verdict(pf: ProfileQuery) -> ObstructionVerdict:
    """Bipartition lcm exclusion over the length set.

    Generalizes the contiguous split: excluded if some bipartition of the
    lengths into non-empty S, T has lcms that do not divide each other,
    with some length dividing neither lcm on each side (so neither fixed
    set can be the whole carrier).  Exponential in the number of lengths,
    guarded at MAX_BIPARTITION_LENGTHS.
    """
    ls = pf.lengths
    k = len(ls)
    if k > MAX_BIPARTITION_LENGTHS:
        raise TooManyLengths(f"bipartition rule is guarded at {MAX_BIPARTITION_LENGTHS} lengths")
    # Keep the last length on the T side so each unordered bipartition is
    # visited exactly once, in deterministic mask order.
    for mask in range(1, 1 << max(k - 1, 0)):
        s_side = [ls[j] for j in range(k - 1) if mask >> j & 1]
        t_side = [l for l in ls if l not in s_side]
        p = math.lcm(*s_side)
        q = math.lcm(*t_side)
        if (
            q % p != 0
            and p % q != 0
            and any(p % l != 0 for l in ls)
            and any(q % l != 0 for l in ls)
        ):
            witness = {"S": s_side, "T": t_side, "P": p, "Q": q}
            return ObstructionVerdict(EXCLUDED_COR34, SCOPE_RACKS, witness, ("Cor34",))
    return ObstructionVerdict(NOT_EXCLUDED, SCOPE_RACKS, None, ("Cor34",))


@lru_cache(maxsize=4096)
def _factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization as (prime, exponent) pairs, primes ascending."""
    factors = []
    m = n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return tuple(factors)


@dataclass(frozen=True)
class LengthDecomposition:
    """Prime-exponent bookkeeping for a strictly increasing length triple.

    Each shared prime is classified by the shape of its exponent triple
    (a, b, c) across (l1, l2, l3):

    * ``A``: c == b > a    * ``B``: a == c > b
    * ``C``: a == b > c    * ``D``: a == b == c
    * ``none``: any other shape (blocks the crossed-set rule).

    p, q, r, s collect the large exponents of classes C, B, A, D; the
    primed values collect the small ones, so p' | p, q' | q, r' | r and
    when every prime classifies, (p*q*r'*s, p*q'*r*s, p'*q*r*s)
    reconstructs the triple.
    """

    lengths: tuple[int, int, int]
    primes: tuple[int, ...]
    exponents: tuple[tuple[int, int, int], ...]
    classes: tuple[str, ...]
    p: int
    q: int
    r: int
    s: int
    p_prime: int
    q_prime: int
    r_prime: int

    @property
    def all_classified(self) -> bool:
        return "none" not in self.classes

    def class_sets(self) -> dict[str, tuple[int, ...]]:
        out: dict[str, tuple[int, ...]] = {}
        for name in ("A", "B", "C", "D", "none"):
            out[name] = tuple(p for p, c in zip(self.primes, self.classes) if c == name)
        return out

    def reconstruction(self) -> tuple[int, int, int]:
        return (
            self.p * self.q * self.r_prime * self.s,
            self.p * self.q_prime * self.r * self.s,
            self.p_prime * self.q * self.r * self.s,
        )


def decompose_lengths(l1: int, l2: int, l3: int) -> LengthDecomposition:
    """Classify the primes of a triple 2 <= l1 < l2 < l3 and take products."""
    if not 2 <= l1 < l2 < l3:
        raise ValueError(f"need 2 <= l1 < l2 < l3, got ({l1}, {l2}, {l3})")
    fa, fb, fc = dict(_factorize(l1)), dict(_factorize(l2)), dict(_factorize(l3))
    primes = tuple(sorted(set(fa) | set(fb) | set(fc)))
    exponents = []
    classes = []
    p = q = r = s = 1
    p_prime = q_prime = r_prime = 1
    for prime in primes:
        a, b, c = fa.get(prime, 0), fb.get(prime, 0), fc.get(prime, 0)
        exponents.append((a, b, c))
        if a == b == c:
            classes.append("D")
            s *= prime**a
        elif c == b > a:
            classes.append("A")
            r *= prime**b
            r_prime *= prime**a
        elif a == c > b:
            classes.append("B")
            q *= prime**a
            q_prime *= prime**b
        elif a == b > c:
            classes.append("C")
            p *= prime**a
            p_prime *= prime**c
        else:
            classes.append("none")
    return LengthDecomposition(
        lengths=(l1, l2, l3),
        primes=primes,
        exponents=tuple(exponents),
        classes=tuple(classes),
        p=p,
        q=q,
        r=r,
        s=s,
        p_prime=p_prime,
        q_prime=q_prime,
        r_prime=r_prime,
    )


def prop315_verdict(pf: ProfileQuery) -> ObstructionVerdict:
    """Three-length crossed-set exclusion.

    Applies only to profiles with exactly three lengths, all of
    multiplicity one.  With l1 < l2 < l3, the profile is excluded for
    crossed sets when no length divides a later one but every length
    divides the lcm of the other two.  When mutual non-division holds but
    some length fails the lcm condition, the contiguous-split rule already
    excludes the profile for all racks, so that verdict is returned
    instead.
    """
    if len(pf.lengths) != 3 or any(m != 1 for m in pf.mults):
        return ObstructionVerdict(NOT_APPLICABLE, SCOPE_CROSSED_SETS, None, ("Prop315",))
    l1, l2, l3 = pf.lengths
    mutual_nondivision = l2 % l1 != 0 and l3 % l1 != 0 and l3 % l2 != 0
    trio = (l1, l2, l3)
    each_divides_other_lcm = all(
        math.lcm(trio[(k + 1) % 3], trio[(k + 2) % 3]) % trio[k] == 0 for k in range(3)
    )
    if mutual_nondivision and each_divides_other_lcm:
        witness = decompose_lengths(l1, l2, l3)
        return ObstructionVerdict(EXCLUDED_PROP315, SCOPE_CROSSED_SETS, witness, ("Prop315",))
    if mutual_nondivision:
        deferred = prop35_verdict(pf)
        return replace(deferred, rules_consulted=("Prop315", "Prop35"))
    return ObstructionVerdict(NOT_EXCLUDED, SCOPE_CROSSED_SETS, None, ("Prop315",))


def hayashi_check(pf: ProfileQuery) -> bool:
    """True if every length divides the largest length."""
    if not pf.lengths:
        return True
    largest = pf.lengths[-1]
    return all(largest % l == 0 for l in pf.lengths)


def full_verdict(pf: ProfileQuery, scope: str = SCOPE_RACKS) -> ObstructionVerdict:
    """Dispatch the exclusion rules in order and return the first hit.

    Rule order: contiguous split, then bipartition, then (for crossed-set
    scope only) the three-length rule.  The returned verdict records every
    rule consulted along the way.
    """
    if scope not in SCOPES:
        raise ValueError(f"scope must be one of {SCOPES}, got {scope!r}")
    consulted: list[str] = []
    v = prop35_verdict(pf)
    consulted.extend(v.rules_consulted)
    if v.excluded:
        return replace(v, rules_consulted=tuple(consulted))
    v = cor34_verdict(pf)
    consulted.append("Cor34")
    if v.excluded:
        return replace(v, rules_consulted=tuple(consulted))
    if scope == SCOPE_CROSSED_SETS:
        v = prop315_verdict(pf)
        consulted.append("Prop315")
        if v.kind == EXCLUDED_PROP315:
            return replace(v, rules_consulted=tuple(consulted))
    return ObstructionVerdict(NOT_EXCLUDED, scope, None, tuple(consulted))
