"""
Finite posets on [n] = {1, ..., n}, order ideals and down-set collections.

Subsets of [n] are plain ints used as bit masks: bit i-1 stands for element i,
so a subset doubles as its characteristic vector in F_2^n.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

SubsetMask = int

# general-poset enumeration scans all 2^n subsets of an ideal
ENUMERATION_CAP = 20


class PosetError(ValueError):
    pass


def mask_of(elements: Iterable[int]) -> SubsetMask:
    out = 0
    for i in elements:
        if i < 1:
            raise PosetError(f"elements are 1-based, got {i}")
        out |= 1 << (i - 1)
    return out


def elements_of(mask: SubsetMask) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def fmt_mask(mask: SubsetMask) -> str:
    return "{" + ",".join(map(str, elements_of(mask))) + "}"


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """All subsets of `mask`, largest first, ending with 0."""
    s = mask
    while True:
        yield s
        if s == 0:
            return
        s = (s - 1) & mask


@dataclass(frozen=True)
class HierarchicalShape:
    """Two-level hierarchical poset H(m, n): every element of [m] lies below
    every element of {m+1, ..., n}."""

    m: int
    n: int

    def __post_init__(self):
        if not 1 <= self.m <= self.n:
            raise PosetError(f"hierarchical poset needs 1 <= m <= n, got m={self.m}, n={self.n}")

    @property
    def lower(self) -> SubsetMask:
        return (1 << self.m) - 1

    @property
    def upper(self) -> SubsetMask:
        return ((1 << self.n) - 1) ^ self.lower


@dataclass(frozen=True)
class Poset:
    n: int
    down: tuple[SubsetMask, ...]  # down[i-1] = {j : j <= i}
    shape: HierarchicalShape | None = field(default=None, compare=False)

    def __post_init__(self):
        if len(self.down) != self.n:
            raise PosetError("need one down-set per element")
        full = self.full
        for i, d in enumerate(self.down):
            bit = 1 << i
            if d & ~full:
                raise PosetError(f"down-set of {i + 1} leaves the ground set")
            if not d & bit:
                raise PosetError(f"relation is not reflexive at {i + 1}")
            for j in elements_of(d & ~bit):
                if self.down[j - 1] & bit:
                    raise PosetError(f"{i + 1} and {j} lie below each other")
                if self.down[j - 1] & ~d:
                    raise PosetError(f"relation is not transitive through {j}")

    @property
    def full(self) -> SubsetMask:
        return (1 << self.n) - 1

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> Poset:
        """Build from pairs (i, j) meaning i < j; the order is the
        reflexive-transitive closure of those pairs."""
        if n < 1:
            raise PosetError("ground set must be nonempty")
        below = [1 << i for i in range(n)]
        for i, j in covers:
            if not (1 <= i <= n and 1 <= j <= n):
                raise PosetError(f"cover pair ({i},{j}) outside [1,{n}]")
            if i == j:
                raise PosetError(f"cover pair ({i},{j}) is a loop")
            below[j - 1] |= 1 << (i - 1)
        changed = True
        while changed:
            changed = False
            for k in range(n):
                acc = below[k]
                for j in elements_of(below[k]):
                    acc |= below[j - 1]
                if acc != below[k]:
                    below[k] = acc
                    changed = True
        for k in range(n):
            for j in elements_of(below[k] & ~(1 << k)):
                if below[j - 1] & (1 << k):
                    raise PosetError(f"cover pairs contain a cycle through {k + 1} and {j}")
        return cls(n, tuple(below))

    def hierarchical_shape(self) -> HierarchicalShape | None:
        """The H(m, n) shape this poset equals element for element, if any."""
        if self.shape is not None:
            return self.shape
        m = 0
        while m < self.n and self.down[m] == 1 << m:
            m += 1
        if m == 0:
            return None
        candidate = make_hierarchical(m, self.n)
        return candidate.shape if candidate.down == self.down else None


def make_hierarchical(m: int, n: int) -> Poset:
    shape = HierarchicalShape(m, n)
    lower = shape.lower
    down = tuple((1 << i) if i < m else (lower | 1 << i) for i in range(n))
    return Poset(n, down, shape)


def antichain(n: int) -> Poset:
    return make_hierarchical(n, n)


def is_order_ideal(P: Poset, S: SubsetMask) -> bool:
    if S & ~P.full:
        return False
    for i in elements_of(S):
        if P.down[i - 1] & ~S:
            return False
    return True


def ideal_closure(P: Poset, E: SubsetMask) -> SubsetMask:
    if E & ~P.full:
        raise PosetError(f"{fmt_mask(E)} is not a subset of [{P.n}]")
    out = 0
    for i in elements_of(E):
        out |= P.down[i - 1]
    return out


def down_ideals(P: Poset, I: SubsetMask) -> frozenset[SubsetMask]:
    """I(P): every order ideal contained in I, the empty set included."""
    if not is_order_ideal(P, I):
        raise PosetError(f"{fmt_mask(I)} is not an order ideal")
    if bin(I).count("1") > ENUMERATION_CAP:
        raise PosetError(f"ideal of size > {ENUMERATION_CAP} is too large to enumerate")
    return frozenset(J for J in submasks(I) if is_order_ideal(P, J))


@dataclass(frozen=True)
class IdealFamily:
    """A deduplicated, nonempty list of order ideals of one poset."""

    ideals: tuple[SubsetMask, ...]

    def __post_init__(self):
        if not self.ideals:
            raise PosetError("ideal family must be nonempty")
        if len(set(self.ideals)) != len(self.ideals):
            raise PosetError("ideal family has repeated members")

    @classmethod
    def of(cls, P: Poset, ideals: Iterable[SubsetMask]) -> IdealFamily:
        seen: list[SubsetMask] = []
        for I in ideals:
            if not is_order_ideal(P, I):
                raise PosetError(f"{fmt_mask(I)} is not an order ideal")
            if I not in seen:
                seen.append(I)
        return cls(tuple(seen))

    @classmethod
    def from_generators(cls, P: Poset, generators: Iterable[SubsetMask]) -> IdealFamily:
        return cls.of(P, (ideal_closure(P, E) for E in generators))

    def __len__(self) -> int:
        return len(self.ideals)

    def __iter__(self):
        return iter(self.ideals)


def family_downsets(P: Poset, F: IdealFamily | Sequence[SubsetMask]) -> frozenset[SubsetMask]:
    """The union of I(P) over the members I of F."""
    ideals = F.ideals if isinstance(F, IdealFamily) else tuple(F)
    if not ideals:
        raise PosetError("ideal family must be nonempty")
    out: set[SubsetMask] = set()
    for I in ideals:
        out |= down_ideals(P, I)
    return frozenset(out)


def decompose_hierarchical_ideal(shape: HierarchicalShape, I: SubsetMask) -> tuple[SubsetMask, SubsetMask]:
    """Split an ideal of H(m, n) into its lower part A and upper part B.

    Either B is empty or A is all of [m]; anything else is not down-closed.
    """
    full = shape.lower | shape.upper
    if I & ~full:
        raise PosetError(f"{fmt_mask(I)} is not a subset of [{shape.n}]")
    A, B = I & shape.lower, I & shape.upper
    if B and A != shape.lower:
        raise PosetError(f"{fmt_mask(I)} is not an order ideal of H({shape.m},{shape.n})")
    return A, B


# text formats -------------------------------------------------------------

_HIER = re.compile(r"^\s*hier\s*:\s*(\d+)\s*,\s*(\d+)\s*$")
_GENERAL = re.compile(r"^\s*n\s*=\s*(\d+)\s*(?:;\s*cover\s*=\s*(.*?))?\s*;?\s*$")
_PAIR = re.compile(r"^\s*(\d+)\s*<\s*(\d+)\s*$")


def parse_poset(text: str) -> Poset:
    """Parse ``hier:<m>,<n>`` or ``n=<int>; cover=<i><j,...>`` (e.g.
    ``n=4; cover=1<2,3<4``)."""
    match = _HIER.match(text)
    if match:
        return make_hierarchical(int(match.group(1)), int(match.group(2)))
    match = _GENERAL.match(text)
    if not match:
        raise PosetError(f"cannot parse poset {text!r}")
    n = int(match.group(1))
    covers = []
    body = match.group(2) or ""
    for chunk in filter(None, (c.strip() for c in body.split(","))):
        pair = _PAIR.match(chunk)
        if not pair:
            raise PosetError(f"bad cover pair {chunk!r}, expected i<j")
        covers.append((int(pair.group(1)), int(pair.group(2))))
    return Poset.from_covers(n, covers)


def parse_generators(text: str) -> list[SubsetMask]:
    """``1,3,4;2`` -> [{1,3,4}, {2}] as masks (not yet closed)."""
    out = []
    for group in text.split(";"):
        group = group.strip()
        if not group:
            continue
        try:
            out.append(mask_of(int(tok) for tok in group.split(",") if tok.strip()))
        except ValueError as exc:
            raise PosetError(f"bad ideal generator list {group!r}") from exc
    if not out:
        raise PosetError("no ideals given")
    return out


def parse_family(P: Poset, text: str) -> IdealFamily:
    generators = parse_generators(text)
    for E in generators:
        if E & ~P.full:
            raise PosetError(f"generator {fmt_mask(E)} leaves [{P.n}]")
    return IdealFamily.from_generators(P, generators)
