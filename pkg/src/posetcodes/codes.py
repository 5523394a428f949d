"""
Binary linear codes built from the down-set collection of an ideal family.

Two constructions, indexed by messages u in F_2^n (and s in F_2 for the second):

* kind D: c_{D,u} = (u.x) for x in D, where D is the complement of the
  down-set collection inside F_2^n, ascending by mask value.
* kind f: c_f(s,u) = (s f(x) + u.x) for x = 1 .. 2^n - 1, where f is the
  indicator of the down-set collection minus the empty set.

Each code is computed twice: analytically from sign-point values of the
generating function, and by materializing every codeword (the oracle).
"""

from __future__ import annotations

import enum
import json
import os
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .genfun import eval_H_family, popcount
from .poset import IdealFamily, Poset, PosetError, SubsetMask, family_downsets

DEFAULT_ORACLE_CAP = 14


def oracle_cap() -> int:
    value = os.environ.get("POSETCODES_ORACLE_CAP")
    return int(value) if value else DEFAULT_ORACLE_CAP


class Kind(str, enum.Enum):
    D = "D"
    F = "f"

    @classmethod
    def parse(cls, text: str) -> Kind:
        for kind in cls:
            if kind.value.lower() == text.lower():
                return kind
        raise ValueError(f"unknown code kind {text!r} (expected D or f)")


class Source(str, enum.Enum):
    ANALYTIC = "analytic"
    ORACLE = "oracle"
    TABLE = "closed-form-table"


@dataclass(frozen=True)
class CodeSpec:
    poset: Poset
    family: IdealFamily
    kind: Kind

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        if not len(self.family):
            raise PosetError("ideal family must be nonempty")

    @property
    def n(self) -> int:
        return self.poset.n


@dataclass(frozen=True)
class WeightDistribution:
    """Nonzero-frequency weights of a code, zero codeword included."""

    counts: dict[int, int]
    dimension: int

    def __post_init__(self):
        if any(c <= 0 for c in self.counts.values()):
            raise ValueError("frequencies must be positive")
        if sum(self.counts.values()) != 1 << self.dimension:
            raise ValueError(f"frequencies sum to {sum(self.counts.values())}, not 2^{self.dimension}")
        if self.counts.get(0) != 1:
            raise ValueError("exactly one zero codeword expected")
        object.__setattr__(self, "counts", dict(sorted(self.counts.items())))

    @classmethod
    def from_index_counts(cls, counts: dict[int, int], index_bits: int) -> WeightDistribution:
        """Fold a tally over all 2^index_bits message indices into a code
        distribution: the weight-0 mass is the kernel size, and every codeword
        is hit kernel-size times."""
        counts = {w: c for w, c in counts.items() if c}
        kernel = counts.get(0, 0)
        if kernel < 1 or kernel & (kernel - 1):
            raise ValueError(f"kernel size {kernel} is not a power of two")
        if sum(counts.values()) != 1 << index_bits:
            raise ValueError(f"index tally sums to {sum(counts.values())}, not 2^{index_bits}")
        out = {}
        for w, c in counts.items():
            if c % kernel:
                raise ValueError(f"frequency {c} at weight {w} not divisible by kernel size {kernel}")
            out[w] = c // kernel
        return cls(out, index_bits - (kernel.bit_length() - 1))

    @property
    def w_min(self) -> int | None:
        nonzero = [w for w in self.counts if w]
        return min(nonzero) if nonzero else None

    @property
    def w_max(self) -> int | None:
        nonzero = [w for w in self.counts if w]
        return max(nonzero) if nonzero else None

    def __getitem__(self, weight: int) -> int:
        return self.counts.get(weight, 0)


@dataclass
class CodeReport:
    length: int
    distribution: WeightDistribution
    source: Source
    codewords: list[int] | None = field(default=None, repr=False, compare=False)
    certificate: Any = field(default=None, compare=False)

    @property
    def dimension(self) -> int:
        return self.distribution.dimension

    @property
    def w_min(self) -> int | None:
        return self.distribution.w_min

    @property
    def w_max(self) -> int | None:
        return self.distribution.w_max

    @property
    def params(self) -> tuple[int, int, int | None]:
        return (self.length, self.dimension, self.w_min)

    def same_code_stats(self, other: CodeReport) -> bool:
        return (self.length == other.length
                and self.distribution == other.distribution)

    def to_dict(self) -> dict:
        out = {
            "length": self.length,
            "dimension": self.dimension,
            "distribution": [{"weight": w, "count": c} for w, c in self.distribution.counts.items()],
            "w_min": self.w_min,
            "w_max": self.w_max,
            "source": self.source.value,
        }
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_dict()
        return out

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def weight_enumerator_string(report: CodeReport | WeightDistribution) -> str:
    dist = report.distribution if isinstance(report, CodeReport) else report
    terms = []
    for w, c in dist.counts.items():
        if w == 0:
            terms.append(str(c))
            continue
        coeff = "" if c == 1 else str(c)
        power = "z" if w == 1 else f"z^{w}"
        terms.append(coeff + power)
    return "+".join(terms)


# analytic path --------------------------------------------------------------

def _downset_count(spec_or_poset, family=None) -> int:
    P, F = (spec_or_poset.poset, spec_or_poset.family) if family is None else (spec_or_poset, family)
    return int(eval_H_family(P, F, 0))


def defining_set(P: Poset, F: IdealFamily) -> list[SubsetMask]:
    covered = family_downsets(P, F)
    D = [x for x in range(1 << P.n) if x not in covered]
    if not D:
        raise PosetError("down-set collection is all of F_2^n; the defining set is empty")
    return D


def _check_f_support(P: Poset, F: IdealFamily) -> None:
    if all(I == 0 for I in F.ideals):
        raise PosetError("f would vanish identically: the down-set collection is just the empty set")


def analytic_weight_D(P: Poset, F: IdealFamily, u):
    """wt(c_{D,u}) = (|D| - sum_{x in D} (-1)^{u.x}) / 2, with the character
    sum over D rewritten as 2^n [u = 0] - H(u)."""
    size_D = (1 << P.n) - _downset_count(P, F)
    H = eval_H_family(P, F, u)
    delta = (u == 0).astype(np.int64) if isinstance(u, np.ndarray) else int(u == 0)
    twice = size_D - (1 << P.n) * delta + H
    return twice // 2


def analytic_weight_f(P: Poset, F: IdealFamily, s, u):
    H = eval_H_family(P, F, u)
    nonzero = (u != 0).astype(np.int64) if isinstance(u, np.ndarray) else int(u != 0)
    return (1 << (P.n - 1)) * nonzero + s * (H - 1)


def _tally(weights: np.ndarray) -> dict[int, int]:
    values, counts = np.unique(weights, return_counts=True)
    return {int(w): int(c) for w, c in zip(values, counts)}


def analytic_code(spec: CodeSpec) -> CodeReport:
    P, F, n = spec.poset, spec.family, spec.n
    u = np.arange(1 << n, dtype=np.int64)
    if spec.kind is Kind.D:
        length = (1 << n) - _downset_count(P, F)
        if length == 0:
            raise PosetError("down-set collection is all of F_2^n; the defining set is empty")
        dist = WeightDistribution.from_index_counts(_tally(analytic_weight_D(P, F, u)), n)
    else:
        _check_f_support(P, F)
        length = (1 << n) - 1
        H = eval_H_family(P, F, u)
        base = (1 << (n - 1)) * (u != 0).astype(np.int64)
        tally = _tally(np.concatenate([base, base + H - 1]))
        dist = WeightDistribution.from_index_counts(tally, n + 1)
    return CodeReport(length, dist, Source.ANALYTIC)


# oracle path ----------------------------------------------------------------

_CHUNK = 1 << 22


def _pack_rows(bits: np.ndarray) -> list[int]:
    packed = np.packbits(bits.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def oracle_codewords(spec: CodeSpec) -> list[int]:
    """Every codeword as an int bit vector (bit j = coordinate j), in message
    order, duplicates included."""
    n = spec.n
    if n > oracle_cap():
        raise PosetError(f"n = {n} exceeds the oracle cap {oracle_cap()}")
    if spec.kind is Kind.D:
        coords = np.array(defining_set(spec.poset, spec.family), dtype=np.int64)
        fvals = np.zeros(coords.size, dtype=np.int64)
        seeds = [0]
    else:
        _check_f_support(spec.poset, spec.family)
        coords = np.arange(1, 1 << n, dtype=np.int64)
        support = family_downsets(spec.poset, spec.family)
        fvals = np.fromiter((int(x in support) for x in coords.tolist()), dtype=np.int64, count=coords.size)
        seeds = [0, 1]
    out: list[int] = []
    step = max(1, _CHUNK // coords.size)
    for s in seeds:
        for lo in range(0, 1 << n, step):
            u = np.arange(lo, min(lo + step, 1 << n), dtype=np.int64)
            bits = (popcount(u[:, None] & coords[None, :]) + s * fvals[None, :]) & 1
            out.extend(_pack_rows(bits))
    return out


def oracle_code(spec: CodeSpec) -> CodeReport:
    words = oracle_codewords(spec)
    distinct = sorted(set(words))
    size = len(distinct)
    if size & (size - 1):
        raise AssertionError(f"{size} distinct codewords is not a power of two")
    length = len(defining_set(spec.poset, spec.family)) if spec.kind is Kind.D else (1 << spec.n) - 1
    counts: dict[int, int] = {}
    for c in distinct:
        w = c.bit_count()
        counts[w] = counts.get(w, 0) + 1
    dist = WeightDistribution(counts, size.bit_length() - 1)
    return CodeReport(length, dist, Source.ORACLE, codewords=distinct)
