"""
Certificates for binary linear codes: Griesmer arithmetic, the
Ashikhmin-Barg ratio test, and exhaustive minimality, plus predictors for
the optimal/minimal families over H(m, n).
"""

from __future__ import annotations

from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from .codes import CodeReport, CodeSpec, Kind, oracle_code
from .poset import IdealFamily, make_hierarchical, mask_of


def griesmer_sum(k: int, d: int) -> int:
    """sum_{i<k} ceil(d / 2^i)"""
    if k < 1 or d < 1:
        raise ValueError(f"griesmer_sum needs k, d >= 1, got k={k}, d={d}")
    return sum(-(-d >> i) for i in range(k))


@dataclass
class Certificate:
    griesmer_sum_at_d: int
    is_griesmer: bool
    griesmer_distance_optimal: bool
    griesmer_almost_optimal: bool
    ab_ratio: Fraction
    ab_sufficient: bool
    minimal_exhaustive: bool | None
    ab_violating_minimal: bool | None
    witness: tuple[int, int] | None = None
    witness_weights: tuple[int, int, int] | None = None  # wt(a), wt(b), wt(a+b)

    def to_dict(self) -> dict:
        out = asdict(self)
        out["ab_ratio"] = f"{self.ab_ratio.numerator}/{self.ab_ratio.denominator}"
        for key in ("witness", "witness_weights"):
            if out[key] is not None:
                out[key] = list(out[key])
        return out


def _packed(codewords: list[int], length: int) -> np.ndarray:
    nbytes = max(1, (length + 7) // 8)
    buf = b"".join(c.to_bytes(nbytes, "little") for c in codewords)
    return np.frombuffer(buf, dtype=np.uint8).reshape(len(codewords), nbytes)


def find_minimality_violation(codewords: list[int], length: int) -> tuple[int, int] | None:
    """First pair (i, j) of distinct nonzero codewords with
    wt(a + b) = wt(a) - wt(b), or None if the code is minimal.

    Only pairs with wt(a) > wt(b) can satisfy the equality. Candidates for a
    are scanned from lightest to heaviest, and b from heaviest to lightest
    below wt(a), so the witness names a lightest non-minimal codeword.
    """
    idx = [i for i, c in enumerate(codewords) if c]
    if len(idx) < 2:
        return None
    words = [codewords[i] for i in idx]
    weights = np.array([c.bit_count() for c in words], dtype=np.int64)
    order = np.argsort(weights, kind="stable")
    packed = _packed(words, length)[order]
    weights = weights[order]
    for pos in range(len(order)):
        wa = weights[pos]
        lighter = np.nonzero(weights < wa)[0][::-1]
        if lighter.size == 0:
            continue
        sums = np.bitwise_count(packed[lighter] ^ packed[pos]).sum(axis=1, dtype=np.int64)
        hits = np.nonzero(sums == wa - weights[lighter])[0]
        if hits.size:
            j = lighter[hits[0]]
            return idx[order[pos]], idx[order[j]]
    return None


def is_minimal_by_cover(codewords: list[int]) -> bool:
    """Direct definition: no nonzero codeword's support contains another's."""
    nonzero = [c for c in codewords if c]
    for a in nonzero:
        for b in nonzero:
            if a != b and b & ~a == 0:
                return False
    return True


def certify(report: CodeReport, codewords: list[int] | None = None,
            spec: CodeSpec | None = None, exhaustive: bool = True) -> Certificate:
    k, n, d = report.dimension, report.length, report.w_min
    if k < 1 or d is None:
        raise ValueError("certification needs a code of positive dimension")
    g_d = griesmer_sum(k, d)
    g_d1 = griesmer_sum(k, d + 1)
    g_d2 = griesmer_sum(k, d + 2)
    ratio = Fraction(d, report.w_max)
    ab = 2 * d > report.w_max

    minimal = witness = weights = None
    if exhaustive:
        if codewords is None:
            codewords = report.codewords
        if codewords is None and spec is not None:
            codewords = oracle_code(spec).codewords
        if codewords is None:
            raise ValueError("exhaustive minimality needs the codewords or a CodeSpec")
        witness = find_minimality_violation(codewords, n)
        minimal = witness is None
        if witness is not None:
            a, b = codewords[witness[0]], codewords[witness[1]]
            weights = (a.bit_count(), b.bit_count(), (a ^ b).bit_count())
    return Certificate(
        griesmer_sum_at_d=g_d,
        is_griesmer=n == g_d,
        griesmer_distance_optimal=g_d1 > n,
        griesmer_almost_optimal=g_d1 <= n < g_d2,
        ab_ratio=ratio,
        ab_sufficient=ab,
        minimal_exhaustive=minimal,
        ab_violating_minimal=None if minimal is None else (minimal and not ab),
        witness=witness,
        witness_weights=weights,
    )


# ---- family predictors ------------------------------------------------------

@dataclass
class Prediction:
    """What the family theorems claim for one parameter choice; None means no
    claim is made."""

    params: tuple[int, int, int | None] | None = None  # [length, k, d]
    griesmer: bool | None = None
    distance_optimal: bool | None = None
    almost_optimal: bool | None = None
    minimal: bool | None = None
    ab_violating: bool | None = None

    def mismatches(self, report: CodeReport, cert: Certificate) -> list[str]:
        out = []
        if self.params is not None and tuple(self.params) != report.params:
            out.append(f"parameters {list(report.params)} != predicted {list(self.params)}")
        checks = [
            ("griesmer", self.griesmer, cert.is_griesmer),
            ("distance_optimal", self.distance_optimal, cert.griesmer_distance_optimal),
            ("almost_optimal", self.almost_optimal, cert.griesmer_almost_optimal),
            ("minimal", self.minimal, cert.minimal_exhaustive),
            ("ab_violating", self.ab_violating, cert.ab_violating_minimal),
        ]
        for name, want, got in checks:
            if want is not None and want != got:
                out.append(f"{name}: certified {got}, predicted {want}")
        return out


def thm61_exceptions(n: int) -> set[tuple[int, int]]:
    return {(1, n - 1), (1, n - 2), (2, n - 2), (n - 1, 1)}


# weight labels of the six-weight family, in the order the proof lists them
def thm61_weights(m: int, n: int, b: int) -> dict[str, int]:
    h = 2 ** (n - 1)
    return {
        "w1": h,
        "w2": h - 2 ** (b - 1),
        "w3": h + 1 - 2 ** (m - 1) - 2 ** b,
        "w4": h + 1 - 2 ** (m - 1) - 2 ** (b - 1),
        "w5": h - 2 ** (m - 1),
        "w6": h - 2 ** (m - 1) - 2 ** (b - 1),
    }


def thm61_identities(m: int, n: int, b: int) -> list[tuple[str, str]]:
    """Pairs (heavy, light) with 2*light = heavy that the proof attaches to
    each exceptional (m, |B|)."""
    out = []
    if (m, b) == (1, n - 1):
        out.append(("w1", "w4"))
    if (m, b) == (1, n - 2):
        out.append(("w1", "w3"))
    if (m, b) == (2, n - 2):
        out.append(("w5", "w3"))
    if (m, b) == (n - 1, 1):
        out.append(("w1", "w5"))
    return out


def _check_range(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def classify_thm61(m: int, n: int, b: int) -> Prediction:
    _check_range(1 <= m < n and 1 <= b <= n - m, "need 1 <= m < n and 1 <= |B| <= n-m")
    pred = Prediction(minimal=(m, b) not in thm61_exceptions(n))
    if b == 1 < m - 1 <= n - 2:
        pred.griesmer = True
        pred.params = (2 ** n - 1 - 2 ** m, n, 2 ** (n - 1) - 1 - 2 ** (m - 1))
    elif m == 1 and b == n - 1:
        pred.griesmer = True
        pred.params = (2 ** (n - 1) - 1, n - 1, 2 ** (n - 2))
    return pred


def classify_thm62(m: int, n: int) -> Prediction:
    _check_range(1 < m <= n - 2, "need 1 < m <= n-2")
    return Prediction(
        params=(2 ** n - 2 ** m - 2, n, 2 ** (n - 1) - 2 ** (m - 1) - 2),
        distance_optimal=True,
        minimal=True if n >= 4 else None,
    )


def classify_thm63(m: int, n: int, b: int) -> Prediction:
    _check_range(1 <= m < n and 1 <= b <= n - m, "need 1 <= m < n and 1 <= |B| <= n-m")
    pred = Prediction()
    if m == n - 1 and b == 1:
        pred.params = (2 ** n - 1, n + 1, 2 ** (n - 1) - 2)
        pred.almost_optimal = True
    if m + b == n >= 5 and max(m, b) <= n - 2:
        pred.minimal = True
        pred.ab_violating = True
    return pred


def classify_thm64(m: int, n: int, b1: int, b2: int) -> Prediction:
    _check_range(m >= 1 and b1 >= 1 and b2 >= 1, "need m, |B_1|, |B_2| >= 1")
    _check_range(b1 + b2 == n - m, "need |B_1| + |B_2| = n - m")
    _check_range(max(b1, b2) <= n - 2, "need max(|B_1|, |B_2|) <= n-2")
    return Prediction(
        params=(2 ** n - 1, n + 1, 2 ** m - 3 + 2 ** b1 + 2 ** b2),
        minimal=True,
        ab_violating=True,
    )


def thm61_spec(m: int, n: int, b: int) -> CodeSpec:
    P = make_hierarchical(m, n)
    return CodeSpec(P, IdealFamily.of(P, [mask_of(range(1, m + b + 1))]), Kind.D)


def thm62_spec(m: int, n: int) -> CodeSpec:
    P = make_hierarchical(m, n)
    low = mask_of(range(1, m + 1))
    return CodeSpec(P, IdealFamily.of(P, [low | mask_of([m + 1]), low | mask_of([m + 2])]), Kind.D)


def thm63_spec(m: int, n: int, b: int) -> CodeSpec:
    P = make_hierarchical(m, n)
    return CodeSpec(P, IdealFamily.of(P, [mask_of(range(1, m + b + 1))]), Kind.F)


def thm64_spec(m: int, n: int, b1: int, b2: int) -> CodeSpec:
    P = make_hierarchical(m, n)
    low = mask_of(range(1, m + 1))
    B1 = mask_of(range(m + 1, m + b1 + 1))
    B2 = mask_of(range(m + b1 + 1, m + b1 + b2 + 1))
    return CodeSpec(P, IdealFamily.of(P, [low | B1, low | B2]), Kind.F)
