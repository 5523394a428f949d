"""
Sign-point evaluation of the generating function

    H_X(x_1, ..., x_n) = sum over x in X of prod x_i^{x_i}

at x_i = (-1)^{u_i}, which is sum over x in X of (-1)^{|x & u|}.

Polynomials are never built. Every evaluator accepts the point `u` either as
an int mask or as a numpy integer array of masks (evaluated elementwise).
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable

import numpy as np

from .poset import (
    HierarchicalShape,
    IdealFamily,
    Poset,
    PosetError,
    SubsetMask,
    decompose_hierarchical_ideal,
    down_ideals,
)

# rows of the (points x members) parity table built per chunk
_CHUNK = 1 << 22

# inclusion-exclusion runs over all nonempty subfamilies
FAMILY_CAP = 20


def popcount(x):
    if isinstance(x, np.ndarray):
        return np.bitwise_count(x).astype(np.int64)
    return int(x).bit_count()


def sign(x):
    """(-1)^popcount(x)."""
    return 1 - 2 * (popcount(x) & 1)


def chi(u, X: SubsetMask):
    """1 where u and X are disjoint, else 0."""
    if isinstance(u, np.ndarray):
        return ((u & X) == 0).astype(np.int64)
    return int(u & X == 0)


def eval_H_direct(X: Iterable[SubsetMask], u):
    xs = np.fromiter(X, dtype=np.int64)
    if not isinstance(u, np.ndarray):
        if xs.size == 0:
            return 0
        return int(sign(xs & np.int64(u)).sum())
    u = u.astype(np.int64, copy=False)
    out = np.zeros(u.shape, dtype=np.int64)
    if xs.size == 0:
        return out
    flat_u, flat_out = u.reshape(-1), out.reshape(-1)
    step = max(1, _CHUNK // xs.size)
    for lo in range(0, flat_u.size, step):
        block = flat_u[lo:lo + step, None] & xs[None, :]
        flat_out[lo:lo + step] = sign(block).sum(axis=1)
    return out


def eval_H_hier_ideal(shape: HierarchicalShape, A: SubsetMask, B: SubsetMask, u):
    """Closed form of H_{I(P)} for the ideal I = A | B of H(m, n)."""
    if B and A != shape.lower:
        raise PosetError("upper part nonempty but lower part is not all of [m]")
    if not B:
        return (1 << popcount(A)) * chi(u, A)
    v = u & shape.lower
    return (1 << shape.m) * chi(v, shape.lower) + sign(v) * ((1 << popcount(B)) * chi(u, B) - 1)


@lru_cache(maxsize=4096)
def _ideal_points(P: Poset, I: SubsetMask) -> tuple[SubsetMask, ...]:
    return tuple(sorted(down_ideals(P, I)))


def eval_H_ideal(P: Poset, I: SubsetMask, u):
    """H_{I(P)} at u, by closed form on hierarchical posets and by direct
    summation otherwise."""
    shape = P.hierarchical_shape()
    if shape is not None:
        A, B = decompose_hierarchical_ideal(shape, I)
        return eval_H_hier_ideal(shape, A, B, u)
    return eval_H_direct(_ideal_points(P, I), u)


def inclusion_exclusion_terms(F: IdealFamily) -> list[tuple[int, SubsetMask]]:
    """(sign, intersection) per nonempty subfamily, with equal intersections
    merged and cancelled terms dropped."""
    ideals = F.ideals
    if not ideals:
        raise PosetError("ideal family must be nonempty")
    if len(ideals) > FAMILY_CAP:
        raise PosetError(f"families larger than {FAMILY_CAP} are not supported")
    coeff: dict[SubsetMask, int] = {}
    for size in range(1, len(ideals) + 1):
        s = 1 if size % 2 else -1
        for group in combinations(ideals, size):
            J = group[0]
            for I in group[1:]:
                J &= I
            coeff[J] = coeff.get(J, 0) + s
    return [(c, J) for J, c in sorted(coeff.items()) if c]


def eval_H_family(P: Poset, F: IdealFamily, u):
    """H of the down-set collection of F via inclusion-exclusion over
    intersections of its members."""
    total = 0
    for c, J in inclusion_exclusion_terms(F):
        total = total + c * eval_H_ideal(P, J, u)
    return total


def walsh_transform(f_support: Iterable[SubsetMask], u, n: int):
    """S_f(u) = sum over v in F_2^n of (-1)^(f(v) + u.v), summed by brute force."""
    f = np.zeros(1 << n, dtype=np.int64)
    support = np.fromiter(f_support, dtype=np.int64)
    if support.size and (support.min() < 0 or support.max() >= 1 << n):
        raise ValueError("support point outside F_2^n")
    f[support] = 1
    v = np.arange(1 << n, dtype=np.int64)
    fsign = 1 - 2 * f
    if not isinstance(u, np.ndarray):
        return int((fsign * sign(v & np.int64(u))).sum())
    u = u.astype(np.int64, copy=False)
    out = np.empty(u.shape, dtype=np.int64)
    flat_u, flat_out = u.reshape(-1), out.reshape(-1)
    step = max(1, _CHUNK // v.size)
    for lo in range(0, flat_u.size, step):
        flat_out[lo:lo + step] = (fsign[None, :] * sign(flat_u[lo:lo + step, None] & v[None, :])).sum(axis=1)
    return out
