from __future__ import annotations

import numpy as np
import pytest
from conftest import dag_posets
from hypothesis import given, settings, strategies as st

from posetcodes.genfun import (
    chi,
    eval_H_direct,
    eval_H_family,
    eval_H_hier_ideal,
    eval_H_ideal,
    inclusion_exclusion_terms,
    walsh_transform,
)
from posetcodes.poset import (
    IdealFamily,
    PosetError,
    down_ideals,
    family_downsets,
    is_order_ideal,
    make_hierarchical,
    mask_of,
)
from posetcodes.verify import check_inclusion_exclusion, hierarchical_ideals


def M(*xs):
    return mask_of(xs)


def test_direct_examples():
    X = [0, M(2), M(1, 2)]
    assert eval_H_direct(X, 0) == 3
    assert eval_H_direct(X, M(2)) == -1
    assert eval_H_direct([], M(1, 3)) == 0
    assert np.array_equal(eval_H_direct([], np.arange(4)), np.zeros(4))


def test_direct_scalar_matches_array():
    X = [0, M(1), M(1, 3), M(2, 3)]
    u = np.arange(8)
    assert list(eval_H_direct(X, u)) == [eval_H_direct(X, int(v)) for v in u]


def test_chi_examples():
    assert chi(M(1, 3), M(2, 4)) == 1
    assert chi(M(1, 3), M(3)) == 0
    assert chi(M(1, 2, 3), 0) == 1


def test_hier_closed_form_examples():
    H25 = make_hierarchical(2, 5).shape
    assert eval_H_hier_ideal(H25, M(1, 2), M(3, 4), 0) == 7
    assert eval_H_hier_ideal(H25, M(1, 2), M(3, 4), M(1)) == -3
    assert eval_H_hier_ideal(make_hierarchical(2, 4).shape, M(1, 2), 0, M(3)) == 4
    with pytest.raises(PosetError):
        eval_H_hier_ideal(H25, M(1), M(3), 0)


def test_family_examples(fig1, fig2):
    assert eval_H_family(fig1, IdealFamily.of(fig1, [M(1, 2), M(3, 4)]), 0) == 5
    assert eval_H_family(fig2, IdealFamily.of(fig2, [M(1, 2, 3), M(1, 2, 4)]), 0) == 5


def test_singleton_family_is_direct(fig2):
    u = np.arange(16)
    for I in (M(2), M(1, 2), M(1, 2, 3)):
        F = IdealFamily((I,))
        assert np.array_equal(eval_H_family(fig2, F, u), eval_H_direct(down_ideals(fig2, I), u))


def test_inclusion_exclusion_merges_equal_intersections():
    # three ideals pairwise meeting in the same set: the triple term merges in
    terms = inclusion_exclusion_terms(IdealFamily((M(1, 2), M(1, 3), M(1, 4))))
    assert dict((J, c) for c, J in terms) == {M(1): -2, M(1, 2): 1, M(1, 3): 1, M(1, 4): 1}


def test_walsh_examples():
    u = np.arange(8)
    assert list(walsh_transform([], u, 3)) == [8, 0, 0, 0, 0, 0, 0, 0]
    P = make_hierarchical(2, 4)
    support = down_ideals(P, M(1, 2, 3)) - {0}
    assert walsh_transform(support, 0, 4) == 8
    assert walsh_transform([M(1)], M(1), 1) == 2


def test_walsh_identity_hierarchical():
    for n in range(1, 7):
        u = np.arange(1 << n)
        delta = (u == 0) * (1 << n)
        for m in range(1, n + 1):
            P = make_hierarchical(m, n)
            for I in hierarchical_ideals(m, n):
                if I == 0:
                    continue
                F = IdealFamily((I,))
                support = family_downsets(P, F) - {0}
                assert np.array_equal(walsh_transform(support, u, n), delta + 2 - 2 * eval_H_family(P, F, u))


def test_closed_form_matches_direct_all_hierarchical_n8():
    for n in range(1, 9):
        u = np.arange(1 << n)
        for m in range(1, n + 1):
            P = make_hierarchical(m, n)
            for I in hierarchical_ideals(m, n):
                X = down_ideals(P, I)
                assert np.array_equal(eval_H_ideal(P, I, u), eval_H_direct(X, u))


@settings(max_examples=60)
@given(dag_posets(max_n=4))
def test_inclusion_exclusion_random_posets(P):
    assert check_inclusion_exclusion(P, max_family=3) > 0


@given(dag_posets(), st.data())
def test_complement_sum_vanishes_off_zero(P, data):
    X = data.draw(st.sets(st.integers(0, P.full)))
    Xc = set(range(1 << P.n)) - X
    u = np.arange(1 << P.n)
    total = eval_H_direct(X, u) + eval_H_direct(Xc, u)
    assert np.array_equal(total, (u == 0) * (1 << P.n))
    assert np.all(np.abs(eval_H_direct(X, u)) <= len(X))


@given(dag_posets(), st.data())
def test_walsh_identity_random_posets(P, data):
    ideals = [I for I in range(1 << P.n) if is_order_ideal(P, I)]
    chosen = data.draw(st.lists(st.sampled_from(ideals), min_size=1, max_size=3, unique=True))
    F = IdealFamily(tuple(chosen))
    u = np.arange(1 << P.n)
    support = family_downsets(P, F) - {0}
    want = (u == 0) * (1 << P.n) + 2 - 2 * eval_H_family(P, F, u)
    assert np.array_equal(walsh_transform(support, u, P.n), want)
