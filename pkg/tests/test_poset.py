from __future__ import annotations

import pytest
from conftest import dag_posets
from hypothesis import given, strategies as st

from posetcodes.poset import (
    IdealFamily,
    Poset,
    PosetError,
    antichain,
    decompose_hierarchical_ideal,
    down_ideals,
    elements_of,
    family_downsets,
    ideal_closure,
    is_order_ideal,
    make_hierarchical,
    mask_of,
    parse_family,
    parse_generators,
    parse_poset,
    submasks,
)


def M(*xs):
    return mask_of(xs)


def sets(*groups):
    return frozenset(mask_of(g) for g in groups)


# ---- construction ----------------------------------------------------------

def test_hierarchical_2_4_down_sets():
    P = make_hierarchical(2, 4)
    assert P.down == (M(1), M(2), M(1, 2, 3), M(1, 2, 4))


def test_hierarchical_m_equals_n_is_antichain():
    P = make_hierarchical(3, 3)
    assert P.down == (M(1), M(2), M(3))
    assert P == antichain(3)


def test_hierarchical_1_2_is_chain():
    assert make_hierarchical(1, 2).down == (M(1), M(1, 2))


@pytest.mark.parametrize("m,n", [(0, 3), (4, 3), (-1, 2)])
def test_hierarchical_rejects_bad_shape(m, n):
    with pytest.raises(PosetError):
        make_hierarchical(m, n)


def test_from_covers_closes_transitively():
    P = Poset.from_covers(3, [(1, 2), (2, 3)])
    assert P.down[2] == M(1, 2, 3)


def test_from_covers_rejects_cycle():
    with pytest.raises(PosetError):
        Poset.from_covers(3, [(1, 2), (2, 3), (3, 1)])


def test_poset_validates_relation():
    with pytest.raises(PosetError):
        Poset(2, (M(2), M(2)))          # not reflexive at 1
    with pytest.raises(PosetError):
        Poset(2, (M(1, 2), M(1, 2)))    # not antisymmetric
    with pytest.raises(PosetError):
        Poset(3, (M(1), M(1, 2), M(2, 3)))  # not transitive


def test_hierarchical_shape_detected_from_covers():
    P = Poset.from_covers(4, [(1, 3), (2, 3), (1, 4), (2, 4)])
    shape = P.hierarchical_shape()
    assert shape is not None and (shape.m, shape.n) == (2, 4)
    assert Poset.from_covers(4, [(2, 1), (4, 3)]).hierarchical_shape() is None


# ---- ideals ----------------------------------------------------------------

def test_is_order_ideal_examples():
    P = Poset.from_covers(4, [(1, 2), (3, 4)])
    assert is_order_ideal(P, M(1, 2))
    assert not is_order_ideal(P, M(2))
    assert is_order_ideal(P, 0)
    assert is_order_ideal(make_hierarchical(2, 5), 0)


def test_ideal_closure_examples():
    P = Poset.from_covers(4, [(1, 2), (3, 4)])
    assert ideal_closure(P, M(2)) == M(1, 2)
    assert ideal_closure(make_hierarchical(2, 5), M(1, 3, 4)) == M(1, 2, 3, 4)
    assert ideal_closure(P, 0) == 0


def test_down_ideals_examples(fig1):
    assert down_ideals(fig1, M(1, 2)) == sets([], [2], [1, 2])
    H = make_hierarchical(2, 4)
    assert down_ideals(H, M(1, 2)) == sets([], [1], [2], [1, 2])
    assert down_ideals(H, M(1, 2, 3)) == sets([], [1], [2], [1, 2], [1, 2, 3])


def test_down_ideals_rejects_non_ideal():
    with pytest.raises(PosetError):
        down_ideals(make_hierarchical(2, 5), M(1, 3, 4))


def test_family_downsets_examples(fig1, fig2):
    assert family_downsets(fig1, IdealFamily.of(fig1, [M(1, 2), M(3, 4)])) == sets(
        [], [2], [1, 2], [4], [3, 4])
    assert family_downsets(fig2, IdealFamily.of(fig2, [M(1, 2, 3), M(1, 2, 4)])) == sets(
        [], [2], [1, 2], [1, 2, 3], [1, 2, 4])
    A = antichain(4)
    assert family_downsets(A, IdealFamily.of(A, [A.full])) == frozenset(range(16))


def test_family_downsets_rejects_empty(fig1):
    with pytest.raises(PosetError):
        family_downsets(fig1, [])
    with pytest.raises(PosetError):
        IdealFamily(())


def test_family_dedupes_and_rejects_non_ideals(fig1):
    F = IdealFamily.of(fig1, [M(1, 2), M(1, 2), M(2)])
    assert F.ideals == (M(1, 2), M(2))
    with pytest.raises(PosetError):
        IdealFamily.of(fig1, [M(1)])


def test_decompose_examples():
    H24 = make_hierarchical(2, 4).shape
    assert decompose_hierarchical_ideal(H24, M(1, 2, 3)) == (M(1, 2), M(3))
    assert decompose_hierarchical_ideal(H24, M(1)) == (M(1), 0)
    with pytest.raises(PosetError):
        decompose_hierarchical_ideal(make_hierarchical(2, 5).shape, M(1, 3, 4))


def test_hierarchical_count_formula_exhaustive():
    for n in range(1, 8):
        for m in range(1, n + 1):
            P = make_hierarchical(m, n)
            for I in range(1 << n):
                if not is_order_ideal(P, I):
                    continue
                A, B = decompose_hierarchical_ideal(P.shape, I)
                want = 2 ** bin(A).count("1") if not B else 2 ** m + 2 ** bin(B).count("1") - 1
                assert len(down_ideals(P, I)) == want


# ---- parsing ---------------------------------------------------------------

def test_parse_poset_formats():
    assert parse_poset("hier:2,5") == make_hierarchical(2, 5)
    assert parse_poset("n=4; cover=1<2,3<4") == Poset.from_covers(4, [(1, 2), (3, 4)])
    assert parse_poset("n=3") == antichain(3)
    for bad in ("hier:3,2", "n=3; cover=1-2", "poset"):
        with pytest.raises(PosetError):
            parse_poset(bad)


def test_parse_family_applies_closure():
    P = make_hierarchical(2, 5)
    assert parse_generators("1,3,4;2") == [M(1, 3, 4), M(2)]
    assert parse_family(P, "1,3,4").ideals == (M(1, 2, 3, 4),)
    with pytest.raises(PosetError):
        parse_family(P, "1,9")
    with pytest.raises(PosetError):
        parse_generators(" ; ")


# ---- properties ------------------------------------------------------------

@given(dag_posets(), st.data())
def test_closure_is_smallest_ideal(P, data):
    E = data.draw(st.integers(0, P.full))
    C = ideal_closure(P, E)
    assert is_order_ideal(P, C) and E & ~C == 0
    assert ideal_closure(P, C) == C
    # any ideal containing E contains the closure
    for J in range(1 << P.n):
        if is_order_ideal(P, J) and E & ~J == 0:
            assert C & ~J == 0


@given(dag_posets())
def test_down_ideals_match_filter(P):
    for I in range(1 << P.n):
        if is_order_ideal(P, I):
            want = {J for J in range(1 << P.n) if J & ~I == 0 and is_order_ideal(P, J)}
            assert down_ideals(P, I) == want


@given(dag_posets(), st.data())
def test_downset_count_inclusion_exclusion(P, data):
    ideals = [I for I in range(1 << P.n) if is_order_ideal(P, I)]
    chosen = data.draw(st.lists(st.sampled_from(ideals), min_size=1, max_size=3, unique=True))
    total = 0
    for S in range(1, 1 << len(chosen)):
        members = [chosen[i] for i in range(len(chosen)) if S >> i & 1]
        J = members[0]
        for I in members[1:]:
            J &= I
        total += (-1) ** (len(members) + 1) * len(down_ideals(P, J))
    assert total == len(family_downsets(P, IdealFamily(tuple(chosen))))


def test_submasks_and_elements():
    assert list(submasks(M(1, 3))) == [M(1, 3), M(3), M(1), 0]
    assert elements_of(M(2, 5)) == [2, 5]
    with pytest.raises(PosetError):
        mask_of([0])
