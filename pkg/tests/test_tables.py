from __future__ import annotations

import pytest

from posetcodes import tables
from posetcodes.codes import analytic_code, oracle_code
from posetcodes.tables import (
    TableError,
    admissible_params,
    code_length,
    evaluate,
    printed_length,
    rows,
    stated_parameters,
    witness_spec,
)


def test_table1_example():
    dist = tables.table1(4, 2)
    assert dist.counts == {0: 1, 6: 12, 8: 3} and dist.dimension == 4
    assert code_length(1, {"n": 4, "a": 2}) == 12


def test_table1_full_lower_level_is_antichain_case():
    for n in range(2, 7):
        assert tables.table1(n, n - 1) == oracle_code(witness_spec(1, {"n": n, "a": n - 1}, 0)).distribution


def test_table2_examples():
    dist = tables.table2(5, 2, 2)
    assert dist.counts == {0: 1, 11: 4, 12: 6, 13: 12, 14: 8, 16: 1} and dist.dimension == 5
    dist = tables.table2(4, 1, 3)
    assert dist.dimension == 3 and dist.w_min == 4
    assert code_length(2, {"n": 4, "m": 1, "b": 3}) == 7


def test_table3_example_and_stated_distance():
    params = {"n": 4, "a1": 2, "a2": 2, "a12": 1}
    want = oracle_code(witness_spec(3, params, 0)).distribution
    assert tables.table3(4, 2, 2, 1) == want
    assert sum(want.counts.values()) == 16
    assert want.w_min == 2 ** 3 - 2 - 2 == stated_parameters(3, params)["d"]


def test_table4_example():
    params = {"n": 5, "m": 2, "b1": 1, "b2": 1, "b12": 0}
    dist = tables.table4(5, 2, 1, 1, 0)
    assert dist.w_min == 12 and dist.dimension == 5
    assert code_length(4, params) == 26
    assert printed_length(4, params) == 27
    assert oracle_code(witness_spec(4, params, 0)).params == (26, 5, 12)


def test_table5_examples():
    dist = tables.table5(4, 2)
    assert dist.counts == {0: 1, 3: 1, 7: 12, 8: 15, 11: 3} and dist.dimension == 5
    # one-element A: row weight 2^1 - 1 = 1 is a genuine codeword
    assert tables.table5(4, 1).dimension == 5 == oracle_code(witness_spec(5, {"n": 4, "a": 1}, 0)).dimension


def test_table6_examples():
    dist = tables.table6(5, 2, 3)
    assert dist.counts == {0: 1, 8: 2, 10: 1, 14: 7, 16: 45, 18: 7, 22: 1} and dist.dimension == 6
    for n in range(3, 9):
        d = tables.table6(n, n - 1, 1)
        assert (d.dimension, d.w_min) == (n + 1, 2 ** (n - 1) - 2)
        assert tables.table6(n, 1, n - 1).dimension == n


def test_table7_example():
    params = {"n": 4, "a1": 2, "a2": 2, "a12": 1}
    dist = tables.table7(4, 2, 2, 1)
    assert dist.w_min == 5 == stated_parameters(7, params)["d"]
    assert sum(dist.counts.values()) == 2 ** 5
    assert dist == oracle_code(witness_spec(7, params, 1)).distribution


def test_table8_example():
    params = {"n": 6, "m": 2, "b1": 2, "b2": 2, "b12": 0}
    dist = tables.table8(6, 2, 2, 2, 0)
    assert dist.w_min == 9 and sum(dist.counts.values()) == 2 ** 7
    assert dist == oracle_code(witness_spec(8, params, 0)).distribution


@pytest.mark.parametrize("table", range(1, 9))
def test_tables_match_oracle_two_witnesses(table):
    for params in admissible_params(table, 7):
        predicted = evaluate(table, params)
        assert all(c > 0 for c in predicted.counts.values())
        for variant in (0, 1):
            spec = witness_spec(table, params, variant)
            o = oracle_code(spec)
            assert o.distribution == predicted, (table, params, variant)
            assert o.length == code_length(table, params)
            assert analytic_code(spec).same_code_stats(o)


def test_witnesses_differ():
    params = {"n": 6, "m": 2, "b1": 2, "b2": 2, "b12": 1}
    a, b = witness_spec(4, params, 0), witness_spec(4, params, 1)
    assert a.family.ideals != b.family.ideals


@pytest.mark.parametrize("table", [3, 4, 7, 8])
def test_printed_rows_disagree_somewhere(table):
    differs = [p for p in admissible_params(table, 6)
               if rows(table, p, fix_typos=False) != rows(table, p)]
    assert differs


@pytest.mark.parametrize("table", [4, 8])
def test_identically_zero_printed_factor(table):
    params = {"n": 5, "m": 2, "b1": 1, "b2": 1, "b12": 0}
    printed = rows(table, params, fix_typos=False)
    fixed = rows(table, params)
    index_bits = 5 if table == 4 else 6
    assert sum(r.freq for r in fixed) == 2 ** index_bits
    assert sum(r.freq for r in printed) < 2 ** index_bits
    with pytest.raises(TableError):
        evaluate(table, params, fix_typos=False)


def test_printed_length_sign():
    for params in admissible_params(3, 6):
        a1, a2, a12, n = params["a1"], params["a2"], params["a12"], params["n"]
        assert code_length(3, params) == 2 ** n - 2 ** a1 - 2 ** a2 + 2 ** a12
        assert printed_length(3, params) == code_length(3, params) - 2 ** (a12 + 1)


@pytest.mark.parametrize("call", [
    lambda: tables.table1(3, 3),
    lambda: tables.table2(4, 2, 3),
    lambda: tables.table3(4, 2, 2, 2),
    lambda: tables.table4(5, 2, 1, 1, 1),
    lambda: tables.table7(3, 2, 2, 0),
])
def test_range_violations(call):
    with pytest.raises(TableError):
        call()
