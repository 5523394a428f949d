"""
Regression suite over every worked example, table and family theorem.

A fixture fails when two computations that must agree do not (analytic code
vs enumerated code, corrected table vs enumerated code, closed form vs direct
sum). A printed claim that the enumerated code contradicts is not a failure;
it becomes a Discrepancy record carrying the printed and the observed value.
"""

from __future__ import annotations

import random
from fractions import Fraction
from dataclasses import asdict, dataclass, field
from itertools import combinations
from typing import Callable, Iterator

import numpy as np

from . import analysis, tables
from .codes import CodeSpec, Kind, analytic_code, oracle_code, weight_enumerator_string
from .genfun import eval_H_direct, eval_H_family, eval_H_hier_ideal
from .poset import (
    IdealFamily,
    Poset,
    decompose_hierarchical_ideal,
    down_ideals,
    elements_of,
    family_downsets,
    ideal_closure,
    is_order_ideal,
    make_hierarchical,
    mask_of,
    submasks,
)


@dataclass
class Discrepancy:
    source: str
    params: dict
    row_weight_expr: str
    predicted: int
    observed: int
    table: int | None = None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class FixtureResult:
    name: str
    group: str
    passed: bool
    detail: str = ""
    discrepancies: list[Discrepancy] = field(default_factory=list)


@dataclass
class VerifyReport:
    fixtures: list[FixtureResult]

    @property
    def discrepancies(self) -> list[Discrepancy]:
        return [d for f in self.fixtures for d in f.discrepancies]

    def ok(self, strict: bool = False) -> bool:
        if not all(f.passed for f in self.fixtures):
            return False
        return not (strict and self.discrepancies)


class _Fail(AssertionError):
    pass


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise _Fail(msg)


def _sets(*groups) -> frozenset[int]:
    return frozenset(mask_of(g) for g in groups)


def _monomials(P: Poset, terms: list[tuple[int, ...]]) -> frozenset[int]:
    # a polynomial sum of squarefree monomials, as the set of its supports
    return frozenset(mask_of(t) for t in terms)


# ---- worked examples ----------------------------------------------------------

EXAMPLE_2_2_PRINTED = [
    ([[1, 2]], _sets([], [1], [1, 2])),
    ([[1, 2], [3, 4]], _sets([], [1], [1, 2], [3], [3, 4])),
    ([[1, 2], [1, 3, 4]], _sets([], [1], [1, 2], [3], [3, 4], [1, 3, 4])),
]


def fx_example_2_2():
    P = Poset.from_covers(4, [(1, 2), (3, 4)])
    _expect(ideal_closure(P, mask_of([2])) == mask_of([1, 2]), "closure of {2} is not {1,2}")
    out = []
    for ideals, printed in EXAMPLE_2_2_PRINTED:
        F = IdealFamily.of(P, [mask_of(I) for I in ideals])
        got = family_downsets(P, F)
        if got == printed:
            continue
        # a printed list that misses genuine ideals is a discrepancy; anything
        # else (a printed set that is not an ideal of the family) is a failure
        _expect(printed < got, f"down-sets of {ideals} differ")
        missing = sorted(got - printed)
        params = {"family": ideals, "missing": [sorted(elements_of(x)) for x in missing]}
        out.append(Discrepancy("Example 2.2 down-sets", params, "|I(P)|", len(printed), len(got)))
    return "3 families", out


def fx_example_3_2():
    P = Poset.from_covers(4, [(2, 1), (4, 3)])
    I1, I2 = mask_of([1, 2]), mask_of([3, 4])
    _expect(down_ideals(P, I1) == _sets([], [2], [1, 2]), "I_1(P)")
    _expect(down_ideals(P, I2) == _sets([], [4], [3, 4]), "I_2(P)")
    F = IdealFamily.of(P, [I1, I2])
    union = _sets([], [2], [1, 2], [4], [3, 4])
    _expect(family_downsets(P, F) == union, "family down-sets")
    poly = _monomials(P, [(), (2,), (1, 2), (4,), (3, 4)])
    u = np.arange(16)
    _expect(np.array_equal(eval_H_family(P, F, u), eval_H_direct(poly, u)), "H differs from 1+x2+x1x2+x4+x3x4")
    _expect(int(eval_H_family(P, F, 0)) == 5, "H at all-ones != 5")
    return "H = 1+x2+x1x2+x4+x3x4"


def fx_example_3_3():
    P = Poset.from_covers(4, [(2, 1), (1, 3), (1, 4)])
    I1, I2 = mask_of([1, 2, 3]), mask_of([1, 2, 4])
    _expect(down_ideals(P, I1) == _sets([], [2], [1, 2], [1, 2, 3]), "I_1(P)")
    _expect(down_ideals(P, I2) == _sets([], [2], [1, 2], [1, 2, 4]), "I_2(P)")
    F = IdealFamily.of(P, [I1, I2])
    _expect(family_downsets(P, F) == _sets([], [2], [1, 2], [1, 2, 3], [1, 2, 4]), "family down-sets")
    poly = _monomials(P, [(), (2,), (1, 2), (1, 2, 3), (1, 2, 4)])
    u = np.arange(16)
    _expect(np.array_equal(eval_H_family(P, F, u), eval_H_direct(poly, u)), "H polynomial")
    return "H = 1+x2+x1x2+x1x2x3+x1x2x4"


def fx_example_4_3():
    P = make_hierarchical(2, 4)
    u = np.arange(16)
    polys = {
        (1, 2): [(), (1,), (2,), (1, 2)],
        (1, 2, 3): [(), (1,), (2,), (1, 2), (1, 2, 3)],
        (1, 2, 3, 4): [(), (1,), (2,), (1, 2), (1, 2, 3), (1, 2, 4), (1, 2, 3, 4)],
    }
    for I, terms in polys.items():
        X = _monomials(P, terms)
        _expect(down_ideals(P, mask_of(I)) == X, f"I(P) for I={set(I)}")
        A, B = decompose_hierarchical_ideal(P.shape, mask_of(I))
        _expect(np.array_equal(eval_H_hier_ideal(P.shape, A, B, u), eval_H_direct(X, u)),
                f"closed form for I={set(I)}")
    return "3 ideals of H(2,4)"


def fx_example_6_5():
    P = make_hierarchical(2, 5)
    spec = CodeSpec(P, IdealFamily.from_generators(P, [mask_of([1, 3, 4])]), Kind.D)
    want = "1+4z^11+6z^12+12z^13+8z^14+z^16"
    oracle, analytic = oracle_code(spec), analytic_code(spec)
    table = tables.table2(5, 2, 2)
    for label, dist, params in [("oracle", oracle.distribution, oracle.params),
                                ("analytic", analytic.distribution, analytic.params),
                                ("table2", table, (25, table.dimension, table.w_min))]:
        _expect(params == (25, 5, 11), f"{label} parameters {params}")
        _expect(weight_enumerator_string(dist) == want, f"{label} enumerator {weight_enumerator_string(dist)}")
    cert = analysis.certify(oracle)
    _expect(not cert.is_griesmer and not cert.griesmer_distance_optimal, "Griesmer flags")
    return f"[25, 5, 11] {want}"


EXAMPLE_6_6_PRINTED = {0: 1, 8: 2, 10: 1, 14: 11, 16: 45, 18: 3, 22: 1}


def fx_example_6_6():
    P = make_hierarchical(2, 5)
    spec = CodeSpec(P, IdealFamily.from_generators(P, [mask_of([1, 3, 4, 5])]), Kind.F)
    oracle, analytic = oracle_code(spec), analytic_code(spec)
    _expect(oracle.same_code_stats(analytic), "analytic and oracle disagree")
    _expect(oracle.params == (31, 6, 8) and oracle.w_max == 22, f"parameters {oracle.params}")
    dist = oracle.distribution
    for w in (0, 8, 10, 16, 22):
        _expect(dist[w] == EXAMPLE_6_6_PRINTED[w], f"A_{w} = {dist[w]}")
    _expect(tables.table6(5, 2, 3) == dist, "Table 6 disagrees with the enumerated code")
    out = []
    params = {"n": 5, "m": 2, "b": 3, "kind": "f"}
    for w in (14, 18):
        if dist[w] != EXAMPLE_6_6_PRINTED[w]:
            out.append(Discrepancy("Example 6.6 enumerator", params, f"A_{w}", EXAMPLE_6_6_PRINTED[w], dist[w]))
    cert = analysis.certify(oracle)
    _expect(cert.ab_ratio == Fraction(8, 22), f"ratio {cert.ab_ratio}")
    if not cert.minimal_exhaustive:
        out.append(Discrepancy("Example 6.6 minimality", params, "minimal", 1, 0))
    return weight_enumerator_string(oracle), out


# ---- generating function sweeps ------------------------------------------------

def random_poset(n: int, rng: random.Random, p: float = 0.4) -> Poset:
    """Random DAG on a shuffled labelling, closed to a partial order."""
    labels = list(range(1, n + 1))
    rng.shuffle(labels)
    covers = [(labels[i], labels[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Poset.from_covers(n, covers)


def all_ideals(P: Poset) -> list[int]:
    return [S for S in range(1 << P.n) if is_order_ideal(P, S)]


def check_inclusion_exclusion(P: Poset, max_family: int = 3) -> int:
    """Compare the inclusion-exclusion and direct evaluations of H for every
    family of at most `max_family` distinct ideals; returns families checked."""
    u = np.arange(1 << P.n)
    ideals = all_ideals(P)
    count = 0
    for size in range(1, max_family + 1):
        for group in combinations(ideals, size):
            F = IdealFamily(group)
            lhs = eval_H_family(P, F, u)
            rhs = eval_H_direct(family_downsets(P, F), u)
            _expect(np.array_equal(lhs, rhs), f"inclusion-exclusion fails on n={P.n} family {group}")
            count += 1
    return count


def fx_theorem_3_1(samples: int = 200, seed: int = 2021):
    rng = random.Random(seed)
    families = 0
    for i in range(samples):
        n = 1 + i % 5
        families += check_inclusion_exclusion(random_poset(n, rng))
    return f"{samples} posets, {families} families"


def fx_lemma_4_2(n_max: int = 8):
    checked = 0
    for n in range(1, n_max + 1):
        u = np.arange(1 << n)
        for m in range(1, n + 1):
            P = make_hierarchical(m, n)
            for I in hierarchical_ideals(m, n):
                A, B = decompose_hierarchical_ideal(P.shape, I)
                X = down_ideals(P, I)
                expect_size = 2 ** bin(A).count("1") if not B else 2 ** m + 2 ** bin(B).count("1") - 1
                _expect(len(X) == expect_size, f"|I(P)| for H({m},{n}) I={I:b}")
                _expect(np.array_equal(eval_H_hier_ideal(P.shape, A, B, u), eval_H_direct(X, u)),
                        f"closed form for H({m},{n}) I={I:b}")
                checked += 1
    return f"{checked} ideals"


def hierarchical_ideals(m: int, n: int) -> Iterator[int]:
    lower = (1 << m) - 1
    upper = ((1 << n) - 1) ^ lower
    yield from submasks(lower)
    for B in submasks(upper):
        if B:
            yield lower | B


# ---- tables --------------------------------------------------------------------

def _row_discrepancies(table: int, params: dict, oracle_dist) -> list[Discrepancy]:
    fixed = tables.rows(table, params, fix_typos=True)
    printed = tables.rows(table, params, fix_typos=False)
    out = []
    for row_f, row_p in zip(fixed, printed):
        if row_f == row_p:
            continue
        if row_f.freq == row_p.freq == 0:
            continue
        if row_p.freq != row_f.freq:
            # observed frequency of this row: oracle count at its weight less
            # the other corrected rows landing on the same weight
            others = sum(r.freq for r in fixed if r is not row_f and r.weight == row_f.weight)
            observed = oracle_dist.counts.get(row_f.weight, 0) * _kernel(fixed) - others
            out.append(Discrepancy(f"Table {table}", params, f"freq[{row_p.expr}]", row_p.freq, observed, table))
        if row_p.weight != row_f.weight and row_p.freq:
            out.append(Discrepancy(f"Table {table}", params, f"weight[{row_p.expr}]",
                                   row_p.weight, row_f.weight, table))
    return out


def _kernel(rows) -> int:
    return sum(r.freq for r in rows if r.weight == 0)


def check_table(table: int, params: dict) -> list[Discrepancy]:
    out = []
    predicted = tables.evaluate(table, params)
    length = tables.code_length(table, params)
    oracle = None
    for variant in (0, 1):
        spec = tables.witness_spec(table, params, variant)
        oracle = oracle_code(spec)
        analytic = analytic_code(spec)
        _expect(oracle.same_code_stats(analytic), f"Table {table} {params} variant {variant}: analytic != oracle")
        _expect(oracle.distribution == predicted,
                f"Table {table} {params} variant {variant}: corrected table {predicted.counts} "
                f"!= oracle {oracle.distribution.counts}")
        _expect(oracle.length == length, f"Table {table} {params}: length {oracle.length} != {length}")
    printed_len = tables.printed_length(table, params)
    if printed_len is not None and printed_len != oracle.length:
        out.append(Discrepancy(f"Table {table} length", params, "length", printed_len, oracle.length, table))
    out.extend(_row_discrepancies(table, params, oracle.distribution))
    observed = {"k": oracle.dimension, "d": oracle.w_min}
    for name, value in tables.stated_parameters(table, params).items():
        if value != observed[name]:
            out.append(Discrepancy(f"Table {table} parameters", params, name, value, observed[name], table))
    return out


def make_table_fixture(table: int, n_max: int = 8) -> Callable:
    def run():
        out = []
        count = 0
        for params in tables.admissible_params(table, n_max):
            out.extend(check_table(table, params))
            count += 1
        return f"{count} parameter tuples x 2 witnesses", out
    run.__name__ = f"fx_table_{table}"
    return run


# ---- family theorems -----------------------------------------------------------

def _theorem_discrepancies(label: str, params: dict, pred, report, cert) -> list[Discrepancy]:
    out = []
    if pred.params is not None and tuple(pred.params) != report.params:
        for name, want, got in zip(("length", "k", "d"), pred.params, report.params):
            if want != got:
                out.append(Discrepancy(label, params, name, want, got))
    for name, want, got in [("griesmer", pred.griesmer, cert.is_griesmer),
                            ("distance_optimal", pred.distance_optimal, cert.griesmer_distance_optimal),
                            ("almost_optimal", pred.almost_optimal, cert.griesmer_almost_optimal),
                            ("minimal", pred.minimal, cert.minimal_exhaustive),
                            ("ab_violating", pred.ab_violating, cert.ab_violating_minimal)]:
        if want is not None and want != got:
            out.append(Discrepancy(label, params, name, int(want), int(bool(got))))
    return out


def _certified(spec):
    report = oracle_code(spec)
    _expect(report.same_code_stats(analytic_code(spec)), f"analytic != oracle for {spec}")
    return report, analysis.certify(report)


def thm61_witness_ok(m: int, n: int, b: int, cert) -> bool:
    if cert.witness_weights is None:
        return False
    w = analysis.thm61_weights(m, n, b)
    wa, wb, wab = cert.witness_weights
    return any(w[h] == wa and w[l] == wb and wab == wb for h, l in analysis.thm61_identities(m, n, b))


def fx_theorem_6_1(n_max: int = 8):
    out = []
    count = 0
    for n in range(2, n_max + 1):
        for m in range(1, n):
            for b in range(1, n - m + 1):
                params = {"m": m, "n": n, "b": b}
                report, cert = _certified(analysis.thm61_spec(m, n, b))
                pred = analysis.classify_thm61(m, n, b)
                out.extend(_theorem_discrepancies("Theorem 6.1", params, pred, report, cert))
                if not cert.minimal_exhaustive and not thm61_witness_ok(m, n, b, cert):
                    w = analysis.thm61_weights(m, n, b)
                    for heavy, light in analysis.thm61_identities(m, n, b):
                        out.append(Discrepancy("Theorem 6.1(3) witness identity", params,
                                               f"wt(a) = 2 wt(b) = {heavy}", w[heavy],
                                               cert.witness_weights[0]))
                count += 1
    return f"{count} instances", out


def fx_theorem_6_2(n_max: int = 8):
    out = []
    count = 0
    for n in range(4, n_max + 1):
        for m in range(2, n - 1):
            report, cert = _certified(analysis.thm62_spec(m, n))
            out.extend(_theorem_discrepancies("Theorem 6.2", {"m": m, "n": n},
                                              analysis.classify_thm62(m, n), report, cert))
            count += 1
    return f"{count} instances", out


def fx_theorem_6_3(n_max: int = 8):
    out = []
    count = 0
    for n in range(3, n_max + 1):
        for m in range(1, n):
            for b in range(1, n - m + 1):
                report, cert = _certified(analysis.thm63_spec(m, n, b))
                out.extend(_theorem_discrepancies("Theorem 6.3", {"m": m, "n": n, "b": b},
                                                  analysis.classify_thm63(m, n, b), report, cert))
                count += 1
    return f"{count} instances", out


def fx_theorem_6_4(n_max: int = 8):
    out = []
    count = 0
    for n in range(3, n_max + 1):
        for m in range(1, n - 1):
            for b1 in range(1, n - m):
                b2 = n - m - b1
                if max(b1, b2) > n - 2:
                    continue
                report, cert = _certified(analysis.thm64_spec(m, n, b1, b2))
                out.extend(_theorem_discrepancies("Theorem 6.4", {"m": m, "n": n, "b1": b1, "b2": b2},
                                                  analysis.classify_thm64(m, n, b1, b2), report, cert))
                count += 1
    return f"{count} instances", out


FIXTURES: dict[str, tuple[str, Callable]] = {
    "ex22": ("examples", fx_example_2_2),
    "ex32": ("examples", fx_example_3_2),
    "ex33": ("examples", fx_example_3_3),
    "ex43": ("examples", fx_example_4_3),
    "ex65": ("examples", fx_example_6_5),
    "ex66": ("examples", fx_example_6_6),
    "thm31": ("genfun", fx_theorem_3_1),
    "lem42": ("genfun", fx_lemma_4_2),
    **{f"table{t}": ("tables", make_table_fixture(t)) for t in range(1, 9)},
    "thm61": ("theorems", fx_theorem_6_1),
    "thm62": ("theorems", fx_theorem_6_2),
    "thm63": ("theorems", fx_theorem_6_3),
    "thm64": ("theorems", fx_theorem_6_4),
}


def run_fixture(name: str) -> FixtureResult:
    group, fn = FIXTURES[name]
    try:
        result = fn()
    except _Fail as exc:
        return FixtureResult(name, group, False, str(exc))
    detail, found = (result, []) if isinstance(result, str) else result
    return FixtureResult(name, group, True, detail, found)


def run_verify(only: list[str] | None = None) -> VerifyReport:
    names = list(FIXTURES)
    if only:
        wanted = set()
        for key in only:
            matched = [n for n in names if n == key or FIXTURES[n][0] == key]
            if not matched:
                raise KeyError(f"no fixture or group named {key!r}")
            wanted.update(matched)
        names = [n for n in names if n in wanted]
    return VerifyReport([run_fixture(n) for n in names])
