"""
Closed-form weight distributions for codes from one or two ideals of H(m, n).

Each table is transcribed row by row (weight expression, weight, frequency)
and then normalized: zero-frequency rows dropped, equal weights merged, and
any extra weight-0 mass folded into the zero codeword with the dimension
lowered to match.

The tables are predictions. Callers compare them against the enumerated code.
Tables 3, 4, 7 and 8 take `fix_typos`: the default gives rows that agree with
enumeration, while `fix_typos=False` reproduces the rows exactly as printed
(the swapped single-ideal frequencies in Tables 3, 7 and 8, the factor
2^{|B_2 minus B_2|} - 1 that is identically zero in Tables 4 and 8, and the
wrong weight of the Table 8 row hit by both functions).
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import CodeSpec, Kind, WeightDistribution
from .poset import IdealFamily, make_hierarchical, mask_of


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class Row:
    expr: str
    weight: int
    freq: int


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise TableError(msg)


def normalize(rows: list[Row], index_bits: int) -> WeightDistribution:
    counts: dict[int, int] = {}
    for row in rows:
        if row.freq < 0:
            raise TableError(f"negative frequency {row.freq} in row {row.expr}")
        if row.freq == 0:
            continue
        if row.weight < 0:
            raise TableError(f"negative weight {row.weight} in row {row.expr}")
        counts[row.weight] = counts.get(row.weight, 0) + row.freq
    try:
        return WeightDistribution.from_index_counts(counts, index_bits)
    except ValueError as exc:
        raise TableError(str(exc)) from exc


# ---- single ideal, kind D -------------------------------------------------

def table1_rows(n, a):
    _require(1 <= a < n, "need 1 <= |A| < n")
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", 2 ** (n - 1), 2 ** (n - a) - 1),
        Row("2^{n-1}-2^{|A|-1}", 2 ** (n - 1) - 2 ** (a - 1), 2 ** n - 2 ** (n - a)),
    ]


def table2_rows(n, m, b):
    _require(1 <= m < n and 1 <= b <= n - m, "need 1 <= m < n and 1 <= |B| <= n-m")
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", 2 ** (n - 1), 2 ** (n - m - b) - 1),
        Row("2^{n-1}-2^{|B|-1}", 2 ** (n - 1) - 2 ** (b - 1), 2 ** (n - m) - 2 ** (n - m - b)),
        Row("2^{n-1}+1-2^{m-1}-2^{|B|}", 2 ** (n - 1) + 1 - 2 ** (m - 1) - 2 ** b, 2 ** (n - 1 - b)),
        Row("2^{n-1}+1-2^{m-1}-2^{|B|-1}", 2 ** (n - 1) + 1 - 2 ** (m - 1) - 2 ** (b - 1),
            2 ** (n - 1) - 2 ** (n - 1 - b)),
        Row("2^{n-1}-2^{m-1}", 2 ** (n - 1) - 2 ** (m - 1), 2 ** (n - 1 - b) - 2 ** (n - m - b)),
        Row("2^{n-1}-2^{m-1}-2^{|B|-1}", 2 ** (n - 1) - 2 ** (m - 1) - 2 ** (b - 1),
            2 ** (n - 1) - 2 ** (n - 1 - b) - 2 ** (n - m) + 2 ** (n - m - b)),
    ]


# ---- two ideals, kind D ---------------------------------------------------

def _pair_sizes(x1, x2, x12, room, what):
    _require(0 <= x12 < x1 and x12 < x2, f"{what}_1 and {what}_2 must be incomparable")
    union = x1 + x2 - x12
    _require(union <= room, f"|{what}_1 | {what}_2| = {union} exceeds {room}")
    return union, x1 - x12, x2 - x12


def table3_rows(n, a1, a2, a12, fix_typos=True):
    u, d1, d2 = _pair_sizes(a1, a2, a12, n, "A")
    base = 2 ** (n - u)
    # printed: A_1 minus A_2 paired with the |A_2| row and vice versa
    s1, s2 = (d2, d1) if fix_typos else (d1, d2)
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", 2 ** (n - 1), base - 1),
        Row("2^{n-1}-2^{|A_2|-1}", 2 ** (n - 1) - 2 ** (a2 - 1), base * (2 ** s1 - 1)),
        Row("2^{n-1}-2^{|A_1|-1}", 2 ** (n - 1) - 2 ** (a1 - 1), base * (2 ** s2 - 1)),
        Row("2^{n-1}-2^{|A_1|-1}-2^{|A_2|-1}", 2 ** (n - 1) - 2 ** (a1 - 1) - 2 ** (a2 - 1),
            base * (2 ** d1 - 1) * (2 ** d2 - 1)),
        Row("2^{n-1}-2^{|A_1|-1}-2^{|A_2|-1}+2^{|A_1&A_2|-1}",
            2 ** (n - 1) - 2 ** (a1 - 1) - 2 ** (a2 - 1) + _half_pow(a12),
            base * (2 ** a12 - 1) * 2 ** (d1 + d2)),
    ]


def _half_pow(e):
    # 2^{e-1}; the e = 0 rows carry frequency zero and are dropped
    return 2 ** (e - 1) if e >= 1 else 0


def table4_rows(n, m, b1, b2, b12, fix_typos=True):
    _require(1 <= m, "need m >= 1")
    _require(b1 >= 1 and b2 >= 1, "both upper parts must be nonempty")
    u, d1, d2 = _pair_sizes(b1, b2, b12, n - m, "B")
    h = 2 ** (n - 1)
    lo = 2 ** (n - m - u)   # 2^{n-m-|B_1 u B_2|}
    mid = 2 ** (n - 1 - u)  # 2^{n-1-|B_1 u B_2|}
    p, q, r = 2 ** b1, 2 ** b2, 2 ** b12
    e1, e2 = 2 ** d1 - 1, 2 ** d2 - 1
    e2_printed = e2 if fix_typos else 2 ** 0 - 1
    core = h - 2 ** (m - 1) + 1
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", h, lo - 1),
        Row("2^{n-1}-2^{|B_1|-1}", h - p // 2, lo * e1),
        Row("2^{n-1}-2^{|B_2|-1}", h - q // 2, lo * e2),
        Row("2^{n-1}-2^{|B_1|-1}-2^{|B_2|-1}", h - p // 2 - q // 2, lo * e1 * e2),
        Row("2^{n-1}-2^{|B_1|-1}-2^{|B_2|-1}+2^{|B_1&B_2|-1}", h - p // 2 - q // 2 + _half_pow(b12),
            lo * (r - 1) * 2 ** (d1 + d2)),
        Row("2^{n-1}-2^{m-1}+1-2^{|B_1|}-2^{|B_2|}+2^{|B_1&B_2|}", core - p - q + r, mid),
        Row("2^{n-1}-2^{m-1}+1-2^{|B_2|}-2^{|B_1|-1}+2^{|B_1&B_2|}", core - q - p // 2 + r, mid * e1),
        Row("2^{n-1}-2^{m-1}+1-2^{|B_1|}-2^{|B_2|-1}+2^{|B_1&B_2|}", core - p - q // 2 + r, mid * e2),
        Row("2^{n-1}-2^{m-1}+1-2^{|B_1|-1}-2^{|B_2|-1}+2^{|B_1&B_2|}", core - p // 2 - q // 2 + r, mid * e1 * e2),
        Row("2^{n-1}-2^{m-1}+1-2^{|B_1|-1}-2^{|B_2|-1}+2^{|B_1&B_2|-1}", core - p // 2 - q // 2 + _half_pow(b12),
            mid * (r - 1) * 2 ** (d1 + d2)),
        Row("2^{n-1}-2^{m-1}", h - 2 ** (m - 1), mid - lo),
        Row("2^{n-1}-2^{m-1}-2^{|B_1|-1}", h - 2 ** (m - 1) - p // 2, (mid - lo) * e1),
        Row("2^{n-1}-2^{m-1}-2^{|B_2|-1}", h - 2 ** (m - 1) - q // 2, (mid - lo) * e2_printed),
        Row("2^{n-1}-2^{m-1}-2^{|B_1|-1}-2^{|B_2|-1}", h - 2 ** (m - 1) - p // 2 - q // 2,
            lo * (2 ** (m - 1) - 1) * e1 * e2),
        Row("2^{n-1}-2^{m-1}-2^{|B_1|-1}-2^{|B_2|-1}+2^{|B_1&B_2|-1}",
            h - 2 ** (m - 1) - p // 2 - q // 2 + _half_pow(b12),
            lo * (2 ** (m - 1) - 1) * (r - 1) * 2 ** (d1 + d2)),
    ]


# ---- single ideal, kind f -------------------------------------------------

def table5_rows(n, a):
    _require(1 <= a <= n, "need 1 <= |A| <= n")
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", 2 ** (n - 1), 2 ** n - 1),
        Row("2^{|A|}-1", 2 ** a - 1, 1),
        Row("2^{n-1}-1+2^{|A|}", 2 ** (n - 1) - 1 + 2 ** a, 2 ** (n - a) - 1),
        Row("2^{n-1}-1", 2 ** (n - 1) - 1, 2 ** n - 2 ** (n - a)),
    ]


def table6_rows(n, m, b):
    _require(1 <= m < n and 1 <= b <= n - m, "need 1 <= m < n and 1 <= |B| <= n-m")
    h = 2 ** (n - 1)
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", h, 2 ** n - 1 + h - 2 ** (n - 1 - b)),
        Row("2^m+2^{|B|}-2", 2 ** m + 2 ** b - 2, 1),
        Row("2^{n-1}-2+2^m+2^{|B|}", h - 2 + 2 ** m + 2 ** b, 2 ** (n - m - b) - 1),
        Row("2^{n-1}-2+2^m", h - 2 + 2 ** m, 2 ** (n - m) - 2 ** (n - m - b)),
        Row("2^{n-1}-2^{|B|}", h - 2 ** b, 2 ** (n - 1 - b)),
        Row("2^{n-1}-2+2^{|B|}", h - 2 + 2 ** b, 2 ** (n - 1 - b) - 2 ** (n - m - b)),
        Row("2^{n-1}-2", h - 2, h - 2 ** (n - 1 - b) - 2 ** (n - m) + 2 ** (n - m - b)),
    ]


# ---- two ideals, kind f ---------------------------------------------------

def table7_rows(n, a1, a2, a12, fix_typos=True):
    u, d1, d2 = _pair_sizes(a1, a2, a12, n, "A")
    h, base = 2 ** (n - 1), 2 ** (n - u)
    p, q, r = 2 ** a1, 2 ** a2, 2 ** a12
    # printed: the two one-sided rows carry each other's set difference
    s1, s2 = (d2, d1) if fix_typos else (d1, d2)
    return [
        Row("0", 0, 1),
        Row("2^{n-1}", h, 2 ** n - 1),
        Row("2^{|A_1|}+2^{|A_2|}-2^{|A_1&A_2|}-1", p + q - r - 1, 1),
        Row("2^{n-1}+2^{|A_1|}+2^{|A_2|}-2^{|A_1&A_2|}-1", h + p + q - r - 1, base - 1),
        Row("2^{n-1}+2^{|A_1|}-2^{|A_1&A_2|}-1", h + p - r - 1, base * (2 ** s1 - 1)),
        Row("2^{n-1}+2^{|A_2|}-2^{|A_1&A_2|}-1", h + q - r - 1, base * (2 ** s2 - 1)),
        Row("2^{n-1}-2^{|A_1&A_2|}-1", h - r - 1, base * (2 ** d1 - 1) * (2 ** d2 - 1)),
        Row("2^{n-1}-1", h - 1, base * (r - 1) * 2 ** (d1 + d2)),
    ]


def table8_rows(n, m, b1, b2, b12, fix_typos=True):
    _require(1 <= m, "need m >= 1")
    _require(b1 >= 1 and b2 >= 1, "both upper parts must be nonempty")
    u, d1, d2 = _pair_sizes(b1, b2, b12, n - m, "B")
    h = 2 ** (n - 1)
    lo = 2 ** (n - m - u)
    mid = 2 ** (n - 1 - u)
    M = 2 ** m
    p, q, r = 2 ** b1, 2 ** b2, 2 ** b12
    e1, e2 = 2 ** d1 - 1, 2 ** d2 - 1
    e2_printed = e2 if fix_typos else 2 ** 0 - 1
    spread = 2 ** (d1 + d2)
    # printed: odd-v one-sided rows swap their set differences, and the odd-v
    # row hitting both differences carries spurious -2^{|B_i|-1} terms
    o1, o2 = (e1, e2) if fix_typos else (e2, e1)
    both = h + r if fix_typos else h + r - p // 2 - q // 2
    return [
        Row("0", 0, 1),
        Row("2^m-2+2^{|B_1|}+2^{|B_2|}-2^{|B_1&B_2|}", M - 2 + p + q - r, 1),
        Row("2^{n-1}+2^m-2+2^{|B_1|}+2^{|B_2|}-2^{|B_1&B_2|}", h + M - 2 + p + q - r, lo - 1),
        Row("2^{n-1}+2^m-2+2^{|B_2|}-2^{|B_1&B_2|}", h + M - 2 + q - r, lo * e1),
        Row("2^{n-1}+2^m-2+2^{|B_1|}-2^{|B_1&B_2|}", h + M - 2 + p - r, lo * e2),
        Row("2^{n-1}+2^m-2-2^{|B_1&B_2|}", h + M - 2 - r, lo * e1 * e2),
        Row("2^{n-1}+2^m-2", h + M - 2, lo * (r - 1) * spread),
        Row("2^{n-1}-2^{|B_1|}-2^{|B_2|}+2^{|B_1&B_2|}", h - p - q + r, mid),
        Row("2^{n-1}-2^{|B_2|}+2^{|B_1&B_2|}", h - q + r, mid * o1),
        Row("2^{n-1}-2^{|B_1|}+2^{|B_1&B_2|}", h - p + r, mid * o2),
        Row("2^{n-1}+2^{|B_1&B_2|}-2^{|B_1|-1}-2^{|B_2|-1}", both, mid * e1 * e2),
        Row("2^{n-1}", h, 2 ** n - 1 + mid * (r - 1) * spread),
        Row("2^{n-1}-2+2^{|B_1|}+2^{|B_2|}-2^{|B_1&B_2|}", h - 2 + p + q - r, mid - lo),
        Row("2^{n-1}-2+2^{|B_2|}-2^{|B_1&B_2|}", h - 2 + q - r, (mid - lo) * e1),
        Row("2^{n-1}-2+2^{|B_1|}-2^{|B_1&B_2|}", h - 2 + p - r, (mid - lo) * e2_printed),
        Row("2^{n-1}-2-2^{|B_1&B_2|}", h - 2 - r, lo * (2 ** (m - 1) - 1) * e1 * e2),
        Row("2^{n-1}-2", h - 2, lo * spread * (2 ** (m - 1) - 1) * (r - 1)),
    ]


def table1(n, a):
    return normalize(table1_rows(n, a), n)


def table2(n, m, b):
    return normalize(table2_rows(n, m, b), n)


def table3(n, a1, a2, a12, fix_typos=True):
    return normalize(table3_rows(n, a1, a2, a12, fix_typos), n)


def table4(n, m, b1, b2, b12, fix_typos=True):
    return normalize(table4_rows(n, m, b1, b2, b12, fix_typos), n)


def table5(n, a):
    return normalize(table5_rows(n, a), n + 1)


def table6(n, m, b):
    return normalize(table6_rows(n, m, b), n + 1)


def table7(n, a1, a2, a12, fix_typos=True):
    return normalize(table7_rows(n, a1, a2, a12, fix_typos), n + 1)


def table8(n, m, b1, b2, b12, fix_typos=True):
    return normalize(table8_rows(n, m, b1, b2, b12, fix_typos), n + 1)


TABLES = {1: table1, 2: table2, 3: table3, 4: table4, 5: table5, 6: table6, 7: table7, 8: table8}
TABLE_ROWS = {1: table1_rows, 2: table2_rows, 3: table3_rows, 4: table4_rows,
              5: table5_rows, 6: table6_rows, 7: table7_rows, 8: table8_rows}
# (kind, parameter names) per table
TABLE_SIGNATURE = {
    1: (Kind.D, ("n", "a")),
    2: (Kind.D, ("n", "m", "b")),
    3: (Kind.D, ("n", "a1", "a2", "a12")),
    4: (Kind.D, ("n", "m", "b1", "b2", "b12")),
    5: (Kind.F, ("n", "a")),
    6: (Kind.F, ("n", "m", "b")),
    7: (Kind.F, ("n", "a1", "a2", "a12")),
    8: (Kind.F, ("n", "m", "b1", "b2", "b12")),
}
# tables whose printed rows contain errata
TYPO_TABLES = (3, 4, 7, 8)


# ---- lengths ----------------------------------------------------------------

def downset_count(table: int, params: dict) -> int:
    """|down-set collection| by inclusion-exclusion over the table's ideals."""
    n = params["n"]
    if table in (1, 5):
        return 2 ** params["a"]
    if table in (2, 6):
        return 2 ** params["m"] + 2 ** params["b"] - 1
    if table in (3, 7):
        return 2 ** params["a1"] + 2 ** params["a2"] - 2 ** params["a12"]
    m = params["m"]
    one = lambda b: 2 ** m + 2 ** b - 1  # noqa: E731
    return one(params["b1"]) + one(params["b2"]) - one(params["b12"])


def code_length(table: int, params: dict) -> int:
    n = params["n"]
    if TABLE_SIGNATURE[table][0] is Kind.F:
        return 2 ** n - 1
    return 2 ** n - downset_count(table, params)


def printed_length(table: int, params: dict) -> int | None:
    """The length formula as stated alongside Tables 1-4 (None for 5-8)."""
    n = params["n"]
    if table == 1:
        return 2 ** n - 2 ** params["a"]
    if table == 2:
        return 2 ** n - 2 ** params["m"] - 2 ** params["b"] + 1
    if table == 3:
        return 2 ** n - 2 ** params["a1"] - 2 ** params["a2"] - 2 ** params["a12"]
    if table == 4:
        return 2 ** n - 2 ** params["b1"] - 2 ** params["b2"] - 2 ** params["b12"]
    return None


def stated_parameters(table: int, params: dict) -> dict[str, int]:
    """Dimension and minimum distance stated alongside each table, where a
    value is stated for these parameters (empty dict otherwise)."""
    n = params["n"]
    if table == 1:
        return {"k": n, "d": 2 ** (n - 1) - 2 ** (params["a"] - 1)}
    if table == 2:
        return {"k": n - 1} if (params["m"], params["b"]) == (1, n - 1) else {}
    if table == 3:
        return {"k": n, "d": 2 ** (n - 1) - 2 ** (params["a1"] - 1) - 2 ** (params["a2"] - 1)}
    if table == 4:
        m, b1, b2, b12 = params["m"], params["b1"], params["b2"], params["b12"]
        return {"k": n, "d": 2 ** (n - 1) - 2 ** (m - 1) + 1 - 2 ** b1 - 2 ** b2 + 2 ** b12}
    if table == 5:
        return {"k": n} if params["a"] == 1 else {}
    if table == 6:
        return {"k": n} if (params["m"], params["b"]) == (1, n - 1) else {}
    if table == 7:
        a1, a2, a12 = params["a1"], params["a2"], params["a12"]
        return {"k": n + 1, "d": 2 ** a1 + 2 ** a2 - 2 ** a12 - 1}
    m, b1, b2, b12 = params["m"], params["b1"], params["b2"], params["b12"]
    return {"k": n + 1, "d": 2 ** m - 2 + 2 ** b1 + 2 ** b2 - 2 ** b12}


# ---- admissible parameters and witness codes --------------------------------

def admissible_params(table: int, n_max: int, n_min: int = 2):
    """Every parameter tuple each table admits for n_min <= n <= n_max, as dicts."""
    for n in range(n_min, n_max + 1):
        if table == 1:
            for a in range(1, n):
                yield {"n": n, "a": a}
        elif table == 5:
            for a in range(1, n + 1):
                yield {"n": n, "a": a}
        elif table in (2, 6):
            for m in range(1, n):
                for b in range(1, n - m + 1):
                    yield {"n": n, "m": m, "b": b}
        elif table in (3, 7):
            for a1, a2, a12 in _pairs(n):
                yield {"n": n, "a1": a1, "a2": a2, "a12": a12}
        elif table in (4, 8):
            for m in range(1, n):
                for b1, b2, b12 in _pairs(n - m):
                    yield {"n": n, "m": m, "b1": b1, "b2": b2, "b12": b12}
        else:
            raise TableError(f"no table {table}")


def _pairs(room):
    for x1 in range(1, room + 1):
        for x2 in range(1, room + 1):
            for x12 in range(0, min(x1, x2)):
                if x1 + x2 - x12 <= room:
                    yield x1, x2, x12


def evaluate(table: int, params: dict, fix_typos: bool = True) -> WeightDistribution:
    names = TABLE_SIGNATURE[table][1]
    args = [params[k] for k in names]
    if table in TYPO_TABLES:
        return TABLES[table](*args, fix_typos=fix_typos)
    return TABLES[table](*args)


def rows(table: int, params: dict, fix_typos: bool = True) -> list[Row]:
    names = TABLE_SIGNATURE[table][1]
    args = [params[k] for k in names]
    if table in TYPO_TABLES:
        return TABLE_ROWS[table](*args, fix_typos=fix_typos)
    return TABLE_ROWS[table](*args)


def _overlapping(first, size1, size2, overlap, ascending):
    """Two runs inside `first` of the given sizes sharing `overlap` elements,
    packed from the bottom (ascending) or the top of `first`."""
    span = size1 + size2 - overlap
    pool = first[:span] if ascending else first[len(first) - span:]
    if not ascending:
        pool = pool[::-1]
    return sorted(pool[:size1]), sorted(pool[size1 - overlap:size1 - overlap + size2])


def witness_spec(table: int, params: dict, variant: int = 0) -> CodeSpec:
    """A concrete code realizing the table's parameters. Variant 0 packs sets
    at the bottom of each level (and uses the antichain H(n, n) for the
    lower-level-only tables); variant 1 packs them at the top and takes the
    smallest lower level that fits."""
    kind = TABLE_SIGNATURE[table][0]
    n = params["n"]
    asc = variant == 0
    if table in (1, 5):
        a = params["a"]
        m = n if asc else a
        P = make_hierarchical(m, n)
        lower = list(range(1, m + 1))
        A = lower[:a] if asc else lower[m - a:]
        ideals = [mask_of(A)]
    elif table in (3, 7):
        a1, a2, a12 = params["a1"], params["a2"], params["a12"]
        m = n if asc else a1 + a2 - a12
        P = make_hierarchical(m, n)
        A1, A2 = _overlapping(list(range(1, m + 1)), a1, a2, a12, asc)
        ideals = [mask_of(A1), mask_of(A2)]
    elif table in (2, 6):
        m, b = params["m"], params["b"]
        P = make_hierarchical(m, n)
        upper = list(range(m + 1, n + 1))
        B = upper[:b] if asc else upper[len(upper) - b:]
        ideals = [mask_of(range(1, m + 1)) | mask_of(B)]
    elif table in (4, 8):
        m, b1, b2, b12 = params["m"], params["b1"], params["b2"], params["b12"]
        P = make_hierarchical(m, n)
        B1, B2 = _overlapping(list(range(m + 1, n + 1)), b1, b2, b12, asc)
        low = mask_of(range(1, m + 1))
        ideals = [low | mask_of(B1), low | mask_of(B2)]
    else:
        raise TableError(f"no table {table}")
    return CodeSpec(P, IdealFamily.of(P, ideals), kind)
