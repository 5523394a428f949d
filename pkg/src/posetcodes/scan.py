"""Sweep over one- and two-ideal families of H(m, n), certifying each code."""

from __future__ import annotations

import csv
import io
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .analysis import Certificate, certify
from .codes import CodeReport, CodeSpec, Kind, analytic_code, oracle_cap, oracle_code
from .poset import IdealFamily, PosetError, make_hierarchical, mask_of

CSV_HEADER = ("m", "n", "|A1|", "|B1|", "|A2|", "|B2|", "|∩|", "kind", "length", "k", "d",
              "is_griesmer", "griesmer_optimal", "minimal", "ab_violating")

FILTERS = ("griesmer", "minimal", "ab-violating")


@dataclass(frozen=True, order=True)
class FamilyShape:
    """A family of H(m, n) up to relabelling within each level.

    A single ideal is (a1, b1) with b1 = 0 or a1 = m. A pair either lives in
    the lower level (b1 = b2 = 0, overlap = |A1 & A2|) or contains the whole
    lower level (a1 = a2 = m, overlap = |B1 & B2|). Nested pairs are left out
    since they give the same code as their larger member.
    """

    n: int
    m: int
    kind: str
    a1: int
    b1: int
    a2: int = -1
    b2: int = -1
    overlap: int = -1

    @property
    def is_pair(self) -> bool:
        return self.a2 >= 0

    def spec(self) -> CodeSpec:
        P = make_hierarchical(self.m, self.n)
        lower = list(range(1, self.m + 1))
        upper = list(range(self.m + 1, self.n + 1))
        if not self.is_pair:
            ideal = mask_of(lower[:self.a1] + upper[:self.b1])
            return CodeSpec(P, IdealFamily.of(P, [ideal]), Kind(self.kind))
        if self.b1 == 0:
            pool, first, second, base = lower, self.a1, self.a2, []
        else:
            pool, first, second, base = upper, self.b1, self.b2, lower
        start = first - self.overlap
        I1 = mask_of(base + pool[:first])
        I2 = mask_of(base + pool[start:start + second])
        return CodeSpec(P, IdealFamily.of(P, [I1, I2]), Kind(self.kind))

    def csv_prefix(self) -> list:
        blank = lambda x: "" if x < 0 else x  # noqa: E731
        return [self.m, self.n, self.a1, self.b1, blank(self.a2), blank(self.b2), blank(self.overlap), self.kind]


def _pairs(room: int) -> Iterator[tuple[int, int, int]]:
    """(x1 <= x2, overlap) for two incomparable subsets of a room-element set."""
    for x1 in range(1, room + 1):
        for x2 in range(x1, room + 1):
            for x12 in range(min(x1, x2)):
                if x1 + x2 - x12 <= room:
                    yield x1, x2, x12


def family_shapes(n_max: int, kinds: Iterable[str] = ("D", "f"), n_min: int = 2) -> list[FamilyShape]:
    """Every admissible shape, sorted by (n, m, kind, sizes)."""
    out = []
    kinds = [Kind.parse(k).value for k in kinds]
    for n in range(n_min, n_max + 1):
        for m in range(1, n + 1):
            for kind in kinds:
                singles = [(a, 0) for a in range(1, m + 1)] + [(m, b) for b in range(1, n - m + 1)]
                for a, b in singles:
                    if kind == "D" and a + b == n:
                        continue  # the ideal is [n] and the defining set is empty
                    out.append(FamilyShape(n, m, kind, a, b))
                for a1, a2, a12 in _pairs(m):
                    out.append(FamilyShape(n, m, kind, a1, 0, a2, 0, a12))
                for b1, b2, b12 in _pairs(n - m):
                    out.append(FamilyShape(n, m, kind, m, b1, m, b2, b12))
    return sorted(out)


@dataclass
class ScanRow:
    shape: FamilyShape
    report: CodeReport
    certificate: Certificate

    def passes(self, filters: Iterable[str]) -> bool:
        cert = self.certificate
        checks = {
            "griesmer": cert.is_griesmer,
            "minimal": bool(cert.minimal_exhaustive),
            "ab-violating": bool(cert.ab_violating_minimal),
        }
        return all(checks[f] for f in filters)

    def csv_row(self) -> list:
        cert = self.certificate
        flag = lambda x: "" if x is None else str(bool(x)).lower()  # noqa: E731
        return self.shape.csv_prefix() + [
            self.report.length, self.report.dimension, self.report.w_min,
            flag(cert.is_griesmer), flag(cert.griesmer_distance_optimal),
            flag(cert.minimal_exhaustive), flag(cert.ab_violating_minimal),
        ]


def certify_shape(shape: FamilyShape, cross_check: bool = False) -> ScanRow:
    spec = shape.spec()
    report = analytic_code(spec)
    codewords = None
    if shape.n <= oracle_cap():
        oracle = oracle_code(spec)
        if cross_check and not oracle.same_code_stats(report):
            raise AssertionError(f"analytic and enumerated codes disagree for {shape}")
        codewords = oracle.codewords
    cert = certify(report, codewords=codewords, exhaustive=codewords is not None)
    return ScanRow(shape, report, cert)


def _certify_checked(shape: FamilyShape) -> ScanRow:
    return certify_shape(shape, cross_check=True)


def run_scan(n_max: int, kinds: Iterable[str] = ("D", "f"), filters: Iterable[str] = (),
             oracle: bool = False, jobs: int = 1) -> Iterator[ScanRow]:
    """Rows in (n, m, kind, sizes) order. Arguments are validated eagerly;
    certification happens as the result is iterated."""
    if oracle and n_max > oracle_cap():
        raise PosetError(f"--oracle needs n_max <= {oracle_cap()}, got {n_max}")
    filters = list(filters)
    for f in filters:
        if f not in FILTERS:
            raise ValueError(f"unknown filter {f!r}")
    shapes = family_shapes(n_max, kinds)
    work = _certify_checked if oracle else certify_shape
    return _stream(shapes, work, filters, jobs)


def _stream(shapes, work, filters, jobs) -> Iterator[ScanRow]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = pool.map(work, shapes, chunksize=16)
            yield from (r for r in rows if r.passes(filters))
    else:
        for shape in shapes:
            row = work(shape)
            if row.passes(filters):
                yield row


def write_csv(rows: Iterable[ScanRow], out=None) -> str | None:
    buf = out if out is not None else io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(row.csv_row())
    return buf.getvalue() if out is None else None
