"""posetcodes command line: construct, verify, scan."""

from __future__ import annotations

import argparse
import csv
import json
import sys
from collections import defaultdict

from .analysis import certify
from .codes import Kind, analytic_code, oracle_cap, oracle_code, weight_enumerator_string, CodeSpec
from .poset import PosetError, fmt_mask, parse_family, parse_poset
from .scan import FILTERS, run_scan, write_csv
from .tables import TableError
from .verify import FIXTURES, run_verify

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="posetcodes", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build one code and certify it")
    p.add_argument("--poset", required=True, help="hier:<m>,<n> or 'n=<n>; cover=i<j,...'")
    p.add_argument("--ideals", required=True,
                   help="generator sets separated by ';', elements by ',' (closed automatically)")
    p.add_argument("--kind", default="D", help="D (defining-set code) or f (Boolean-function code)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--oracle", action="store_true", help="cross-check against every enumerated codeword")

    p = sub.add_parser("verify", help="run the regression fixtures")
    p.add_argument("--strict", action="store_true", help="treat discrepancies as failures")
    p.add_argument("--only", action="append", default=[], metavar="NAME",
                   help=f"fixture or group to run (repeatable); fixtures: {', '.join(FIXTURES)}")
    p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("scan", help="certify every one- and two-ideal family of H(m, n)")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--kind", action="append", default=[], help="D or f (repeatable; default both)")
    p.add_argument("--filter", action="append", default=[], choices=FILTERS)
    p.add_argument("--oracle", action="store_true", help="cross-check analytic against enumerated codes")
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _spec(args) -> CodeSpec:
    try:
        P = parse_poset(args.poset)
        F = parse_family(P, args.ideals)
        return CodeSpec(P, F, Kind.parse(args.kind))
    except (PosetError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_construct(args, out) -> int:
    spec = _spec(args)
    if args.oracle and spec.n > oracle_cap():
        raise UsageError(f"--oracle needs n <= {oracle_cap()}, got n = {spec.n}")
    try:
        report = analytic_code(spec)
    except PosetError as exc:
        raise UsageError(str(exc)) from exc
    codewords = None
    if spec.n <= oracle_cap():
        oracle = oracle_code(spec)
        if args.oracle and not oracle.same_code_stats(report):
            print("error: analytic and enumerated codes disagree", file=sys.stderr)
            return EXIT_FAIL
        codewords = oracle.codewords
    report.certificate = certify(report, codewords=codewords, exhaustive=codewords is not None)

    if args.format == "json":
        out.write(report.to_json(indent=2) + "\n")
    elif args.format == "csv":
        cert = report.certificate.to_dict()
        writer = csv.writer(out, lineterminator="\n")
        head = ["length", "k", "d", "w_max", "enumerator"]
        writer.writerow(head + list(cert))
        writer.writerow([report.length, report.dimension, report.w_min, report.w_max,
                         weight_enumerator_string(report)] + list(cert.values()))
    else:
        _print_text(spec, report, out)
    return EXIT_OK


def _print_text(spec, report, out) -> None:
    cert = report.certificate
    ideals = ", ".join(fmt_mask(I) for I in spec.family.ideals)
    out.write(f"ideals: {ideals}   kind: {spec.kind.value}\n")
    out.write(f"[{report.length}, {report.dimension}, {report.w_min}]\n")
    out.write(f"weight enumerator: {weight_enumerator_string(report)}\n")
    out.write(f"griesmer sum {cert.griesmer_sum_at_d}: is_griesmer={cert.is_griesmer} "
              f"distance_optimal={cert.griesmer_distance_optimal} "
              f"almost_optimal={cert.griesmer_almost_optimal}\n")
    ratio = f"{cert.ab_ratio.numerator}/{cert.ab_ratio.denominator}"
    out.write(f"w_min/w_max = {ratio}  ab_sufficient={cert.ab_sufficient}\n")
    if cert.minimal_exhaustive is None:
        out.write("minimal: not checked (n above the enumeration cap)\n")
    else:
        out.write(f"minimal={cert.minimal_exhaustive} ab_violating={cert.ab_violating_minimal}\n")
    if cert.witness_weights is not None:
        wa, wb, wab = cert.witness_weights
        out.write(f"witness: wt(a)={wa} wt(b)={wb} wt(a+b)={wab}\n")


def cmd_verify(args, out) -> int:
    try:
        report = run_verify(args.only or None)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from exc
    if args.format == "json":
        payload = {
            "fixtures": [{"name": f.name, "group": f.group, "passed": f.passed, "detail": f.detail}
                         for f in report.fixtures],
            "discrepancies": [d.to_dict() for d in report.discrepancies],
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        for f in report.fixtures:
            status = "PASS" if f.passed else "FAIL"
            extra = f"  [{len(f.discrepancies)} discrepancies]" if f.discrepancies else ""
            out.write(f"{status}  {f.name:8} {f.group:9} {f.detail}{extra}\n")
        _print_discrepancies(report.discrepancies, out)
        failed = sum(not f.passed for f in report.fixtures)
        out.write(f"\n{len(report.fixtures) - failed} passed, {failed} failed, "
                  f"{len(report.discrepancies)} discrepancies\n")
    return EXIT_OK if report.ok(strict=args.strict) else EXIT_FAIL


def _print_discrepancies(found, out) -> None:
    if not found:
        return
    out.write("\ndiscrepancies (printed value vs enumerated code):\n")
    groups = defaultdict(list)
    for d in found:
        groups[(d.source, d.row_weight_expr)].append(d)
    for (source, expr), items in groups.items():
        first = items[0]
        out.write(f"  {source}: {expr}  x{len(items)}  e.g. {first.params}: "
                  f"printed {first.predicted}, observed {first.observed}\n")


def cmd_scan(args, out) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    try:
        kinds = [Kind.parse(k).value for k in (args.kind or ["D", "f"])]
        rows = run_scan(args.n_max, kinds, args.filter, oracle=args.oracle, jobs=args.jobs)
        write_csv(rows, out)
    except (PosetError, ValueError) as exc:
        raise UsageError(str(exc)) from exc
    return EXIT_OK


COMMANDS = {"construct": cmd_construct, "verify": cmd_verify, "scan": cmd_scan}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, TableError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
