"""Command-line entry point: ``dhlseq {generate,analyze,verify,primes,equiv}``.

Exit codes: 0 success, 1 a check failed (or sequences are inequivalent),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from datetime import datetime, timezone

from . import __version__
from .analysis import (
    autocorr_profile,
    classify,
    equivalence_check,
    linear_complexity_report,
)
from .sequences import TUPLES, BinarySequence, ConstructionSpec, construct
from .verify import DEFAULT_FIELD_CAP, enumerate_admissible_primes, run_all

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def _parse_sequence(text: str, origin: str) -> BinarySequence:
    try:
        return BinarySequence.from_string(text)
    except ValueError as e:
        raise UsageError(f"{origin}: parse error: {e}") from None


def cmd_generate(args) -> int:
    try:
        spec = ConstructionSpec(args.p, args.tuple, args.b, args.theta)
        u = construct(spec)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if args.format == "json":
        payload = json.loads(spec.to_json())
        payload.update(period=u.period, sequence=u.to_string())
        print(json.dumps(payload))
    else:
        print(u.to_string())
    return EXIT_OK


def analyze_payload(seq: BinarySequence) -> dict:
    profile = autocorr_profile(seq)
    verdict = classify(profile)
    lc = linear_complexity_report(seq)
    return {
        "period": seq.period,
        "autocorr": verdict.verdict,
        "offpeak": sorted(verdict.offpeak_value_set),
        "degenerate": verdict.degenerate,
        "lc": lc.lc_gcd,
        "lc_bm": lc.lc_bm,
        "minimal_poly": lc.minimal_poly.to_bitstring(),
        "gcd_poly": lc.gcd_poly.to_bitstring(),
        "bm_connection": lc.bm_connection.to_bitstring(),
    }


def cmd_analyze(args) -> int:
    seq = _parse_sequence(_read_text(args.input), args.input or "<stdin>")
    if args.format == "csv":
        sys.stdout.write(autocorr_profile(seq).to_csv())
        return EXIT_OK
    data = analyze_payload(seq)
    if args.format == "json":
        print(json.dumps(data))
    else:
        print(f"period: {data['period']}")
        print(f"autocorrelation: {data['autocorr']}")
        print(f"off-peak values: {{{', '.join(map(str, data['offpeak']))}}}")
        print(f"linear complexity (gcd): {data['lc']}")
        print(f"linear complexity (BM): {data['lc_bm']}")
        print(f"minimal polynomial: {data['minimal_poly']}")
    return EXIT_OK if data["lc"] == data["lc_bm"] else EXIT_FAIL


def cmd_verify(args) -> int:
    report = run_all(args.max_p, field_cap=args.field_cap, workers=args.workers)
    if args.json:
        print(report.to_json())
    else:
        for c in report.cases:
            b = "".join(map(str, c.b))
            status = "PASS" if c.passed else "FAIL"
            print(
                f"{status} p={c.p} {c.tuple_id} b={b} LC={c.lc_actual} (expected {c.lc_expected}) "
                f"g={c.gcd_poly.to_bitstring()} {c.autocorr_verdict}"
            )
        for p, ok in report.value_pattern.items():
            print(f"value pattern p={p}: {'skipped' if ok is None else 'PASS' if ok else 'FAIL'}")
        for r in report.root_checks:
            field = "skipped" if r.field_route is None else r.field_route
            print(f"no nontrivial roots p={r.p}: field={field} poly={r.poly_route} -> {'PASS' if r.passed else 'FAIL'}")
        for m in report.equivalence:
            print(f"equivalence p={m.p} {m.tuple_id}: {'PASS' if m.matches_expected else 'FAIL'}")
        s = report.summary
        total = s["pass"] + s["fail"]
        print(f"{s['pass']}/{total} pass")
    return EXIT_OK if report.all_passed else EXIT_FAIL


def cmd_primes(args) -> int:
    print(" ".join(map(str, enumerate_admissible_primes(args.max))))
    return EXIT_OK


def cmd_equiv(args) -> int:
    a = _parse_sequence(_read_text(args.a), args.a)
    b = _parse_sequence(_read_text(args.b), args.b)
    if a.period != b.period:
        raise UsageError(f"periods differ: {a.period} vs {b.period}")
    result = equivalence_check(a, b)
    print(result.describe())
    return EXIT_OK if result else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhlseq",
        description="Interleaved period-4p sequences with optimal autocorrelation magnitude.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="print one constructed sequence")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--tuple", required=True, choices=list(TUPLES))
    g.add_argument("--b", required=True, help="4 bits, b(0) first, e.g. 0101")
    g.add_argument("--theta", type=int, default=None, help="primitive root (default: smallest)")
    g.add_argument("--format", choices=["bits", "json"], default="bits")
    g.set_defaults(func=cmd_generate)

    a = sub.add_parser("analyze", help="autocorrelation and linear complexity of a 0/1 line")
    a.add_argument("--input", default=None, help="file to read (default: stdin)")
    a.add_argument("--format", choices=["text", "json", "csv"], default="text")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="sweep admissible primes, tuples and b vectors")
    v.add_argument("--max-p", type=int, default=200)
    v.add_argument("--json", action="store_true")
    v.add_argument("--field-cap", type=int, default=DEFAULT_FIELD_CAP)
    v.add_argument("--workers", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    pr = sub.add_parser("primes", help="list admissible primes")
    pr.add_argument("--max", type=int, default=200)
    pr.set_defaults(func=cmd_primes)

    e = sub.add_parser("equiv", help="exhaustive equivalence test of two sequences")
    e.add_argument("--a", required=True, help="first sequence file")
    e.add_argument("--b", required=True, help="second sequence file")
    e.set_defaults(func=cmd_equiv)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    if args.verbose:
        logging.basicConfig(level=logging.INFO, format="%(levelname)s %(name)s: %(message)s")
        stamp = datetime.now(timezone.utc).isoformat(timespec="seconds")
        print(f"dhlseq {__version__} {args.command} started {stamp}", file=sys.stderr)
    try:
        return args.func(args)
    except UsageError as e:
        print(f"dhlseq {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
