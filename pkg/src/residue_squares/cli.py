"""Command line front end: tables, decompositions, scans, witnesses, checks.

Single-answer commands emit one JSON document with schema_version "1";
scans and tables emit TSV streams.  Exit codes: 0 success, 1 invalid
input, 2 domain-level nonexistence (nothing to decompose or witness),
3 verification-suite failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .engine import (
    BelowBound,
    ConstructionFailed,
    NoSU,
    NotCoprime,
    OutOfRange,
    SquareRepresentation,
    asu_value,
    decompose_asu,
    decompose_su,
    effective_bound,
    make_class,
    min_squares_terms,
    su_exists,
    su_value,
    verify_representation,
)
from .scanner import (
    asu_lower_witnesses,
    classify_exception,
    scan_exceptions,
    su_extremal_witness,
)
from .verify import run_suite

SCHEMA_VERSION = "1"


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on bad input; the contract reserves 2 for
    domain-level nonexistence, so remap usage errors to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _exact_decimal(value: Fraction) -> str:
    """Exact decimal string; every bound denominator divides 16."""
    whole, rem = divmod(value.numerator, value.denominator)
    if rem == 0:
        return str(whole)
    digits = f"{rem * 10000 // value.denominator:04d}".rstrip("0")
    return f"{whole}.{digits}"


def _congruence_case(m: int) -> str:
    if m % 2:
        return "odd"
    if m % 4:
        return "2 mod 4"
    if m % 12 == 0:
        return "0 mod 12"
    return "0 mod 4"


def _record(name: str, echo: dict, payload: dict) -> str:
    doc = {"schema_version": SCHEMA_VERSION, "command": {"name": name, **echo}, "payload": payload}
    return json.dumps(doc, sort_keys=True)


def _error_record(name: str, echo: dict, code: str, reason: str) -> str:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "command": {"name": name, **echo},
        "error": {"code": code, "reason": reason},
    }
    return json.dumps(doc, sort_keys=True)


def _cmd_tables(args) -> int:
    print("m\tcase\tasu\tsu\tbound_d1")
    for m in range(1, args.max_m + 1):
        cls = make_class(m, 1)
        print(
            f"{m}\t{_congruence_case(m)}\t{asu_value(cls)}\t{su_value(cls)}"
            f"\t{_exact_decimal(effective_bound(cls))}"
        )
    return 0


def _cmd_decompose(args) -> int:
    echo = {"n": args.n, "m": args.m, "d": args.d, "mode": args.mode}
    if args.cap is not None:
        echo["cap"] = args.cap
    try:
        cls = make_class(args.m, args.d)
    except NotCoprime as exc:
        print(_error_record("decompose", echo, "not-coprime", str(exc)), file=sys.stderr)
        return 1
    if args.n < 1:
        print(_error_record("decompose", echo, "bad-n", "n must be positive"), file=sys.stderr)
        return 1
    try:
        if args.mode == "min":
            cap = args.cap
            if cap is None:
                cap = su_value(cls) if su_exists(cls) else asu_value(cls)
            terms = min_squares_terms(args.n, cls, cap)
            if terms is None:
                print(
                    _error_record(
                        "decompose", echo, "unrepresentable",
                        f"no representation of {args.n} with at most {cap} terms",
                    )
                )
                return 2
            rep = SquareRepresentation(args.n, tuple(terms))
        elif args.mode == "asu":
            rep = decompose_asu(args.n, cls)
        else:
            rep = decompose_su(args.n, cls)
    except (BelowBound, ConstructionFailed, NoSU) as exc:
        code = {
            BelowBound: "below-bound",
            ConstructionFailed: "construction-failed",
            NoSU: "no-su",
        }[type(exc)]
        print(_error_record("decompose", echo, code, str(exc)))
        return 2
    if not verify_representation(rep, cls):
        raise RuntimeError(f"representation failed re-verification: {rep}")
    payload = {
        "n": args.n,
        "m": args.m,
        "d": args.d,
        "mode": args.mode,
        "terms": list(rep.terms),
        "count": len(rep.terms),
        "verified": True,
    }
    print(_record("decompose", echo, payload))
    return 0


def _cmd_scan(args) -> int:
    echo = {"m": args.m, "d": args.d}
    try:
        cls = make_class(args.m, args.d)
    except NotCoprime as exc:
        print(_error_record("scan", echo, "not-coprime", str(exc)), file=sys.stderr)
        return 1
    if args.max_n < 1:
        print(_error_record("scan", echo, "bad-max-n", "max-n must be positive"), file=sys.stderr)
        return 1
    report = scan_exceptions(cls, args.max_n, jobs=args.jobs, keep_counts=not args.exceptions_only)
    out = sys.stdout
    if args.exceptions_only:
        for n in report.exceptions:
            cl = classify_exception(n)
            if cl.kind == "3ell^2":
                label = f"3*{cl.ell}^2 ({cl.ell} mod 12 = {cl.ell_mod_12})"
            else:
                label = "other"
            out.write(f"{n}\t{label}\n")
    else:
        for n, count in report.counts:
            out.write(f"{n}\t{count}\n")
    return 0


def _cmd_witness(args) -> int:
    echo = {"m": args.m, "d": args.d, "kind": args.kind, "count": args.count}
    try:
        cls = make_class(args.m, args.d)
    except NotCoprime as exc:
        print(_error_record("witness", echo, "not-coprime", str(exc)), file=sys.stderr)
        return 1
    if args.kind == "su-extremal":
        try:
            n = su_extremal_witness(cls)
        except NoSU as exc:
            print(_error_record("witness", echo, "no-su", str(exc)))
            return 2
        except OutOfRange as exc:
            print(_error_record("witness", echo, "out-of-range", str(exc)))
            return 2
        payload = {"n": n, "min_terms": n, "kind": args.kind}
        print(_record("witness", echo, payload))
        return 0
    floor = cls.M * cls.m + 2 if cls.m % 2 == 0 else cls.m + 3
    for n in asu_lower_witnesses(cls, args.count):
        payload = {"n": n, "min_terms_at_least": floor, "kind": args.kind}
        print(_record("witness", echo, payload))
    return 0


def _cmd_verify(args) -> int:
    results = run_suite(args.suite)
    failed = False
    for res in results:
        status = "PASS" if res.passed else "FAIL"
        print(f"criterion {res.number} ({res.name}): {status} - {res.detail}")
        failed = failed or not res.passed
    return 3 if failed else 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="residue-squares", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tables", help="threshold and bound table")
    p.add_argument("--max-m", type=int, required=True, dest="max_m")
    p.set_defaults(func=_cmd_tables)

    p = sub.add_parser("decompose", help="decompose one integer")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=("min", "asu", "su"), required=True)
    p.add_argument("--cap", type=int, default=None, help="term cap for min mode")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("scan", help="three-term exception scan")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--exceptions-only", action="store_true", dest="exceptions_only")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_scan)

    p = sub.add_parser("witness", help="oracle-certified lower-bound witnesses")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--kind", choices=("asu-lower", "su-extremal"), required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("verify", help="run the acceptance suite")
    p.add_argument("--suite", choices=("basic", "full"), required=True)
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
