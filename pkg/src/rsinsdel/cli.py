"""Command-line front end: reproducible experiments with JSON reports.

Every command emits a single JSON document on stdout (schema version 1,
sorted keys, compact separators), so identical configurations produce
byte-identical output; wall-clock timing is only added under --timing.
Failures emit a diagnostic JSON object on stderr and exit with 2 for
usage/precondition errors, 3 for exceeded guards, 4 for invariant
violations.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import analyze, bounds, construct, insdel
from .errors import GuardExceeded, InvariantViolation
from .gf import Field, field_new, prime_power
from .rscode import EvaluationVector, RsCode, parse_vector

SCHEMA = 1

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_GUARD = 3
EXIT_INVARIANT = 4


def _parse_field(text: str) -> Field:
    text = text.strip()
    if "^" in text:
        p_str, m_str = text.split("^", 1)
        return field_new(int(p_str), int(m_str))
    q = int(text)
    pm = prime_power(q)
    if pm is None:
        raise ValueError(f"--field must be a prime power, got {q}")
    return field_new(*pm)


def _parse_alpha(args) -> EvaluationVector:
    text = args.alpha.strip()
    if text.startswith("GF("):
        return parse_vector(text)
    if args.field is None:
        raise ValueError("--alpha without GF() prefix requires --field")
    fld = _parse_field(args.field)
    return EvaluationVector(fld, tuple(int(tok) for tok in text.split(",")))


def _emit(args, command: str, params: dict, result: dict, t0: float) -> None:
    doc = {"schema": SCHEMA, "command": command, "params": params, "result": result}
    if getattr(args, "timing", False):
        doc["wall_time_s"] = time.perf_counter() - t0
    payload = json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _round3(x: float) -> str:
    return f"{round(x, 3):.3f}"


def _floor3(x: float) -> str:
    return f"{math.floor(x * 1000) / 1000:.3f}"


# -- subcommand implementations ----------------------------------------------


def cmd_analyze(args) -> None:
    t0 = time.perf_counter()
    ev = _parse_alpha(args)
    params = {"alpha": ev.serialize(), "k": args.k, "method": args.method}
    if args.method == "brute":
        report = analyze.lcs_code_bruteforce(
            RsCode(ev, args.k), max_codewords=args.max_codewords
        )
        result = report.to_dict(include_timing=args.timing)
    elif args.method == "affine":
        if args.k != 2:
            raise ValueError("the affine fast path requires --k 2")
        report = analyze.lcs_code_affine(ev)
        result = report.to_dict(include_timing=args.timing)
    elif args.method == "certificate":
        if args.t is None:
            raise ValueError("--method certificate requires --t")
        cert = insdel.rank_certificate(RsCode(ev, args.k), args.t)
        params["t"] = args.t
        result = {
            "certified": cert.certified,
            "t": cert.t,
            "witness": list(map(list, cert.witness)) if cert.witness else None,
            "pairs_checked": cert.pairs_checked,
        }
    elif args.method == "optimal":
        res = analyze.is_optimal_half_rate(ev, args.k)
        result = res.to_dict()
    else:
        raise ValueError(f"unknown method {args.method!r}")
    _emit(args, "analyze", params, result, t0)


def cmd_classify(args) -> None:
    t0 = time.perf_counter()
    ev = _parse_alpha(args)
    verdict = analyze.classify_bad_ordering(ev)
    _emit(args, "classify", {"alpha": ev.serialize()}, verdict.to_dict(), t0)


def cmd_census(args) -> None:
    t0 = time.perf_counter()
    fld = _parse_field(args.field)
    result = analyze.census_2dim(
        fld,
        max_classes=args.max_classes,
        verify=args.verify,
        threads=args.threads,
        time_guard_s=args.time_guard,
    )
    params = {
        "field": fld.name(),
        "verify": args.verify,
        "max_classes": args.max_classes,
    }
    _emit(args, "census", params, result.to_dict(), t0)


def cmd_sample(args) -> None:
    t0 = time.perf_counter()
    fld = _parse_field(args.field)
    result = analyze.sample_orderings(
        fld, args.delta, args.trials, args.seed, threads=args.threads
    )
    params = {
        "field": fld.name(),
        "delta": args.delta,
        "trials": args.trials,
        "seed": args.seed,
    }
    _emit(args, "sample", params, result.to_dict(), t0)


def cmd_construct(args) -> None:
    t0 = time.perf_counter()
    fld = _parse_field(args.field)
    trace = construct.construct_half_rate(
        fld,
        args.k,
        verify_mode=args.verify,
        allow_small_q=args.allow_small_q,
        restrict_dh=args.restrict_dh,
        threads=args.threads,
    )
    params = {
        "field": fld.name(),
        "k": args.k,
        "verify": args.verify,
    }
    _emit(args, "construct", params, trace.to_dict(), t0)


def cmd_bounds(args) -> None:
    t0 = time.perf_counter()
    which = args.bound
    if which == "half-singleton":
        result = {
            "name": "half_singleton",
            "parameters": {"n": args.n, "k": args.k},
            "values": {"max_correctable": bounds.half_singleton(args.n, args.k)},
            "verdict": None,
        }
    elif which == "class-lower-bound":
        result = {
            "name": "good_class_lower_bound",
            "parameters": {"q": args.q},
            "values": {
                "classes_total": math.factorial(args.q - 2),
                "lower_bound": bounds.good_class_lower_bound(args.q),
            },
            "verdict": None,
        }
    elif which == "bad-classes":
        fld = _parse_field(str(args.q))
        tally = bounds.bad_class_count(fld)
        result = {
            "name": "bad_class_count",
            "parameters": {"q": args.q},
            "values": tally.to_dict(),
            "verdict": None,
        }
    elif which == "fail-count-bound":
        if args.ell is None:
            raise ValueError("fail-count-bound requires --ell")
        result = {
            "name": "bad_ordering_count_bound",
            "parameters": {"q": args.q, "ell": args.ell},
            "values": {"bad_orderings_at_most": bounds.bad_ordering_count_bound(args.q, args.ell)},
            "verdict": None,
        }
    elif which == "tail-bound":
        if args.delta is None:
            raise ValueError("tail-bound requires --delta")
        result = bounds.normalized_bad_fraction_bound(args.q, args.delta).to_dict()
    else:
        raise ValueError(f"unknown bound {which!r}")
    _emit(args, "bounds", {"bound": which}, result, t0)


TABLE_DEFAULT_QS = (4, 5, 7, 8, 9, 11, 13)


def table_rows(qs, census_max_q: int = 9, threads: int = 1) -> list[dict]:
    """One row per field order: exact correcting-class counts and proportion.

    Small orders run the full census (exact, classifier cross-checked against
    the exact LCS engine); larger orders count the deduplicated explicit bad
    family, which the complete classification makes equally exact.  The
    3-decimal column rounds census rows and floors dedup rows (a floored
    value is still a true lower bound at the printed precision).
    """
    rows = []
    for q in qs:
        pm = prime_power(q)
        if pm is None:
            raise ValueError(f"{q} is not a prime power")
        fld = field_new(*pm)
        total = math.factorial(q - 2)
        if q <= census_max_q:
            census = analyze.census_2dim(fld, max_classes=max(total, 1), threads=threads)
            good = census.classes_correcting_one
            method = "census"
            prop3 = _round3(census.proportion)
        else:
            tally = bounds.bad_class_count(fld)
            good = total - tally.count
            method = "bad_family_dedup"
            prop3 = _floor3(good / total)
        rows.append(
            {
                "q": q,
                "method": method,
                "classes_total": total,
                "classes_correcting_one": good,
                "proportion": good / total,
                "proportion_3dp": prop3,
                "formula_lower_bound": bounds.good_class_lower_bound(q),
            }
        )
    return rows


def cmd_table1(args) -> None:
    t0 = time.perf_counter()
    qs = tuple(int(tok) for tok in args.qs.split(","))
    rows = table_rows(qs, census_max_q=args.census_max_q, threads=args.threads)
    params = {"qs": list(qs), "census_max_q": args.census_max_q}
    if args.format == "csv":
        cols = [
            "q",
            "method",
            "classes_total",
            "classes_correcting_one",
            "proportion_3dp",
            "formula_lower_bound",
        ]
        lines = [",".join(cols)]
        for row in rows:
            lines.append(",".join(str(row[c]) for c in cols))
        payload = "\n".join(lines) + "\n"
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(payload)
        else:
            sys.stdout.write(payload)
        return
    _emit(args, "table1", params, {"rows": rows}, t0)


# -- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsinsdel",
        description="Reed-Solomon codes under insertion/deletion errors",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, threads=False):
        p.add_argument("--timing", action="store_true", help="include wall-clock time in the JSON")
        p.add_argument("--output", help="write the report to a file instead of stdout")
        if threads:
            p.add_argument("--threads", type=int, default=1, help="worker threads (default 1)")

    p = sub.add_parser("analyze", help="measure insdel capability of one code")
    p.add_argument("--field", help="field order q or p^m")
    p.add_argument("--alpha", required=True, help="evaluation vector: CSV indices or GF(..):i1,i2,..")
    p.add_argument("--k", type=int, required=True, help="code dimension")
    p.add_argument(
        "--method",
        default="brute",
        choices=["brute", "affine", "certificate", "optimal"],
    )
    p.add_argument("--t", type=int, help="insdel count for --method certificate")
    p.add_argument("--max-codewords", type=int, default=analyze.DEFAULT_MAX_CODEWORDS)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("classify", help="classify a full-length ordering (k=2)")
    p.add_argument("--field", help="field order q or p^m")
    p.add_argument("--alpha", required=True)
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("census", help="classify all ordering classes (k=2)")
    p.add_argument("--field", required=True)
    p.add_argument("--verify", default="auto", choices=["auto", "all", "spot", "none"])
    p.add_argument("--max-classes", type=int, default=analyze.DEFAULT_MAX_CLASSES)
    p.add_argument("--time-guard", type=float, default=None, help="abort after this many seconds")
    common(p, threads=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("sample", help="seeded random orderings (k=2)")
    p.add_argument("--field", required=True)
    p.add_argument("--delta", required=True, help="fraction, e.g. 0.5")
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    common(p, threads=True)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("construct", help="build a rate-1/2 single-insdel code")
    p.add_argument("--field", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument(
        "--verify",
        default=construct.VERIFY_EXACT,
        choices=[construct.VERIFY_EXACT, construct.VERIFY_CERTIFICATE, construct.VERIFY_NONE],
    )
    p.add_argument("--allow-small-q", action="store_true")
    p.add_argument("--restrict-dh", action="store_true", help="skip provably irrelevant index pairs")
    common(p, threads=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate counting bounds")
    p.add_argument(
        "bound",
        choices=["half-singleton", "class-lower-bound", "bad-classes", "fail-count-bound", "tail-bound"],
    )
    p.add_argument("--q", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--ell", type=int)
    p.add_argument("--delta")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table1", help="correcting-proportion table over small fields")
    p.add_argument("--qs", default=",".join(str(q) for q in TABLE_DEFAULT_QS))
    p.add_argument("--census-max-q", type=int, default=9)
    p.add_argument("--format", default="json", choices=["json", "csv"])
    common(p, threads=True)
    p.set_defaults(func=cmd_table1)

    return parser


def _fail(exit_code: int, exc: BaseException) -> int:
    doc = {
        "schema": SCHEMA,
        "error": {"type": type(exc).__name__, "message": str(exc)},
    }
    sys.stderr.write(json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n")
    return exit_code


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except GuardExceeded as exc:
        return _fail(EXIT_GUARD, exc)
    except InvariantViolation as exc:
        return _fail(EXIT_INVARIANT, exc)
    except (ValueError, construct.NoBaseCaseError, construct.NoGoodPairError) as exc:
        return _fail(EXIT_USAGE, exc)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
