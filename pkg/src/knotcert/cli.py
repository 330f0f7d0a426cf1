"""
Command-line front end.

    knotcert invariants --braid "1 1 1"
    knotcert certify knots.jsonl --assert-minimal
    knotcert periodic --matrix "[[-1,1],[0,-1]]" --period 2,3,5
    knotcert lk-cover curves.jsonl --period 3
    knotcert census knots.jsonl --jobs 4 --out reports.jsonl

Reports go to stdout (or --out) as JSON Lines; human-readable summaries
go to stderr.  Exit codes: 0 success, 1 a theorem or scaling check
failed, 2 bad input.
"""

import argparse
import json
import sys
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Callable, List, Optional, Sequence, Tuple

from . import __version__
from .curves import CylindricalCurve, check_lk_scaling, self_pushoff
from .errors import KnotCertError, RecordError
from .periodic import check_theorem, make_periodic_model
from .records import (KnotRecord, bundled_text, certificate_report, dumps, knot_report,
                      load_records, record_from_dict)

EXIT_OK, EXIT_CHECK_FAILED, EXIT_INPUT = 0, 1, 2
DEFAULT_PERIODS = (2, 3, 5)


def _exit_code(failed: bool, bad_input: bool) -> int:
    # a failed check outranks bad input
    if failed:
        return EXIT_CHECK_FAILED
    return EXIT_INPUT if bad_input else EXIT_OK


def _period_list(text: str) -> List[int]:
    try:
        ps = [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad period list {text!r}") from None
    if not ps or any(p < 2 for p in ps):
        raise argparse.ArgumentTypeError("periods must be integers >= 2")
    return ps


def _gather_records(args) -> List[Tuple[str, object]]:
    """Records from --braid/--matrix or from the input file, in order."""
    items: List[Tuple[str, object]] = []
    inline = []
    for text in args.braid or ():
        inline.append({"name": text, "braid": text})
    for text in args.matrix or ():
        try:
            inline.append({"name": text, "seifert_matrix": json.loads(text)})
        except json.JSONDecodeError:
            items.append((text, RecordError(f"--matrix {text!r} is not JSON")))
    for obj in inline:
        try:
            items.append((obj["name"], record_from_dict(obj)))
        except RecordError as exc:
            items.append((obj["name"], exc))
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
        items.extend(load_records(text, args.format))
    elif not inline and getattr(args, "bundled_default", False):
        items.extend(load_records(bundled_text("starter.jsonl")))
    if getattr(args, "assert_minimal", False):
        items = [(label, KnotRecord(r.name, r.seifert_matrix, r.braid, True, r.periods))
                 if isinstance(r, KnotRecord) else (label, r) for label, r in items]
    return items


def _evaluate(job):
    fn, rec = job
    try:
        return fn(rec), None
    except KnotCertError as exc:
        return None, f"{type(exc).__name__}: {exc}"


def _run_all(fn: Callable, records: Sequence[KnotRecord], jobs: int):
    """Evaluate in parallel when asked; results keep input order."""
    work = [(fn, r) for r in records]
    if jobs <= 1 or len(work) <= 1:
        return [_evaluate(w) for w in work]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_evaluate, work))


class _Output:
    def __init__(self, path: Optional[str]):
        self.path = path
        self.lines: List[str] = []

    def emit(self, obj) -> None:
        self.lines.append(dumps(obj))

    def close(self) -> None:
        text = "".join(line + "\n" for line in self.lines)
        if self.path:
            Path(self.path).write_text(text, encoding="utf-8")
        else:
            sys.stdout.write(text)
            sys.stdout.flush()


def _report_command(args, fn) -> Tuple[int, Counter, int]:
    items = _gather_records(args)
    out = _Output(args.out)
    valid = [(label, r) for label, r in items if isinstance(r, KnotRecord)]
    results = dict(zip((id(r) for _, r in valid),
                       _run_all(fn, [r for _, r in valid], getattr(args, "jobs", 1))))
    verdicts: Counter = Counter()
    rejected = 0
    for label, r in items:
        if isinstance(r, KnotRecord):
            report, err = results[id(r)]
        else:
            report, err = None, str(r)
        if err is not None:
            rejected += 1
            print(f"error: record {label!r}: {err}", file=sys.stderr)
            continue
        verdicts[report["certificate"]["verdict"]] += 1
        out.emit(report)
    out.close()
    return (EXIT_INPUT if rejected else EXIT_OK), verdicts, rejected


def cmd_invariants(args) -> int:
    code, _, _ = _report_command(args, knot_report)
    return code


def cmd_certify(args) -> int:
    code, _, _ = _report_command(args, certificate_report)
    return code


def cmd_census(args) -> int:
    start = time.perf_counter()
    code, verdicts, rejected = _report_command(args, knot_report)
    elapsed = time.perf_counter() - start
    summary = {"version": __version__,
               "counts": {v: verdicts.get(v, 0) for v in ("Definite", "NotDefinite", "Unknown")},
               "reported": sum(verdicts.values()), "rejected": rejected,
               "seconds": round(elapsed, 3)}
    print(f"knotcert {__version__} census", file=sys.stderr)
    print(f"  {'verdict':<12}{'count':>6}", file=sys.stderr)
    for v, n in summary["counts"].items():
        print(f"  {v:<12}{n:>6}", file=sys.stderr)
    print(f"  {'rejected':<12}{rejected:>6}", file=sys.stderr)
    print(f"  elapsed {elapsed:.3f}s", file=sys.stderr)
    if args.summary:
        Path(args.summary).write_text(json.dumps(summary, indent=2) + "\n", encoding="utf-8")
    return code


def cmd_periodic(args) -> int:
    items = _gather_records(args)
    out = _Output(args.out)
    failed = bad_input = False
    for label, r in items:
        if not isinstance(r, KnotRecord):
            print(f"error: record {label!r}: {r}", file=sys.stderr)
            bad_input = True
            continue
        periods = args.period or list(r.periods) or list(DEFAULT_PERIODS)
        try:
            surface = r.surface()
            for p in periods:
                report = check_theorem(make_periodic_model(surface, p, name=r.name))
                out.emit(report.to_dict())
                if not report.passed:
                    print(f"FAILED {r.name} p={p}: {', '.join(report.failures)}", file=sys.stderr)
                    failed = True
        except KnotCertError as exc:
            print(f"error: record {label!r}: {type(exc).__name__}: {exc}", file=sys.stderr)
            bad_input = True
    out.close()
    return _exit_code(failed, bad_input)


def _curve_pairs(text: str):
    for k, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        label = f"line {k}"
        try:
            obj = json.loads(line)
            label = str(obj.get("name", label))
            a = CylindricalCurve.from_json(obj["a"])
            b = self_pushoff(a) if obj.get("self") else CylindricalCurve.from_json(obj["b"])
            yield label, (a, b)
        except (json.JSONDecodeError, KeyError, AttributeError, TypeError) as exc:
            yield label, RecordError(f"{type(exc).__name__}: {exc}")
        except KnotCertError as exc:
            yield label, exc


def cmd_lk_cover(args) -> int:
    if args.input is None:
        text = bundled_text("curves.jsonl")
    else:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text(encoding="utf-8")
    out = _Output(args.out)
    failed = bad_input = False
    for label, pair in _curve_pairs(text):
        if isinstance(pair, Exception):
            print(f"error: {label}: {type(pair).__name__}: {pair}", file=sys.stderr)
            bad_input = True
            continue
        a, b = pair
        for p in args.period or [2, 3]:
            try:
                report = check_lk_scaling(a, b, p)
            except KnotCertError as exc:
                print(f"error: {label} p={p}: {type(exc).__name__}: {exc}", file=sys.stderr)
                bad_input = True
                continue
            out.emit({"name": label, **report.to_dict()})
            if not report.passed:
                print(f"FAILED {label} p={p}: lifted {report.lifted} != {report.expected}",
                      file=sys.stderr)
                failed = True
    out.close()
    return _exit_code(failed, bad_input)


def _add_record_inputs(sp, bundled_default=False):
    sp.add_argument("input", nargs="?", help="records file (JSON Lines, JSON array or CSV); '-' for stdin")
    sp.add_argument("--braid", action="append", help="inline braid word, e.g. '1 -2 1 -2'")
    sp.add_argument("--matrix", action="append", help="inline Seifert matrix as JSON rows")
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", help="write JSON Lines here instead of stdout")
    sp.set_defaults(bundled_default=bundled_default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="knotcert", description=__doc__.split("\n\n")[0].strip())
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="signature, Alexander polynomial, genus, certificate")
    _add_record_inputs(sp)
    sp.add_argument("--assert-minimal", action="store_true",
                    help="treat every presented surface as minimal genus")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_invariants)

    sp = sub.add_parser("certify", help="definiteness certificates only")
    _add_record_inputs(sp)
    sp.add_argument("--assert-minimal", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_certify)

    sp = sub.add_parser("periodic", help="check cover/quotient relations on symmetric connected sums")
    _add_record_inputs(sp)
    sp.add_argument("--period", type=_period_list, action="extend",
                    help="periods, e.g. '2,3,5' (repeatable); default from record or 2,3,5")
    sp.set_defaults(func=cmd_periodic)

    sp = sub.add_parser("lk-cover", help="linking numbers of lifted curves in the cyclic cover")
    sp.add_argument("input", nargs="?", help="curve pairs (JSON Lines); default: bundled examples")
    sp.add_argument("--period", type=_period_list, action="extend")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_lk_cover)

    sp = sub.add_parser("census", help="batch invariants with a verdict summary")
    _add_record_inputs(sp, bundled_default=True)
    sp.add_argument("--assert-minimal", action="store_true")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--summary", help="also write the summary as JSON to this file")
    sp.set_defaults(func=cmd_census)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
