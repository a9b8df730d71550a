"""Command line: ``python -m isire {infer,extract,validate,metrics,compare}``.

Exit codes: 0 success, 1 validation failure, 2 input error, 3 success with
warnings.  Results go to stdout; diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys

from .corpus import SampleFormatError, XmlFormatError, extract_xml_sequences, read_samples, render_samples
from .expr import ExprSyntaxError, parse_expr, render
from .infer import infer_isire
from .metrics import compare, format_table, measure, report_to_dict, reports_to_json
from .semantics import accepts_all

EXIT_OK, EXIT_REJECTED, EXIT_INPUT, EXIT_WARN = 0, 1, 2, 3


class InputError(Exception):
    pass


def _samples(path):
    try:
        return read_samples(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (SampleFormatError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _expr(text, alphabet):
    try:
        return parse_expr(text, alphabet)
    except ExprSyntaxError as exc:
        raise InputError(f"bad expression {text!r}: {exc}") from None


def _dump(obj, out):
    json.dump(obj, out, indent=2, sort_keys=False)
    out.write("\n")


def cmd_infer(args, out, err):
    s = _samples(args.samples)
    if len(s) == 0:
        raise InputError(f"{args.samples}: no samples")
    outcome = infer_isire(s, explain=args.explain)
    for w in outcome.warnings:
        print(f"warning: {w}", file=err)
    if args.json:
        doc = {"expression": outcome.text, "warnings": outcome.warnings}
        if args.explain:
            doc["trace"] = outcome.trace
        _dump(doc, out)
    else:
        print(outcome.text, file=out)
        if args.explain:
            _dump(outcome.trace, out)
    return EXIT_WARN if outcome.warnings else EXIT_OK


def cmd_extract(args, out, err):
    try:
        with open(args.xml, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {args.xml}: {exc.strerror}") from None
    try:
        s = extract_xml_sequences(data, args.element)
    except XmlFormatError as exc:
        raise InputError(f"{args.xml}: {exc}") from None
    if len(s) == 0:
        print(f"warning: no <{args.element}> element in {args.xml}", file=err)
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(render_samples(s))
    except OSError as exc:
        raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


def cmd_validate(args, out, err):
    s = _samples(args.samples)
    e = _expr(args.expr, s.alphabet)
    cov = accepts_all(e, s)
    if cov.ok:
        print(f"all {len(s)} samples accepted", file=out)
        return EXIT_OK
    for w in cov.rejected:
        print(f"rejected: {' '.join(w) if w else 'eps'}", file=out)
    return EXIT_REJECTED


def cmd_metrics(args, out, err):
    s = _samples(args.samples)
    e = _expr(args.expr, s.alphabet)
    row = measure(render(e), e, s)
    for w in row.warnings:
        print(f"warning: {w}", file=err)
    if args.json:
        _dump(report_to_dict(row), out)
    else:
        print(format_table([row]), file=out)
    return EXIT_OK


def _candidate(arg, alphabet):
    name, sep, text = arg.partition("=")
    if not sep or not name:
        raise InputError(f"candidate {arg!r} is not NAME=EXPR")
    return name, _expr(text, alphabet)


def cmd_compare(args, out, err):
    s = _samples(args.samples)
    cands = [_candidate(c, s.alphabet) for c in args.candidate or []]
    rows = compare(s, cands)
    for r in rows:
        for w in r.warnings:
            print(f"warning: {r.name}: {w}", file=err)
    if args.json:
        _dump(reports_to_json(rows), out)
    else:
        print(format_table(rows), file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="isire", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("infer", help="learn an expression from a sample file")
    q.add_argument("-s", "--samples", required=True)
    q.add_argument("--json", action="store_true")
    q.add_argument("--explain", action="store_true", help="dump the inference trace as JSON")
    q.set_defaults(run=cmd_infer)

    q = sub.add_parser("extract", help="write child-tag sequences of an XML element")
    q.add_argument("-x", "--xml", required=True)
    q.add_argument("-e", "--element", required=True)
    q.add_argument("-o", "--output", required=True)
    q.set_defaults(run=cmd_extract)

    q = sub.add_parser("validate", help="check that an expression accepts every sample")
    q.add_argument("-E", "--expr", required=True)
    q.add_argument("-s", "--samples", required=True)
    q.set_defaults(run=cmd_validate)

    q = sub.add_parser("metrics", help="LS, datacost and CC of one expression")
    q.add_argument("-E", "--expr", required=True)
    q.add_argument("-s", "--samples", required=True)
    q.add_argument("--json", action="store_true")
    q.set_defaults(run=cmd_metrics)

    q = sub.add_parser("compare", help="metrics table for several named expressions")
    q.add_argument("-s", "--samples", required=True)
    q.add_argument("--candidate", action="append", metavar="NAME=EXPR")
    q.add_argument("--json", action="store_true")
    q.set_defaults(run=cmd_compare)
    return p


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        return args.run(args, out, err)
    except InputError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
