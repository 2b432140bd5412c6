"""Command-line surface.

Verbs: seq, enum, bij, split, merge, caps, classify, parity, verify,
checksum, solve, diagram.  Output is deterministic text, or JSON objects of
the shape {"command": ..., "result": ...} with --json.  Exit codes: 0 on
success, 1 on verification failure, 2 on usage errors.
"""

import argparse
import json
import sys

from . import bijections, diagrams, pentagonal, recurrences, sequences, series, splitmerge
from .families import (
    BAR_AE, BAR_AO, BAR_BE, BAR_BO, BUTTERFLY, BUTTERFLY_EVEN, BUTTERFLY_ODD,
    BUTTERFLY_PLUS_ONES, CONSEC, CONSEC_ISOLATED, CONSEC_NO_ONE, CONSEC_WITH_ONE,
    DISTINCT_NOT_POW2, EQUAL_TRIPLE, ODD_GE, ODD_STEP1, ODD_STEP1_SWITCHED,
    ODD_STEP2, ODD_STEP2_SWITCHED, STAIRCASE_321, STAIRCASE_33, STRICT,
    Family, enumerate_family,
)
from .partitions import Partition

FAMILY_ALIASES = {
    "strict": Family(STRICT),
    "consec": Family(CONSEC),
    "r1": Family(CONSEC_NO_ONE),
    "r2": Family(CONSEC_WITH_ONE),
    "r1-prime": Family(CONSEC_ISOLATED),
    "butterfly": Family(BUTTERFLY),
    "butterfly-even": Family(BUTTERFLY_EVEN),
    "butterfly-odd": Family(BUTTERFLY_ODD),
    "equal-triple": Family(EQUAL_TRIPLE),
    "staircase-321": Family(STAIRCASE_321),
    "staircase-33": Family(STAIRCASE_33),
    "odd-ge-1": Family(ODD_GE, 1),
    "odd-ge-3": Family(ODD_GE, 3),
    "odd-ge-5": Family(ODD_GE, 5),
    "odd-step1": Family(ODD_STEP1),
    "odd-step2": Family(ODD_STEP2),
    "odd-step1-switched": Family(ODD_STEP1_SWITCHED),
    "odd-step2-switched": Family(ODD_STEP2_SWITCHED),
    "butterfly-plus-ones": Family(BUTTERFLY_PLUS_ONES),
    "distinct-not-pow2": Family(DISTINCT_NOT_POW2),
}
BAR_ALIASES = {"bar-ae": BAR_AE, "bar-ao": BAR_AO, "bar-be": BAR_BE, "bar-bo": BAR_BO}


class UsageError(Exception):
    """Usage-class error raised after argument parsing."""


def _emit(args, command, result, text):
    if args.json:
        print(json.dumps({"command": command, "result": result}, sort_keys=True))
    else:
        print(text)


def _cmd_seq(args):
    table = sequences.named_sequence(args.name, args.to)
    if args.json:
        print(json.dumps({"command": "seq", "result": sequences.to_json(table)},
                         sort_keys=True))
    else:
        sys.stdout.write(sequences.to_bfile(table))
    return 0


def _cmd_enum(args):
    if args.family in BAR_ALIASES:
        fam = Family(BAR_ALIASES[args.family], args.h)
    elif args.family in FAMILY_ALIASES:
        fam = FAMILY_ALIASES[args.family]
    else:
        raise UsageError("unknown family %r (choose from %s)"
                          % (args.family, ", ".join(sorted(FAMILY_ALIASES) + sorted(BAR_ALIASES))))
    parts = enumerate_family(args.n, fam)
    result = [str(p) for p in parts]
    _emit(args, "enum", result, "\n".join(result))
    return 0


def _cmd_bij(args):
    report = bijections.verify_bijection(args.kind, args.start, args.to, h=args.h)
    result = {"kind": report.kind, "range": list(report.n_range),
              "checked": report.checked, "passed": report.passed,
              "failures": ["n=%d: %s" % f for f in report.failures]}
    _emit(args, "bij", result, str(report))
    return 0 if report.passed else 1


def _cmd_split(args):
    p = Partition.parse(args.partition)
    q = splitmerge.split(p, args.variant)
    _emit(args, "split", str(q), str(q))
    return 0


def _cmd_merge(args):
    q = Partition.parse(args.partition)
    p = splitmerge.merge_odd(q, args.variant)
    _emit(args, "merge", str(p), str(p))
    return 0


def _cmd_caps(args):
    q = Partition.parse(args.partition)
    caps = splitmerge.caps_of(q, args.variant)
    result = {"form": caps.form, "bound": caps.bound, "two_t": caps.two_t,
              "u_by_q": {str(k): v for k, v in sorted(caps.u_by_q.items())},
              "v": caps.v,
              "largest_pows": dict(sorted(caps.largest_pows.items())),
              "checks": dict(sorted(caps.checks.items())),
              "satisfied": caps.satisfied}
    lines = ["form %s  bound %d" % (caps.form, caps.bound),
             "2t=%d  v=%d  u=%s" % (caps.two_t, caps.v,
                                    ",".join("%d:%d" % kv for kv in sorted(caps.u_by_q.items())) or "-")]
    for key in sorted(caps.checks):
        lines.append("cap %s: largest_pow=%d %s" %
                     (key, caps.largest_pows[key], "ok" if caps.checks[key] else "VIOLATED"))
    lines.append("satisfied" if caps.satisfied else "violated")
    _emit(args, "caps", result, "\n".join(lines))
    return 0 if caps.satisfied else 1


def _cmd_classify(args):
    p = Partition.parse(args.partition)
    c = pentagonal.classify(p)
    _emit(args, "classify", {"kind": c.kind, "h": c.h}, "%s h=%d" % (c.kind, c.h))
    return 0


def _cmd_parity(args):
    if args.exceptions:
        inputs = sequences.parity_exception_inputs(args.to)
        _emit(args, "parity", inputs, "\n".join(str(n) for n in inputs))
        return 0
    if args.n is None:
        raise UsageError("parity needs N or --exceptions --to N")
    w = pentagonal.parity_relation(args.n)
    ok = pentagonal.parity_relation_holds(args.n)
    result = {"n": args.n, "relation": w.relation, "form": w.form, "t": w.t,
              "agrees_with_enumeration": ok}
    text = "%d %s%s %s" % (args.n, w.relation,
                           "" if w.form is None else " (%s, t=%d)" % (w.form, w.t),
                           "ok" if ok else "MISMATCH")
    _emit(args, "parity", result, text)
    return 0 if ok else 1


def _cmd_verify(args):
    names = series.VERIFIED_IDENTITIES if args.identity == "all" else (args.identity,)
    reports = [series.verify_identity(name, args.order) for name in names]
    failed = [r for r in reports if not r.ok]
    if args.json:
        result = [{"name": r.name, "order": r.order, "ok": r.ok,
                   "mismatches": [list(m) for m in r.mismatches]} for r in reports]
        print(json.dumps({"command": "verify", "result": result}, sort_keys=True))
    else:
        for r in reports:
            if r.ok:
                print("%s: OK 0 mismatches" % r.name)
            else:
                print("%s: %d mismatches" % (r.name, len(r.mismatches)))
                for n, lhs, rhs in r.mismatches:
                    print("%d %d %d" % (n, lhs, rhs))
    return 1 if failed else 0


def _cmd_checksum(args):
    got = recurrences.checksum(args.name, args.m)
    want = recurrences.expected_checksum(args.name, args.m)
    ok = got == want
    result = {"name": args.name, "m": args.m, "checksum": got,
              "expected": want, "ok": ok}
    _emit(args, "checksum", result,
          "checksum=%d expected=%d %s" % (got, want, "ok" if ok else "MISMATCH"))
    return 0 if ok else 1


def _cmd_solve(args):
    table = recurrences.recursive_solve(args.name, args.to)
    if args.json:
        print(json.dumps({"command": "solve", "result": sequences.to_json(table)},
                         sort_keys=True))
    else:
        sys.stdout.write(sequences.to_bfile(table))
    return 0


def _cmd_diagram(args):
    p = Partition.parse(args.partition)
    text = diagrams.render_young(p)
    _emit(args, "diagram", text, text)
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="butterflyseq",
                                 description="butterfly sequence toolkit")
    ap.add_argument("--json", action="store_true", help="JSON output")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("seq", help="print a named sequence as b-file lines")
    p.add_argument("name", choices=sorted(sequences.SEQUENCE_NAMES))
    p.add_argument("--to", type=int, required=True)
    p.set_defaults(fn=_cmd_seq)

    p = sub.add_parser("enum", help="list the partitions of n in a family")
    p.add_argument("family")
    p.add_argument("n", type=int)
    p.add_argument("--h", type=int, default=3, help="bar size for bar families")
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("bij", help="verify a bijection over a range of n")
    p.add_argument("kind", choices=("raise", "butterfly", "bar"))
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--h", type=int, default=3)
    p.set_defaults(fn=_cmd_bij)

    p = sub.add_parser("split", help="split a butterfly partition into odd parts")
    p.add_argument("partition")
    p.add_argument("--variant", choices=(splitmerge.STANDARD, splitmerge.SWITCHED),
                   default=splitmerge.STANDARD)
    p.set_defaults(fn=_cmd_split)

    p = sub.add_parser("merge", help="merge an odd-part partition back")
    p.add_argument("partition")
    p.add_argument("--variant", choices=(splitmerge.STANDARD, splitmerge.SWITCHED),
                   default=splitmerge.STANDARD)
    p.set_defaults(fn=_cmd_merge)

    p = sub.add_parser("caps", help="report the merging caps of an odd-part partition")
    p.add_argument("partition")
    p.add_argument("--variant", choices=(splitmerge.STANDARD, splitmerge.SWITCHED),
                   default=splitmerge.STANDARD)
    p.set_defaults(fn=_cmd_caps)

    p = sub.add_parser("classify", help="pentagonal classification of a butterfly partition")
    p.add_argument("partition")
    p.set_defaults(fn=_cmd_classify)

    p = sub.add_parser("parity", help="even/odd butterfly count relation at n")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--exceptions", action="store_true",
                   help="list the closed-form exceptional inputs instead")
    p.add_argument("--to", type=int, default=51)
    p.set_defaults(fn=_cmd_parity)

    p = sub.add_parser("verify", help="verify a generating-function identity")
    p.add_argument("identity",
                   help="identity name or 'all' (%s)" % ", ".join(series.VERIFIED_IDENTITIES))
    p.add_argument("--order", type=int, default=60)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("checksum", help="pentagonal checksum of a sequence at m")
    p.add_argument("name", choices=recurrences.CHECKSUM_NAMES)
    p.add_argument("m", type=int)
    p.set_defaults(fn=_cmd_checksum)

    p = sub.add_parser("solve", help="rebuild a sequence from its checksum relation")
    p.add_argument("name", choices=recurrences.CHECKSUM_NAMES)
    p.add_argument("--to", type=int, required=True)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("diagram", help="Young diagram of a partition")
    p.add_argument("partition")
    p.set_defaults(fn=_cmd_diagram)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except UsageError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
