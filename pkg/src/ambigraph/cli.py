"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 errata found, 3 internal
inconsistency (the two partition algorithms disagree, or an engine
invariant broke).  All output is deterministic for fixed inputs.
"""

import argparse
import csv
import io
import json
import sys

from . import __version__
from .cf import cf_expand, partition_cf, psl_equivalent
from .classify import (
    ClassifierKind,
    class_mod8,
    class_mod_p,
    class_occupancy,
    invariance_audit,
)
from .core import Element, is_ambiguous, make_element, value_approx
from .diagram import export_dot, partition_graph
from .enumeration import enumerate_ambiguous
from .errors import AmbigraphError, InternalInconsistency, UnsupportedFormat
from .harness import (
    check_paper_examples,
    cross_checked_partition,
    make_case,
    sweep,
    verify_case,
)
from .words import (
    check_word_fixes,
    circuit_from_path,
    parse_word,
    stabilizer_word,
)

SCHEMA_VERSION = 1
_I64 = 2 ** 63 - 1

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_ERRATA = 2
EXIT_INCONSISTENT = 3


def _int(v):
    """Integers beyond 64-bit range become decimal strings in JSON."""
    return str(v) if abs(v) > _I64 else v


def _elem(e: Element) -> str:
    return str(e)


def _odd_prime_divisors(n: int):
    out = []
    m = n
    while m % 2 == 0:
        m //= 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 2
    if m > 1:
        out.append(m)
    return out


def _classes_of(e: Element):
    classes = {}
    for p in _odd_prime_divisors(e.n):
        classes[f"mod_p[{p}]"] = class_mod_p(e, p).value
    if e.n % 8 == 0:
        classes["mod8"] = class_mod8(e).value
    return classes


def _orbit_dict(rec, n):
    circuit = circuit_from_path(rec.path)
    word = stabilizer_word(rec.representative)
    return {
        "n": _int(n),
        "rep": _elem(rec.representative),
        "members": [_elem(m) for m in rec.members],
        "circuit": {
            "exponents": [_int(m) for m in circuit.exponents],
            "start": circuit.start.value,
        },
        "word": str(word),
        "classes": _classes_of(rec.representative),
        "length": rec.ambiguous_length,
    }


def serialize_report(report: dict, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report, indent=2) + "\n").encode()
    raise UnsupportedFormat(f"unsupported format {fmt!r}")


def _emit(doc, out):
    out.write(json.dumps(doc, indent=2) + "\n")


# --- subcommands ---------------------------------------------------------

def _cmd_ambiguous(args, out):
    amb = enumerate_ambiguous(args.n, max_n=args.max_n)
    if args.count_only:
        out.write(f"{len(amb)}\n")
        return EXIT_OK
    if args.json:
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "n": _int(args.n),
                "count": len(amb),
                "elements": [_elem(e) for e in amb],
            },
            out,
        )
    elif args.csv:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["a", "b", "c", "n"])
        for e in amb:
            w.writerow([e.a, e.b, e.c, e.n])
    else:
        out.write(f"{len(amb)} ambiguous numbers in Q*(sqrt({args.n}))\n")
        for e in amb:
            out.write(f"  {_elem(e)}  ~ {value_approx(e):.6f}\n")
    return EXIT_OK


def _partition_for(n, method, max_n):
    if method == "graph":
        return partition_graph(n, max_n=max_n)
    if method == "cf":
        return partition_cf(n, max_n=max_n)
    return cross_checked_partition(n, max_n=max_n)


def _cmd_orbits(args, out):
    partition = _partition_for(args.n, args.method, args.max_n)
    if args.json:
        _emit(
            {
                "schema": SCHEMA_VERSION,
                "n": _int(args.n),
                "method": args.method,
                "orbit_count": len(partition),
                "orbits": [_orbit_dict(o, args.n) for o in partition.orbits],
            },
            out,
        )
    else:
        out.write(
            f"{len(partition)} orbits of ambiguous numbers for n={args.n} "
            f"(method: {args.method})\n"
        )
        for o in partition.orbits:
            circuit = circuit_from_path(o.path)
            out.write(
                f"  rep {_elem(o.representative)}  length {o.ambiguous_length}"
                f"  circuit {circuit}\n"
            )
    return EXIT_OK


def _cmd_classify(args, out):
    partition = cross_checked_partition(args.n, max_n=args.max_n)
    doc = {
        "schema": SCHEMA_VERSION,
        "n": _int(args.n),
        "orbits": [],
        "audits": [],
    }
    for o in partition.orbits:
        entry = {"rep": _elem(o.representative), "classes": {}}
        if args.mod_p:
            entry["classes"]["mod_p"] = class_mod_p(o.representative, args.mod_p).value
        if args.mod8:
            entry["classes"]["mod8"] = class_mod8(o.representative).value
        if not args.mod_p and not args.mod8:
            entry["classes"] = _classes_of(o.representative)
        doc["orbits"].append(entry)
    if args.mod_p:
        rpt = invariance_audit(args.n, ClassifierKind.MOD_P, p=args.mod_p,
                               depth=args.audit_depth, seed=args.seed)
        doc["audits"].append({"kind": "mod_p", "p": args.mod_p,
                              "checked": rpt.checked,
                              "violations": len(rpt.violations)})
        doc["occupancy_mod_p"] = {
            str(k): v
            for k, v in class_occupancy(args.n, ClassifierKind.MOD_P, args.mod_p).items()
        }
    if args.mod8:
        rpt = invariance_audit(args.n, ClassifierKind.MOD_8,
                               depth=args.audit_depth, seed=args.seed)
        doc["audits"].append({"kind": "mod8", "checked": rpt.checked,
                              "violations": len(rpt.violations)})
        doc["occupancy_mod8"] = {
            str(k): v
            for k, v in class_occupancy(args.n, ClassifierKind.MOD_8).items()
        }
    if args.json:
        _emit(doc, out)
    else:
        for entry in doc["orbits"]:
            out.write(f"  rep {entry['rep']}  classes {entry['classes']}\n")
        for audit in doc["audits"]:
            out.write(f"  audit {audit}\n")
    return EXIT_OK


def _cmd_cf(args, out):
    e = _parse_rep_with_n(args.element)
    x = cf_expand(e)
    out.write(f"preperiod {list(x.preperiod)}\n")
    out.write(f"cycle {list(x.cycle)}\n")
    out.write(f"cycle states {[ _elem(s) for s in x.cycle_states ]}\n")
    return EXIT_OK


def _cmd_equivalent(args, out):
    a1, c1 = _parse_pair(args.first)
    a2, c2 = _parse_pair(args.second)
    e1 = make_element(a1, c1, args.n)
    e2 = make_element(a2, c2, args.n)
    verdict = psl_equivalent(e1, e2)
    out.write(f"{'equivalent' if verdict else 'not equivalent'}\n")
    return EXIT_OK


def _cmd_circuit(args, out):
    a, c = _parse_pair(args.rep)
    e = make_element(a, c, args.n)
    from .diagram import closed_path

    path = closed_path(e)
    circuit = circuit_from_path(path)
    word = stabilizer_word(e)
    verdict = check_word_fixes(word, e)
    out.write(f"path length {len(path)}\n")
    out.write("vertices " + " ".join(_elem(v) for v in path.vertices) + "\n")
    out.write(f"circuit {circuit} starting {circuit.start}\n")
    out.write(f"word {word}\n")
    out.write(f"word fixes anchor: {verdict.fixes}\n")
    return EXIT_OK


def _cmd_check_word(args, out):
    a, c = _parse_pair(args.rep)
    e = make_element(a, c, args.n)
    w = parse_word(args.word)
    verdict = check_word_fixes(w, e)
    doc = {
        "schema": SCHEMA_VERSION,
        "word": str(w),
        "notices": list(w.notices),
        "matrix": [_int(v) for v in verdict.matrix.entries()],
        "fixed_quadratic": [_int(v) for v in verdict.quadratic],
        "target_quadratic": [_int(v) for v in verdict.target_quadratic],
        "image": _elem(verdict.image),
        "fixes": verdict.fixes,
    }
    if args.json:
        _emit(doc, out)
    else:
        for k, v in doc.items():
            if k != "schema":
                out.write(f"{k}: {v}\n")
    return EXIT_OK


def _verdict_dict(report):
    case = report.case
    return {
        "theorem": case.theorem,
        "p": case.p,
        "k": case.k,
        "l": case.l,
        "n": _int(case.n),
        "expected_count": case.expected_count,
        "computed_count": report.computed_count,
        "count_match": report.count_match,
        "exploratory": case.exploratory,
        "reps": [
            {
                "claimed": f"{res.spec.a},{res.spec.c}",
                "resolved": _elem(res.element) if res.element else None,
                "substituted": res.substituted,
                "orbit": orbit,
                "note": res.note,
            }
            for res, orbit in zip(report.rep_resolutions, report.rep_orbits)
        ],
        "reps_in_distinct_orbits": report.reps_in_distinct_orbits,
        "orbit_classes": list(report.orbit_classes),
        "class_homogeneous": report.class_homogeneous,
        "class_occupancy": {str(k): v for k, v in report.class_occupancy.items()},
        "errata": list(report.errata_notes),
        "passed": report.passed,
    }


def _cmd_verify(args, out):
    if args.examples:
        report = check_paper_examples(max_n=args.max_n)
        doc = {
            "schema": SCHEMA_VERSION,
            "findings": [
                {
                    "claim": f.claim,
                    "holds": f.holds,
                    "errata": f.errata,
                    "details": {k: _int(v) if isinstance(v, int) else v
                                for k, v in sorted(f.details.items())},
                }
                for f in report.findings
            ],
        }
        if args.json:
            _emit(doc, out)
        else:
            for f in report.findings:
                mark = "ok" if f.holds else "ERRATA"
                out.write(f"[{mark}] {f.claim}\n")
                if f.errata:
                    out.write(f"        {f.errata}\n")
        return EXIT_ERRATA if report.has_errata else EXIT_OK
    if not args.theorem:
        raise AmbigraphError("verify needs --theorem or --examples")
    case = make_case(args.theorem, args.p, args.k, args.l)
    report = verify_case(case, max_n=args.max_n)
    doc = {"schema": SCHEMA_VERSION, **_verdict_dict(report)}
    if args.json:
        _emit(doc, out)
    else:
        out.write(
            f"theorem {case.theorem} n={case.n}: computed {report.computed_count} "
            f"orbits (claimed {case.expected_count}), "
            f"{'pass' if report.passed else 'FAIL'}\n"
        )
        for note in report.errata_notes:
            out.write(f"  errata: {note}\n")
    if not report.passed:
        return EXIT_ERRATA
    return EXIT_ERRATA if report.has_errata else EXIT_OK


def _cmd_sweep(args, out):
    ps = [int(v) for v in args.p.split(",") if v]
    ks = [int(v) for v in args.k.split(",") if v]
    ls = [int(v) for v in args.l.split(",") if v]
    rows = sweep(ps, ks, ls, args.max_n)
    doc = {
        "schema": SCHEMA_VERSION,
        "rows": [
            {
                "p": r.p, "k": r.k, "l": r.l, "n": _int(r.n),
                "theorem": r.theorem, "status": r.status,
                "computed_count": r.computed_count,
                "expected_count": r.expected_count,
                "detail": r.detail,
            }
            for r in rows
        ],
        "totals": {
            status: sum(1 for r in rows if r.status == status)
            for status in sorted({r.status for r in rows})
        },
    }
    if args.csv:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "k", "l", "n", "theorem", "status",
                    "computed_count", "expected_count", "detail"])
        for r in rows:
            w.writerow([r.p, r.k, r.l, r.n, r.theorem, r.status,
                        r.computed_count, r.expected_count, r.detail])
        text = buf.getvalue()
    else:
        text = json.dumps(doc, indent=2) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    if any(r.status == "fail" for r in rows):
        return EXIT_ERRATA
    return EXIT_OK


def _cmd_export_dot(args, out):
    a, c = _parse_pair(args.rep)
    partition = partition_graph(args.n, max_n=args.max_n)
    text = export_dot(partition, a, c)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        out.write(text)
    return EXIT_OK


# --- argument plumbing ---------------------------------------------------

def _parse_pair(text):
    try:
        a, c = text.split(",")
        return int(a), int(c)
    except ValueError as exc:
        raise AmbigraphError(f"expected 'a,c', got {text!r}") from exc


def _parse_rep_with_n(text):
    try:
        ac, n = text.split("|")
        a, c = ac.split(",")
        return make_element(int(a), int(c), int(n))
    except ValueError as exc:
        raise AmbigraphError(f"expected 'a,c|n', got {text!r}") from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="ambigraph",
        description="Orbits of real quadratic irrationals under the modular group",
    )
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--max-n", type=int, default=10 ** 8,
                        help="guard cap on n (default 1e8)")
    sub = parser.add_subparsers(dest="command", required=True)

    s = sub.add_parser("ambiguous", help="enumerate ambiguous numbers")
    s.add_argument("n", type=int)
    s.add_argument("--count-only", action="store_true")
    fmt = s.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")
    s.set_defaults(func=_cmd_ambiguous)

    s = sub.add_parser("orbits", help="orbit partition of the ambiguous set")
    s.add_argument("n", type=int)
    s.add_argument("--method", choices=["graph", "cf", "both"], default="both")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_orbits)

    s = sub.add_parser("classify", help="residue classes per orbit, with audits")
    s.add_argument("n", type=int)
    s.add_argument("--mod-p", type=int, default=None)
    s.add_argument("--mod8", action="store_true")
    s.add_argument("--audit-depth", type=int, default=20)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_classify)

    s = sub.add_parser("cf", help="continued fraction of an element 'a,c|n'")
    s.add_argument("element")
    s.set_defaults(func=_cmd_cf)

    s = sub.add_parser("equivalent", help="PSL(2,Z)-equivalence of two elements")
    s.add_argument("first", metavar="a1,c1")
    s.add_argument("second", metavar="a2,c2")
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=_cmd_equivalent)

    s = sub.add_parser("circuit", help="closed path, circuit, stabilizer word")
    s.add_argument("n", type=int)
    s.add_argument("--rep", required=True, metavar="a,c")
    s.set_defaults(func=_cmd_circuit)

    s = sub.add_parser("check-word", help="evaluate a word against an element")
    s.add_argument("n", type=int)
    s.add_argument("word")
    s.add_argument("--rep", required=True, metavar="a,c")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_check_word)

    s = sub.add_parser("verify", help="verify an orbit-count theorem or the examples")
    s.add_argument("--theorem", choices=["2.1", "2.3", "2.5", "2.6", "2.7", "2.8", "2.9"])
    s.add_argument("--p", type=int)
    s.add_argument("--k", type=int)
    s.add_argument("--l", type=int, default=None)
    s.add_argument("--examples", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=_cmd_verify)

    s = sub.add_parser("sweep", help="verify cases over (p, k, l) grids")
    s.add_argument("--p", required=True, help="comma list of odd primes")
    s.add_argument("--k", required=True, help="comma list of exponents")
    s.add_argument("--l", required=True, help="comma list of powers of two")
    s.add_argument("--json", action="store_true")
    s.add_argument("--csv", action="store_true")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_sweep)

    s = sub.add_parser("export-dot", help="DOT rendering of one orbit's closed paths")
    s.add_argument("n", type=int)
    s.add_argument("--rep", required=True, metavar="a,c")
    s.add_argument("-o", "--output", default=None)
    s.set_defaults(func=_cmd_export_dot)

    return parser


def dispatch(argv, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args, out)
    except InternalInconsistency as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except AmbigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
