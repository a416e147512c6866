"""Command line entry point: ``bruijn-mis <command> ...``.

Exit codes: 0 success, 1 validation failure, 2 usage error, 3 budget exceeded.
Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import selftest
from .budget import BudgetExceeded
from .codes import Provenance, classical_code, codes_from_lmis, validate_code
from .constructors import DecompositionError, construct, decompose, from_loopless, to_loopless
from .counting import count_mis, count_mis_D2
from .documents import (
    DocumentError,
    SetDocument,
    TraceDocument,
    read_set,
    read_trace,
    serialize_set,
    serialize_trace,
)
from .enumeration import enumerate_all, enumerate_orbit_reps, oracle_enumerate
from .group import stabilizer, transporter
from .sets import InvalidSetError, Kind, check_structure_lemmas, validate_mis
from .words import build_graph, export_dot, word_str

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class Failure(Exception):
    def __init__(self, code: int, error: str, message: str):
        super().__init__(message)
        self.exit_code = code
        self.error = error


def _emit(text: str, out: str | None = None) -> None:
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _load_mis(path: str):
    doc = read_set(path)
    if doc.kind == "code":
        raise Failure(EXIT_USAGE, "wrong-kind", "expected an MIS or LMIS document, got a code")
    return doc, validate_mis(doc.candidate(), Kind(doc.kind))


def cmd_graph(args) -> int:
    g = build_graph(args.d, args.D, drop_self_loops=not args.keep_self_loops)
    highlight = read_set(args.highlight).words if args.highlight else None
    if args.out == "dot":
        _emit(export_dot(g, highlight, args.bold_theta))
    else:
        if highlight is not None:
            export_dot(g, highlight)  # range check only
        _emit("".join(f"{word_str(x, g.d)} {word_str(y, g.d)}\n" for x, y in g.edges()))
    return EXIT_OK


def cmd_count(args) -> int:
    if args.D == 2:
        if args.d is None:
            raise Failure(EXIT_USAGE, "usage", "--D 2 needs --d")
        n = count_mis_D2(args.d)
        _emit(f"{args.d},{n}\n" if args.out == "csv" else f"B({args.d},2): {n} maximum independent sets\n")
        return EXIT_OK
    if args.D != 3:
        raise Failure(EXIT_USAGE, "usage", "count supports --D 3 (recurrences) and --D 2 (closed form)")
    if args.d_max is None:
        raise Failure(EXIT_USAGE, "usage", "count needs --d-max")
    table = count_mis(args.d_max)
    if args.out == "csv":
        lines = ["d,k,b_dk,one_loop_orbits,two_loop_orbits,a_d"]
        lines += [",".join(str(v) for v in row) for row in table.rows()]
        _emit("\n".join(lines) + "\n")
        return EXIT_OK
    lines = []
    if args.bdk:
        lines.append(f"{'d':>3} {'k':>3} {'b_dk':>12} {'(one,two)':>16}")
        for d, k, b, one, two, _ in table.rows():
            lines.append(f"{d:>3} {k:>3} {b:>12} {f'({one},{two})':>16}")
        lines.append("")
    lines += [f"a_{d} = {table.a[d]}" for d in range(1, args.d_max + 1)]
    _emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    kind = Kind.LOOPLESS if args.loopless else Kind.WITH_LOOPS
    if args.orbits_only:
        if args.loopless:
            raise Failure(EXIT_USAGE, "usage", "--orbits-only lists MIS orbit representatives; drop --loopless")
        docs = [SetDocument.from_set(S, trace=tr) for S, tr in enumerate_orbit_reps(args.d)]
    else:
        docs = [SetDocument.from_set(S) for S in enumerate_all(args.d, kind)]
    _emit("".join(serialize_set(doc, compact=True) for doc in docs))
    return EXIT_OK


def cmd_oracle(args) -> int:
    kind = Kind.LOOPLESS if args.loopless else Kind.WITH_LOOPS
    sets = oracle_enumerate(args.d, args.D, kind)
    if args.count_only:
        _emit(f"{len(sets)}\n")
    else:
        _emit("".join(serialize_set(SetDocument.from_set(S, kind=kind), compact=True) for S in sets))
    return EXIT_OK


def cmd_verify(args) -> int:
    doc = read_set(args.file)
    S = doc.candidate()
    report: dict = {"d": doc.d, "kind": doc.kind, "size": len(S)}
    if doc.kind == "code":
        r = validate_code(S)
        report.update(comma_free=r.comma_free, maximum=r.maximum, independent=r.independent)
        ok = r.comma_free
    else:
        if doc.D != 3:
            raise Failure(EXIT_USAGE, "usage", "MIS verification is for diameter 3")
        try:
            M = validate_mis(S, Kind(doc.kind))
        except InvalidSetError as exc:
            report.update(valid=False, error=exc.code.value, message=str(exc))
            ok = False
        else:
            lemmas = check_structure_lemmas(M)
            report.update(valid=True, loops=list(M.loops), distinguished=M.a, lemma_violations=lemmas.violations)
            ok = lemmas.ok
            if ok and doc.trace is not None:
                rebuilt = construct(doc.trace.to_trace())
                report["trace_matches"] = rebuilt.words == M.words
                ok = report["trace_matches"]
    report["ok"] = ok
    _emit(json.dumps(report) + "\n")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_decompose(args) -> int:
    doc, S = _load_mis(args.file)
    if S.kind is not Kind.WITH_LOOPS:
        raise Failure(EXIT_USAGE, "wrong-kind", "decompose needs a with-loops MIS")
    _emit(serialize_trace(TraceDocument.from_trace(decompose(S))), args.out)
    return EXIT_OK


def cmd_construct(args) -> int:
    trace = read_trace(args.trace).to_trace()
    S = construct(trace)
    _emit(serialize_set(SetDocument.from_set(S, trace=trace)), args.out)
    return EXIT_OK


def cmd_bijection(args) -> int:
    doc, S = _load_mis(args.file)
    if args.to == "loopless":
        if S.kind is not Kind.WITH_LOOPS:
            raise Failure(EXIT_USAGE, "wrong-kind", "input is already loop-less")
        T = to_loopless(S)
    else:
        if S.kind is not Kind.LOOPLESS:
            raise Failure(EXIT_USAGE, "wrong-kind", "input must be loop-less")
        T = from_loopless(S)
    _emit(serialize_set(SetDocument.from_set(T)), args.out)
    return EXIT_OK


def cmd_stabilizer(args) -> int:
    doc, S = _load_mis(args.file)
    trace = doc.trace.to_trace() if doc.trace is not None else None
    desc = stabilizer(S, trace=trace)
    _emit(json.dumps({"generators": desc.transposition_pairs(), "order": desc.order, "k": desc.k}) + "\n")
    return EXIT_OK


def cmd_transport(args) -> int:
    a, b = read_set(args.file1), read_set(args.file2)
    sigma = transporter(a.candidate(), b.candidate())
    _emit(json.dumps({"perm": list(sigma.images) if sigma else None}) + "\n")
    return EXIT_OK if sigma is not None else EXIT_INVALID


def cmd_commafree(args) -> int:
    if args.all:
        docs = [SetDocument.from_set(C, kind="code") for C in codes_from_lmis(args.d)]
        _emit("".join(serialize_set(doc, compact=True) for doc in docs))
    else:
        code = classical_code(args.d)
        _emit(serialize_set(SetDocument.from_set(code, kind="code", provenance=Provenance.CLASSICAL.value)))
    return EXIT_OK


def cmd_selftest(args) -> int:
    outcomes = selftest.run(args.level)
    for o in outcomes:
        print(o.line(), flush=True)
    failed = [o for o in outcomes if not o.passed]
    print(f"{len(outcomes) - len(failed)}/{len(outcomes)} criteria passed")
    return EXIT_OK if not failed else EXIT_INVALID


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _report("usage", message)
        sys.exit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="bruijn-mis", description="Maximum independent sets of de Bruijn graphs B(d,3).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("graph", help="export B(d,D) as DOT or an edge list")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--D", type=int, default=3)
    s.add_argument("--keep-self-loops", action="store_true")
    s.add_argument("--highlight", metavar="FILE")
    s.add_argument("--bold-theta", action="store_true")
    s.add_argument("--out", choices=("dot", "edgelist"), default="dot")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("count", help="exact counts from the recurrences")
    s.add_argument("--d-max", type=int)
    s.add_argument("--bdk", action="store_true", help="also print the orbit table b_{d,k}")
    s.add_argument("--D", type=int, default=3)
    s.add_argument("--d", type=int)
    s.add_argument("--out", choices=("table", "csv"), default="table")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("enumerate", help="all MISs (or LMISs) of B(d,3) as JSON lines")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--loopless", action="store_true")
    s.add_argument("--orbits-only", action="store_true")
    s.add_argument("--out", choices=("jsonl",), default="jsonl")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("oracle", help="exhaustive search for maximum independent sets of B(d,D)")
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--D", type=int, required=True)
    s.add_argument("--loopless", action="store_true")
    s.add_argument("--count-only", action="store_true")
    s.add_argument("--out", choices=("jsonl",), default="jsonl")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verify", help="validate a set document")
    s.add_argument("file")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("decompose", help="construction trace of an MIS")
    s.add_argument("file")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("construct", help="rebuild an MIS from a trace")
    s.add_argument("trace")
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("bijection", help="map between MISs and loop-less MISs")
    s.add_argument("file")
    s.add_argument("--to", choices=("loopless", "mis"), required=True)
    s.add_argument("--out", default="-")
    s.set_defaults(func=cmd_bijection)

    s = sub.add_parser("stabilizer", help="digit permutations fixing a set")
    s.add_argument("file")
    s.set_defaults(func=cmd_stabilizer)

    s = sub.add_parser("transport", help="a permutation carrying FILE1 onto FILE2")
    s.add_argument("file1")
    s.add_argument("file2")
    s.set_defaults(func=cmd_transport)

    s = sub.add_parser("commafree", help="maximum comma-free codes of length 3")
    s.add_argument("--d", type=int, required=True)
    g = s.add_mutually_exclusive_group()
    g.add_argument("--classical", action="store_true", help="the x1 < x2 >= x3 code (default)")
    g.add_argument("--all", action="store_true", help="every code coming from a loop-less MIS")
    s.set_defaults(func=cmd_commafree)

    s = sub.add_parser("selftest", help="run the acceptance checks")
    s.add_argument("--level", choices=("quick", "full"), default="quick")
    s.set_defaults(func=cmd_selftest)
    return p


def _report(error: str, message: str) -> None:
    sys.stderr.write(json.dumps({"error": error, "message": message}) + "\n")


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("default")
            return args.func(args)
    except Failure as exc:
        _report(exc.error, str(exc))
        return exc.exit_code
    except BudgetExceeded as exc:
        _report("budget-exceeded", str(exc))
        return EXIT_BUDGET
    except InvalidSetError as exc:
        _report(exc.code.value, str(exc))
        return EXIT_INVALID
    except (DocumentError, DecompositionError) as exc:
        _report("invalid-document" if isinstance(exc, DocumentError) else "decomposition", str(exc))
        return EXIT_INVALID
    except OSError as exc:
        _report("io", str(exc))
        return EXIT_USAGE
    except ValueError as exc:
        _report("usage", str(exc))
        return EXIT_USAGE
