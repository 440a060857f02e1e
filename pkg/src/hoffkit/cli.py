"""Command-line interface: ``hoffkit <subcommand> ...``.

Exit status: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import enumeration as en
from . import io, lemmas
from .analysis import decompose_by_special_components, special_graph
from .canon import canonical_form
from .characterization import (
    CONDITIONS,
    check_modified_adjacency,
    check_theorem_conditions,
    construct_hoffman_from_signed,
    k12_candidates,
    signed_admissibility,
)
from .graphs import GraphError, is_fat
from .spectral import MatrixError, b_matrix, classify_lambda_min
from .structure import PreconditionError, blocks_and_cut_vertices

OK, FAILED, BAD_INPUT = 0, 1, 2


class UsageError(Exception):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def _vertex(vertices, name: str):
    for v in vertices:
        if str(v) == name:
            return v
    raise UsageError(f"unknown vertex {name!r}")


def _emit(args, data: dict, lines: list[str]) -> None:
    if args.json:
        print(io.dumps(data))
    else:
        print("\n".join(lines))


def _matrix_lines(m, labels=None) -> list[str]:
    labels = [str(x) for x in (labels or range(m.order))]
    cells = [[str(x) for x in row] for row in m.rows]
    w = max([len(c) for r in cells for c in r] + [len(x) for x in labels] + [1])
    out = [" " * w + " " + " ".join(x.rjust(w) for x in labels)]
    for lab, r in zip(labels, cells):
        out.append(lab.rjust(w) + " " + " ".join(c.rjust(w) for c in r))
    return out


def _edge_str(e) -> str:
    return "-".join(sorted(map(str, e)))


def _signed_lines(s) -> list[str]:
    plus = ", ".join(sorted(_edge_str(e) for e in s.plus_edges)) or "none"
    minus = ", ".join(sorted(_edge_str(e) for e in s.minus_edges)) or "none"
    return [f"  (+) edges: {plus}", f"  (-) edges: {minus}"]


def _report_lines(r) -> list[str]:
    out = [f"marked vertex {r.marked_vertex}"]
    for c in CONDITIONS:
        chk = r.conditions[c]
        out.append(f"  ({c}) {'holds' if chk.ok else 'fails: ' + str(chk.violation)}")
    out.append(f"  verdict at -3: {r.spectral_verdict.relation}")
    out.append(f"  equivalence holds: {r.equivalence_holds}")
    return out


# -- subcommands --------------------------------------------------------------

def cmd_analyze(args) -> int:
    h = io.read_hoffman(args.file)
    if not h.slim:
        raise UsageError("Hoffman graph has no slim vertices")
    b = b_matrix(h)
    verdict = classify_lambda_min(b, 3)
    s = special_graph(h)
    d = decompose_by_special_components(h)
    bs = blocks_and_cut_vertices(s.underlying())
    reports = []
    if is_fat(h) and len(d.parts) == 1:
        cands = [_vertex(h.slim, args.vstar)] if args.vstar else k12_candidates(h)
        for v in cands:
            try:
                reports.append(check_theorem_conditions(h, v))
            except PreconditionError as exc:
                raise UsageError(str(exc)) from None
    data = {
        "B": b.to_json(),
        "special_graph": io.signed_to_json(s),
        "decomposition": d.to_json(),
        "blocks": [sorted(map(str, blk)) for blk in bs.blocks],
        "cut_vertices": sorted(map(str, bs.cut_vertices)),
        "verdict": verdict.to_json(),
        "theorem_reports": [r.to_json() for r in reports],
    }
    lines = ["B(h):", *_matrix_lines(b, h.slim), "special graph:", *_signed_lines(s),
             f"decomposition: {len(d.parts)} part(s)"]
    lines += ["  {" + ", ".join(sorted(map(str, p))) + "}" for p in d.parts]
    lines.append("blocks: " + "; ".join("{" + ", ".join(sorted(map(str, blk))) + "}" for blk in bs.blocks))
    lines.append("cut vertices: " + (", ".join(sorted(map(str, bs.cut_vertices))) or "none"))
    lines.append(f"lambda_min vs -3: {verdict.relation}")
    for r in reports:
        lines += _report_lines(r)
    _emit(args, data, lines)
    return OK if all(r.equivalence_holds for r in reports) else FAILED


def cmd_lambda_min(args) -> int:
    m = io.read_matrix(args.file)
    verdict = classify_lambda_min(m, args.threshold)
    if not verdict.validate():
        print("certificate failed validation", file=sys.stderr)
        return FAILED
    data = verdict.to_json()
    lines = [f"lambda_min vs -{args.threshold}: {verdict.relation}"]
    cert = verdict.certificate
    if "vector" in cert:
        lines.append("  witness vector: [" + ", ".join(str(x) for x in cert["vector"]) + "]")
    _emit(args, data, lines)
    return OK


def cmd_special_graph(args) -> int:
    h = io.read_hoffman(args.file)
    s = special_graph(h)
    _emit(args, io.signed_to_json(s), ["special graph:", *_signed_lines(s)])
    return OK


def cmd_check_theorem(args) -> int:
    h = io.read_hoffman(args.file)
    v = _vertex(h.slim, args.vstar)
    try:
        r = check_theorem_conditions(h, v)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from None
    _emit(args, r.to_json(), _report_lines(r))
    return OK if r.equivalence_holds else FAILED


def cmd_construct(args) -> int:
    s = io.read_signed(args.file)
    v = _vertex(s.vertices, args.vstar)
    try:
        rep = signed_admissibility(s, v)
    except GraphError as exc:
        raise UsageError(str(exc)) from None
    if not rep.admissible:
        _emit(args, rep.to_json(), ["not admissible:"] + [
            f"  ({c}) {rep.conditions[c].violation}" for c in CONDITIONS if not rep.conditions[c]])
        return FAILED
    h = construct_hoffman_from_signed(s, v)
    data = io.hoffman_to_json(h)
    if args.output:
        Path(args.output).write_text(io.dumps(data) + "\n")
    verdict = classify_lambda_min(b_matrix(h), 3)
    lines = [f"slim: {', '.join(map(str, h.slim))}", f"fat: {', '.join(map(str, h.fat))}",
             "edges: " + ", ".join(sorted(_edge_str(e) for e in h.edges)),
             f"lambda_min vs -3: {verdict.relation}"]
    _emit(args, data, lines)
    return OK


def cmd_check_modified_adjacency(args) -> int:
    g = io.read_plain(args.file)
    v = _vertex(g.vertices, args.vertex)
    r = check_modified_adjacency(g, v)
    lines = [f"marked vertex {v}",
             f"  lambda_min(A-hat) > -2: {r.spectral_side}",
             f"  line graph of a tree, v* an end edge: {r.line_tree_side}",
             f"  equivalence holds: {r.agree}"]
    if r.reason:
        lines.append(f"  reason: {r.reason}")
    _emit(args, r.to_json(), lines)
    return OK if r.agree else FAILED


def cmd_verify_lemmas(args) -> int:
    cases = lemmas.run_all(args.max_n, min(args.max_n, 8), args.max_n, args.max_n, min(args.max_n, 8))
    failed = [c for c in cases if not c.passed]
    by_lemma: dict[str, list[int]] = {}
    for c in cases:
        tally = by_lemma.setdefault(c.lemma, [0, 0])
        tally[0] += 1
        tally[1] += c.passed
    data = {"total": len(cases), "failed": [c.to_json() for c in failed],
            "by_lemma": {k: {"cases": n, "passed": p} for k, (n, p) in sorted(by_lemma.items())}}
    lines = [f"{k}: {p}/{n}" for k, (n, p) in sorted(by_lemma.items())]
    lines.append(f"{len(cases) - len(failed)}/{len(cases)} cases pass")
    _emit(args, data, lines)
    return OK if not failed else FAILED


def _bounds(args, filters) -> en.EnumerationBounds:
    try:
        return en.EnumerationBounds(args.max_slim, args.max_fat, args.max_fat_degree, frozenset(filters),
                                    args.max_multiplicity)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_enumerate(args) -> int:
    b = _bounds(args, args.filter or ())
    graphs = list(en.enumerate_hoffman(b))
    if args.output_dir:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, h in enumerate(graphs):
            (out / f"graph_{i:05d}.json").write_text(io.dumps(io.hoffman_to_json(h)) + "\n")
    data = {"count": len(graphs), "graphs": [io.hoffman_to_json(h) for h in graphs]}
    lines = [f"{len(graphs)} graph(s)"]
    if args.verbose:
        lines += [canonical_form(h).decode("ascii", "replace") for h in graphs]
    _emit(args, data if args.json else {}, lines)
    return OK


def cmd_oracle(args) -> int:
    b = _bounds(args, en.FILTERS)
    graphs = list(en.enumerate_hoffman(b))
    problems = en.oracle_theorem_equivalence(b, graphs=graphs)
    audits = []
    if args.audit:
        for h in graphs:
            audits += en.audit_monotonicity(h) + en.audit_decomposition(h)
    roundtrip = en.roundtrip_signed(args.roundtrip) if args.roundtrip else []
    if args.output_dir and problems:
        out = Path(args.output_dir)
        out.mkdir(parents=True, exist_ok=True)
        for i, c in enumerate(problems):
            payload = {"graph": io.hoffman_to_json(c.graph), "reason": c.reason,
                       "report": c.report.to_json() if c.report else None}
            (out / f"counterexample_{i:04d}.json").write_text(io.dumps(payload) + "\n")
    data = {"graphs": len(graphs), "counterexamples": len(problems), "audit_failures": audits,
            "roundtrip_failures": roundtrip}
    lines = [f"graphs checked: {len(graphs)}", f"equivalence counterexamples: {len(problems)}"]
    if args.audit:
        lines.append(f"audit failures: {len(audits)}")
    if args.roundtrip:
        lines.append(f"round-trip failures: {len(roundtrip)}")
    _emit(args, data, lines)
    return OK if not (problems or audits or roundtrip) else FAILED


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")
    p = argparse.ArgumentParser(prog="hoffkit", description="Exact spectral analysis of Hoffman graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="full report for a Hoffman graph")
    a.add_argument("file")
    a.add_argument("--vstar", help="marked vertex (default: every slim vertex with two fat neighbours)")
    a.set_defaults(func=cmd_analyze)

    a = sub.add_parser("lambda-min", parents=[common], help="compare lambda_min of a matrix with -t")
    a.add_argument("file")
    a.add_argument("--threshold", "-t", type=_rational, default=Fraction(3))
    a.set_defaults(func=cmd_lambda_min)

    a = sub.add_parser("special-graph", parents=[common], help="print the special graph")
    a.add_argument("file")
    a.set_defaults(func=cmd_special_graph)

    a = sub.add_parser("check-theorem", parents=[common], help="combinatorial conditions vs verdict at -3")
    a.add_argument("file")
    a.add_argument("--vstar", required=True)
    a.set_defaults(func=cmd_check_theorem)

    a = sub.add_parser("construct", parents=[common], help="realise an admissible signed graph")
    a.add_argument("file")
    a.add_argument("--vstar", required=True)
    a.add_argument("--output", "-o", help="write the Hoffman graph JSON here")
    a.set_defaults(func=cmd_construct)

    a = sub.add_parser("check-modified-adjacency", aliases=["check-theorem5"], parents=[common],
                       help="modified adjacency matrix test")
    a.add_argument("file")
    a.add_argument("--vertex", required=True)
    a.set_defaults(func=cmd_check_modified_adjacency)

    a = sub.add_parser("verify-lemmas", parents=[common], help="run the matrix and kernel-vector suite")
    a.add_argument("--max-n", type=int, default=10)
    a.set_defaults(func=cmd_verify_lemmas)

    for name, func, doc in (("enumerate", cmd_enumerate, "list Hoffman graphs up to isomorphism"),
                            ("oracle", cmd_oracle, "exhaustive cross-check of the characterisation")):
        a = sub.add_parser(name, parents=[common], help=doc)
        a.add_argument("--max-slim", type=int, default=3)
        a.add_argument("--max-fat", type=int, default=4)
        a.add_argument("--max-fat-degree", type=int, default=3)
        a.add_argument("--max-multiplicity", type=int, default=3)
        a.add_argument("--output-dir")
        a.set_defaults(func=func)
        if name == "enumerate":
            a.add_argument("--filter", action="append", choices=sorted(en.FILTERS))
            a.add_argument("--verbose", "-v", action="store_true")
        else:
            a.add_argument("--audit", action="store_true", help="also run monotonicity and min-rule audits")
            a.add_argument("--roundtrip", type=int, default=0, metavar="N",
                           help="also run the signed-graph round trip up to N vertices")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.InputError, UsageError, GraphError, MatrixError, en.CostCeilingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
