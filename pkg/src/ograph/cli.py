"""Command-line interface.

Graph arguments are a file name, ``-`` for standard input, or the E-datum
text itself.  Exit codes: 0 success, 1 verification failure, 2 syntax
error, 3 invariant violation, 4 search or enumeration bounds exhausted.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Callable, Sequence

from . import circuits, cp, relations
from .ecore import (EDataError, EDatum, ParseError, ValidationError, canonical_key, canonicalize,
                    edges, isomorphic, parse, parse_edge, serialize)
from .homology import homology
from .rewrite import (MoveError, all_matches, apply, find_matches, locate, parse_script,
                      parse_step, run_script)
from .search import (MAX_ENUMERATE, all_successor_data, bfs_connect, enumerate_closed, gauss_words,
                     parse_moves)
from .triangulate import is_closed_normal, to_triangulation

OK, FAILED, SYNTAX, INVARIANT, BOUNDS = 0, 1, 2, 3, 4


class BoundsExhausted(Exception):
    pass


def read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if os.path.isfile(arg):
        with open(arg) as fh:
            return fh.read()
    return arg


def read_graph(arg: str) -> EDatum:
    # fragments may be disconnected; closed data must be connected
    return parse(read_text(arg).strip())


class Output:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}

    def line(self, text: str = "") -> None:
        if not self.as_json:
            print(text)

    def put(self, **kw) -> None:
        self.data.update(kw)

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps(self.data, indent=2))


# ---------------------------------------------------------------- commands

def cmd_parse(args, out: Output) -> int:
    g = read_graph(args.graph)
    out.line(serialize(g))
    out.put(edatum=serialize(g), vertices=g.n, fragment=g.is_fragment)
    return OK


def cmd_canon(args, out: Output) -> int:
    c = canonicalize(read_graph(args.graph))
    out.line(serialize(c))
    out.put(edatum=serialize(c))
    return OK


def cmd_edges(args, out: Output) -> int:
    es = [str(e) for e in edges(read_graph(args.graph))]
    for e in es:
        out.line(e)
    out.put(edges=es)
    return OK


def cmd_components(args, out: Output) -> int:
    g = read_graph(args.graph)
    out.line(str(len(g.circuits)))
    out.put(components=len(g.circuits))
    return OK


def cmd_apply(args, out: Output) -> int:
    g = read_graph(args.graph)
    if args.step:
        h = apply(g, locate(g, parse_step(args.step)))
        out.line(serialize(h))
        out.put(edatum=serialize(h))
        return OK
    if args.moves:
        found = [m for r, inv in parse_moves(args.moves) for m in find_matches(g, r, inverse=inv)]
    else:
        found = all_matches(g)
    steps = [str(m.step()) for m in found]
    for s in steps:
        out.line(s)
    out.put(matches=steps)
    return OK


def _script_steps(text: str):
    return parse_script(text.replace(";", "\n"))


def cmd_run_script(args, out: Output) -> int:
    g = read_graph(args.graph)
    res = run_script(g, _script_steps(read_text(args.script)), audit_conditions=args.audit)
    for step, state in zip(res.steps, res.states[1:]):
        out.line(f"{step}  ->  {serialize(state)}")
    out.put(ok=res.ok, steps=[str(s) for s in res.steps[:len(res.states) - 1]],
            states=[serialize(s) for s in res.states], message=res.message)
    if not res.ok:
        out.line(f"FAIL: {res.message}")
        return FAILED
    return OK


def cmd_verify_cp(args, out: Output) -> int:
    ok = True
    total = 0
    finals = []
    report = {}
    for side in ("LHS", "RHS"):
        res = cp.replay(side, audit_conditions=args.audit)
        out.line(f"{side}: {serialize(res.states[0])}")
        for i, (step, state) in enumerate(zip(res.steps, res.states[1:]), start=1):
            out.line(f"  {total + i:2d}. {step}  ->  {serialize(state)}")
        if not res.ok:
            out.line(f"  FAIL: {res.message}")
        ok &= res.ok
        total += len(res.states) - 1
        finals.append(res.states[-1])
        report[side] = {"ok": res.ok, "states": [serialize(s) for s in res.states[1:]],
                        "message": res.message}
    end = parse(cp.COMMON_END)
    same = all(isomorphic(f, end)[0] for f in finals)
    ok = ok and same and total == 20
    out.line(f"steps: {total}; common end reached: {same}")
    out.line("PASS" if ok else "FAIL")
    out.put(ok=ok, steps=total, **report)
    return OK if ok else FAILED


def cmd_verify_relations(args, out: Output) -> int:
    rows = relations.verify_all()
    for r, good in rows:
        out.line(f"{'ok  ' if good else 'FAIL'} {r.label}")
    ok = all(good for _, good in rows)
    out.line("PASS" if ok else "FAIL")
    out.put(ok=ok, relations=[{"relation": r.label, "ok": good} for r, good in rows])
    return OK if ok else FAILED


def cmd_check_cond(args, out: Output) -> int:
    g = read_graph(args.graph)
    left, right = parse_edge(args.left), parse_edge(args.right)
    kind = args.kind.lower().replace("-", "")
    holds = circuits.condition(g, kind, left, right)
    out.line("holds" if holds else "fails")
    out.put(kind=kind, holds=holds)
    return OK if holds else FAILED


def cmd_check_closed(args, out: Output) -> int:
    rep = is_closed_normal(read_graph(args.graph))
    out.line(f"closed: {rep.closed} ({rep.reason}); boundary components {rep.components}, "
             f"Euler characteristic {rep.euler}, suture circles {rep.suture_circles}")
    out.put(closed=rep.closed, reason=rep.reason, components=rep.components,
            euler=rep.euler, suture_circles=rep.suture_circles)
    return OK if rep.closed else FAILED


def cmd_triangulate(args, out: Output) -> int:
    t = to_triangulation(read_graph(args.graph))
    table = t.export()
    out.line(table)
    out.put(tetrahedra=[{"id": x.id, "type": x.type} for x in t.tetrahedra],
            pairings=table.splitlines(), edge_classes=len(t.edge_classes))
    return OK


def cmd_homology(args, out: Output) -> int:
    h = homology(read_graph(args.graph))
    out.line(str(h))
    out.put(homology=h.as_dict(), text=str(h))
    return OK


def cmd_search(args, out: Output) -> int:
    a, b = read_graph(args.source), read_graph(args.target)
    moves = parse_moves(args.moves.split(","), preferred=args.preferred)
    res = bfs_connect(a, b, moves, max_depth=args.max_depth,
                      max_vertices=args.max_vertices, max_states=args.max_states)
    out.line(res.report())
    for step, state in zip(res.steps, res.states[1:]):
        out.line(f"{step}  ->  {serialize(state)}")
    out.put(found=res.found, explored=res.explored, exhausted=res.exhausted,
            steps=[str(s) for s in res.steps], states=[serialize(s) for s in res.states])
    if not res.found:
        raise BoundsExhausted(res.report())
    return OK


def cmd_enumerate(args, out: Output) -> int:
    if args.max_n > MAX_ENUMERATE:
        raise BoundsExhausted(f"enumeration is capped at {MAX_ENUMERATE} vertices")
    if args.closed_only:
        gs = enumerate_closed(args.max_n, exhaustive=args.exhaustive)
        for g in gs:
            out.line(serialize(g))
        out.put(count=len(gs), graphs=[serialize(g) for g in gs])
        return OK
    rows = []
    seen = set()
    for n in range(1, args.max_n + 1):
        for g in (all_successor_data(n) if args.exhaustive else gauss_words(n)):
            key = canonical_key(g)
            if key in seen:
                continue
            seen.add(key)
            rows.append((serialize(canonicalize(g)), bool(is_closed_normal(g))))
    for text, closed in rows:
        out.line(f"{text}  {'closed' if closed else 'not closed'}")
    out.put(count=len(rows), graphs=[{"edatum": t, "closed": c} for t, c in rows])
    return OK


def to_dot(g: EDatum) -> str:
    """DOT text for the 4-valent graph; edge ends are marked O or U."""
    lines = ["digraph ograph {"]
    for v in range(1, g.n + 1):
        sign = "+" if g.sign(v) > 0 else "-"
        lines.append(f'  v{v} [label="{v} ({sign})"];')
    for label in sorted(g.labels):
        lines.append(f'  "{label}" [shape=plaintext];')

    def node(x) -> str:
        return f'"{x}"' if isinstance(x, str) else f"v{abs(x)}"

    def mark(x) -> str:
        return "" if isinstance(x, str) else ("O" if x > 0 else "U")

    for e in edges(g):
        lines.append(f'  {node(e.src)} -> {node(e.dst)} '
                     f'[taillabel="{mark(e.src)}", headlabel="{mark(e.dst)}"];')
    lines.append("}")
    return "\n".join(lines)


def cmd_export_dot(args, out: Output) -> int:
    dot = to_dot(read_graph(args.graph))
    out.line(dot)
    out.put(dot=dot)
    return OK


# ------------------------------------------------------------------ parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    p = argparse.ArgumentParser(prog="ograph", description="Normal o-graphs and their moves.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str, graph: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        if graph:
            sp.add_argument("graph", help="E-datum text, file name or - for stdin")
        sp.set_defaults(fn=fn)
        return sp

    add("parse", cmd_parse, "validate and print an E-datum")
    add("canon", cmd_canon, "canonical form")
    add("edges", cmd_edges, "list edges")
    add("components", cmd_components, "number of circuits")
    sp = add("apply", cmd_apply, "apply one move, or list the applicable ones")
    sp.add_argument("--step", help="e.g. C3[2,1] or ps-I^-1[5,2]")
    sp.add_argument("--moves", nargs="*", help="restrict the listing to these rules")
    sp = add("run-script", cmd_run_script, "replay a move script")
    sp.add_argument("script", help="script file, - or steps separated by ';'")
    sp.add_argument("--audit", action="store_true", help="check side conditions of inverse sliding steps")
    sp = add("verify-cp", cmd_verify_cp, "replay both CP reductions", graph=False)
    sp.add_argument("--audit", action="store_true")
    add("verify-relations", cmd_verify_relations, "check the move decompositions", graph=False)
    sp = add("check-cond", cmd_check_cond, "evaluate a sliding-move side condition")
    sp.add_argument("--kind", required=True, choices=sorted(circuits.CONDITIONS))
    sp.add_argument("--left", required=True, help="edge as X->Y")
    sp.add_argument("--right", required=True, help="edge as X->Y")
    add("check-closed", cmd_check_closed, "closedness test")
    add("triangulate", cmd_triangulate, "face-pairing table of the dual triangulation")
    add("homology", cmd_homology, "integer homology")
    sp = add("search", cmd_search, "shortest move sequence between two E-data", graph=False)
    sp.add_argument("source")
    sp.add_argument("target")
    sp.add_argument("--moves", default="preferred,ps,bps", help="comma-separated rules or families")
    sp.add_argument("--preferred", default="A1")
    sp.add_argument("--max-depth", type=int, default=12)
    sp.add_argument("--max-vertices", type=int)
    sp.add_argument("--max-states", type=int, default=200_000)
    sp = add("enumerate", cmd_enumerate, "closed normal o-graphs up to isomorphism", graph=False)
    sp.add_argument("--max-n", type=int, required=True)
    sp.add_argument("--closed-only", action="store_true")
    sp.add_argument("--exhaustive", action="store_true", help="walk all successor permutations")
    add("export-dot", cmd_export_dot, "Graphviz DOT rendering")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args.json)
    try:
        code = args.fn(args, out)
    except ParseError as exc:
        code = _fail(out, SYNTAX, "syntax error", exc)
    except ValidationError as exc:
        code = _fail(out, INVARIANT, "invariant violated", exc)
    except BoundsExhausted as exc:
        code = _fail(out, BOUNDS, "bounds exhausted", exc)
    except MoveError as exc:
        code = _fail(out, FAILED, "move error", exc)
    except (EDataError, ValueError, KeyError) as exc:
        code = _fail(out, SYNTAX, "bad input", exc)
    out.flush()
    return code


def _fail(out: Output, code: int, what: str, exc: Exception) -> int:
    print(f"error: {what}: {exc}", file=sys.stderr)
    out.put(error=what, detail=str(exc))
    return code


if __name__ == "__main__":
    sys.exit(main())
