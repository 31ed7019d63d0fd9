"""Local rewriting of E-data by move rules.

A rule is a pair of fragments sharing boundary labels.  Applying it
locates the left fragment inside a graph, cuts those vertices out and
splices the right fragment between the same dangling ends.  Fragments of
the 0--2 moves have no vertices on the left; their open circuits ``[a, b]``
stand for arbitrary edges of the graph, the anchors of the match.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Sequence

from . import circuits
from .ecore import EDataError, EdgeRef, EDatum, Node, edges, from_successors, isomorphic, parse, relabel
from .rules_data import RULES

PREFERRED_DEFAULT = "A1"


class MoveError(EDataError):
    """A move could not be located or applied."""


@dataclass(frozen=True)
class MoveRule:
    name: str
    family: str  # mp, bmp, ps, bps, zero2, cp
    lhs: EDatum
    rhs: EDatum
    condition: str | None = None

    @property
    def arity(self) -> tuple[int, int]:
        return self.lhs.n, self.rhs.n

    def side(self, inverse: bool) -> tuple[EDatum, EDatum]:
        return (self.rhs, self.lhs) if inverse else (self.lhs, self.rhs)


@dataclass(frozen=True)
class Match:
    rule: MoveRule
    inverse: bool
    vertices: tuple[int, ...]  # graph vertex of pattern vertex 1, 2, ...
    anchors: tuple[EdgeRef, ...] = ()  # graph edges of the empty pattern circuits

    def step(self) -> "MoveStep":
        return MoveStep(self.rule.name, self.inverse, self.vertices, self.anchors)


@dataclass(frozen=True)
class MoveStep:
    name: str
    inverse: bool = False
    vertices: tuple[int, ...] = ()
    anchors: tuple[EdgeRef, ...] = ()

    def __str__(self) -> str:
        inv = "^-1" if self.inverse else ""
        if self.anchors:
            inside = ",".join(str(e) for e in self.anchors)
        else:
            inside = ",".join(map(str, self.vertices))
        return f"{display_name(self.name)}{inv}[{inside}]"


# ------------------------------------------------------------------ catalog

_ALIASES = {"ps-i": "psI", "ps-ii": "psII", "ps-iii": "psIII", "ps-iv": "psIV",
            "bps-1": "bps1", "bps-2": "bps2", "0-2": "zero2"}


def rule_name(text: str) -> str:
    """Normalise a move name such as ``ps-III`` or ``(bps-2)`` to its key."""
    key = text.strip().strip("()")
    low = key.lower()
    if low in _ALIASES:
        return _ALIASES[low]
    for name in catalog_by_name():
        if name.lower() == low:
            return name
    raise MoveError(f"unknown move {text!r}")


def display_name(name: str) -> str:
    if name.startswith("ps"):
        return "ps-" + name[2:]
    if name.startswith("bps"):
        return "bps-" + name[3:]
    return name


@lru_cache(maxsize=None)
def catalog() -> tuple[MoveRule, ...]:
    """All 28 rules: 16 MP, 4 bumping MP, 4 ps, 2 bps, zero2 and CP."""
    out = []
    for name, family, lhs, rhs, cond in RULES:
        out.append(MoveRule(name, family, parse(lhs, connected=False),
                            parse(rhs, connected=False), cond))
    return tuple(out)


@lru_cache(maxsize=None)
def catalog_by_name() -> dict[str, MoveRule]:
    return {r.name: r for r in catalog()}


def get_rule(name: str) -> MoveRule:
    return catalog_by_name()[rule_name(name)]


# ----------------------------------------------------------------- matching

def _sgn(x: int) -> int:
    return 1 if x > 0 else -1


def _occ_map(emb: dict[int, int], x: Node) -> Node:
    return x if isinstance(x, str) else _sgn(x) * emb[abs(x)]


def _internal_pairs(p: EDatum) -> list[tuple[int, int]]:
    return [(x, y) for x, y in p.successors().items()
            if not isinstance(x, str) and not isinstance(y, str)]


def _embeddings(g: EDatum, p: EDatum) -> Iterator[dict[int, int]]:
    """Injective vertex maps of pattern ``p`` into ``g`` preserving internal edges."""
    if p.n == 0:
        yield {}
        return
    succ = g.successors()
    pairs = _internal_pairs(p)
    order: list[int] = []
    # grow the assignment along pattern edges so that constraints bite early
    seen = set()
    for v in range(1, p.n + 1):
        stack = [v]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            order.append(u)
            for x, y in pairs:
                if abs(x) == u:
                    stack.append(abs(y))
                if abs(y) == u:
                    stack.append(abs(x))

    def consistent(emb: dict[int, int]) -> bool:
        for x, y in pairs:
            if abs(x) in emb and abs(y) in emb:
                if succ.get(_occ_map(emb, x)) != _occ_map(emb, y):
                    return False
        return True

    def extend(i: int, emb: dict[int, int]) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(emb)
            return
        u = order[i]
        used = set(emb.values())
        for w in range(1, g.n + 1):
            if w in used or g.sign(w) != p.sign(u):
                continue
            emb[u] = w
            if consistent(emb):
                yield from extend(i + 1, emb)
            del emb[u]

    yield from extend(0, {})


def _empty_circuits(p: EDatum) -> list[int]:
    return [k for k, c in enumerate(p.circuits) if not c.closed and not c.entries]


def find_matches(g: EDatum, rule: MoveRule, *, inverse: bool = False,
                 check_condition: bool = True) -> list[Match]:
    """All places where ``rule`` applies in ``g``, in a fixed order.

    Forward sliding moves only match where their side condition holds, and
    inverse ones only where the forward move back from the result would.
    """
    pattern, repl = rule.side(inverse)
    out = []
    empties = _empty_circuits(pattern)
    rejoined = _rejoined_heads(pattern, repl)
    pred = g.predecessors() if rejoined else {}
    all_edges = edges(g) if empties else []
    pieces = None
    if empties and check_condition and not inverse and rule.condition in circuits.CONDITIONS:
        pieces = circuits.diagram(g).piece_index()
    for emb in _embeddings(g, pattern):
        verts = tuple(emb[v] for v in range(1, pattern.n + 1))
        if any(_inside(pred[_occ_map(emb, x)], verts) for x in rejoined):
            continue
        if not empties:
            m = Match(rule, inverse, verts)
            if check_condition and inverse and rule.condition and not _undo_allowed(g, m):
                continue
            out.append(m)
            continue
        pool = [e for e in all_edges if not _touches(e, verts)]
        if pieces is not None:
            # same test as circuits.condition, with the slot pieces looked up once
            sl, sr = circuits.CONDITIONS[rule.condition]
            by_piece: dict[int, list[EdgeRef]] = {}
            for b in pool:
                by_piece.setdefault(pieces[(b, sr)], []).append(b)
            out += [Match(rule, inverse, verts, (a, b)) for a in pool
                    for b in by_piece.get(pieces[(a, sl)], ()) if a != b]
            continue
        for anchors in permutations(pool, len(empties)):
            m = Match(rule, inverse, verts, tuple(anchors))
            if check_condition and not inverse and not condition_holds(g, m):
                continue
            out.append(m)
    out.sort(key=lambda m: (m.vertices, [(str(e.src), str(e.dst)) for e in m.anchors]))
    return out


def _undo_allowed(g: EDatum, m: Match) -> bool:
    try:
        h, back = apply_with_inverse(g, m)
    except EDataError:
        return False
    return back is not None and condition_holds(h, back)


def _rejoined_heads(pattern: EDatum, repl: EDatum) -> list[int]:
    """First pattern occurrences of strands that the replacement joins into a bare edge.

    Collapsing such a strand is only allowed when it is entered from outside
    the matched vertices; otherwise two edges of the result would coincide
    and no move on two distinct edges could restore the pattern.
    """
    heads = {c.head for c in repl.circuits if not c.closed and not c.entries}
    return [c.entries[0] for c in pattern.circuits
            if not c.closed and c.head in heads and c.entries]


def _inside(x: Node, verts: Sequence[int]) -> bool:
    return not isinstance(x, str) and abs(x) in verts


def _touches(e: EdgeRef, verts: Sequence[int]) -> bool:
    return any(not isinstance(x, str) and abs(x) in verts for x in (e.src, e.dst))


def condition_holds(g: EDatum, m: Match) -> bool:
    cond = m.rule.condition
    if cond is None:
        return True
    left, right = m.anchors
    if cond == "zero2":
        return adjacent_ps1(g, left, right)
    return circuits.condition(g, cond, left, right)


def adjacent_ps1(g: EDatum, left: EdgeRef, right: EdgeRef) -> bool:
    """Slot 3 of ``left`` and slot 2 of ``right`` are joined by a single vertex arc."""
    d = circuits.diagram(g)
    return (right, 2) in d.links[(left, 3)]


def all_matches(g: EDatum, rules: Iterable[MoveRule] | None = None, *,
                directions: Iterable[bool] = (False, True)) -> list[Match]:
    rules = catalog() if rules is None else rules
    out = []
    for r in rules:
        for inv in directions:
            out.extend(find_matches(g, r, inverse=inv))
    return out


# ------------------------------------------------------------------ splicing

def apply(g: EDatum, m: Match) -> EDatum:
    """Replace the matched side of the rule by the other side."""
    return apply_with_inverse(g, m)[0]


def apply_with_inverse(g: EDatum, m: Match) -> tuple[EDatum, Match | None]:
    """Apply ``m`` and also return the match of the opposite move undoing it.

    The undoing match is ``None`` when an edge recreated by a collapsing
    move runs back into the removed vertices, so that it cannot be named.
    """
    pattern, repl = m.rule.side(m.inverse)
    emb = {v + 1: w for v, w in enumerate(m.vertices)}
    matched = set(m.vertices)
    succ = g.successors()
    pred = g.predecessors()

    def is_matched(x: Node) -> bool:
        return not isinstance(x, str) and abs(x) in matched

    # where each boundary label of the pattern attaches in g
    ext_in: dict[str, Node] = {}
    ext_out: dict[str, Node] = {}
    anchors = iter(m.anchors)
    for c in pattern.circuits:
        if c.closed:
            continue
        if not c.entries:
            e = next(anchors)
            ext_in[c.head], ext_out[c.tail] = e.src, e.dst
            continue
        ext_in[c.head] = pred[_occ_map(emb, c.entries[0])]
        ext_out[c.tail] = succ[_occ_map(emb, c.entries[-1])]
    head_at = {_occ_map(emb, c.entries[0]): c.head
               for c in pattern.circuits if not c.closed and c.entries}

    # fresh ids for the replacement, far above the existing ones
    base = g.n + len(repl.gamma) + 1
    new = {v: base + v for v in range(1, repl.n + 1)}
    rcirc = {c.head: c for c in repl.circuits if not c.closed}

    def enter(label: str, depth: int = 0) -> Node:
        """First node reached when a strand enters the replacement at ``label``."""
        if depth > len(rcirc) + 1:
            raise MoveError("replacement closes a strand without vertices")
        c = rcirc[label]
        if c.entries:
            return _occ_map(new, c.entries[0])
        return leave(c.tail, depth + 1)

    def leave(label: str, depth: int = 0) -> Node:
        w = ext_out[label]
        if is_matched(w):
            return enter(head_at[w], depth + 1)
        return w

    nsucc: dict[Node, Node] = {}
    for x, y in succ.items():
        if is_matched(x) or is_matched(y):
            continue
        nsucc[x] = y
    for c in pattern.circuits:
        if c.closed or c.entries:
            continue
        nsucc.pop(ext_in[c.head], None)
    for label, p in ext_in.items():
        if not is_matched(p):
            nsucc[p] = enter(label)
    for c in repl.circuits:
        occs = [_occ_map(new, x) for x in c.entries]
        if c.closed:
            for i, x in enumerate(occs):
                nsucc[x] = occs[(i + 1) % len(occs)]
            continue
        for x, y in zip(occs, occs[1:]):
            nsucc[x] = y
        if occs:
            nsucc[occs[-1]] = leave(c.tail)

    gamma = {v: g.sign(v) for v in range(1, g.n + 1) if v not in matched}
    freed = sorted(matched)
    fresh = iter(range(g.n + 1, g.n + repl.n + 1))
    final = {}
    for v in range(1, repl.n + 1):
        final[new[v]] = freed[v - 1] if v <= len(freed) else next(fresh)
        gamma[final[new[v]]] = repl.sign(v)

    def rename(x: Node) -> Node:
        if isinstance(x, str) or abs(x) not in final:
            return x
        return _sgn(x) * final[abs(x)]

    out = {rename(x): rename(y) for x, y in nsucc.items()}
    h = from_successors(out, gamma, connected=False)

    compact = {v: i + 1 for i, v in enumerate(sorted(gamma))}

    def final_occ(x: Node) -> Node:
        x = rename(x)
        return x if isinstance(x, str) else _sgn(x) * compact[abs(x)]

    verts = tuple(compact[final[new[v]]] for v in range(1, repl.n + 1))
    back_anchors = []
    for c in repl.circuits:
        if c.closed or c.entries:
            continue
        p = ext_in[c.head]
        if is_matched(p):
            return h, None
        back_anchors.append(EdgeRef(final_occ(p), final_occ(nsucc[p])))
    return h, Match(m.rule, not m.inverse, verts, tuple(back_anchors))


# ------------------------------------------------------------------- scripts

_STEP = re.compile(r"^\s*\(?\s*(?P<name>[A-Za-z0-9\-]+?)\s*\)?\s*(?P<inv>\^\s*\{?\s*-1\s*\}?)?\s*"
                   r"\[(?P<args>[^\]]*)\]\s*$")


def parse_step(text: str) -> MoveStep:
    """``C3[2,1]``, ``ps-I^-1[5,2]`` or ``ps-I[1->2,-3->b]``."""
    m = _STEP.match(text)
    if not m:
        raise MoveError(f"bad step {text!r}")
    name = rule_name(m["name"])
    args = [a.strip() for a in m["args"].split(",") if a.strip()]
    if any("->" in a for a in args):
        anchors = []
        for a in args:
            src, dst = a.split("->")
            anchors.append(EdgeRef(_node(src), _node(dst)))
        return MoveStep(name, bool(m["inv"]), (), tuple(anchors))
    try:
        verts = tuple(int(a) for a in args)
    except ValueError as exc:
        raise MoveError(f"bad vertex list in {text!r}") from exc
    return MoveStep(name, bool(m["inv"]), verts)


def _node(text: str) -> Node:
    text = text.strip()
    try:
        return int(text)
    except ValueError:
        return text


def parse_script(text: str) -> list[MoveStep]:
    steps = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            steps.append(parse_step(line))
    return steps


def locate(g: EDatum, step: MoveStep) -> Match:
    """The match addressed by a script step.

    Vertex lists are read as sets; an exact order match is preferred when
    several matches cover the same vertices.
    """
    rule = catalog_by_name()[step.name]
    found = find_matches(g, rule, inverse=step.inverse, check_condition=False)
    if step.anchors:
        found = [m for m in found if m.anchors == step.anchors]
    else:
        found = [m for m in found if sorted(m.vertices) == sorted(step.vertices)]
    if not found:
        raise MoveError(f"{step} does not apply to {g}")
    exact = [m for m in found if m.vertices == step.vertices]
    return (exact or found)[0]


@dataclass
class ScriptResult:
    states: list[EDatum]
    steps: list[MoveStep]
    witnesses: list[dict[int, int] | None]
    ok: bool
    message: str = ""


def run_script(g: EDatum, steps: Sequence[MoveStep | str], *,
               expected: Sequence[EDatum] | None = None,
               audit_conditions: bool = False) -> ScriptResult:
    """Replay ``steps`` from ``g``.

    With ``expected`` states, each result must be isomorphic to the given
    state and is relabelled to it, so that later steps can address vertices
    by the expected labels.  With ``audit_conditions`` every inverse sliding
    step is re-checked: the forward move from the new state back to the old
    one must satisfy its side condition.
    """
    steps = [parse_step(s) if isinstance(s, str) else s for s in steps]
    states = [g]
    witnesses: list[dict[int, int] | None] = []
    cur = g
    for i, step in enumerate(steps):
        try:
            m = locate(cur, step)
        except MoveError as exc:
            return ScriptResult(states, steps, witnesses, False, f"step {i + 1}: {exc}")
        nxt = apply(cur, m)
        if audit_conditions and m.rule.condition is not None and m.inverse:
            if not forward_condition_holds(nxt, cur, m.rule):
                return ScriptResult(states, steps, witnesses, False,
                                    f"step {i + 1}: {step} violates its side condition")
        witness = None
        if expected is not None:
            ok, witness = isomorphic(nxt, expected[i])
            if not ok:
                return ScriptResult(states, steps, witnesses, False,
                                    f"step {i + 1}: {step} gave {nxt}, expected {expected[i]}")
            nxt = expected[i]
        witnesses.append(witness)
        states.append(nxt)
        cur = nxt
    return ScriptResult(states, steps, witnesses, True)


def forward_condition_holds(small: EDatum, big: EDatum, rule: MoveRule) -> bool:
    """Some forward match of ``rule`` on ``small`` satisfying its condition gives ``big``."""
    for m in find_matches(small, rule, check_condition=False):
        if isomorphic(apply(small, m), big)[0] and condition_holds(small, m):
            return True
    return False


def verify_relation(rule: MoveRule | str, decomposition: Sequence[MoveStep | str],
                    on: EDatum, *, inverse: bool = False,
                    audit_conditions: bool = False) -> bool:
    """Whether the decomposition reproduces the rule on the fragment ``on``.

    ``on`` must contain the rule's matched side; steps of the decomposition
    are addressed in the labels of the successive intermediate states.
    """
    rule = get_rule(rule) if isinstance(rule, str) else rule
    direct = find_matches(on, rule, inverse=inverse, check_condition=False)
    if not direct:
        raise MoveError(f"{rule.name} does not match the given fragment")
    target = apply(on, direct[0])
    if not decomposition:
        return False
    res = run_script(on, decomposition, audit_conditions=audit_conditions)
    if not res.ok:
        return False
    return isomorphic(res.states[-1], target)[0]


def move_sizes(m: Match) -> tuple[int, int]:
    a, b = m.rule.arity
    return (b, a) if m.inverse else (a, b)


__all__ = [
    "MoveRule", "Match", "MoveStep", "MoveError", "ScriptResult", "catalog", "get_rule",
    "find_matches", "all_matches", "apply", "apply_with_inverse", "run_script", "parse_step", "parse_script",
    "verify_relation", "locate", "rule_name", "display_name", "relabel",
]
