"""Bounded exploration of the move graph."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable

from .ecore import EDataError, EDatum, ValidationError, canonical_key, make
from .rewrite import Match, MoveRule, MoveStep, apply, catalog, find_matches, get_rule
from .triangulate import is_closed_normal

MAX_ENUMERATE = 5
FAMILIES = ("mp", "bmp", "ps", "bps", "zero2", "cp")


def parse_moves(names: Iterable[str], preferred: str = "A1") -> list[tuple[MoveRule, bool]]:
    """Expand names such as ``A1``, ``psI^-1``, ``ps`` or ``preferred``.

    A bare rule or family name stands for both directions.
    """
    out: list[tuple[MoveRule, bool]] = []
    for item in names:
        item = item.strip()
        dirs: tuple[bool, ...] = (False, True)
        if item.endswith("^-1"):
            item, dirs = item[:-3], (True,)
        elif item.endswith("+"):
            item, dirs = item[:-1], (False,)
        if item == "preferred":
            rules = [get_rule(preferred)]
        elif item in FAMILIES:
            rules = [r for r in catalog() if r.family == item]
        else:
            rules = [get_rule(item)]
        for r in rules:
            for d in dirs:
                if (r, d) not in out:
                    out.append((r, d))
    return out


def neighbours(g: EDatum, moves: list[tuple[MoveRule, bool]],
               max_vertices: int | None = None) -> list[tuple[Match, EDatum]]:
    out = []
    for rule, inv in moves:
        a, b = rule.arity
        grow = a - b if inv else b - a
        if max_vertices is not None and g.n + grow > max_vertices:
            continue
        for m in find_matches(g, rule, inverse=inv):
            out.append((m, apply(g, m)))
    return out


@dataclass
class SearchResult:
    found: bool
    steps: list[MoveStep] = field(default_factory=list)
    states: list[EDatum] = field(default_factory=list)
    explored: int = 0
    exhausted: bool = False  # the bounded space was searched completely

    def report(self) -> str:
        if self.found:
            return f"found a sequence of {len(self.steps)} moves after {self.explored} states"
        what = "space exhausted" if self.exhausted else "bounds reached"
        return f"no sequence found ({what}, {self.explored} states)"


def bfs_connect(a: EDatum, b: EDatum, moves: Iterable[str] | list[tuple[MoveRule, bool]],
                max_depth: int = 12, max_vertices: int | None = None,
                max_states: int = 200_000) -> SearchResult:
    """Shortest move sequence from ``a`` to a graph isomorphic to ``b``."""
    if a.labels != b.labels:
        raise EDataError("graphs have different boundary labels")
    moves = list(moves)
    if moves and isinstance(moves[0], str):
        moves = parse_moves(moves)
    if max_vertices is None:
        max_vertices = max(a.n, b.n) + 4
    target = canonical_key(b)
    start = canonical_key(a)
    if start == target:
        return SearchResult(True, [], [a], 1)
    parent: dict[tuple, tuple[tuple, MoveStep, EDatum] | None] = {start: None}
    frontier = deque([(a, start, 0)])
    truncated = False
    while frontier:
        g, key, depth = frontier.popleft()
        if depth >= max_depth:
            truncated = True
            continue
        for m, h in neighbours(g, moves, max_vertices):
            k = canonical_key(h)
            if k in parent:
                continue
            parent[k] = (key, m.step(), h)
            if k == target:
                return _trace(parent, k, a, len(parent))
            if len(parent) >= max_states:
                return SearchResult(False, explored=len(parent))
            frontier.append((h, k, depth + 1))
    return SearchResult(False, explored=len(parent), exhausted=not truncated)


def _trace(parent: dict, k: tuple, a: EDatum, explored: int) -> SearchResult:
    steps, states = [], []
    while parent[k] is not None:
        prev, step, h = parent[k]
        steps.append(step)
        states.append(h)
        k = prev
    return SearchResult(True, steps[::-1], [a] + states[::-1], explored)


# --------------------------------------------------------------- enumeration

def _pairings(k: int) -> Iterable[list[tuple[int, int]]]:
    """Perfect matchings of positions ``0..2k-1``."""
    if k == 0:
        yield []
        return
    rest = list(range(2 * k))

    def go(free: list[int]):
        if not free:
            yield []
            return
        first = free[0]
        for j in free[1:]:
            remaining = [x for x in free if x not in (first, j)]
            for tail in go(remaining):
                yield [(first, j)] + tail

    yield from go(rest)


def gauss_words(n: int) -> Iterable[EDatum]:
    """Single-circuit E-data on ``n`` vertices, numbered by first appearance."""
    for pairing in _pairings(n):
        for over in product((1, -1), repeat=n):
            word = [0] * (2 * n)
            for v, ((i, j), s) in enumerate(zip(sorted(pairing), over), start=1):
                word[i], word[j] = s * v, -s * v
            for gamma in product((1, -1), repeat=n):
                yield make([word], gamma, connected=False)


def all_successor_data(n: int) -> Iterable[EDatum]:
    """Every closed E-datum on ``n`` vertices (any number of circuits)."""
    from itertools import permutations

    from .ecore import from_successors

    outs = [s * v for v in range(1, n + 1) for s in (1, -1)]
    for perm in permutations(outs):
        succ = dict(zip(outs, perm))
        for gamma in product((1, -1), repeat=n):
            try:
                yield from_successors(succ, dict(zip(range(1, n + 1), gamma)))
            except ValidationError:
                continue  # disconnected


def enumerate_closed(max_vertices: int, *, exhaustive: bool = False) -> list[EDatum]:
    """Closed normal o-graphs with at most ``max_vertices`` vertices, up to isomorphism.

    By default only single-circuit codes are generated: the suture of a
    closed normal o-graph is a single circle and its arcs follow the
    circuits.  ``exhaustive`` walks every successor permutation instead.
    """
    if max_vertices > MAX_ENUMERATE:
        raise EDataError(f"enumeration is capped at {MAX_ENUMERATE} vertices")
    seen: dict[tuple, EDatum] = {}
    for n in range(1, max_vertices + 1):
        source = all_successor_data(n) if exhaustive else gauss_words(n)
        for g in source:
            key = canonical_key(g)
            if key in seen:
                continue
            try:
                ok = bool(is_closed_normal(g))
            except ValidationError:
                ok = False
            seen[key] = g if ok else None
    return sorted((g for g in seen.values() if g is not None), key=lambda g: (g.n, canonical_key(g)))
