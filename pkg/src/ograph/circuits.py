"""Circuit diagrams and the side conditions of the sliding moves.

Each edge carries three parallel arcs, numbered 1, 2, 3 from left to right
when the edge points up.  At a vertex the twelve arc ends of its four
edges are joined by six arcs according to ``ROUTING``.  Arc ``k`` of an
edge corresponds to one side of the triangle dual to that edge, and the
closed curves of the diagram correspond to the edges of the dual
triangulation.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .ecore import EDataError, EdgeRef, EDatum, Node, edges

Port = tuple[int, str]  # (passage, "in" | "out")
End = tuple[Port, int]  # port and arc slot

O_IN, O_OUT, U_IN, U_OUT = (1, "in"), (1, "out"), (-1, "in"), (-1, "out")

# crossing sign -> the six arcs at a vertex
ROUTING: dict[int, tuple[tuple[End, End], ...]] = {
    -1: (((U_IN, 1), (U_OUT, 1)), ((U_IN, 3), (O_IN, 1)), ((U_OUT, 3), (O_IN, 3)),
         ((U_IN, 2), (O_OUT, 1)), ((U_OUT, 2), (O_OUT, 3)), ((O_IN, 2), (O_OUT, 2))),
    1: (((U_OUT, 1), (U_IN, 1)), ((U_OUT, 3), (O_OUT, 1)), ((U_IN, 3), (O_OUT, 3)),
        ((U_OUT, 2), (O_IN, 1)), ((U_IN, 2), (O_IN, 3)), ((O_OUT, 2), (O_IN, 2))),
}

# slot -> positions of the face edge inside the ordered dual triangle
SLOT_POSITIONS: dict[int, tuple[int, int]] = {1: (0, 1), 2: (1, 2), 3: (0, 2)}

# kind -> (slot on the left edge, slot on the right edge)
CONDITIONS: dict[str, tuple[int, int]] = {
    "ps1": (3, 2), "ps2": (3, 1), "ps3": (1, 2), "ps4": (3, 3),
    "bps1": (2, 2), "bps2": (1, 1),
}

Slot = tuple[EdgeRef, int]


@dataclass(frozen=True)
class CircuitDiagram:
    """Arc ends of every edge and the vertex arcs joining them."""

    edges: tuple[EdgeRef, ...]
    links: dict = field(hash=False)  # Slot -> tuple of neighbouring Slots

    def cycles(self) -> list[list[Slot]]:
        """Connected pieces, each listed in walking order.

        On a closed graph every piece is a closed cycle; on fragments the
        pieces through dangling edges are paths.
        """
        seen: set[Slot] = set()
        out = []
        starts = [s for s, nb in self.links.items() if len(nb) < 2] + list(self.links)
        for s in starts:
            if s in seen:
                continue
            path = walk(self, s)
            seen.update(path)
            out.append(path)
        return out

    def piece_index(self) -> dict[Slot, int]:
        if "_index" not in self.__dict__:
            idx = {s: k for k, path in enumerate(self.cycles()) for s in path}
            object.__setattr__(self, "_index", idx)
        return self.__dict__["_index"]


def walk(d: CircuitDiagram, start: Slot) -> list[Slot]:
    """Follow arcs from ``start`` until the walk closes up or dead-ends."""
    path = [start]
    prev, cur = None, start
    while True:
        nxt = [s for s in d.links[cur] if s != prev]
        if not nxt or nxt[0] == start:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


@lru_cache(maxsize=512)
def diagram(g: EDatum) -> CircuitDiagram:
    es = tuple(edges(g))
    at_port: dict[tuple[int, Port], EdgeRef] = {}
    for e in es:
        if not isinstance(e.src, str):
            at_port[(abs(e.src), (_passage(e.src), "out"))] = e
        if not isinstance(e.dst, str):
            at_port[(abs(e.dst), (_passage(e.dst), "in"))] = e
    links: dict[Slot, list[Slot]] = {(e, k): [] for e in es for k in (1, 2, 3)}
    for v in range(1, g.n + 1):
        for (p1, k1), (p2, k2) in ROUTING[g.sign(v)]:
            a, b = (at_port[(v, p1)], k1), (at_port[(v, p2)], k2)
            links[a].append(b)
            links[b].append(a)
    return CircuitDiagram(es, {s: tuple(nb) for s, nb in links.items()})


def _passage(occ: int) -> int:
    return 1 if occ > 0 else -1


def find_edge(g: EDatum, ref: EdgeRef | tuple[Node, Node]) -> EdgeRef:
    src, dst = (ref.src, ref.dst) if isinstance(ref, EdgeRef) else ref
    if g.successors().get(src) != dst:
        raise EDataError(f"no edge {src}->{dst}")
    return EdgeRef(src, dst)


def cycle_count(g: EDatum) -> int:
    return len(diagram(g).cycles())


def slots_connected(g: EDatum, left: Slot, right: Slot) -> bool:
    d = diagram(g)
    idx = d.piece_index()
    return idx[left] == idx[right]


def condition(g: EDatum, kind: str, left, right) -> bool:
    """Whether the named slots of two distinct edges lie on one curve."""
    sl, sr = CONDITIONS[kind]
    left, right = find_edge(g, left), find_edge(g, right)
    if left == right:
        return False
    return slots_connected(g, (left, sl), (right, sr))


def ps_condition(g: EDatum, kind: int | str, left, right) -> bool:
    return condition(g, _kind("ps", kind), left, right)


def bps_condition(g: EDatum, kind: int | str, left, right) -> bool:
    return condition(g, _kind("bps", kind), left, right)


_ROMAN = {"I": 1, "II": 2, "III": 3, "IV": 4}


def _kind(prefix: str, kind: int | str) -> str:
    if isinstance(kind, str):
        k = kind.upper().removeprefix(prefix.upper()).strip("-_ ")
        kind = _ROMAN.get(k) or int(k)
    name = f"{prefix}{kind}"
    if name not in CONDITIONS:
        raise EDataError(f"unknown condition {name}")
    return name
