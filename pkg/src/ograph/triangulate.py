"""Dual ordered ideal triangulations.

Every vertex of a normal o-graph becomes an ordered tetrahedron and every
edge a gluing between the out-face of its tail and the in-face of its head.
The gluing map is the order-preserving bijection of face vertices.

Truncating the tetrahedra at their vertices gives a triangulated boundary
surface; the vertex order induces a flow whose tangency with the boundary
is the suture.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .ecore import EDatum, ValidationError

Face = tuple[int, int, int]
TetEdge = tuple[int, int]

# crossing sign -> (passage, direction) -> face of the dual tetrahedron.
# Over strands run through faces 023/123 and under strands through 012/013;
# a negative crossing gives a tetrahedron of type +.
PORT_FACES: dict[int, dict[tuple[int, str], Face]] = {
    -1: {(1, "in"): (0, 2, 3), (1, "out"): (1, 2, 3),
         (-1, "in"): (0, 1, 2), (-1, "out"): (0, 1, 3)},
    1: {(1, "in"): (1, 2, 3), (1, "out"): (0, 2, 3),
        (-1, "in"): (0, 1, 3), (-1, "out"): (0, 1, 2)},
}

# Suture arcs inside the corner triangles: the arc at corner 1 joins the
# sides lying on faces 012 and 013, the arc at corner 2 those on 023 and 123.
# Corners 0 and 3 are a source and a sink of the flow and carry no arc.
SUTURE_ARCS: dict[int, tuple[Face, Face]] = {
    1: ((0, 1, 2), (0, 1, 3)),
    2: ((0, 2, 3), (1, 2, 3)),
}

FACES: tuple[Face, ...] = ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2))
EDGES: tuple[TetEdge, ...] = tuple(combinations(range(4), 2))


class UnionFind:
    """Disjoint sets over hashable items, with path halving."""

    def __init__(self, items=()):
        self.parent: dict = {}
        for x in items:
            self.parent[x] = x

    def find(self, x):
        parent = self.parent
        if x not in parent:
            parent[x] = x
            return x
        while True:
            p = parent[x]
            if p == x:
                return x
            parent[x] = parent[p]
            x = parent[p]

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def to_sets(self) -> list[list]:
        groups: dict = {}
        for x in list(self.parent):
            groups.setdefault(self.find(x), []).append(x)
        return list(groups.values())


def port_face(gamma: int, occ: int, direction: str) -> Face:
    return PORT_FACES[gamma][(1 if occ > 0 else -1, direction)]


def port_of_face(gamma: int, face: Face) -> tuple[int, str]:
    """Inverse of :func:`port_face`: ``(passage, direction)``."""
    for key, f in PORT_FACES[gamma].items():
        if f == face:
            return key
    raise KeyError(face)


def face_name(face: Face) -> str:
    return "".join(map(str, face))


@dataclass(frozen=True)
class Tetra:
    id: int
    type: int  # +1 or -1, opposite to the crossing sign


@dataclass(frozen=True)
class Pairing:
    """Out-face of ``src`` glued to in-face of ``dst``, order preserving."""

    src: int
    src_face: Face
    dst: int
    dst_face: Face

    def vertex_map(self) -> dict[int, int]:
        return dict(zip(self.src_face, self.dst_face))

    def __str__(self) -> str:
        return f"{self.src}.{face_name(self.src_face)} <-> {self.dst}.{face_name(self.dst_face)}"


@dataclass(frozen=True)
class Surface:
    vertices: int
    edges: int
    faces: int
    components: int
    unmatched_sides: int

    @property
    def euler(self) -> int:
        return self.vertices - self.edges + self.faces


@dataclass(frozen=True)
class OrderedTriangulation:
    tetrahedra: tuple[Tetra, ...]
    pairings: tuple[Pairing, ...]
    edge_classes: tuple[tuple[tuple[int, TetEdge], ...], ...]

    @property
    def n(self) -> int:
        return len(self.tetrahedra)

    def edge_class_index(self) -> dict[tuple[int, TetEdge], int]:
        return {m: k for k, cls in enumerate(self.edge_classes) for m in cls}

    def export(self) -> str:
        """Face-pairing table, one gluing per line."""
        return "\n".join(str(p) for p in self.pairings)


def _pairings(g: EDatum) -> Iterator[Pairing]:
    for src, dst in g.successors().items():
        if isinstance(src, str) or isinstance(dst, str):
            continue
        yield Pairing(abs(src), port_face(g.sign(src), src, "out"),
                      abs(dst), port_face(g.sign(dst), dst, "in"))


def triangulate_any(g: EDatum) -> OrderedTriangulation:
    """Like :func:`to_triangulation` but also accepts fragments.

    Dangling edges leave their faces unglued.
    """
    tets = tuple(Tetra(v, -g.sign(v)) for v in range(1, g.n + 1))
    pairings = tuple(sorted(_pairings(g), key=lambda p: (p.src, p.src_face)))
    uf = UnionFind((t.id, e) for t in tets for e in EDGES)
    for p in pairings:
        phi = p.vertex_map()
        for i, j in combinations(p.src_face, 2):
            uf.union((p.src, (i, j)), (p.dst, (phi[i], phi[j])))
    classes = sorted(tuple(sorted(s)) for s in uf.to_sets())
    return OrderedTriangulation(tets, pairings, tuple(classes))


def to_triangulation(g: EDatum) -> OrderedTriangulation:
    if g.is_fragment:
        raise ValidationError("closed-input", "fragments have no closed dual triangulation")
    return triangulate_any(g)


def _side_gluings(t: OrderedTriangulation) -> Iterator[tuple[tuple, tuple]]:
    """Pairs of identified corner-triangle sides ``(tet, corner, face)``."""
    for p in t.pairings:
        phi = p.vertex_map()
        for i in p.src_face:
            yield (p.src, i, p.src_face), (p.dst, phi[i], p.dst_face)


def boundary_surface(t: OrderedTriangulation) -> Surface:
    """Triangulated boundary of the truncated tetrahedra."""
    corners = [(tt.id, i) for tt in t.tetrahedra for i in range(4)]
    tris = UnionFind(corners)
    # corner vertex (tet, i, j): end of tet edge ij near vertex i
    ends = UnionFind((c[0], c[1], j) for c in corners for j in range(4) if j != c[1])
    glued = 0
    for (a, i, fa), (b, k, fb) in _side_gluings(t):
        glued += 1
        tris.union((a, i), (b, k))
        phi = dict(zip(fa, fb))
        for j in fa:
            if j != i:
                ends.union((a, i, j), (b, k, phi[j]))
    sides = 3 * len(corners)
    return Surface(
        vertices=len(list(ends.to_sets())),
        edges=sides - glued,
        faces=len(corners),
        components=len(list(tris.to_sets())),
        unmatched_sides=sides - 2 * glued,
    )


def suture_circles(t: OrderedTriangulation) -> int:
    """Number of closed curves formed by the suture arcs.

    Raises if some arc ends on an unglued side, so only closed inputs are
    meaningful here.
    """
    partner: dict[tuple, tuple] = {}
    for x, y in _side_gluings(t):
        partner[x] = y
        partner[y] = x
    arcs = UnionFind()
    for tt in t.tetrahedra:
        for corner, (f1, f2) in SUTURE_ARCS.items():
            s1, s2 = (tt.id, corner, f1), (tt.id, corner, f2)
            for s in (s1, s2):
                other = partner.get(s)
                if other is None:
                    raise ValidationError("suture", f"arc end on unglued side {s}")
                if other[1] not in SUTURE_ARCS:
                    raise ValidationError("suture", f"arc end {s} meets a corner without arc")
                arcs.union(s, other)
            arcs.union(s1, s2)
    return len(list(arcs.to_sets()))


@dataclass(frozen=True)
class ClosedReport:
    closed: bool
    components: int
    euler: int
    suture_circles: int
    reason: str

    def __bool__(self) -> bool:
        return self.closed


def is_closed_normal(g: EDatum, t: OrderedTriangulation | None = None) -> ClosedReport:
    """Boundary is one sphere and the suture is a single circle."""
    t = to_triangulation(g) if t is None else t
    surf = boundary_surface(t)
    circles = suture_circles(t)
    if surf.components != 1:
        reason = f"boundary has {surf.components} components"
    elif surf.euler != 2:
        reason = f"boundary has Euler characteristic {surf.euler}"
    elif circles != 1:
        reason = f"suture has {circles} circles"
    else:
        reason = "ok"
    return ClosedReport(reason == "ok", surf.components, surf.euler, circles, reason)


