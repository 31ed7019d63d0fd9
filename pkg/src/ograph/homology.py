"""Integer homology of the closed manifold encoded by a closed normal o-graph.

The ideal vertex is capped by a ball, so the triangulation becomes a
one-vertex delta complex with one edge per edge class, one triangle per
face gluing and one tetrahedron per vertex of the o-graph.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ecore import EDatum, ValidationError
from .triangulate import FACES, OrderedTriangulation, is_closed_normal, to_triangulation

Matrix = list[list[int]]


@dataclass(frozen=True)
class ChainComplex:
    d1: Matrix  # 1 x E
    d2: Matrix  # E x F
    d3: Matrix  # F x T

    @property
    def dims(self) -> tuple[int, int, int, int]:
        return 1, len(self.d2), len(self.d3), len(self.d3[0]) if self.d3 else 0


def matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = len(b[0]) if b else 0
    return [[sum(x * b[k][j] for k, x in enumerate(row)) for j in range(cols)] for row in a]


def chain_complex(t: OrderedTriangulation) -> ChainComplex:
    face_ix: dict[tuple[int, tuple[int, ...]], int] = {}
    for k, p in enumerate(t.pairings):
        face_ix[(p.src, p.src_face)] = k
        face_ix[(p.dst, p.dst_face)] = k
    edge_ix = t.edge_class_index()
    n_tets, n_faces, n_edges = t.n, len(t.pairings), len(t.edge_classes)

    d3 = [[0] * n_tets for _ in range(n_faces)]
    for j, tet in enumerate(t.tetrahedra):
        for i in range(4):
            face = FACES[i]  # the face opposite vertex i
            try:
                d3[face_ix[(tet.id, face)]][j] += (-1) ** i
            except KeyError:
                raise ValidationError("closed-input", f"face {face} of {tet.id} is unglued") from None

    d2 = [[0] * n_faces for _ in range(n_edges)]
    for p in t.pairings:
        col = face_ix[(p.src, p.src_face)]
        a, b, c = p.src_face
        for sign, e in ((1, (b, c)), (-1, (a, c)), (1, (a, b))):
            d2[edge_ix[(p.src, e)]][col] += sign

    d1 = [[0] * n_edges]
    cc = ChainComplex(d1, d2, d3)
    for left, right in ((d1, d2), (d2, d3)):
        if any(any(row) for row in matmul(left, right)):
            raise ArithmeticError("boundary of a boundary is not zero")
    return cc


# ---------------------------------------------------------- Smith normal form

@dataclass(frozen=True)
class SNF:
    diagonal: list[int]  # nonzero invariant factors d1 | d2 | ...
    U: Matrix
    V: Matrix
    D: Matrix

    @property
    def rank(self) -> int:
        return len(self.diagonal)


def _identity(k: int) -> Matrix:
    return [[int(i == j) for j in range(k)] for i in range(k)]


def smith_normal_form(m: Matrix) -> SNF:
    """Diagonalise ``m`` by unimodular row and column operations.

    Returns ``U``, ``V`` and ``D`` with ``U @ m @ V == D``.  Python integers
    never overflow, so no separate big-number path is needed.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(r) for r in m]
    U, V = _identity(rows), _identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, q):  # row dst += q * row src
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for r in a:
            r[dst] += q * r[src]
        for r in V:
            r[dst] += q * r[src]

    t = 0
    while t < min(rows, cols):
        nz = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(t, i, -(a[i][t] // p))
                    if a[i][t]:
                        dirty = True
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(t, j, -(a[t][j] // p))
                    if a[t][j]:
                        dirty = True
            if not dirty:
                bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                       if a[i][j] % p]
                if not bad:
                    break
                add_row(bad[0][0], t, 1)
                continue
            # a smaller remainder appeared; bring it to the pivot
            nz = [(abs(a[i][t]), i, t) for i in range(t, rows) if a[i][t]]
            nz += [(abs(a[t][j]), t, j) for j in range(t, cols) if a[t][j]]
            _, i, j = min(nz)
            swap_rows(t, i)
            swap_cols(t, j)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            U[t] = [-x for x in U[t]]
        t += 1
    diag = [a[k][k] for k in range(min(rows, cols)) if a[k][k]]
    return SNF(diag, U, V, a)


# ------------------------------------------------------------------ homology

@dataclass(frozen=True)
class HomologyResult:
    betti: tuple[int, int, int, int]
    torsion: tuple[tuple[int, ...], ...]

    def group(self, k: int) -> str:
        parts = []
        b = self.betti[k]
        if b:
            parts.append("Z" if b == 1 else f"Z^{b}")
        parts += [f"Z/{d}" for d in self.torsion[k]]
        return " + ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return "; ".join(f"H{k}={self.group(k)}" for k in range(4))

    def as_dict(self) -> dict:
        return {f"H{k}": {"rank": self.betti[k], "torsion": list(self.torsion[k])} for k in range(4)}


def homology_of(cc: ChainComplex) -> HomologyResult:
    n0, n1, n2, n3 = cc.dims
    s1 = smith_normal_form(cc.d1)
    s2 = smith_normal_form(cc.d2)
    s3 = smith_normal_form(cc.d3)
    r1, r2, r3 = s1.rank, s2.rank, s3.rank
    betti = (n0 - r1, n1 - r1 - r2, n2 - r2 - r3, n3 - r3)

    def tors(s: SNF) -> tuple[int, ...]:
        return tuple(d for d in s.diagonal if d > 1)

    return HomologyResult(betti, (tors(s1), tors(s2), tors(s3), ()))


def homology(g: EDatum) -> HomologyResult:
    t = to_triangulation(g)
    report = is_closed_normal(g, t)
    if not report:
        raise ValidationError("closed-normal", report.reason)
    return homology_of(chain_complex(t))
