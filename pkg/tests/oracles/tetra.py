"""Tetrahedral reading of move fragments, independent of the package.

Each vertex of a fragment is an ordered tetrahedron; an edge from
occurrence x to occurrence y glues the out-face of x to the in-face of y
keeping vertex order.  Dangling edges leave faces free and name them.
"""
from itertools import combinations

# (crossing sign, over?, entering?) -> face
FACE = {
    (-1, True, True): (0, 2, 3), (-1, True, False): (1, 2, 3),
    (-1, False, True): (0, 1, 2), (-1, False, False): (0, 1, 3),
    (1, True, True): (1, 2, 3), (1, True, False): (0, 2, 3),
    (1, False, True): (0, 1, 3), (1, False, False): (0, 1, 2),
}


class DSU:
    def __init__(self):
        self.p = {}

    def find(self, x):
        self.p.setdefault(x, x)
        root = x
        while self.p[root] != root:
            root = self.p[root]
        while self.p[x] != root:
            self.p[x], x = root, self.p[x]
        return root

    def join(self, a, b):
        self.p[self.find(a)] = self.find(b)


def face_of(gamma, occ, entering):
    return FACE[(gamma[abs(occ) - 1], occ > 0, entering)]


def complex_of(circuits, gamma):
    """Vertex and edge classes plus the free faces keyed by boundary label.

    ``circuits`` is a list of lists in the textual layout (labels as str).
    """
    verts, edges_ = DSU(), DSU()
    free = {}
    internal = 0
    for c in circuits:
        open_ = bool(c) and isinstance(c[0], str)
        items = list(c) if open_ else list(c) + [c[0]]
        for x, y in zip(items, items[1:]):
            if isinstance(x, str) and isinstance(y, str):
                free[x] = ("gap", x, y)
                free[y] = ("gap", x, y)
                continue
            if isinstance(x, str):
                free[x] = (abs(y), face_of(gamma, y, True))
                continue
            if isinstance(y, str):
                free[y] = (abs(x), face_of(gamma, x, False))
                continue
            internal += 1
            fx, fy = face_of(gamma, x, False), face_of(gamma, y, True)
            for i in range(3):
                verts.join((abs(x), fx[i]), (abs(y), fy[i]))
            for i, j in combinations(range(3), 2):
                edges_.join((abs(x), (fx[i], fx[j])), (abs(y), (fy[i], fy[j])))
    return verts, edges_, free, internal


def boundary_signature(circuits, gamma):
    """Vertex classes met along each free face, classes renamed canonically.

    A label glued straight to another label (an edge with no vertices)
    contributes a fresh triple shared by both labels.
    """
    verts, _, free, _ = complex_of(circuits, gamma)
    names = {}
    sig = []
    for label in sorted(free):
        f = free[label]
        if f[0] == "gap":
            triple = [("gap", f[1], i) for i in range(3)]
        else:
            triple = [verts.find((f[0], v)) for v in f[1]]
        sig.append(tuple(names.setdefault(t, len(names)) for t in triple))
    return tuple(sig)


def interior_edge_degrees(circuits, gamma, n):
    """Sizes of edge classes that meet no free face."""
    _, edges_, free, _ = complex_of(circuits, gamma)
    on_boundary = set()
    for f in free.values():
        if f[0] == "gap":
            continue
        for i, j in combinations(f[1], 2):
            on_boundary.add(edges_.find((f[0], (i, j))))
    classes = {}
    for v in range(1, n + 1):
        for e in combinations(range(4), 2):
            classes.setdefault(edges_.find((v, e)), []).append((v, e))
    return sorted(len(m) for r, m in classes.items() if r not in on_boundary)
