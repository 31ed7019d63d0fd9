"""E-data: signed Gauss codes of normal o-graphs.

An E-datum lists the circuits of an o-graph (strands obtained by going
straight through every vertex) as sequences of signed occurrences, ``+v``
when the strand passes over vertex ``v`` and ``-v`` when it passes under,
together with the crossing sign ``gamma[v-1]`` of every vertex.

Fragments (local pictures used by move rules and by the CP scripts) may
also contain *open* circuits, whose dangling ends carry boundary labels::

    [[a, -1, 2, -2, 3, -3, 1, b]; [1, 1, 1]]

Here ``a`` labels the dangling edge entering ``-1`` and ``b`` the dangling
edge leaving ``1``.
"""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Union

Node = Union[int, str]


class EDataError(ValueError):
    """Base class for malformed E-data."""


class ParseError(EDataError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class ValidationError(EDataError):
    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


@dataclass(frozen=True)
class Circuit:
    """A closed circuit (``head is None``) or an open one from ``head`` to ``tail``."""

    entries: tuple[int, ...]
    head: str | None = None
    tail: str | None = None

    @property
    def closed(self) -> bool:
        return self.head is None

    def nodes(self) -> tuple[Node, ...]:
        if self.closed:
            return self.entries
        return (self.head, *self.entries, self.tail)


@dataclass(frozen=True)
class EdgeRef:
    """Directed edge between consecutive items of a circuit.

    Either end may be a boundary label, in which case the edge is dangling.
    """

    src: Node
    dst: Node

    def __str__(self) -> str:
        return f"{self.src}->{self.dst}"

    @property
    def dangling(self) -> bool:
        return isinstance(self.src, str) or isinstance(self.dst, str)


@dataclass(frozen=True)
class EDatum:
    circuits: tuple[Circuit, ...]
    gamma: tuple[int, ...]
    _succ: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    @property
    def n(self) -> int:
        return len(self.gamma)

    @property
    def labels(self) -> frozenset[str]:
        out = set()
        for c in self.circuits:
            if not c.closed:
                out.update((c.head, c.tail))
        return frozenset(out)

    @property
    def is_fragment(self) -> bool:
        return any(not c.closed for c in self.circuits)

    def sign(self, v: int) -> int:
        return self.gamma[abs(v) - 1]

    def successors(self) -> dict[Node, Node]:
        """Map every out-end (occurrence or head label) to the next item."""
        if self._succ is None:
            succ: dict[Node, Node] = {}
            for c in self.circuits:
                nodes = c.nodes()
                if c.closed:
                    for i, x in enumerate(nodes):
                        succ[x] = nodes[(i + 1) % len(nodes)]
                else:
                    for x, y in zip(nodes, nodes[1:]):
                        succ[x] = y
            object.__setattr__(self, "_succ", succ)
        return self._succ

    def predecessors(self) -> dict[Node, Node]:
        return {y: x for x, y in self.successors().items()}

    def __str__(self) -> str:
        return serialize(self)


def _normal_rotation(entries: tuple[int, ...]) -> tuple[int, ...]:
    i = entries.index(min(entries, key=lambda x: (abs(x), x < 0)))
    return entries[i:] + entries[:i]


def make(circuits: Iterable, gamma: Iterable[int], *, connected: bool | None = None) -> EDatum:
    """Build and validate an E-datum.

    ``circuits`` items are either :class:`Circuit` objects or plain lists in
    the textual layout (labels as strings at the two ends of open circuits).
    Closed circuits are stored rotated to start at their lowest-numbered
    vertex, taking the over occurrence when both occurrences are present.
    """
    built = []
    for c in circuits:
        if not isinstance(c, Circuit):
            c = list(c)
            if c and isinstance(c[0], str):
                if len(c) < 2 or not isinstance(c[-1], str):
                    raise ValidationError("open-circuit", f"open circuit {c} needs labels at both ends")
                c = Circuit(tuple(c[1:-1]), c[0], c[-1])
            else:
                c = Circuit(tuple(c))
        if c.closed and c.entries:
            c = Circuit(_normal_rotation(tuple(c.entries)))
        built.append(c)
    g = EDatum(tuple(built), tuple(gamma))
    validate(g, connected=connected)
    return g


def validate(g: EDatum, *, connected: bool | None = None) -> None:
    """Raise :class:`ValidationError` unless ``g`` is a well-formed E-datum.

    Connectivity is enforced for closed data by default and may be requested
    for fragments with ``connected=True``.
    """
    n = g.n
    if not g.circuits:
        raise ValidationError("empty", "an E-datum needs at least one circuit")
    for s in g.gamma:
        if s not in (1, -1):
            raise ValidationError("gamma-sign", f"crossing sign {s!r} is not +1 or -1")
    seen: dict[int, int] = {}
    labels: list[str] = []
    for c in g.circuits:
        for x in c.entries:
            if isinstance(x, bool) or not isinstance(x, int) or x == 0:
                raise ValidationError("occurrence", f"bad occurrence {x!r}")
            seen[x] = seen.get(x, 0) + 1
        if c.closed:
            if not c.entries:
                raise ValidationError("empty-circuit", "closed circuits must be nonempty")
            if c.tail is not None:
                raise ValidationError("open-circuit", "closed circuit with a tail label")
        else:
            if not isinstance(c.tail, str):
                raise ValidationError("open-circuit", "open circuit without a tail label")
            labels += [c.head, c.tail]
    dup = sorted(x for x, k in seen.items() if k > 1)
    if dup:
        raise ValidationError("duplicate-occurrence", f"occurrences {dup} appear more than once")
    top = max((abs(x) for x in seen), default=0)
    if top != n:
        raise ValidationError(
            "gamma-length", f"{len(g.gamma)} crossing signs for vertex labels up to {top}"
        )
    missing = [s * v for v in range(1, n + 1) for s in (1, -1) if s * v not in seen]
    if missing:
        raise ValidationError("missing-occurrence", f"occurrences {missing} do not appear")
    if len(set(labels)) != len(labels):
        raise ValidationError("duplicate-label", f"boundary labels {labels} are not unique")
    if n == 0 and not g.is_fragment:
        raise ValidationError("empty", "a closed E-datum needs at least one vertex")
    if connected is None:
        connected = not g.is_fragment
    if connected and component_count(g) != 1:
        raise ValidationError("disconnected", "the graph is not connected")


def component_count(g: EDatum) -> int:
    """Connected components of the underlying graph (circuits glued at vertices)."""
    parent = list(range(len(g.circuits)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    where: dict[int, int] = {}
    for i, c in enumerate(g.circuits):
        for x in c.entries:
            v = abs(x)
            if v in where:
                parent[find(i)] = find(where[v])
            else:
                where[v] = i
    return len({find(i) for i in range(len(g.circuits))})


# ---------------------------------------------------------------- text format

_TOKEN = re.compile(r"\s*(?:(?P<int>[+-]?\d+)|(?P<ident>[A-Za-z_][A-Za-z0-9_']*)|(?P<punct>[\[\],;]))")


def _tokens(text: str) -> list[tuple[str, object, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastgroup)
        if m.group("int") is not None:
            out.append(("int", int(m.group("int")), start))
        elif m.group("ident") is not None:
            out.append(("ident", m.group("ident"), start))
        else:
            out.append((m.group("punct"), None, start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokens(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[0]!r}", tok[2])
        self.i += 1
        return tok[1]

    def items(self, closer: str) -> list:
        out = []
        while True:
            tok = self.toks[self.i]
            if tok[0] in ("int", "ident"):
                out.append(tok[1])
                self.i += 1
            else:
                raise ParseError(f"expected an occurrence or label, found {tok[0]!r}", tok[2])
            if self.peek() != ",":
                break
            self.i += 1
        if self.peek() != closer:
            tok = self.toks[self.i]
            raise ParseError(f"expected {closer!r}, found {tok[0]!r}", tok[2])
        return out

    def circuit(self, raw: list, pos: int) -> list:
        for k, x in enumerate(raw):
            if isinstance(x, str) and k not in (0, len(raw) - 1):
                raise ParseError(f"label {x!r} inside a circuit", pos)
        if raw and isinstance(raw[0], str) != isinstance(raw[-1], str):
            raise ParseError("an open circuit needs labels at both ends", pos)
        if len(raw) == 1 and isinstance(raw[0], str):
            raise ParseError("an open circuit needs labels at both ends", pos)
        return raw

    def datum(self) -> tuple[list, list]:
        self.take("[")
        circuits = []
        if self.peek() == "[":
            while True:
                pos = self.toks[self.i][2]
                self.take("[")
                circuits.append(self.circuit(self.items("]"), pos))
                self.take("]")
                if self.peek() != ",":
                    break
                self.take(",")
        else:
            pos = self.toks[self.i][2]
            circuits.append(self.circuit(self.items(";"), pos))
        self.take(";")
        gamma: list = []
        if self.peek() == "[":
            self.take("[")
            if self.peek() != "]":
                gamma = self.items("]")
            self.take("]")
        else:
            gamma = self.items("]")
        for x in gamma:
            if isinstance(x, str):
                raise ParseError(f"label {x!r} in the crossing signs", self.toks[self.i][2])
        self.take("]")
        self.take("end")
        return circuits, gamma


def parse(text: str, *, connected: bool | None = None) -> EDatum:
    """Parse the textual E-datum form.

    Both the single-circuit shorthand ``[1, 2, -2, -1; 1, 1]`` and the
    bracketed form ``[[...], [...]; [...]]`` are accepted.
    """
    circuits, gamma = _Parser(text).datum()
    return make(circuits, gamma, connected=connected)


def _fmt(c: Circuit) -> str:
    return ", ".join(str(x) for x in c.nodes())


def serialize(g: EDatum) -> str:
    gamma = ", ".join(str(s) for s in g.gamma)
    if len(g.circuits) == 1 and g.circuits[0].closed:
        return f"[{_fmt(g.circuits[0])}; {gamma}]"
    body = ", ".join(f"[{_fmt(c)}]" for c in g.circuits)
    return f"[{body}; [{gamma}]]"


# ------------------------------------------------------------ basic queries

def edges(g: EDatum) -> list[EdgeRef]:
    """All edges, dangling ones included, in circuit order."""
    return [EdgeRef(x, y) for c in g.circuits for x, y in _pairs(c)]


def _pairs(c: Circuit) -> Iterator[tuple[Node, Node]]:
    nodes = c.nodes()
    if c.closed:
        for i, x in enumerate(nodes):
            yield x, nodes[(i + 1) % len(nodes)]
    else:
        yield from zip(nodes, nodes[1:])


def components(g: EDatum) -> int:
    """Number of circuits."""
    return len(g.circuits)


def edge_from_tail(g: EDatum, src: Node) -> EdgeRef:
    """The unique edge leaving the occurrence (or head label) ``src``."""
    succ = g.successors()
    if src not in succ:
        raise KeyError(f"no edge leaves {src!r}")
    return EdgeRef(src, succ[src])


def parse_edge(text: str) -> tuple[Node, Node]:
    """Parse ``"-1->2"`` or ``"a->-1"`` into its two ends."""
    left, sep, right = text.partition("->")
    if not sep:
        raise ValueError(f"edge {text!r} is not of the form X->Y")

    def conv(s: str) -> Node:
        s = s.strip()
        try:
            return int(s)
        except ValueError:
            return s

    return conv(left), conv(right)


def relabel(g: EDatum, mapping: Mapping[int, int]) -> EDatum:
    """Rename vertices by ``mapping`` (old id -> new id); labels are untouched."""
    gamma = [0] * g.n
    for v in range(1, g.n + 1):
        gamma[mapping[v] - 1] = g.gamma[v - 1]
    circuits = []
    for c in g.circuits:
        entries = tuple((1 if x > 0 else -1) * mapping[abs(x)] for x in c.entries)
        circuits.append(Circuit(entries, c.head, c.tail))
    return make(circuits, gamma, connected=False)


def from_successors(succ: Mapping[Node, Node], gamma: Mapping[int, int], *,
                    connected: bool | None = None) -> EDatum:
    """Assemble an E-datum from a successor map and crossing signs.

    Vertex ids in ``gamma`` may be arbitrary hashables' integers; they are
    compacted order-preservingly to ``1..n``.
    """
    order = sorted(gamma)
    compact = {v: i + 1 for i, v in enumerate(order)}

    def occ(x: Node) -> Node:
        if isinstance(x, str):
            return x
        return (1 if x > 0 else -1) * compact[abs(x)]

    circuits = []
    used = set()
    for h in sorted(k for k in succ if isinstance(k, str)):
        entries = []
        x = succ[h]
        while not isinstance(x, str):
            if x in used:
                raise ValidationError("successor-map", "open strand revisits an occurrence")
            used.add(x)
            entries.append(occ(x))
            x = succ[x]
        circuits.append(Circuit(tuple(entries), h, x))
    rest = sorted((x for x in succ if not isinstance(x, str) and x not in used),
                  key=lambda x: (abs(x), -x))
    for start in rest:
        if start in used:
            continue
        entries = []
        x = start
        while x not in used:
            used.add(x)
            entries.append(occ(x))
            x = succ[x]
            if isinstance(x, str):
                raise ValidationError("successor-map", "strand from a closed start reaches a label")
        if x != start:
            raise ValidationError("successor-map", "successor map is not a permutation")
        circuits.append(Circuit(tuple(entries)))
    return make(circuits, [gamma[v] for v in order], connected=connected)


def disjoint_union(a: EDatum, b: EDatum) -> EDatum:
    """Juxtapose two E-data (b's vertices shifted past a's); not connected."""
    shift = a.n
    circuits = list(a.circuits)
    for c in b.circuits:
        circuits.append(Circuit(tuple(x + shift if x > 0 else x - shift for x in c.entries),
                                c.head, c.tail))
    return make(circuits, a.gamma + b.gamma, connected=False)


# ----------------------------------------------------------- canonical form

def _canonical(g: EDatum) -> tuple[tuple, dict[int, int]]:
    """Minimal traversal encoding of ``g`` and the relabeling producing it.

    A traversal walks the open circuits in label order, then every closed
    circuit from the occurrence through which it is first reached; vertices
    are numbered on first encounter.  Closed circuits not reached that way
    form components of their own.  Each such component is encoded
    separately, trying every entry point, and the components follow in
    the order of their encodings.
    """
    where: dict[int, tuple[int, int]] = {}
    for ci, c in enumerate(g.circuits):
        for k, x in enumerate(c.entries):
            where[x] = (ci, k)

    def traverse(queue: deque, placed: set, offset: int) -> tuple[list, dict[int, int]]:
        relabel: dict[int, int] = {}
        emitted = []
        while queue:
            ci, rot = queue.popleft()
            c = g.circuits[ci]
            ent = c.entries[rot:] + c.entries[:rot]
            out = []
            for x in ent:
                v = abs(x)
                if v not in relabel:
                    relabel[v] = offset + len(relabel) + 1
                    cj, k = where[-x]
                    if cj not in placed:
                        placed.add(cj)
                        queue.append((cj, k))
                out.append(relabel[v] if x > 0 else -relabel[v])
            emitted.append((c.head or "", tuple(out), c.tail or ""))
        return emitted, relabel

    def signs(relabel: dict[int, int], offset: int) -> tuple[int, ...]:
        gamma = [0] * len(relabel)
        for v, w in relabel.items():
            gamma[w - offset - 1] = g.gamma[v - 1]
        return tuple(gamma)

    opens = sorted((ci for ci, c in enumerate(g.circuits) if not c.closed),
                   key=lambda ci: g.circuits[ci].head)
    placed = set(opens)
    emitted, relabel = traverse(deque((ci, 0) for ci in opens), placed, 0)
    gamma = list(signs(relabel, 0))

    # remaining closed circuits, grouped into components
    comps: list[set[int]] = []
    for ci, c in enumerate(g.circuits):
        if ci in placed:
            continue
        if any(ci in comp for comp in comps):
            continue
        comp = {ci}
        stack = [ci]
        while stack:
            for x in g.circuits[stack.pop()].entries:
                cj = where[-x][0]
                if cj not in comp:
                    comp.add(cj)
                    stack.append(cj)
        comps.append(comp)

    local = []
    for comp in comps:
        best = None
        for ci in sorted(comp):
            for rot in range(len(g.circuits[ci].entries)):
                em, rl = traverse(deque([(ci, rot)]), {ci}, 0)
                key = (tuple(em), signs(rl, 0))
                if best is None or key < best[0]:
                    best = (key, rl)
        local.append(best)
    local.sort(key=lambda b: b[0])

    for (em, sg), rl in local:
        offset = len(relabel)

        def shift(x: int) -> int:
            return x + offset if x > 0 else x - offset

        emitted.extend((h, tuple(shift(x) for x in ent), t) for h, ent, t in em)
        relabel.update({v: w + offset for v, w in rl.items()})
        gamma.extend(sg)
    return (tuple(emitted), tuple(gamma)), relabel


def canonical_key(g: EDatum) -> tuple:
    return _canonical(g)[0]


def canonicalize(g: EDatum) -> EDatum:
    """Canonical representative of ``g`` up to relabeling, rotation and circuit order.

    Boundary labels are never renamed.
    """
    key, _ = _canonical(g)
    circuits = []
    for head, ent, tail in key[0]:
        if head:
            circuits.append(Circuit(ent, head, tail))
        else:
            circuits.append(Circuit(ent))
    return make(circuits, key[1], connected=False)


def isomorphic(a: EDatum, b: EDatum) -> tuple[bool, dict[int, int] | None]:
    """Decide isomorphism fixing boundary labels; return a witness a -> b."""
    if a.labels != b.labels:
        raise ValueError(f"boundary labels differ: {sorted(a.labels)} vs {sorted(b.labels)}")
    ka, ra = _canonical(a)
    kb, rb = _canonical(b)
    if ka != kb:
        return False, None
    back = {w: v for v, w in rb.items()}
    return True, {v: back[w] for v, w in ra.items()}
