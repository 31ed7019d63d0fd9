"""Random E-data for property tests."""
import random

from ograph.ecore import EDataError, EDatum, from_successors


def random_closed(rng: random.Random, n: int) -> EDatum:
    """A connected closed E-datum on n vertices, by rejection."""
    outs = [s * v for v in range(1, n + 1) for s in (1, -1)]
    while True:
        perm = outs[:]
        rng.shuffle(perm)
        gamma = {v: rng.choice((1, -1)) for v in range(1, n + 1)}
        try:
            return from_successors(dict(zip(outs, perm)), gamma)
        except EDataError:
            continue


def layout(g: EDatum):
    return [list(c.nodes()) for c in g.circuits], list(g.gamma)


def rejoined_labels(g: EDatum) -> set:
    """Labels heading bare edges ``[a, b]`` of a fragment."""
    return {c.head for c in g.circuits if not c.closed and not c.entries}
