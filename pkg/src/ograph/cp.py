"""The CP move and its reduction to MP and sliding moves.

Both sides of the CP move are reduced to the same two-vertex fragment.
Each script lists ``(step, state after the step)``; vertex numbers in a
step refer to the labels of the state before it.
"""
from __future__ import annotations

from dataclasses import dataclass

from .ecore import EdgeRef, EDatum, isomorphic, parse
from .rewrite import (MoveError, MoveStep, ScriptResult, apply_with_inverse, locate, parse_step,
                      run_script)

CP_LHS = "[[a,-1,2,-2,3,-3,1,b]; [1, 1, 1]]"
CP_RHS = "[[a, -1,-2,3,-4,2,4,5,-5,1,-3, b];[-1, -1, 1, -1, 1]]"
# the same right-hand side written with another vertex numbering
CP_RHS_ALT = "[[a, -1, -2, 5, -3, 2, 3, 4, -4, 1, -5, b]; [-1, -1, -1, 1, 1]]"
COMMON_END = "[[a,-1,2,-2,1,b]; [-1, 1]]"

LHS_SCRIPT: list[tuple[str, str]] = [
    ("C3[2,1]", "[[a, 2,-4,-1,-2,3,-3,4,1,b]; [-1, 1, 1, 1]]"),
    ("C3[2,3]", "[[a, 5,2,-4,-1,3,-5,-2,-3,4,1, b]; [-1, -1, 1, 1, 1]]"),
    ("ps-I^-1[5,2]", "[[a, -3,-1,2,-2,3,1, b]; [-1, 1, 1]]"),
    ("C1[1,2]", "[[a, -3,2,-4,-1,-2,3,1,4,b]; [1, 1, 1, -1]]"),
    ("ps-III^-1[1,4]", "[[a, -2,1,-1,2, b];[1, 1]]"),
    ("C3[1,2]", "[[a, -1,-2,3,1,2,-3, b]; [-1, 1, 1]]"),
    ("E2[1,2]", "[[-1,-2,-4],[1],[a, 2,3,4,-3,b]; [1, -1, 1, -1]]"),
    ("D1[3,4]", "[[-1,-2,-3,-4],[1],[a, 2,5,4,-5,3,b]; [1, -1, -1, -1, 1]]"),
    ("B2[4,1]", "[[-2,-3,-6],[1,4],[a, 2,5,-4,6,-1,-5,3, b]; [-1, -1, -1, 1, 1, -1]]"),
    ("bps-2^-1[1,4]", "[[-1,-2,-4],[4],[a, 1,3,-3,2, b]; [-1, -1, 1, -1]]"),
    ("E1[1,3]", "[[-3,-1,-5],[4],[a, 5,1,-2,-4,3,2, b]; [-1, -1, 1, -1, 1]]"),
    # the pillow on 5 and 1 has the ps-III shape; no ps-IV pillow is present
    ("ps-III^-1[5,1]", "[[-2],[3],[a, -1,-3,2,1, b]; [-1, 1, -1]]"),
    ("C1[3,2]", "[[-3,-2],[3,4],[a, -1,2,-4,1, b]; [-1, 1, 1, -1]]"),
    ("bps-2^-1[3,4]", "[[a,-1,2,-2,1,b]; [-1, 1]]"),
]

RHS_SCRIPT: list[tuple[str, str]] = [
    # an over-over edge from a negative to a positive crossing: type E1
    ("E1[4,5]", "[[-5,-4,-6],[4,2,6],[a, -1,-2,3,5,1,-3, b]; [-1, -1, 1, -1, 1, 1]]"),
    ("ps-III^-1[6,4]", "[[-4],[2],[a, -1,-2,3,4,1,-3,b]; [-1, -1, 1, 1]]"),
    ("A1[3,4]", "[[-3,-4],[2],[a, -1,-2,5,1,3,-5,4, b];[-1, -1, 1, -1, 1]]"),
    ("bps-1^-1[4,3]", "[[-3],[2],[a, -1,-2,3,1,b]; [-1, -1, 1]]"),
    ("C1[2,3]", "[[-2,-3],[2,4],[a, -1,3,-4,1, b]; [-1, 1, 1, -1]]"),
    ("bps-2^-1[2,4]", "[[a, -1,2,-2,1, b]; [-1, 1]]"),
]


def _parse(s: str) -> EDatum:
    return parse(s, connected=False)


@dataclass(frozen=True)
class Reduction:
    start: EDatum
    steps: list[str]
    states: list[EDatum]


def reductions() -> dict[str, Reduction]:
    out = {}
    for side, start, script in (("LHS", CP_LHS, LHS_SCRIPT), ("RHS", CP_RHS, RHS_SCRIPT)):
        out[side] = Reduction(_parse(start), [s for s, _ in script], [_parse(x) for _, x in script])
    return out


def replay(side: str, *, audit_conditions: bool = False) -> ScriptResult:
    r = reductions()[side]
    return run_script(r.start, r.steps, expected=r.states, audit_conditions=audit_conditions)


def all_strings() -> list[str]:
    """Every E-datum string appearing in the two reductions, starts included."""
    return [CP_LHS, *(x for _, x in LHS_SCRIPT), CP_RHS, *(x for _, x in RHS_SCRIPT)]


def _undo_steps(r: Reduction) -> list[MoveStep]:
    """Steps leading back from the end of ``r`` to its start, in order."""
    back: list[MoveStep] = []
    cur = r.start
    for text, target in zip(r.steps, r.states):
        h, undo = apply_with_inverse(cur, locate(cur, parse_step(text)))
        ok, w = isomorphic(h, target)
        if not ok or undo is None:
            raise MoveError(f"{text} does not reach {target}")
        verts = tuple(w[v] for v in undo.vertices)
        anchors = tuple(EdgeRef(_move(w, e.src), _move(w, e.dst)) for e in undo.anchors)
        back.append(MoveStep(undo.rule.name, undo.inverse, verts, anchors))
        cur = target
    return back[::-1]


def _move(w: dict[int, int], x):
    return x if isinstance(x, str) else (1 if x > 0 else -1) * w[abs(x)]


def derivation() -> list[tuple[MoveStep, EDatum]]:
    """Moves turning the left side of CP into the right side, with states.

    The left reduction is followed by the right one run backwards; both
    end in the same labelled fragment, so the two halves join up.  Steps
    address vertices by the labels of the listed states.
    """
    red = reductions()
    lhs, rhs = red["LHS"], red["RHS"]
    back_states = [*rhs.states[-2::-1], rhs.start]
    return ([(parse_step(s), x) for s, x in zip(lhs.steps, lhs.states)]
            + list(zip(_undo_steps(rhs), back_states)))
