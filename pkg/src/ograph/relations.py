"""Decompositions of MP and bumping MP moves into other moves.

Each entry rewrites one move, applied to its own matched side, as a short
sequence: a 2--3 move of another type followed by an inverse sliding move.
Vertex numbers refer to the labels of the intermediate states.
"""
from __future__ import annotations

from dataclasses import dataclass

from .rewrite import get_rule, verify_relation


@dataclass(frozen=True)
class Relation:
    rule: str
    inverse: bool
    steps: tuple[str, ...]
    family: str

    @property
    def label(self) -> str:
        inv = "^-1" if self.inverse else ""
        return f"{self.rule}{inv} = {' ; '.join(self.steps)}"

    def check(self) -> bool:
        r = get_rule(self.rule)
        on = r.rhs if self.inverse else r.lhs
        return verify_relation(r, list(self.steps), on, inverse=self.inverse,
                               audit_conditions=True)


RELATIONS: tuple[Relation, ...] = (
    Relation("A1", False, ("ps-I[-1->d,-2->f]", "D2^-1[4,1,2]"), "ps"),
    # B^-1 ~> E
    Relation("B2", True, ("E1[2,3]", "bps-2^-1[1,2]"), "B-E"),
    Relation("B4", True, ("E2[3,2]", "bps-2^-1[1,4]"), "B-E"),
    Relation("B3", True, ("E1[2,3]", "bps-2^-1[4,1]"), "B-E"),
    Relation("B1", True, ("E2[3,2]", "bps-2^-1[2,1]"), "B-E"),
    # F^-1 ~> E
    Relation("F1", True, ("E1[2,3]", "bps-2^-1[1,3]"), "F-E"),
    Relation("F2", True, ("E2[3,2]", "bps-2^-1[3,1]"), "F-E"),
    # F^-1 ~> A
    Relation("F2", True, ("A1[2,1]", "bps-2^-1[3,2]"), "F-A"),
    Relation("F1", True, ("A2[3,1]", "bps-2^-1[2,3]"), "F-A"),
    Relation("F1", True, ("A3[1,2]", "bps-2^-1[2,3]"), "F-A"),
    Relation("F2", True, ("A4[1,3]", "bps-2^-1[3,2]"), "F-A"),
    # crossing signs changed: A^-1 ~> F, E^-1 ~> F, E^-1 ~> B
    Relation("A1", True, ("F2[3,1]", "bps-1^-1[4,2]"), "A-F"),
    Relation("A2", True, ("F1[1,3]", "bps-1^-1[3,2]"), "A-F"),
    Relation("A3", True, ("F1[1,3]", "bps-1^-1[2,4]"), "A-F"),
    Relation("A4", True, ("F2[3,1]", "bps-1^-1[2,3]"), "A-F"),
    Relation("E1", True, ("F1[1,3]", "bps-1^-1[1,2]"), "E-F"),
    Relation("E2", True, ("F2[3,1]", "bps-1^-1[2,1]"), "E-F"),
    Relation("E1", True, ("B2[3,2]", "bps-1^-1[2,1]"), "E-B"),
    Relation("E1", True, ("B3[2,1]", "bps-1^-1[3,1]"), "E-B"),
    Relation("E2", True, ("B1[2,3]", "bps-1^-1[1,2]"), "E-B"),
    Relation("E2", True, ("B4[1,2]", "bps-1^-1[1,3]"), "E-B"),
)


def verify_all() -> list[tuple[Relation, bool]]:
    return [(r, r.check()) for r in RELATIONS]
