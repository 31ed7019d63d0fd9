import random
from collections import Counter

import pytest

from ograph import cp
from ograph.ecore import EDataError, EdgeRef, isomorphic, parse, serialize
from ograph.rewrite import (MoveError, apply, apply_with_inverse, catalog, find_matches, get_rule,
                            locate, parse_script, parse_step, rule_name, run_script, verify_relation)
from oracles.naive import naive_matches
from oracles.tetra import boundary_signature, complex_of, interior_edge_degrees
from support import layout, random_closed, rejoined_labels


def test_catalog_families():
    counts = Counter(r.family for r in catalog())
    assert counts == {"mp": 16, "bmp": 4, "ps": 4, "bps": 2, "zero2": 1, "cp": 1}
    assert len({r.name for r in catalog()}) == 28


@pytest.mark.parametrize("rule", [r for r in catalog() if r.family in ("mp", "bmp", "cp")],
                         ids=lambda r: r.name)
def test_two_sides_bound_the_same_ball(rule):
    lhs, rhs = layout(rule.lhs), layout(rule.rhs)
    assert boundary_signature(*lhs) == boundary_signature(*rhs)


@pytest.mark.parametrize("rule", [r for r in catalog() if r.family in ("mp", "bmp")],
                         ids=lambda r: r.name)
def test_two_three_shape(rule):
    # two tetrahedra sharing a face become three around a new interior edge
    lhs, rhs = layout(rule.lhs), layout(rule.rhs)
    assert complex_of(*lhs)[3] == 1 and complex_of(*rhs)[3] == 3
    assert interior_edge_degrees(*lhs, 2) == []
    assert interior_edge_degrees(*rhs, 3) == [3]


def _edge_type(rule):
    (x, y), = [(x, y) for x, y in rule.lhs.successors().items()
               if not isinstance(x, str) and not isinstance(y, str)]
    passage = ("O" if x > 0 else "U") + ("O" if y > 0 else "U")
    return passage, rule.lhs.sign(abs(x)), rule.lhs.sign(abs(y))


def test_two_three_types():
    types = Counter(_edge_type(r) for r in catalog() if r.family in ("mp", "bmp"))
    assert len(types) == 16
    # two orderings of the new apexes exist exactly when the edge keeps its
    # passage and changes crossing sign
    doubled = {t for t, k in types.items() if k == 2}
    assert doubled == {t for t in types if t[0] in ("OO", "UU") and t[1] != t[2]}
    assert sum(types.values()) == 20


def test_bumping_types():
    bumping = {_edge_type(r) for r in catalog() if r.family == "bmp"}
    assert bumping == {("OO", -1, 1), ("UU", 1, -1)}


def test_tied_rules_differ():
    by_type = {}
    for r in catalog():
        if r.family in ("mp", "bmp"):
            by_type.setdefault(_edge_type(r), []).append(r)
    for rules in by_type.values():
        if len(rules) == 2:
            a, b = rules
            assert not isomorphic(a.rhs, b.rhs)[0]


def _naive(g, rule, inverse):
    pattern, other = (rule.rhs, rule.lhs) if inverse else (rule.lhs, rule.rhs)
    return naive_matches(*layout(g), *layout(pattern), rejoin=rejoined_labels(other))


def test_matcher_agrees_with_naive():
    rng = random.Random(41)
    for _ in range(25):
        g = random_closed(rng, rng.randint(1, 4))
        for rule in catalog():
            for inv in (False, True):
                got = {(m.vertices, tuple((e.src, e.dst) for e in m.anchors))
                       for m in find_matches(g, rule, inverse=inv, check_condition=False)}
                assert got == _naive(g, rule, inv)


def test_forward_sliding_moves_respect_condition():
    from ograph.rewrite import condition_holds
    g = parse("[1, 2, -2, -1; 1, 1]")
    for rule in catalog():
        if rule.condition is None:
            continue
        allm = find_matches(g, rule, check_condition=False)
        kept = find_matches(g, rule)
        assert kept == [m for m in allm if condition_holds(g, m)]


def test_cp_rule_maps_lhs_to_rhs():
    g = parse(cp.CP_LHS)
    m, = find_matches(g, get_rule("CP"))
    assert isomorphic(apply(g, m), parse(cp.CP_RHS))[0]


def test_apply_with_inverse_undoes():
    rng = random.Random(42)
    done = 0
    for _ in range(60):
        g = random_closed(rng, rng.randint(1, 4))
        for rule in catalog():
            for m in find_matches(g, rule)[:1]:
                h, back = apply_with_inverse(g, m)
                assert back is not None
                assert isomorphic(apply(h, back), g)[0]
                done += 1
    assert done > 100


def test_pillow_closing_on_itself_not_matched():
    # the two strands of this pillow are joined outside it
    g = parse("[1, -1, -2, 2; 1, -1]")
    assert find_matches(g, get_rule("psIV"), inverse=True, check_condition=False) == []


def test_inverse_sliding_needs_condition_on_result():
    g = parse("[1, 3, 4, -1, -2, -4, -3, 2; -1, 1, -1, 1]")
    rule = get_rule("psIII")
    loose = find_matches(g, rule, inverse=True, check_condition=False)
    strict = find_matches(g, rule, inverse=True)
    assert [m.vertices for m in loose] == [(1, 2)]
    assert strict == []
    # the pillow made by ps-IV can be removed again
    assert [m.vertices for m in find_matches(g, get_rule("psIV"), inverse=True)] == [(3, 4)]


@pytest.mark.parametrize("text, name, inverse, verts", [
    ("C3[2,1]", "C3", False, (2, 1)),
    ("ps-I^-1[5,2]", "psI", True, (5, 2)),
    ("(ps-IV)^{-1}[5,1]", "psIV", True, (5, 1)),
    ("bps-2^-1[3,4]", "bps2", True, (3, 4)),
    ("E1[ 4 , 5 ]", "E1", False, (4, 5)),
])
def test_parse_step(text, name, inverse, verts):
    s = parse_step(text)
    assert (s.name, s.inverse, s.vertices) == (name, inverse, verts)


def test_parse_step_anchors():
    s = parse_step("ps-I[-1->d,-2->f]")
    assert s.anchors == (EdgeRef(-1, "d"), EdgeRef(-2, "f"))
    assert str(s) == "ps-I[-1->d,-2->f]"


@pytest.mark.parametrize("text", ["C3", "Q9[1]", "C3[1,x]", "ps-I^2[1,2]"])
def test_parse_step_errors(text):
    with pytest.raises(MoveError):
        parse_step(text)


def test_rule_name_aliases():
    assert rule_name("ps-III") == "psIII"
    assert rule_name("(bps-1)") == "bps1"
    assert rule_name("0-2") == "zero2"
    with pytest.raises(MoveError):
        rule_name("G7")


def test_parse_script_comments():
    steps = parse_script("C3[2,1]  # first\n\n# nothing\nps-I^-1[5,2]\n")
    assert [str(s) for s in steps] == ["C3[2,1]", "ps-I^-1[5,2]"]


def test_locate_prefers_exact_order():
    g = parse(cp.LHS_SCRIPT[4][1])
    step = parse_step("C3[1,2]")
    both = [m for m in find_matches(g, get_rule("C3"), check_condition=False)
            if sorted(m.vertices) == [1, 2]]
    assert len(both) == 2
    assert locate(g, step).vertices == (1, 2)


def test_run_script_reports_failure():
    res = run_script(parse(cp.CP_LHS), ["C3[2,1]", "A1[1,2]"])
    assert not res.ok
    assert res.message.startswith("step 2")
    assert len(res.states) == 2


def test_run_script_checks_expected_states():
    start = parse(cp.CP_LHS)
    wrong = parse(cp.LHS_SCRIPT[1][1], connected=False)
    res = run_script(start, ["C3[2,1]"], expected=[wrong])
    assert not res.ok and "expected" in res.message


def test_verify_relation_a1():
    rule = get_rule("A1")
    assert verify_relation(rule, ["ps-I[-1->d,-2->f]", "D2^-1[4,1,2]"], rule.lhs)
    assert not verify_relation(rule, ["ps-I[-1->d,-2->f]"], rule.lhs)


def test_step_strings_round_trip():
    g = parse(cp.CP_LHS)
    for m in find_matches(g, get_rule("psI"))[:10]:
        s = parse_step(str(m.step()))
        assert locate(g, s) == m
    assert serialize(g) == "[[a, -1, 2, -2, 3, -3, 1, b]; [1, 1, 1]]"
