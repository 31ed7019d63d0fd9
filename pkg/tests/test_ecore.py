import random
from itertools import permutations

import pytest

from ograph import cp
from ograph.ecore import (Circuit, EdgeRef, ParseError, ValidationError, canonical_key,
                          canonicalize, components, disjoint_union, edges, isomorphic, make,
                          parse, parse_edge, relabel, serialize)

TREF = "[1, 2, -2, -1; 1, 1]"


def test_parse_shorthand():
    g = parse(TREF)
    assert g.circuits == (Circuit((1, 2, -2, -1)),)
    assert g.gamma == (1, 1)
    assert not g.is_fragment


def test_parse_open_fragment():
    g = parse(cp.CP_LHS)
    assert len(g.circuits) == 1
    c = g.circuits[0]
    assert (c.head, c.tail) == ("a", "b")
    assert c.entries == (-1, 2, -2, 3, -3, 1)
    assert g.gamma == (1, 1, 1)
    assert g.labels == {"a", "b"}


def test_parse_mixed_circuits():
    g = parse("[[-1,-2,-4],[1],[a, 2,3,4,-3,b]; [1, -1, 1, -1]]", connected=False)
    closed = [c for c in g.circuits if c.closed]
    assert len(closed) == 2 and components(g) == 3


def test_whitespace_insensitive():
    assert parse("[1,2,-2,-1;1,1]") == parse("  [ 1 , 2,-2 ,\n -1 ;1, 1 ] ")


@pytest.mark.parametrize("text, invariant", [
    ("[1, 1, -1; 1]", "duplicate-occurrence"),
    ("[1, 2, -1; 1, 1]", "missing-occurrence"),
    ("[1, -1; 1, 1]", "gamma-length"),
    ("[[1, -1], [2, -2]; [1, 1]]", "disconnected"),
    ("[1, -1; 2]", "gamma-sign"),
])
def test_validation_errors_name_invariant(text, invariant):
    with pytest.raises(ValidationError) as exc:
        parse(text)
    assert exc.value.invariant == invariant


@pytest.mark.parametrize("text", ["", "[", "[1, 2; 1", "[1, -1; 1]]", "[1, x-; 1]", "[1 -1; 1]"])
def test_syntax_errors_report_position(text):
    with pytest.raises(ParseError) as exc:
        parse(text)
    assert exc.value.position >= 0


def test_dense_labels_required():
    with pytest.raises(ValidationError):
        parse("[1, 3, -3, -1; 1, 1]")


def test_serialize_round_trip_on_script_states():
    for s in cp.all_strings():
        g = parse(s, connected=False)
        text = serialize(g)
        assert parse(text, connected=False) == g
        assert serialize(parse(text, connected=False)) == text


def test_serialize_rotates_closed_circuits():
    assert serialize(parse("[-1, 1, 2, -2; 1, 1]")) == "[1, 2, -2, -1; 1, 1]"
    assert serialize(parse("[[-2, 1], [-1, 2]; [1, 1]]")) == "[[1, -2], [-1, 2]; [1, 1]]"


def test_serialize_distinguishes_states():
    keys = {canonical_key(parse(s, connected=False)) for s in cp.all_strings()}
    texts = {serialize(canonicalize(parse(s, connected=False))) for s in cp.all_strings()}
    assert len(keys) == len(texts)


def test_edge_counts():
    assert len(edges(parse(TREF))) == 4
    # counting consecutive pairs, the dangling ends included
    assert len(edges(parse(cp.CP_LHS))) == 7
    assert len(edges(parse(cp.LHS_SCRIPT[0][1]))) == 9
    assert EdgeRef("a", -1) in edges(parse(cp.CP_LHS))


def test_closed_graph_has_2n_edges():
    rng = random.Random(3)
    from support import random_closed
    for _ in range(30):
        g = random_closed(rng, rng.randint(1, 6))
        assert len(edges(g)) == 2 * g.n


def test_components():
    assert components(parse(TREF)) == 1
    assert components(parse(cp.LHS_SCRIPT[6][1], connected=False)) == 3
    g = parse(TREF)
    assert components(disjoint_union(g, g)) == 2


def test_parse_edge():
    assert parse_edge("-1->2") == (-1, 2)
    assert parse_edge("a->-3") == ("a", -3)
    with pytest.raises(ValueError):
        parse_edge("1-2")


def test_canonicalize_idempotent():
    for s in cp.all_strings():
        c = canonicalize(parse(s, connected=False))
        assert canonicalize(c) == c


def test_canonical_form_constant_on_relabelings():
    rng = random.Random(7)
    for s in cp.all_strings():
        g = parse(s, connected=False)
        key = canonical_key(g)
        for _ in range(100):
            perm = list(range(1, g.n + 1))
            rng.shuffle(perm)
            assert canonical_key(relabel(g, dict(zip(range(1, g.n + 1), perm)))) == key


def test_tref_relabelings_brute_force():
    g = parse(TREF)
    forms = set()
    for perm in permutations((1, 2)):
        h = relabel(g, dict(zip((1, 2), perm)))
        c = h.circuits[0].entries
        for r in range(len(c)):
            rot = make([c[r:] + c[:r]], h.gamma)
            forms.add(serialize(canonicalize(rot)))
    assert len(forms) == 1


def test_rhs_encodings_isomorphic_with_witness():
    a, b = parse(cp.CP_RHS_ALT), parse(cp.CP_RHS)
    ok, w = isomorphic(a, b)
    assert ok
    assert w == {1: 1, 2: 2, 5: 3, 3: 4, 4: 5}
    assert relabel(a, w) == b


def test_isomorphic_identity_and_mismatch():
    g = parse(TREF)
    ok, w = isomorphic(g, g)
    assert ok and relabel(g, w) == g
    assert isomorphic(g, parse("[1, -2, -1, 2; 1, 1]"))[0] is False
    assert isomorphic(g, parse("[1, 2, -2, -1; 1, -1]"))[0] is False


def test_isomorphic_rejects_label_mismatch():
    with pytest.raises(ValueError):
        isomorphic(parse(cp.CP_LHS), parse("[[a, -1, 1, c]; [1]]"))


def test_boundary_labels_are_rigid():
    g = parse("[[a, 1, b], [c, -1, d]; [1]]", connected=False)
    h = parse("[[c, 1, d], [a, -1, b]; [1]]", connected=False)
    assert isomorphic(g, h)[0] is False
