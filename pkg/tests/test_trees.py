import math

import pytest
from hypothesis import given, strategies as st

from strategies import TWO_LABELS, trees
from treehopf import (
    LEAF,
    DecomposeLeaf,
    EmptyAlphabet,
    ParseError,
    Tree,
    catalan,
    decompose,
    enumerate_trees,
    graft,
    parse_tree,
    print_tree,
    tree_from_json,
    tree_to_json,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def test_graft_single_vertex():
    t = graft(LEAF, "a", LEAF)
    assert str(t) == "(|^a |)"
    assert t.interior_count == 1
    assert t.depth == 1
    assert not t.is_leaf


def test_graft_on_the_left():
    t = graft(graft(LEAF, "b", LEAF), "a", LEAF)
    assert str(t) == "((|^b |)^a |)"
    assert t.interior_count == 2


def test_graft_two_single_vertices():
    t = graft(graft(LEAF, "b", LEAF), "a", graft(LEAF, "c", LEAF))
    assert str(t) == "((|^b |)^a (|^c |))"
    assert (t.left.label, t.label, t.right.label) == ("b", "a", "c")


@given(trees(max_interior=4), trees(max_interior=4), st.sampled_from(TWO_LABELS))
def test_graft_adds_one_interior_vertex(left, right, label):
    t = graft(left, label, right)
    assert t.interior_count == left.interior_count + right.interior_count + 1


def test_decompose_single_vertex():
    assert decompose(parse_tree("(|^a |)")) == (LEAF, "a", LEAF)


def test_decompose_three_vertex_example():
    t = parse_tree("((|^b |)^a (|^c |))")
    left, label, right = decompose(t)
    assert (str(left), label, str(right)) == ("(|^b |)", "a", "(|^c |)")


def test_decompose_leaf_raises():
    with pytest.raises(DecomposeLeaf):
        decompose(LEAF)


@given(trees(max_interior=4), trees(max_interior=4), st.sampled_from(TWO_LABELS))
def test_decompose_inverts_graft(left, right, label):
    assert decompose(graft(left, label, right)) == (left, label, right)


@given(trees(min_interior=1))
def test_graft_inverts_decompose(t):
    assert graft(*decompose(t)) == t


@pytest.mark.parametrize("bad", ["", "a b", "a-b", "^", "é", None, 3])
def test_bad_labels_rejected(bad):
    with pytest.raises((ValueError, TypeError)):
        graft(LEAF, bad, LEAF)


def test_leaf_takes_no_children():
    with pytest.raises(ValueError):
        Tree(left=LEAF)
    with pytest.raises(TypeError):
        Tree(None, "a", LEAF)


def test_equality_includes_labels():
    assert parse_tree("(|^a |)") != parse_tree("(|^b |)")
    assert parse_tree("(|^a |)") == graft(LEAF, "a", LEAF)
    assert hash(parse_tree("(|^a |)")) == hash(graft(LEAF, "a", LEAF))


def test_trees_work_as_dict_keys():
    d = {parse_tree("(|^a |)"): 1, LEAF: 2}
    assert d[graft(LEAF, "a", LEAF)] == 1
    assert d[Tree()] == 2


def test_catalan_values():
    assert [catalan(n) for n in range(9)] == CATALAN
    with pytest.raises(ValueError):
        catalan(-1)


@pytest.mark.parametrize("alphabet", [("o",), ("a", "b")])
@pytest.mark.parametrize("n", range(9))
def test_enumerate_counts(n, alphabet):
    expected = math.comb(2 * n, n) // (n + 1) * len(alphabet) ** n
    assert len(enumerate_trees(n, alphabet)) == expected


def test_enumerate_degree_zero_and_three():
    assert enumerate_trees(0, ("a",)) == [LEAF]
    assert len(enumerate_trees(3, ("a",))) == 5


def _brute_force_strings(n, alphabet):
    # Independent generation: build printed forms directly and deduplicate.
    if n == 0:
        return {"|"}
    out = set()
    for k in range(n):
        for left in _brute_force_strings(k, alphabet):
            for label in alphabet:
                for right in _brute_force_strings(n - 1 - k, alphabet):
                    out.add(f"({left}^{label} {right})")
    return out


@pytest.mark.parametrize("n", range(5))
def test_enumerate_matches_brute_force(n):
    result = enumerate_trees(n, ("a", "b"))
    printed = [str(t) for t in result]
    assert len(set(printed)) == len(printed)
    assert set(printed) == _brute_force_strings(n, ("a", "b"))


def test_enumerate_two_vertices_two_labels_in_order():
    assert [str(t) for t in enumerate_trees(2, ("a", "b"))] == [
        "(|^a (|^a |))",
        "(|^a (|^b |))",
        "(|^b (|^a |))",
        "(|^b (|^b |))",
        "((|^a |)^a |)",
        "((|^a |)^b |)",
        "((|^b |)^a |)",
        "((|^b |)^b |)",
    ]


@pytest.mark.parametrize("alphabet", [("o",), ("a", "b")])
@pytest.mark.parametrize("n", range(6))
def test_enumerate_is_canonically_sorted(n, alphabet):
    result = enumerate_trees(n, alphabet)
    assert result == sorted(result)


def test_canonical_order_puts_leaf_first():
    assert LEAF < parse_tree("(|^a |)")
    # '|' sorts before '(': the right comb precedes the left comb.
    assert parse_tree("(|^a (|^a |))") < parse_tree("((|^a |)^a |)")


def test_enumerate_rejects_bad_alphabets():
    with pytest.raises(EmptyAlphabet):
        enumerate_trees(2, ())
    with pytest.raises(ValueError):
        enumerate_trees(2, ("a", "a"))
    with pytest.raises(ValueError):
        enumerate_trees(-1, ("a",))
    with pytest.raises(ValueError):
        enumerate_trees(2, ("",))


def _is_chain(t):
    if t.is_leaf:
        return True
    if not t.left.is_leaf and not t.right.is_leaf:
        return False
    return _is_chain(t.left) and _is_chain(t.right)


def test_depth_examples():
    assert LEAF.depth == 0
    assert parse_tree("(|^a |)").depth == 1
    assert parse_tree("((|^b |)^a (|^c |))").depth == 2


@given(trees())
def test_depth_at_most_interior_count(t):
    assert t.depth <= t.interior_count
    assert (t.depth == t.interior_count) == _is_chain(t)


@pytest.mark.parametrize("alphabet", [("o",), ("a", "b")])
def test_parse_print_round_trip_exhaustive(alphabet):
    for n in range(7):
        for t in enumerate_trees(n, alphabet):
            assert parse_tree(str(t)) == t


@given(trees(max_interior=8))
def test_parse_print_round_trip(t):
    assert parse_tree(print_tree(t)) == t


def test_print_tree_is_canonical_form():
    t = graft(graft(LEAF, "b", LEAF), "a", LEAF)
    assert print_tree(t) == "((|^b |)^a |)" == str(t)


def test_parse_accepts_free_whitespace():
    assert parse_tree(" ( | ^ a  | ) ") == parse_tree("(|^a |)")
    assert parse_tree("(|^a|)") == parse_tree("(|^a |)")
    assert parse_tree("\t|\n") == LEAF


@pytest.mark.parametrize(
    "text,offset,expected",
    [
        ("", 0, "'|' or '('"),
        ("x", 0, "'|' or '('"),
        ("(", 1, "'|' or '('"),
        ("(|^ |)", 4, "a label"),
        ("(|^a |", 6, "')'"),
        ("(| |)", 3, "'^'"),
        ("| x", 2, "end of input"),
    ],
)
def test_parse_errors_carry_offset_and_expectation(text, offset, expected):
    with pytest.raises(ParseError) as err:
        parse_tree(text)
    assert err.value.offset == offset
    assert expected in str(err.value)


def test_json_forms():
    assert tree_to_json(LEAF) == "leaf"
    t = parse_tree("((|^b |)^a |)")
    assert tree_to_json(t) == {
        "l": {"l": "leaf", "a": "b", "r": "leaf"},
        "a": "a",
        "r": "leaf",
    }


@given(trees())
def test_json_round_trip(t):
    assert tree_from_json(tree_to_json(t)) == t


@pytest.mark.parametrize("bad", [None, 7, "lead", {"l": "leaf"}, {"l": "leaf", "a": "x", "r": "leaf", "z": 1}])
def test_json_rejects_malformed_values(bad):
    with pytest.raises(ValueError):
        tree_from_json(bad)
