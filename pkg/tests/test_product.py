import pytest
from hypothesis import given, settings, strategies as st

from strategies import TWO_LABELS, lincombs, tree_pairs_of_total_degree, trees
from treehopf import (
    LEAF,
    LinComb,
    enumerate_trees,
    format_lincomb,
    parse_lincomb,
    parse_tree,
    star,
    vee,
)
from treehopf.product import configure_star_cache, star_cache_info

A = parse_tree("(|^a |)")
B = parse_tree("(|^b |)")
C = parse_tree("(|^c |)")


def test_product_of_two_single_vertex_trees():
    assert star(A, B) == parse_lincomb("(|^a (|^b |)) + ((|^a |)^b |)")
    assert format_lincomb(star(A, B)) == "(|^a (|^b |)) + ((|^a |)^b |)"


def test_product_left_two_tree_by_single_vertex():
    lhs = parse_tree("((|^b |)^a |)")
    assert star(lhs, C) == parse_lincomb("((|^b |)^a (|^c |)) + (((|^b |)^a |)^c |)")


def test_product_single_vertex_by_two_tree():
    rhs = parse_tree("((|^b |)^a |)")
    expected = parse_lincomb(
        "(|^c ((|^b |)^a |)) + ((|^c (|^b |))^a |) + (((|^c |)^b |)^a |)"
    )
    assert star(C, rhs) == expected


def test_two_single_vertex_trees_give_two_terms():
    assert len(star(A, B)) == 2
    assert len(star(A, A)) == 2


@given(lincombs())
def test_leaf_is_the_unit(x):
    assert star(LEAF, x) == x
    assert star(x, LEAF) == x


def test_product_accepts_trees_and_combinations():
    assert star(A, LinComb({B: 2})) == 2 * star(A, B)


@given(lincombs(max_interior=3), lincombs(max_interior=3), lincombs(max_interior=3))
def test_product_is_bilinear(x, y, z):
    assert star(x + y, z) == star(x, z) + star(y, z)
    assert star(x, y + z) == star(x, y) + star(x, z)


def _all_trees(bound, alphabet):
    return [t for n in range(bound + 1) for t in enumerate_trees(n, alphabet)]


def test_associativity_exhaustive_single_label():
    basis = _all_trees(6, ("o",))
    for x in basis:
        for y in basis:
            if x.interior_count + y.interior_count > 6:
                continue
            xy = star(x, y)
            for z in basis:
                if x.interior_count + y.interior_count + z.interior_count > 6:
                    continue
                assert star(xy, z) == star(x, star(y, z))


def test_associativity_exhaustive_two_labels():
    basis = _all_trees(5, TWO_LABELS)
    for x in basis:
        for y in basis:
            if x.interior_count + y.interior_count > 5:
                continue
            xy = star(x, y)
            for z in basis:
                if x.interior_count + y.interior_count + z.interior_count > 5:
                    continue
                assert star(xy, z) == star(x, star(y, z))


@settings(max_examples=60)
@given(trees(max_interior=2), tree_pairs_of_total_degree(total=4))
def test_associativity_at_total_degree_six(x, pair):
    y, z = pair
    assert star(star(x, y), z) == star(x, star(y, z))


@given(trees(max_interior=4), trees(max_interior=4))
def test_product_terms_have_additive_degree(s, t)::
    prod = star(s, t)
    assert prod.degrees() == [s.interior_count + t.interior_count]


def test_graft_extension_basis_case():
    assert vee("a", LEAF, LEAF) == LinComb({A: 1})


def test_graft_extension_is_bilinear_examples():
    s, t, u = A, B, C
    assert vee("a", 2 * LinComb({s: 1}), LinComb({t: 1})) == 2 * vee("a", s, t)
    assert vee("a", LinComb({s: 1, t: 1}), LinComb({u: 1})) == vee("a", s, u) + vee(
        "a", t, u
    )


@given(lincombs(max_interior=3), lincombs(max_interior=3), lincombs(max_interior=3))
def test_graft_extension_is_bilinear(x, y, z):
    assert vee("b", x + y, z) == vee("b", x, z) + vee("b", y, z)
    assert vee("b", x, y + z) == vee("b", x, y) + vee("b", x, z)


def test_graft_product_compatibility_exhaustive():
    basis = [t for t in _all_trees(5, TWO_LABELS) if not t.is_leaf]
    for a in basis:
        for b in basis:
            if a.interior_count + b.interior_count > 5:
                continue
            lhs = star(a, b)
            rhs = vee(a.label, a.left, star(a.right, b)) + vee(
                b.label, star(a, b.left), b.right
            )
            assert lhs == rhs


def test_star_cache_is_transparent():
    unbounded = star(C, parse_tree("((|^b |)^a |)"))
    try:
        configure_star_cache(maxsize=2)
        assert star(C, parse_tree("((|^b |)^a |)")) == unbounded
        assert star_cache_info().maxsize == 2
    finally:
        configure_star_cache()
    assert star(C, parse_tree("((|^b |)^a |)")) == unbounded
    assert star_cache_info().maxsize is None
