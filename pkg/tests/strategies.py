"""Hypothesis strategies shared by the test modules."""

from hypothesis import strategies as st

from treehopf import LEAF, LinComb, TensorComb, Tree

TWO_LABELS = ("a", "b")


def _tree_of_size(draw, n, alphabet):
    if n == 0:
        return LEAF
    k = draw(st.integers(0, n - 1))
    return Tree(
        _tree_of_size(draw, k, alphabet),
        draw(st.sampled_from(alphabet)),
        _tree_of_size(draw, n - 1 - k, alphabet),
    )


@st.composite
def trees(draw, max_interior=6, min_interior=0, alphabet=TWO_LABELS):
    n = draw(st.integers(min_interior, max_interior))
    return _tree_of_size(draw, n, alphabet)


@st.composite
def tree_pairs_of_total_degree(draw, total, alphabet=TWO_LABELS):
    k = draw(st.integers(0, total))
    return (
        _tree_of_size(draw, k, alphabet),
        _tree_of_size(draw, total - k, alphabet),
    )


@st.composite
def lincombs(draw, max_terms=4, max_interior=4, alphabet=TWO_LABELS):
    pairs = draw(
        st.lists(
            st.tuples(
                trees(max_interior=max_interior, alphabet=alphabet),
                st.integers(-5, 5),
            ),
            max_size=max_terms,
        )
    )
    return LinComb(pairs)


@st.composite
def tensorcombs(draw, max_terms=4, max_interior=3, alphabet=TWO_LABELS):
    pairs = draw(
        st.lists(
            st.tuples(
                st.tuples(
                    trees(max_interior=max_interior, alphabet=alphabet),
                    trees(max_interior=max_interior, alphabet=alphabet),
                ),
                st.integers(-5, 5),
            ),
            max_size=max_terms,
        )
    )
    return TensorComb(pairs)
