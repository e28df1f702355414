"""Decorated planar binary trees: building, splitting, enumeration, text grammar.

A tree is either the leaf ``|`` (no interior vertex) or a grafting of two
subtrees under a new labelled root.  Trees print to a canonical fully
parenthesised form, ``tree := "|" | "(" tree "^" label " " tree ")"``, and
every operation here is a pure function over immutable values.
"""

from __future__ import annotations

import math
import re
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import DecomposeLeaf, EmptyAlphabet, ParseError

_LABEL_RE = re.compile(r"[A-Za-z0-9_]+")

# Canonical term order is lexicographic on the printed form *except* that a
# leaf sorts before any interior vertex, i.e. '|' < '('.  Remapping '|' below
# every printable character makes plain string comparison implement that.
_ORDER_TABLE = str.maketrans({"|": "\x00"})

#: Label used for the undecorated (singleton-alphabet) mode.
UNDECORATED_LABEL = "o"
DEFAULT_ALPHABET = (UNDECORATED_LABEL,)


def check_label(label: str) -> str:
    """Validate a decoration label (nonempty string over [A-Za-z0-9_])."""
    if not isinstance(label, str) or _LABEL_RE.fullmatch(label) is None:
        raise ValueError(
            f"invalid label {label!r}: expected a nonempty string over [A-Za-z0-9_]"
        )
    return label


class Tree:
    """An immutable decorated planar binary tree.

    ``Tree()`` is the leaf; ``Tree(left, label, right)`` grafts two subtrees
    under a new root carrying ``label``.  Equality is structural (labels
    included), ``str()`` gives the canonical printed form and comparison
    operators implement the canonical order used for sorting terms.
    Instances are safe to share between threads; treat them as frozen.
    """

    __slots__ = ("left", "label", "right", "interior_count", "_canon", "_key", "_hash")

    def __init__(self, left: "Tree | None" = None, label: str | None = None,
                 right: "Tree | None" = None):
        if label is None:
            if left is not None or right is not None:
                raise ValueError("a leaf has no children; pass a label to graft")
            self.left = None
            self.label = None
            self.right = None
            self.interior_count = 0
            self._canon = "|"
        else:
            if not isinstance(left, Tree) or not isinstance(right, Tree):
                raise TypeError("subtrees must be Tree instances")
            check_label(label)
            self.left = left
            self.label = label
            self.right = right
            self.interior_count = left.interior_count + right.interior_count + 1
            self._canon = f"({left._canon}^{label} {right._canon})"
        self._key = self._canon.translate(_ORDER_TABLE)
        self._hash = hash(self._canon)

    @property
    def is_leaf(self) -> bool:
        return self.label is None

    @property
    def depth(self) -> int:
        """Longest chain of interior vertices from the root upwards."""
        if self.is_leaf:
            return 0
        return 1 + max(self.left.depth, self.right.depth)

    def __str__(self) -> str:
        return self._canon

    def __repr__(self) -> str:
        return f"parse_tree({self._canon!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self._canon == other._canon

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Tree") -> bool:
        return self._key < other._key

    def __le__(self, other: "Tree") -> bool:
        return self._key <= other._key

    def __gt__(self, other: "Tree") -> bool:
        return self._key > other._key

    def __ge__(self, other: "Tree") -> bool:
        return self._key >= other._key


#: The unique tree with no interior vertex.
LEAF = Tree()


def graft(left: Tree, label: str, right: Tree) -> Tree:
    """Join two trees under a new root decorated by ``label``."""
    return Tree(left, label, right)


def decompose(t: Tree) -> tuple[Tree, str, Tree]:
    """Split a non-leaf tree into its unique (left, root label, right) parts."""
    if t.is_leaf:
        raise DecomposeLeaf("the leaf tree has no root decomposition")
    return t.left, t.label, t.right


def print_tree(t: Tree) -> str:
    """Canonical printed form; inverse of :func:`parse_tree`."""
    return str(t)


def catalan(n: int) -> int:
    """Number of planar binary trees with ``n`` interior vertices."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return math.comb(2 * n, n) // (n + 1)


def _validated_alphabet(alphabet: Sequence[str] | Iterable[str]) -> tuple[str, ...]:
    labels = tuple(alphabet)
    if not labels:
        raise EmptyAlphabet("the decoration alphabet must be nonempty")
    for name in labels:
        check_label(name)
    if len(set(labels)) != len(labels):
        raise ValueError(f"duplicate labels in alphabet {labels!r}")
    return labels


def enumerate_trees(n: int, alphabet: Sequence[str] = DEFAULT_ALPHABET) -> list[Tree]:
    """All trees with ``n`` interior vertices decorated from ``alphabet``.

    Returns every such tree exactly once, sorted in canonical order; the
    list has length ``catalan(n) * len(alphabet)**n``.
    """
    labels = _validated_alphabet(alphabet)
    if n < 0:
        raise ValueError("n must be >= 0")
    return list(_enumerate_cached(n, labels))


@lru_cache(maxsize=None)
def _enumerate_cached(n: int, labels: tuple[str, ...]) -> tuple[Tree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n):
        for left in _enumerate_cached(k, labels):
            for label in labels:
                for right in _enumerate_cached(n - 1 - k, labels):
                    out.append(Tree(left, label, right))
    return tuple(sorted(out))


class _Cursor:
    """Character cursor with whitespace skipping for the tree grammars."""

    def __init__(self, text: str):
        if not isinstance(text, str):
            raise TypeError("expected a string to parse")
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        text = self.text
        pos = self.pos
        while pos < len(text) and text[pos] in " \t\r\n":
            pos += 1
        self.pos = pos

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected: str) -> ParseError:
        return ParseError(expected, self.text, self.pos)

    def expect(self, token: str) -> None:
        if not self.text.startswith(token, self.pos):
            raise self.error(f"'{token}'")
        self.pos += len(token)

    def at_end(self) -> bool:
        return self.pos >= len(self.text)

    def expect_end(self) -> None:
        if not self.at_end():
            raise self.error("end of input")

    def label(self) -> str:
        m = _LABEL_RE.match(self.text, self.pos)
        if m is None:
            raise self.error("a label ([A-Za-z0-9_]+)")
        self.pos = m.end()
        return m.group()

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.error("an integer")
        return int(self.text[start:self.pos])

    def tree(self) -> Tree:
        ch = self.peek()
        if ch == "|":
            self.pos += 1
            return LEAF
        if ch == "(":
            self.pos += 1
            self.skip_ws()
            left = self.tree()
            self.skip_ws()
            self.expect("^")
            self.skip_ws()
            label = self.label()
            self.skip_ws()
            right = self.tree()
            self.skip_ws()
            self.expect(")")
            return Tree(left, label, right)
        raise self.error("'|' or '('")


def parse_tree(text: str) -> Tree:
    """Parse the canonical tree grammar; whitespace between tokens is free."""
    cur = _Cursor(text)
    cur.skip_ws()
    t = cur.tree()
    cur.skip_ws()
    cur.expect_end()
    return t


def tree_to_json(t: Tree):
    """JSON form: the string ``"leaf"`` or ``{"l":..., "a":..., "r":...}``."""
    if t.is_leaf:
        return "leaf"
    return {"l": tree_to_json(t.left), "a": t.label, "r": tree_to_json(t.right)}


def tree_from_json(obj) -> Tree:
    if obj == "leaf":
        return LEAF
    if isinstance(obj, dict) and set(obj) == {"l", "a", "r"}:
        return Tree(tree_from_json(obj["l"]), obj["a"], tree_from_json(obj["r"]))
    raise ValueError(f"not a tree JSON value: {obj!r}")
