"""Parser for tree expressions: sums of integer multiples of trees.

Grammar (whitespace between tokens is free)::

    expr    := ["+"|"-"] term (("+"|"-") term)*
    term    := [integer "*"] tree
    tree    := "|"  |  "(" tree "^" label " " tree ")"
    integer := [0-9]+
    label   := [A-Za-z0-9_]+

The optional leading sign lets every canonically printed combination,
including negative ones such as antipode values, round-trip through the
parser.
"""

from __future__ import annotations

from .linear import LinComb
from .trees import _Cursor


def parse_lincomb(text: str) -> LinComb:
    """Parse a tree expression into a normalized combination."""
    cur = _Cursor(text)
    cur.skip_ws()
    terms: list[tuple] = []
    sign = 1
    if cur.peek() in "+-":
        sign = -1 if cur.peek() == "-" else 1
        cur.pos += 1
        cur.skip_ws()
    while True:
        coeff = 1
        if cur.peek().isdigit():
            coeff = cur.integer()
            cur.skip_ws()
            cur.expect("*")
            cur.skip_ws()
        terms.append((cur.tree(), sign * coeff))
        cur.skip_ws()
        if cur.at_end():
            break
        ch = cur.peek()
        if ch not in "+-":
            raise cur.error("'+', '-' or end of input")
        sign = -1 if ch == "-" else 1
        cur.pos += 1
        cur.skip_ws()
    return LinComb(terms)
