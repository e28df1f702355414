"""Coproduct via edge cuts and via the structural recursion, plus primitives.

A cut of a tree is a set of internal edges (edges joining two interior
vertices), identified by root-to-vertex paths over {"L", "R"}: the path
names the upper endpoint of the edge.  A cut is admissible when no chosen
edge lies above another on a root-to-leaf path.  Severing an admissible cut
splits each cut edge in two: the component above the edge keeps its full
subtree, the component below keeps a leaf stub in its place.  The coproduct
of a tree sums, over admissible cuts (empty and total included), the product
of the severed components tensor the root component.

The same coproduct also satisfies a recursion over the root grafting; both
routes are implemented independently so each can check the other.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import LeafInput, NotAdmissible
from .linear import LinComb, TensorComb, as_lincomb, tau23, tensor_product
from .product import star, star_vee
from .trees import DEFAULT_ALPHABET, LEAF, Tree, enumerate_trees, _validated_alphabet
from .trees import tree_to_json

EdgePath = tuple[str, ...]

NON_TOTAL = "non_total"
TOTAL = "total"


def _check_edge_path(path) -> EdgePath:
    steps = tuple(path)
    if not steps or any(step not in ("L", "R") for step in steps):
        raise ValueError(f"edge paths are nonempty sequences over L/R, got {path!r}")
    return steps


@dataclass(frozen=True)
class Cut:
    """A choice of internal edges of some ambient tree, or the total cut."""

    edges: frozenset[EdgePath]
    kind: str = NON_TOTAL

    def __post_init__(self):
        if self.kind not in (NON_TOTAL, TOTAL):
            raise ValueError(f"cut kind must be {NON_TOTAL!r} or {TOTAL!r}")
        edges = frozenset(_check_edge_path(p) for p in self.edges)
        if self.kind == TOTAL and edges:
            raise ValueError("the total cut carries no edges")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def empty(cls) -> "Cut":
        return cls(frozenset())

    @classmethod
    def total(cls) -> "Cut":
        return cls(frozenset(), TOTAL)

    @classmethod
    def of(cls, *paths: str | Sequence[str]) -> "Cut":
        """Build a non-total cut; each path may be a compact string like "LR"."""
        return cls(frozenset(tuple(p) for p in paths))

    @property
    def is_total(self) -> bool:
        return self.kind == TOTAL

    def sorted_edges(self) -> list[EdgePath]:
        return sorted(self.edges)


@dataclass(frozen=True)
class AdmissibleCutResult:
    """The pair produced by severing an admissible cut: P = product of the
    components away from the root, R = the component containing the root."""

    cut: Cut
    P: LinComb
    R: Tree

    def to_json(self) -> dict:
        return {
            "edges": [list(p) for p in self.cut.sorted_edges()],
            "kind": self.cut.kind,
            "P": self.P.to_json(),
            "R": tree_to_json(self.R),
        }


def internal_edges(t: Tree) -> list[EdgePath]:
    """Paths of all edges joining two interior vertices, sorted."""
    out: list[EdgePath] = []

    def walk(node: Tree, path: EdgePath) -> None:
        if node.is_leaf:
            return
        for step, child in (("L", node.left), ("R", node.right)):
            if not child.is_leaf:
                out.append(path + (step,))
                walk(child, path + (step,))

    walk(t, ())
    out.sort()
    return out


def all_cuts(t: Tree) -> list[Cut]:
    """Every subset of internal edges (empty cut first), then the total cut.

    Subsets come in binary-counter order over the sorted edge list, so for a
    tree with two internal edges the order is empty, first edge, second edge,
    both, total.
    """
    edges = internal_edges(t)
    cuts = []
    for mask in range(1 << len(edges)):
        chosen = frozenset(e for i, e in enumerate(edges) if mask >> i & 1)
        cuts.append(Cut(chosen))
    cuts.append(Cut.total())
    return cuts


def _check_cut_of(t: Tree, cut: Cut) -> None:
    known = set(internal_edges(t))
    for path in cut.edges:
        if path not in known:
            raise ValueError(
                f"path {''.join(path)!r} is not an internal edge of {t}"
            )


def is_admissible(t: Tree, cut: Cut) -> bool:
    """True when no cut edge lies above another cut edge (the total cut is
    admissible by convention)."""
    if cut.is_total:
        return True
    _check_cut_of(t, cut)
    edges = sorted(cut.edges)
    for i, e in enumerate(edges):
        for f in edges[i + 1:]:
            if f[: len(e)] == e:
                return False
    return True


def _admissible_edge_sets(t: Tree, path: EdgePath = ()) -> list[frozenset[EdgePath]]:
    # All admissible edge subsets inside the subtree rooted at `path`.  For
    # each child edge: either cut it (nothing deeper on that side may be cut)
    # or leave it and recurse.
    if t.interior_count == 0:
        return [frozenset()]
    side_options = []
    for step, child in (("L", t.left), ("R", t.right)):
        if child.interior_count == 0:
            side_options.append([frozenset()])
        else:
            edge = path + (step,)
            side_options.append(
                [frozenset((edge,))] + _admissible_edge_sets(child, edge)
            )
    left_opts, right_opts = side_options
    return [l | r for l in left_opts for r in right_opts]


def admissible_cuts(t: Tree) -> list[Cut]:
    """Admissible cuts in the order of :func:`all_cuts` (total cut last)."""
    edges = internal_edges(t)
    index = {e: i for i, e in enumerate(edges)}
    sets = _admissible_edge_sets(t)
    sets.sort(key=lambda s: sum(1 << index[e] for e in s))
    return [Cut(s) for s in sets] + [Cut.total()]


def _inorder_index(t: Tree) -> dict[EdgePath, int]:
    order: dict[EdgePath, int] = {}

    def walk(node: Tree, path: EdgePath) -> None:
        if node.is_leaf:
            return
        walk(node.left, path + ("L",))
        order[path] = len(order)
        walk(node.right, path + ("R",))

    walk(t, ())
    return order


def _subtree_at(t: Tree, path: EdgePath) -> Tree:
    node = t
    for step in path:
        node = node.left if step == "L" else node.right
    return node


def _without_subtrees(node: Tree, path: EdgePath, cutset: frozenset[EdgePath]) -> Tree:
    if node.is_leaf:
        return node
    lp = path + ("L",)
    rp = path + ("R",)
    left = LEAF if lp in cutset else _without_subtrees(node.left, lp, cutset)
    right = LEAF if rp in cutset else _without_subtrees(node.right, rp, cutset)
    if left is node.left and right is node.right:
        return node
    return Tree(left, node.label, right)


def _severed_pair(t: Tree, cutset: frozenset[EdgePath],
                  inorder: dict[EdgePath, int]) -> tuple[LinComb, Tree]:
    root_part = _without_subtrees(t, (), cutset)
    pruned = LinComb._wrap({LEAF: 1})
    # Components multiply left to right, by the planar position of their root.
    for path in sorted(cutset, key=inorder.__getitem__):
        pruned = star(pruned, _subtree_at(t, path))
    return pruned, root_part


def cut_pair(t: Tree, cut: Cut) -> AdmissibleCutResult:
    """Sever an admissible cut of ``t`` into its (P, R) pair."""
    if cut.is_total:
        return AdmissibleCutResult(cut, LinComb._wrap({t: 1}), LEAF)
    if not is_admissible(t, cut):
        raise NotAdmissible(f"cut {sorted(cut.edges)!r} of {t} is not admissible")
    pruned, root_part = _severed_pair(t, cut.edges, _inorder_index(t))
    return AdmissibleCutResult(cut, pruned, root_part)


def coproduct_cuts(t: Tree) -> TensorComb:
    """Coproduct of a basis tree by summing P (x) R over admissible cuts."""
    if t.is_leaf:
        return TensorComb._wrap({(LEAF, LEAF): 1})
    inorder = _inorder_index(t)
    out: dict = {(t, LEAF): 1}  # the total cut
    for cutset in _admissible_edge_sets(t):
        pruned, root_part = _severed_pair(t, cutset, inorder)
        for u, c in pruned._coeffs.items():
            key = (u, root_part)
            out[key] = out.get(key, 0) + c
    return TensorComb._wrap(out)


_coproduct_cache: dict[Tree, TensorComb] = {}


def coproduct_rec(t: Tree) -> TensorComb:
    """Coproduct of a basis tree by the recursion over the root grafting."""
    cached = _coproduct_cache.get(t)
    if cached is not None:
        return cached
    if t.is_leaf:
        result = TensorComb._wrap({(LEAF, LEAF): 1})
    else:
        quad = tensor_product(coproduct_rec(t.left), coproduct_rec(t.right))
        result = star_vee(t.label, tau23(quad)) + TensorComb._wrap({(t, LEAF): 1})
    _coproduct_cache[t] = result
    return result


def coproduct(x: Tree | LinComb, method: str = "recursive") -> TensorComb:
    """Linear extension of the coproduct; ``method`` picks the route."""
    basis = {"recursive": coproduct_rec, "cuts": coproduct_cuts}.get(method)
    if basis is None:
        raise ValueError(f"method must be 'recursive' or 'cuts', got {method!r}")
    out: dict = {}
    for t, c in as_lincomb(x)._coeffs.items():
        for key, d in basis(t)._coeffs.items():
            total = out.get(key, 0) + c * d
            if total:
                out[key] = total
            elif key in out:
                del out[key]
    return TensorComb._wrap(out)


def counit(x: Tree | LinComb) -> int:
    """Coefficient of the leaf; the counit of the coalgebra."""
    return as_lincomb(x).coeff(LEAF)


def reduced_coproduct(t: Tree) -> TensorComb:
    """Coproduct minus its two trivial terms t (x) leaf and leaf (x) t."""
    if t.is_leaf:
        raise LeafInput("the reduced coproduct is undefined on the leaf")
    out = dict(coproduct_rec(t)._coeffs)
    for key in ((t, LEAF), (LEAF, t)):
        c = out.get(key, 0) - 1
        if c:
            out[key] = c
        else:
            out.pop(key, None)
    return TensorComb._wrap(out)


def _nullspace(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    # Exact reduced row echelon form; returns a basis of {x : A x = 0}.
    mat = [row[:] for row in rows]
    pivot_cols: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [v / inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivot_cols.append(c)
        r += 1
        if r == len(mat):
            break
    pivot_set = set(pivot_cols)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -mat[i][free]
        basis.append(vec)
    return basis


def primitive_basis(n: int, alphabet: Sequence[str] = DEFAULT_ALPHABET) -> list[LinComb]:
    """Basis of the primitive elements in the degree-``n`` component.

    Computed as the kernel of the reduced coproduct on the span of the
    degree-``n`` basis trees, by exact rational elimination; vectors are
    cleared to coprime integers.  Degree 0 holds no primitives.
    """
    labels = _validated_alphabet(alphabet)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return []
    basis = enumerate_trees(n, labels)
    row_index: dict = {}
    columns: list[dict[int, int]] = []
    for t in basis:
        col: dict[int, int] = {}
        for key, c in reduced_coproduct(t).items():
            row = row_index.setdefault(key, len(row_index))
            col[row] = c
        columns.append(col)
    rows = [[Fraction(0)] * len(basis) for _ in range(len(row_index))]
    for j, col in enumerate(columns):
        for i, c in col.items():
            rows[i][j] = Fraction(c)
    out = []
    for vec in _nullspace(rows, len(basis)):
        scale = lcm(*(v.denominator for v in vec)) if vec else 1
        ints = [int(v * scale) for v in vec]
        common = gcd(*ints)
        if common:
            ints = [v // common for v in ints]
        lead = next((v for v in ints if v), 1)
        if lead < 0:
            ints = [-v for v in ints]
        out.append(LinComb({t: c for t, c in zip(basis, ints) if c}))
    return out
