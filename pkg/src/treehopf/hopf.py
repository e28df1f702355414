"""Antipode, grafting-algebra targets, universal morphism, and axiom sweeps.

The bialgebra here is connected and graded by interior count, so the
antipode exists and satisfies the recursion

    S(leaf) = leaf,   S(t) = -t - sum S(t') * t''   over the reduced coproduct,

which is what :func:`antipode` computes (memoized).  Its correctness is not
assumed: :func:`convolution_check` and :func:`verify_hopf` confirm the
convolution identities on every basis tree within a degree budget.
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping, Sequence

from .coalgebra import (
    coproduct,
    coproduct_cuts,
    coproduct_rec,
    counit,
    reduced_coproduct,
)
from .errors import UnknownLabel
from .linear import (
    Combination,
    LinComb,
    TensorComb,
    as_lincomb,
    format_lincomb,
    format_tensors,
    tau23,
    tensor_product,
)
from .product import star, star_tensor, star_vee, vee
from .trees import (
    DEFAULT_ALPHABET,
    LEAF,
    Tree,
    _validated_alphabet,
    check_label,
    enumerate_trees,
)

_antipode_cache: dict[Tree, LinComb] = {}


def _antipode_basis(t: Tree) -> LinComb:
    cached = _antipode_cache.get(t)
    if cached is not None:
        return cached
    if t.is_leaf:
        result = LinComb._wrap({LEAF: 1})
    else:
        acc: dict = {t: -1}
        for (u, v), c in reduced_coproduct(t)._coeffs.items():
            for w, d in star(_antipode_basis(u), v)._coeffs.items():
                total = acc.get(w, 0) - c * d
                if total:
                    acc[w] = total
                elif w in acc:
                    del acc[w]
        result = LinComb._wrap(acc)
    _antipode_cache[t] = result
    return result


def antipode(x: Tree | LinComb) -> LinComb:
    """Antipode, extended linearly; degree-preserving on basis trees."""
    out: dict = {}
    for t, c in as_lincomb(x)._coeffs.items():
        for u, d in _antipode_basis(t)._coeffs.items():
            total = out.get(u, 0) + c * d
            if total:
                out[u] = total
            elif u in out:
                del out[u]
    return LinComb._wrap(out)


def _convolve_antipode(d: TensorComb, side: str) -> LinComb:
    out: dict = {}
    for (u, v), c in d._coeffs.items():
        term = star(antipode(u), v) if side == "left" else star(u, antipode(v))
        for w, cw in term._coeffs.items():
            total = out.get(w, 0) + c * cw
            if total:
                out[w] = total
            elif w in out:
                del out[w]
    return LinComb._wrap(out)


def convolution_check(t: Tree) -> bool:
    """Both Hopf convolution identities on a basis tree."""
    d = coproduct_rec(t)
    expected = LinComb._wrap({LEAF: 1} if t.is_leaf else {})
    return (
        _convolve_antipode(d, "left") == expected
        and _convolve_antipode(d, "right") == expected
    )


class VAlgebraTarget(ABC):
    """Codomain interface for the universal morphism.

    A target is a unital associative algebra with one binary grafting per
    label, over an opaque element type.  Targets are expected to satisfy the
    same graft/product compatibility law the tree algebra does; that is a
    law, not a signature, so it is verified on the shipped targets rather
    than enforced here.  ``zero``/``add``/``scale`` are optional and only
    needed to map non-basis combinations.
    """

    @abstractmethod
    def unit(self): ...

    @abstractmethod
    def mul(self, x, y): ...

    @abstractmethod
    def graft_op(self, label: str, x, y): ...

    @abstractmethod
    def eq(self, x, y) -> bool: ...

    def zero(self):
        raise NotImplementedError("target does not expose linear structure")

    def add(self, x, y):
        raise NotImplementedError("target does not expose linear structure")

    def scale(self, c: int, x):
        raise NotImplementedError("target does not expose linear structure")


class _LinCombTarget(VAlgebraTarget):
    # Shared plumbing for targets whose elements are LinComb values.

    def unit(self) -> LinComb:
        return LinComb._wrap({LEAF: 1})

    def mul(self, x: LinComb, y: LinComb) -> LinComb:
        return star(x, y)

    def eq(self, x: LinComb, y: LinComb) -> bool:
        return x == y

    def zero(self) -> LinComb:
        return LinComb()

    def add(self, x: LinComb, y: LinComb) -> LinComb:
        return x + y

    def scale(self, c: int, x: LinComb) -> LinComb:
        return c * x


class SelfTarget(_LinCombTarget):
    """The tree algebra as its own target; the universal morphism is the identity.

    Passing an explicit alphabet restricts the available graftings, so labels
    outside it raise :class:`UnknownLabel`.
    """

    def __init__(self, alphabet: Sequence[str] | None = None):
        self.alphabet = None if alphabet is None else _validated_alphabet(alphabet)

    def graft_op(self, label: str, x: LinComb, y: LinComb) -> LinComb:
        if self.alphabet is not None and label not in self.alphabet:
            raise UnknownLabel(f"target has no grafting for label {label!r}")
        return vee(label, x, y)


class RelabelingTarget(_LinCombTarget):
    """Tree algebra with labels renamed through a mapping.

    The universal morphism into this target rewrites every decoration in
    place, which commutes with the product, the graftings, the coproduct and
    the counit.
    """

    def __init__(self, mapping: Mapping[str, str]):
        self.mapping = {check_label(k): check_label(v) for k, v in mapping.items()}

    def graft_op(self, label: str, x: LinComb, y: LinComb) -> LinComb:
        renamed = self.mapping.get(label)
        if renamed is None:
            raise UnknownLabel(f"target has no grafting for label {label!r}")
        return vee(renamed, x, y)


def universal_morphism(target: VAlgebraTarget) -> Callable:
    """The unique structure map into ``target``.

    The leaf goes to the unit and a grafted tree to the grafted images of
    its parts; combinations are mapped linearly when the target exposes
    ``zero``/``add``/``scale``.  Raises :class:`UnknownLabel` if the target
    lacks a grafting for some decoration encountered.
    """
    memo: dict[Tree, object] = {}

    def on_tree(t: Tree):
        if t in memo:
            return memo[t]
        if t.is_leaf:
            value = target.unit()
        else:
            value = target.graft_op(t.label, on_tree(t.left), on_tree(t.right))
        memo[t] = value
        return value

    def phi(x: Tree | LinComb):
        if isinstance(x, Tree):
            return on_tree(x)
        acc = target.zero()
        for t, c in as_lincomb(x)._coeffs.items():
            acc = target.add(acc, target.scale(c, on_tree(t)))
        return acc

    return phi


def _cocycle_sides(
    alpha: str, x: LinComb, y: LinComb
) -> tuple[TensorComb, TensorComb]:
    grafted = vee(alpha, x, y)
    lhs = coproduct(grafted)
    rhs = TensorComb._wrap({(t, LEAF): c for t, c in grafted._coeffs.items()})
    rhs = rhs + star_vee(alpha, tau23(tensor_product(coproduct(x), coproduct(y))))
    return lhs, rhs


def cocycle_check(alpha: str, x: Tree | LinComb, y: Tree | LinComb) -> bool:
    """The grafting cocycle law: the coproduct of a grafted element equals
    its (element (x) leaf) term plus (product, graft) of the legs' coproducts."""
    lhs, rhs = _cocycle_sides(alpha, as_lincomb(x), as_lincomb(y))
    return lhs == rhs


def coideal_check(
    alpha: str, degree_bound: int, alphabet: Sequence[str] = DEFAULT_ALPHABET
) -> bool:
    """Coideal property of the set of trees with root label ``alpha``.

    For every basis tree t with that root label up to ``degree_bound``, the
    counit vanishes and every coproduct term other than t (x) leaf has a
    second leg whose root carries ``alpha``; this decomposition implies the
    coideal containment.
    """
    labels = _validated_alphabet(alphabet)
    check_label(alpha)
    if alpha not in labels:
        raise UnknownLabel(f"label {alpha!r} is not in the alphabet {labels!r}")
    if degree_bound < 1:
        raise ValueError("degree_bound must be >= 1")
    for n in range(1, degree_bound + 1):
        for t in enumerate_trees(n, labels):
            if t.label != alpha:
                continue
            if counit(t) != 0:
                return False
            for (p, r), _ in coproduct_rec(t)._coeffs.items():
                if p == t and r.is_leaf:
                    continue
                if r.is_leaf or r.label != alpha:
                    return False
    return True


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: dict | None = None


@dataclass(frozen=True)
class HopfReport:
    """Outcome of an axiom sweep; failures carry reproducible counterexamples."""

    degree_bound: int
    alphabet: tuple[str, ...]
    checks: tuple[CheckResult, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "degree_bound": self.degree_bound,
            "alphabet": list(self.alphabet),
            "checks": [
                {
                    "name": c.name,
                    "pass": c.passed,
                    "counterexample": c.counterexample,
                }
                for c in self.checks
            ],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            if c.passed:
                lines.append(f"PASS {c.name}")
            else:
                lines.append(f"FAIL {c.name}")
                ce = c.counterexample
                lines.append(f"  inputs: {'; '.join(ce['inputs'])}")
                lines.append(f"  lhs:  {ce['lhs']}")
                lines.append(f"  rhs:  {ce['rhs']}")
                lines.append(f"  diff: {ce['difference']}")
        passed = sum(1 for c in self.checks if c.passed)
        lines.append(
            f"{passed}/{len(self.checks)} checks passed "
            f"(degree <= {self.degree_bound}, labels {','.join(self.alphabet)})"
        )
        return lines


def _counterexample(inputs, lhs: Combination, rhs: Combination) -> dict:
    fmt = format_lincomb if isinstance(lhs, LinComb) else format_tensors
    return {
        "inputs": [str(item) for item in inputs],
        "lhs": fmt(lhs),
        "rhs": fmt(rhs),
        "difference": fmt(lhs - rhs),
    }


def _triple_coproduct(t: Tree, left_first: bool) -> Combination:
    out: dict = {}
    for (u, v), c in coproduct_rec(t)._coeffs.items():
        inner = coproduct_rec(u) if left_first else coproduct_rec(v)
        for (a, b), d in inner._coeffs.items():
            key = (a, b, v) if left_first else (u, a, b)
            out[key] = out.get(key, 0) + c * d
    return Combination._wrap({k: v for k, v in out.items() if v})


def verify_hopf(
    degree_bound: int, alphabet: Sequence[str] = DEFAULT_ALPHABET
) -> HopfReport:
    """Sweep every axiom over all basis elements within the degree budget.

    Runs product associativity and unitality, coassociativity, the counit
    law, multiplicativity and grading of the coproduct, grading of the
    product, both antipode convolution identities, agreement of the two
    coproduct routes, the graft/product compatibility law and the grafting
    cocycle law.  Single-tree checks range over degrees 0..bound; pair and
    triple checks over tuples whose total degree stays within the bound.
    """
    labels = _validated_alphabet(alphabet)
    if degree_bound < 0:
        raise ValueError("degree_bound must be >= 0")
    by_degree = [enumerate_trees(n, labels) for n in range(degree_bound + 1)]
    singles = [t for level in by_degree for t in level]

    def pairs(min_degree: int = 0) -> Iterator[tuple[Tree, Tree]]:
        for ds in range(min_degree, degree_bound + 1):
            for dt in range(min_degree, degree_bound - ds + 1):
                for s in by_degree[ds]:
                    for t in by_degree[dt]:
                        yield s, t

    def triples() -> Iterator[tuple[Tree, Tree, Tree]]:
        for dx in range(degree_bound + 1):
            for dy in range(degree_bound - dx + 1):
                for dz in range(degree_bound - dx - dy + 1):
                    for x in by_degree[dx]:
                        for y in by_degree[dy]:
                            for z in by_degree[dz]:
                                yield x, y, z

    def check_associativity():
        for x, y, z in triples():
            lhs = star(star(x, y), z)
            rhs = star(x, star(y, z))
            if lhs != rhs:
                return _counterexample((x, y, z), lhs, rhs)
        return None

    def check_unit():
        for t in singles:
            expected = LinComb._wrap({t: 1})
            for lhs in (star(LEAF, t), star(t, LEAF)):
                if lhs != expected:
                    return _counterexample((t,), lhs, expected)
        return None

    def check_coassociativity():
        for t in singles:
            lhs = _triple_coproduct(t, left_first=True)
            rhs = _triple_coproduct(t, left_first=False)
            if lhs != rhs:
                return _counterexample((t,), lhs, rhs)
        return None

    def check_counit_law():
        for t in singles:
            expected = LinComb._wrap({t: 1})
            d = coproduct_rec(t)._coeffs
            left = LinComb((v, c) for (u, v), c in d.items() if u.is_leaf)
            right = LinComb((u, c) for (u, v), c in d.items() if v.is_leaf)
            if left != expected:
                return _counterexample((t,), left, expected)
            if right != expected:
                return _counterexample((t,), right, expected)
        return None

    def check_coproduct_multiplicative():
        for x, y in pairs():
            lhs = coproduct(star(x, y))
            rhs = star_tensor(coproduct_rec(x), coproduct_rec(y))
            if lhs != rhs:
                return _counterexample((x, y), lhs, rhs)
        return None

    def check_product_grading():
        for x, y in pairs():
            prod = star(x, y)
            graded = prod.graded_component(x.interior_count + y.interior_count)
            if prod != graded:
                return _counterexample((x, y), prod, graded)
        return None

    def check_coproduct_grading():
        for t in singles:
            d = coproduct_rec(t)
            graded = TensorComb._wrap(
                {
                    (u, v): c
                    for (u, v), c in d._coeffs.items()
                    if u.interior_count + v.interior_count == t.interior_count
                }
            )
            if d != graded:
                return _counterexample((t,), d, graded)
        return None

    def check_antipode(side: str):
        def run():
            for t in singles:
                expected = LinComb._wrap({LEAF: 1} if t.is_leaf else {})
                lhs = _convolve_antipode(coproduct_rec(t), side)
                if lhs != expected:
                    return _counterexample((t,), lhs, expected)
            return None

        return run

    def check_oracle_equivalence():
        for t in singles:
            lhs = coproduct_cuts(t)
            rhs = coproduct_rec(t)
            if lhs != rhs:
                return _counterexample((t,), lhs, rhs)
        return None

    def check_graft_compatibility():
        for a, b in pairs(min_degree=1):
            lhs = star(a, b)
            rhs = vee(a.label, a.left, star(a.right, b)) + vee(
                b.label, star(a, b.left), b.right
            )
            if lhs != rhs:
                return _counterexample((a, b), lhs, rhs)
        return None

    def check_cocycle():
        for alpha in labels:
            for x, y in pairs():
                lhs, rhs = _cocycle_sides(alpha, as_lincomb(x), as_lincomb(y))
                if lhs != rhs:
                    return _counterexample((alpha, x, y), lhs, rhs)
        return None

    named_checks = (
        ("product_associativity", check_associativity),
        ("product_unit", check_unit),
        ("coassociativity", check_coassociativity),
        ("counit_law", check_counit_law),
        ("coproduct_multiplicative", check_coproduct_multiplicative),
        ("product_grading", check_product_grading),
        ("coproduct_grading", check_coproduct_grading),
        ("antipode_convolution_left", check_antipode("left")),
        ("antipode_convolution_right", check_antipode("right")),
        ("coproduct_oracle_equivalence", check_oracle_equivalence),
        ("graft_product_compatibility", check_graft_compatibility),
        ("graft_cocycle", check_cocycle),
    )
    results = []
    for name, run in named_checks:
        failure = run()
        results.append(CheckResult(name, failure is None, failure))
    return HopfReport(degree_bound, labels, tuple(results))
