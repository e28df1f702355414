"""Exact free-module arithmetic over trees.

``LinComb`` holds finite integer combinations of trees and ``TensorComb``
integer combinations of ordered tree pairs; both stay normalized (no stored
zero coefficients).  Longer tensor words (3- and 4-tuples of trees) use the
plain :class:`Combination` base, which is what the tensor-leg permutation
``tau23`` acts on.  All values are immutable and safe to share.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from .trees import LEAF, Tree, tree_from_json, tree_to_json


class Combination:
    """A formal Z-linear combination of hashable basis keys."""

    __slots__ = ("_coeffs",)

    def __init__(self, data: Mapping | Iterable[tuple] = ()):
        items = data.items() if isinstance(data, Mapping) else data
        coeffs: dict = {}
        for key, c in items:
            self._check_item(key, c)
            total = coeffs.get(key, 0) + c
            if total:
                coeffs[key] = total
            elif key in coeffs:
                del coeffs[key]
        self._coeffs = coeffs

    @staticmethod
    def _check_item(key, c) -> None:
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be exact integers, got {c!r}")

    @classmethod
    def _wrap(cls, coeffs: dict):
        # Internal constructor taking ownership of an already normalized dict.
        obj = cls.__new__(cls)
        obj._coeffs = coeffs
        return obj

    def coeff(self, key) -> int:
        return self._coeffs.get(key, 0)

    def items(self) -> list[tuple[object, int]]:
        """Terms in canonical order."""
        return sorted(self._coeffs.items(), key=lambda kv: self._sort_key(kv[0]))

    def support(self) -> list:
        return [key for key, _ in self.items()]

    @staticmethod
    def _sort_key(key):
        return key

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Combination):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        out = dict(self._coeffs)
        for key, c in other._coeffs.items():
            total = out.get(key, 0) + c
            if total:
                out[key] = total
            elif key in out:
                del out[key]
        return type(self)._wrap(out)

    def __sub__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return type(self)._wrap({key: -c for key, c in self._coeffs.items()})

    def _scaled(self, c: int):
        if not isinstance(c, int):
            raise TypeError(f"scalars must be exact integers, got {c!r}")
        if c == 0:
            return type(self)._wrap({})
        return type(self)._wrap({key: c * v for key, v in self._coeffs.items()})

    def __mul__(self, c: int):
        return self._scaled(c)

    def __rmul__(self, c: int):
        return self._scaled(c)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({dict(self.items())!r})"


class LinComb(Combination):
    """Integer combination of decorated trees (an element of the tree module)."""

    @staticmethod
    def _check_item(key, c) -> None:
        if not isinstance(key, Tree):
            raise TypeError(f"LinComb keys must be trees, got {key!r}")
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be exact integers, got {c!r}")

    def graded_component(self, n: int) -> "LinComb":
        """Restriction to basis trees with exactly ``n`` interior vertices."""
        return LinComb._wrap(
            {t: c for t, c in self._coeffs.items() if t.interior_count == n}
        )

    def degrees(self) -> list[int]:
        """Sorted list of interior counts occurring in the support."""
        return sorted({t.interior_count for t in self._coeffs})

    def to_json(self) -> list:
        return [{"coeff": str(c), "tree": tree_to_json(t)} for t, c in self.items()]

    @classmethod
    def from_json(cls, obj) -> "LinComb":
        return cls((tree_from_json(e["tree"]), int(e["coeff"])) for e in obj)


class TensorComb(Combination):
    """Integer combination of ordered tree pairs (an element of the tensor square)."""

    @staticmethod
    def _check_item(key, c) -> None:
        if (
            not isinstance(key, tuple)
            or len(key) != 2
            or not all(isinstance(leg, Tree) for leg in key)
        ):
            raise TypeError(f"TensorComb keys must be pairs of trees, got {key!r}")
        if not isinstance(c, int):
            raise TypeError(f"coefficients must be exact integers, got {c!r}")

    # Tensor terms sort by the plain printed pair, not by the single-tree
    # canonical order (which demotes '|'); this matches the CLI text format.
    @staticmethod
    def _sort_key(key):
        left, right = key
        return (str(left), str(right))

    def to_json(self) -> list:
        return [
            {"coeff": str(c), "left": tree_to_json(l), "right": tree_to_json(r)}
            for (l, r), c in self.items()
        ]

    @classmethod
    def from_json(cls, obj) -> "TensorComb":
        return cls(
            ((tree_from_json(e["left"]), tree_from_json(e["right"])), int(e["coeff"]))
            for e in obj
        )


def as_lincomb(x: Tree | LinComb) -> LinComb:
    """Embed a basis tree, or pass a combination through unchanged."""
    if isinstance(x, LinComb):
        return x
    if isinstance(x, Tree):
        return LinComb._wrap({x: 1})
    raise TypeError(f"expected a Tree or LinComb, got {x!r}")


def _legs(key) -> tuple:
    return key if isinstance(key, tuple) else (key,)


def tensor_product(u: Combination, v: Combination) -> Combination:
    """Concatenate tensor legs: keys of the result are joined key tuples."""
    out: dict = {}
    for ku, cu in u._coeffs.items():
        for kv, cv in v._coeffs.items():
            key = _legs(ku) + _legs(kv)
            total = out.get(key, 0) + cu * cv
            if total:
                out[key] = total
            elif key in out:
                del out[key]
    return Combination._wrap(out)


def tau23(w: Combination) -> Combination:
    """Swap the second and third legs of a sum of 4-tuples of trees."""
    out: dict = {}
    for key, c in w._coeffs.items():
        if not isinstance(key, tuple) or len(key) != 4:
            raise TypeError(f"tau23 acts on 4-tuples of trees, got key {key!r}")
        a, b, cc, d = key
        out[(a, cc, b, d)] = c
    return Combination._wrap(out)


def _format_terms(rendered: list[tuple[str, int]]) -> str:
    if not rendered:
        return "0"
    parts = []
    for i, (text, c) in enumerate(rendered):
        body = text if abs(c) == 1 else f"{abs(c)}*{text}"
        if i == 0:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(parts)


def format_lincomb(x: LinComb) -> str:
    """Canonical text: terms in canonical tree order, unit coefficients elided."""
    return _format_terms([(str(t), c) for t, c in x.items()])


def format_tensors(w: Combination, sep: str = " (x) ") -> str:
    """Canonical text for tensor sums; legs are joined by ``sep``."""
    rendered = [
        (sep.join(str(leg) for leg in _legs(key)), c)
        for key, c in sorted(
            w._coeffs.items(), key=lambda kv: tuple(str(leg) for leg in _legs(kv[0]))
        )
    ]
    return _format_terms(rendered)
