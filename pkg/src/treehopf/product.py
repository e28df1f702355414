"""The associative product on tree combinations and the per-label graftings.

On basis trees the product is defined recursively: the leaf is the unit, and
for ``T = T_l ^a T_r`` and ``U = U_l ^b U_r``

    T * U = (T_l ^a (T_r * U)) + ((T * U_l) ^b U_r),

extended bilinearly.  The recursion terminates because the total interior
count of the arguments strictly drops in both calls.  Basis products are
memoized; the cache is transparent (results are identical with or without
it) and may be bounded via :func:`configure_star_cache`.
"""

from __future__ import annotations

from functools import lru_cache

from .linear import Combination, LinComb, TensorComb, as_lincomb
from .trees import Tree


def _star_basis_impl(s: Tree, t: Tree) -> LinComb:
    if s.interior_count == 0:
        return LinComb._wrap({t: 1})
    if t.interior_count == 0:
        return LinComb._wrap({s: 1})
    out: dict = {}
    for u, c in _star_basis(s.right, t)._coeffs.items():
        key = Tree(s.left, s.label, u)
        out[key] = out.get(key, 0) + c
    for u, c in _star_basis(s, t.left)._coeffs.items():
        key = Tree(u, t.label, t.right)
        out[key] = out.get(key, 0) + c
    return LinComb._wrap(out)


_star_basis = None


def configure_star_cache(maxsize: int | None = None) -> None:
    """Rebuild the basis-product memo; ``None`` keeps it unbounded."""
    global _star_basis
    _star_basis = lru_cache(maxsize=maxsize)(_star_basis_impl)


def star_cache_info():
    return _star_basis.cache_info()


configure_star_cache()


def star(x: Tree | LinComb, y: Tree | LinComb) -> LinComb:
    """Bilinear product; the leaf combination acts as the unit."""
    xs = as_lincomb(x)
    ys = as_lincomb(y)
    out: dict = {}
    for s, cs in xs._coeffs.items():
        for t, ct in ys._coeffs.items():
            c = cs * ct
            for u, cu in _star_basis(s, t)._coeffs.items():
                total = out.get(u, 0) + c * cu
                if total:
                    out[u] = total
                elif u in out:
                    del out[u]
    return LinComb._wrap(out)


def vee(label: str, x: Tree | LinComb, y: Tree | LinComb) -> LinComb:
    """Bilinear extension of grafting under a root decorated by ``label``."""
    xs = as_lincomb(x)
    ys = as_lincomb(y)
    out: dict = {}
    for s, cs in xs._coeffs.items():
        for t, ct in ys._coeffs.items():
            key = Tree(s, label, t)
            total = out.get(key, 0) + cs * ct
            if total:
                out[key] = total
            elif key in out:
                del out[key]
    return LinComb._wrap(out)


def star_vee(label: str, w: Combination) -> TensorComb:
    """Apply (product, graft-under-``label``) to a sum of 4-tuples.

    Each term ``(p, q, u, v)`` contributes ``(p * q) (x) (u ^label v)``; this
    is the map composed with ``tau23`` in the recursive coproduct.
    """
    out: dict = {}
    for key, c in w._coeffs.items():
        p, q, u, v = key
        right = Tree(u, label, v)
        for s, cs in _star_basis(p, q)._coeffs.items():
            pair = (s, right)
            total = out.get(pair, 0) + c * cs
            if total:
                out[pair] = total
            elif pair in out:
                del out[pair]
    return TensorComb._wrap(out)


def star_tensor(u: TensorComb, v: TensorComb) -> TensorComb:
    """Componentwise product on the tensor square: (a (x) b)(c (x) d) = ac (x) bd."""
    out: dict = {}
    for (a, b), cu in u._coeffs.items():
        for (c, d), cv in v._coeffs.items():
            coeff = cu * cv
            for left, cl in _star_basis(a, c)._coeffs.items():
                for right, cr in _star_basis(b, d)._coeffs.items():
                    pair = (left, right)
                    total = out.get(pair, 0) + coeff * cl * cr
                    if total:
                        out[pair] = total
                    elif pair in out:
                        del out[pair]
    return TensorComb._wrap(out)
