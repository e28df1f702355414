"""Exact computer algebra for the Hopf algebra of decorated planar binary trees.

Trees with interior vertices decorated from a finite alphabet span a free
module over the integers; this package implements the associative product,
the coproduct both by its structural recursion and by admissible-cut
combinatorics, the counit and antipode, primitive-space computation by exact
rational elimination, grafting-algebra targets with their universal
morphism, and sweeps that verify every axiom at desk scale.  A CLI
(``python -m treehopf`` or the ``treehopf`` script) fronts the same
operations.
"""

from .coalgebra import (
    AdmissibleCutResult,
    Cut,
    admissible_cuts,
    all_cuts,
    coproduct,
    coproduct_cuts,
    coproduct_rec,
    counit,
    cut_pair,
    internal_edges,
    is_admissible,
    primitive_basis,
    reduced_coproduct,
)
from .errors import (
    DecomposeLeaf,
    EmptyAlphabet,
    LeafInput,
    NotAdmissible,
    ParseError,
    TreeHopfError,
    UnknownLabel,
)
from .expressions import parse_lincomb
from .hopf import (
    CheckResult,
    HopfReport,
    RelabelingTarget,
    SelfTarget,
    VAlgebraTarget,
    antipode,
    cocycle_check,
    coideal_check,
    convolution_check,
    universal_morphism,
    verify_hopf,
)
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
from .product import configure_star_cache, star, star_tensor, star_vee, vee
from .trees import (
    DEFAULT_ALPHABET,
    LEAF,
    Tree,
    UNDECORATED_LABEL,
    catalan,
    decompose,
    enumerate_trees,
    graft,
    parse_tree,
    print_tree,
    tree_from_json,
    tree_to_json,
)

__version__ = "0.1.0"

__all__ = [
    "AdmissibleCutResult",
    "CheckResult",
    "Combination",
    "Cut",
    "DEFAULT_ALPHABET",
    "DecomposeLeaf",
    "EmptyAlphabet",
    "HopfReport",
    "LEAF",
    "LeafInput",
    "LinComb",
    "NotAdmissible",
    "ParseError",
    "RelabelingTarget",
    "SelfTarget",
    "TensorComb",
    "Tree",
    "TreeHopfError",
    "UNDECORATED_LABEL",
    "UnknownLabel",
    "VAlgebraTarget",
    "admissible_cuts",
    "all_cuts",
    "antipode",
    "as_lincomb",
    "catalan",
    "cocycle_check",
    "coideal_check",
    "configure_star_cache",
    "convolution_check",
    "coproduct",
    "coproduct_cuts",
    "coproduct_rec",
    "counit",
    "cut_pair",
    "decompose",
    "enumerate_trees",
    "format_lincomb",
    "format_tensors",
    "graft",
    "internal_edges",
    "is_admissible",
    "parse_lincomb",
    "parse_tree",
    "primitive_basis",
    "print_tree",
    "reduced_coproduct",
    "star",
    "star_tensor",
    "star_vee",
    "tau23",
    "tensor_product",
    "tree_from_json",
    "tree_to_json",
    "universal_morphism",
    "vee",
    "verify_hopf",
]
