"""Command-line front end.

Exit codes: 0 on success, 1 when a verification sweep finds a counterexample
(the report is still emitted), 2 on parse or usage errors.  The default
output format may be set through the ``PBT_HOPF_FORMAT`` environment
variable (``text`` or ``json``).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coalgebra import all_cuts, cut_pair, is_admissible, coproduct, primitive_basis
from .errors import TreeHopfError
from .expressions import parse_lincomb
from .hopf import antipode, verify_hopf
from .linear import format_lincomb, format_tensors
from .product import star
from .trees import catalan, enumerate_trees, parse_tree, tree_to_json

_MAX_UNFORCED_DEGREE = 7
_MAX_UNFORCED_LABELS = 2


def _default_format() -> str:
    env = os.environ.get("PBT_HOPF_FORMAT", "").strip().lower()
    return env if env in ("text", "json") else "text"


def _labels(value: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in value.split(","))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json"),
        default=_default_format(),
        help="output format (default: text, or $PBT_HOPF_FORMAT)",
    )
    common.add_argument(
        "--labels",
        type=_labels,
        default=("o",),
        metavar="L1,L2,...",
        help="decoration alphabet (default: the undecorated label 'o')",
    )

    parser = argparse.ArgumentParser(
        prog="treehopf",
        description="Exact computations in the Hopf algebra of decorated "
        "planar binary trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common],
                       help="list all trees of a given degree")
    p.add_argument("n", type=int)

    p = sub.add_parser("product", parents=[common],
                       help="multiply two tree expressions")
    p.add_argument("lhs")
    p.add_argument("rhs")

    p = sub.add_parser("coproduct", parents=[common],
                       help="coproduct of a tree expression")
    p.add_argument("expr")
    p.add_argument("--method", choices=("recursive", "cuts"), default="recursive")

    p = sub.add_parser("antipode", parents=[common],
                       help="antipode of a tree expression")
    p.add_argument("expr")

    p = sub.add_parser("cuts", parents=[common],
                       help="list the cuts of a tree with their severed pairs")
    p.add_argument("tree")
    p.add_argument("--admissible-only", action="store_true")

    p = sub.add_parser("primitives", parents=[common],
                       help="basis of the primitive elements in a degree")
    p.add_argument("n", type=int)

    p = sub.add_parser("verify", parents=[common],
                       help="run the Hopf axiom sweep up to a degree bound")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--force", action="store_true",
                   help="allow sweeps beyond the built-in size guard")

    p = sub.add_parser("catalan", parents=[common],
                       help="number of tree shapes of a given degree")
    p.add_argument("n", type=int)

    return parser


def _emit(args, text_lines: list[str], json_value) -> None:
    if args.format == "json":
        print(json.dumps(json_value, indent=2))
    else:
        for line in text_lines:
            print(line)


def _cmd_enumerate(args) -> int:
    trees = enumerate_trees(args.n, args.labels)
    _emit(args, [str(t) for t in trees], [tree_to_json(t) for t in trees])
    return 0


def _cmd_product(args) -> int:
    result = star(parse_lincomb(args.lhs), parse_lincomb(args.rhs))
    _emit(args, [format_lincomb(result)], result.to_json())
    return 0


def _cmd_coproduct(args) -> int:
    result = coproduct(parse_lincomb(args.expr), method=args.method)
    _emit(args, [format_tensors(result)], result.to_json())
    return 0


def _cmd_antipode(args) -> int:
    result = antipode(parse_lincomb(args.expr))
    _emit(args, [format_lincomb(result)], result.to_json())
    return 0


def _cut_name(cut) -> str:
    if cut.is_total:
        return "total"
    if not cut.edges:
        return "empty"
    return "{" + ",".join("".join(p) for p in cut.sorted_edges()) + "}"


def _cmd_cuts(args) -> int:
    t = parse_tree(args.tree)
    lines = []
    payload = []
    for cut in all_cuts(t):
        admissible = is_admissible(t, cut)
        if args.admissible_only and not admissible:
            continue
        if admissible:
            severed = cut_pair(t, cut)
            lines.append(
                f"{_cut_name(cut)}: admissible; "
                f"P = {format_lincomb(severed.P)}; R = {severed.R}"
            )
            payload.append(severed.to_json())
        else:
            lines.append(f"{_cut_name(cut)}: not admissible")
            payload.append(
                {
                    "edges": [list(p) for p in cut.sorted_edges()],
                    "kind": cut.kind,
                    "admissible": False,
                }
            )
    _emit(args, lines, payload)
    return 0


def _cmd_primitives(args) -> int:
    basis = primitive_basis(args.n, args.labels)
    _emit(args, [format_lincomb(x) for x in basis], [x.to_json() for x in basis])
    return 0


def _cmd_verify(args) -> int:
    if (
        args.degree > _MAX_UNFORCED_DEGREE
        and len(args.labels) > _MAX_UNFORCED_LABELS
        and not args.force
    ):
        print(
            f"error: degree {args.degree} with {len(args.labels)} labels "
            "is past the size guard; pass --force to run anyway",
            file=sys.stderr,
        )
        return 2
    report = verify_hopf(args.degree, args.labels)
    _emit(args, report.summary_lines(), report.to_json())
    return 0 if report.all_passed else 1


def _cmd_catalan(args) -> int:
    _emit(args, [str(catalan(args.n))], catalan(args.n))
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "product": _cmd_product,
    "coproduct": _cmd_coproduct,
    "antipode": _cmd_antipode,
    "cuts": _cmd_cuts,
    "primitives": _cmd_primitives,
    "verify": _cmd_verify,
    "catalan": _cmd_catalan,
}


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (TreeHopfError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
