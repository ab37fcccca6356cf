"""Command-line front end.

Exit codes: 0 success (for `equiv`: equivalent), 1 not equivalent,
2 invalid input or usage.  Set MM_COLOR=0|1 to force ANSI color off/on in
the selftest report.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .complexes import ComplexError
from .curry import (
    dmf_to_pl,
    format_pl_file,
    induced_cml_tree,
    parse_pl_file,
    pl_to_dmf,
)
from .dmf import DmfError, format_dmf_text, is_index_ordered, is_sublevel_connected, parse_dmf_text, validate
from .equiv import UnsupportedRegime, cm_equivalent, cm_to_path, shuffle_equivalent, symmetry_equivalent
from .induce import induced_ml_tree
from .mergetree import TreeError, parse_merge_tree
from .orders import OrderError
from .oracle import verify_theorems
from .realize import (
    build_index_ordered_dmf,
    build_sublevel_connected_dmf,
    format_trace,
    step_by_step_dmf,
    step_by_step_trace,
)

INPUT_ERRORS = (ComplexError, DmfError, TreeError, OrderError, UnsupportedRegime, OSError)


def _read(path: str) -> str:
    return Path(path).read_text()


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _color_enabled() -> bool:
    env = os.environ.get("MM_COLOR")
    if env is not None:
        return env not in ("0", "", "false")
    return sys.stdout.isatty()


def cmd_validate(args) -> int:
    f = parse_dmf_text(_read(args.dmf))
    crit = validate(f)
    kind = []
    if is_index_ordered(f):
        kind.append("index-ordered")
    if is_sublevel_connected(f):
        kind.append("sublevel-connected")
    from .complexes import format_value

    values = " ".join(format_value(v) for v in crit.critical_values)
    _emit(
        f"valid: {len(crit.critical)} critical, {len(crit.matched_pairs)} matched pairs\n"
        f"critical values: {values}\n"
        + (f"properties: {', '.join(kind)}\n" if kind else ""),
        args.output,
    )
    return 0


def cmd_induce(args) -> int:
    f = parse_dmf_text(_read(args.dmf))
    if args.curry:
        t = induced_cml_tree(f)
    else:
        t = induced_ml_tree(f)
    if args.format == "ml":
        _emit(t.canonical() + "\n", args.output)
    elif args.format == "merge":
        _emit(t.tree.canonical() + "\n", args.output)
    else:
        _emit(t.to_dot(), args.output)
    return 0


def cmd_realize(args) -> int:
    tree, _labels = parse_merge_tree(_read(args.tree))
    if args.order == "index":
        _, f = build_index_ordered_dmf(tree)
    elif args.order == "sublevel":
        _, f = build_sublevel_connected_dmf(tree)
    else:
        if args.trace:
            _emit(format_trace(step_by_step_trace(tree)), None)
        _, f = step_by_step_dmf(tree)
    _emit(format_dmf_text(f), args.output)
    return 0


def cmd_equiv(args) -> int:
    f = parse_dmf_text(_read(args.a))
    g = parse_dmf_text(_read(args.b))
    if args.relation == "shuffle":
        ok, witness = shuffle_equivalent(f, g)
    elif args.relation == "symmetry":
        ok, witness = symmetry_equivalent(f, g, want_witness=args.witness)
    else:
        ok, witness = cm_equivalent(f, g, want_witness=args.witness)
    print("equivalent" if ok else "not equivalent")
    if ok and args.witness and witness is not None:
        sys.stdout.write(witness.format())
    return 0 if ok else 1


def cmd_cm_to_path(args) -> int:
    f = parse_dmf_text(_read(args.dmf))
    _, g = cm_to_path(f)
    _emit(format_dmf_text(g), args.output)
    return 0


def cmd_pl(args) -> int:
    if args.direction == "to":
        f = parse_dmf_text(_read(args.file))
        _emit(format_pl_file(dmf_to_pl(f)), args.output)
    else:
        pl = parse_pl_file(_read(args.file))
        _, f = pl_to_dmf(pl)
        _emit(format_dmf_text(f), args.output)
    return 0


def cmd_selftest(args) -> int:
    report = verify_theorems(max_leaves=args.max_leaves, max_vertices=args.max_vertices)
    sys.stdout.write(report.format(color=_color_enabled()))
    return 0 if report.ok() else 1


def cmd_export_dot(args) -> int:
    text = _read(args.obj)
    try:
        tree, labels = parse_merge_tree(text)
        _emit(tree.to_dot(labels), args.output)
        return 0
    except TreeError:
        pass
    f = parse_dmf_text(text)
    _emit(induced_ml_tree(f).to_dot(), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="morsemerge",
        description="Discrete Morse functions on paths/trees and their merge trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the three dMf conditions")
    p.add_argument("dmf")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("induce", help="induced (C)Ml tree of a dMf")
    p.add_argument("dmf")
    p.add_argument("--curry", action="store_true", help="orientation chirality instead of the elder rule")
    p.add_argument("--format", choices=("ml", "merge", "dot"), default="ml")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_induce)

    p = sub.add_parser("realize", help="dMf on a path inducing a given merge tree")
    p.add_argument("tree")
    p.add_argument("--order", choices=("index", "sublevel", "step"), required=True)
    p.add_argument("--trace", action="store_true", help="print the step-by-step audit log")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("equiv", help="decide an equivalence between two dMfs")
    p.add_argument("--relation", choices=("shuffle", "symmetry", "cm"), required=True)
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("cm-to-path", help="cm-equivalent dMf on a path")
    p.add_argument("dmf")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_cm_to_path)

    p = sub.add_parser("pl", help="convert between path dMfs and PL functions")
    p.add_argument("direction", choices=("to", "from"))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_pl)

    p = sub.add_parser("selftest", help="exhaustive desk-scale theorem verification")
    p.add_argument("--max-leaves", type=int, default=7)
    p.add_argument("--max-vertices", type=int, default=5)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("export-dot", help="DOT export of a merge-tree or dMf file")
    p.add_argument("obj")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_export_dot)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
