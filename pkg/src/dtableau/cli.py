"""Command-line entry point: ``dtableau <subcommand> [flags]``."""

from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict

from .cycles import make_special
from .gtau import PiStarSequence, apply_sequence, cl, coset, gtd_partition
from .insertion import TableauPair, rs_map
from .operators import TEMPLATES, tau_pair, template_name
from .signed_perms import DomainError, SignedPermutation, all_signed_perms, delta, root_name
from .tableaux import (
    DominoTableau,
    TableauError,
    format_shape,
    format_tableau,
    parse_tableau,
    render,
)
from .verify import DEFAULT_MAX_RANK, SUITES, dump_json, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ----------------------------------------------------------------- inputs

def _read_blocks(path: str) -> list[DominoTableau]:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    blocks, current = [], []
    for line in text.splitlines():
        if line.strip():
            current.append(line)
        elif current:
            blocks.append("\n".join(current))
            current = []
    if current:
        blocks.append("\n".join(current))
    return [parse_tableau(b) for b in blocks]


def _load_pair(args) -> TableauPair:
    if args.perm is not None:
        return rs_map(delta(SignedPermutation.parse(args.perm)))
    if args.pair_file is not None:
        blocks = _read_blocks(args.pair_file)
        if len(blocks) != 2:
            raise UsageError(f"pair file needs two tableau blocks, found {len(blocks)}")
        return TableauPair(*blocks)
    raise UsageError("give --perm or --pair-file")


def _check_rank(args) -> int:
    if args.rank < 1:
        raise UsageError("rank must be positive")
    if args.rank > args.max_rank:
        raise UsageError(f"rank {args.rank} exceeds the budget {args.max_rank}; "
                         "raise it with --max-rank")
    if args.max_rank > DEFAULT_MAX_RANK:
        print(f"warning: rank budget raised to {args.max_rank}", file=sys.stderr)
    return args.rank


# ----------------------------------------------------------------- output

def _roots(rs) -> list[str]:
    return [root_name(r) for r in sorted(rs)]


def _pair_dict(p: TableauPair) -> dict:
    return {
        "left": [list(map(list, pos)) for _, pos in p.left.items()],
        "right": [list(map(list, pos)) for _, pos in p.right.items()],
        "shape": list(p.shape),
        "class": "T'" if p.parity == 0 else "T''",
        "tau_left": _roots(tau_pair("L", p)),
        "tau_right": _roots(tau_pair("R", p)),
    }


def _pair_text(p: TableauPair) -> str:
    d = _pair_dict(p)
    return "\n".join([
        "L:", render(p.left), "R:", render(p.right),
        f"shape: {format_shape(p.shape)}",
        f"class: {d['class']}",
        f"tau_L: {{{', '.join(d['tau_left'])}}}",
        f"tau_R: {{{', '.join(d['tau_right'])}}}",
    ])


def _emit(args, text: str, data) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


# ----------------------------------------------------------------- commands

def cmd_map(args) -> int:
    p = _load_pair(args)
    _emit(args, _pair_text(p), _pair_dict(p))
    return EXIT_OK


def cmd_tau(args) -> int:
    p = _load_pair(args)
    data = {"tau_left": _roots(tau_pair("L", p)), "tau_right": _roots(tau_pair("R", p))}
    text = f"tau_L: {' '.join(data['tau_left'])}\ntau_R: {' '.join(data['tau_right'])}"
    _emit(args, text, data)
    return EXIT_OK


def _parse_ops(text: str, default_side: str) -> list[tuple[str, PiStarSequence]]:
    """``a1p,a3:L;a2,C:R`` -> runs of steps sharing a side."""
    runs: list[tuple[str, PiStarSequence]] = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        body, _, side = chunk.partition(":")
        side = (side or default_side).upper()
        if side not in ("L", "R"):
            raise UsageError(f"side must be L or R in {chunk!r}")
        step = PiStarSequence.parse(body).steps
        if runs and runs[-1][0] == side:
            runs[-1] = (side, PiStarSequence(runs[-1][1].steps + step))
        else:
            runs.append((side, PiStarSequence(step)))
    if not runs:
        raise UsageError("no operator given")
    return runs


def cmd_apply(args) -> int:
    p = _load_pair(args)
    try:
        runs = _parse_ops(args.op, args.side)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    current = {p}
    for side, seq in runs:
        current = {q for x in current for q in apply_sequence(side, seq, x)}
    if not current:
        print(f"operator {args.op} does not apply to this pair", file=sys.stderr)
        return EXIT_FAIL
    out = sorted(current)
    _emit(args, "\n\n".join(_pair_text(q) for q in out), [_pair_dict(q) for q in out])
    return EXIT_OK


def cmd_normalize(args) -> int:
    if args.perm is not None:
        p = _load_pair(args)
        tabs = [p.left, p.right]
    elif args.pair_file is not None:
        tabs = _read_blocks(args.pair_file)
    else:
        raise UsageError("give --perm or --pair-file")
    out = [make_special(t) for t in tabs]
    text = "\n\n".join(f"{render(t)}\nshape: {format_shape(t.shape)}" for t in out)
    _emit(args, text, [{"placement": format_tableau(t).splitlines(),
                        "shape": list(t.shape)} for t in out])
    return EXIT_OK


def cmd_cells(args) -> int:
    n = _check_rank(args)
    table: dict[str, dict[DominoTableau, list[str]]] = {"W'": defaultdict(list),
                                                        "W''": defaultdict(list)}
    for w in all_signed_perms(n):
        table[coset(w)][cl(w)].append(str(w))
    lines, data = [], {}
    for name in ("W'", "W''"):
        lines.append(f"coset {name}: {len(table[name])} classes")
        data[name] = []
        for t in sorted(table[name]):
            members = sorted(table[name][t])
            lines.append(f"  {format_shape(t.shape)} [{format_tableau(t).replace(chr(10), ' | ')}]"
                         f" <- {len(members)}: {', '.join(members)}")
            data[name].append({"special": format_tableau(t).splitlines(), "members": members})
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_gtd_classes(args) -> int:
    n = _check_rank(args)
    part = gtd_partition(n, args.side)
    lines = [f"rank {n}: {len(part)} classes after {part.generation} refinement rounds"]
    data = []
    for i, block in enumerate(part.blocks):
        rep = make_special(min(block).left if args.side == "L" else min(block).right)
        lines.append(f"  class {i}: {len(block)} pairs, special {format_shape(rep.shape)} "
                     f"[{format_tableau(rep).replace(chr(10), ' | ')}]")
        data.append({"size": len(block), "special": format_tableau(rep).splitlines()})
    _emit(args, "\n".join(lines), data)
    return EXIT_OK


def cmd_verify(args) -> int:
    n = _check_rank(args)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from all, {', '.join(SUITES)}")
    results = run_suite(args.suite, n)
    if args.format == "json":
        print(dump_json(results))
    else:
        for r in results:
            print(r.line())
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def cmd_render(args) -> int:
    if args.template is not None:
        by_name = {template_name(k, b, j): t for (k, b, j), t in TEMPLATES.items()}
        if args.template not in by_name:
            raise UsageError(f"unknown template {args.template!r}")
        tabs = [by_name[args.template]]
    elif args.pair_file is not None:
        tabs = _read_blocks(args.pair_file)
    elif args.perm is not None:
        p = _load_pair(args)
        tabs = [p.left, p.right]
    else:
        raise UsageError("give --template, --perm or --pair-file")
    _emit(args, "\n\n".join(render(t) for t in tabs),
          [render(t).splitlines() for t in tabs])
    return EXIT_OK


# ----------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dtableau",
                                     description="Type D domino tableaux toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, pair=True, rank=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        if pair:
            p.add_argument("--perm", help="signed permutation window, e.g. '2 -1 3'")
            p.add_argument("--pair-file", help="two tableau blocks of 'k r1 c1 r2 c2' lines")
        if rank:
            p.add_argument("--rank", type=int, required=True)
            p.add_argument("--max-rank", type=int, default=DEFAULT_MAX_RANK)

    common(sub.add_parser("map", help="domino insertion of a signed permutation"))
    common(sub.add_parser("tau", help="left and right descents of a pair"))
    p = sub.add_parser("apply", help="apply operators such as 'a1p,a3:L' or 'a2,C'")
    common(p)
    p.add_argument("--op", required=True)
    p.add_argument("--side", choices=("L", "R"), default="L")
    common(sub.add_parser("normalize", help="move tableaux to special shape"))
    common(sub.add_parser("cells", help="classes of cl per coset"), pair=False, rank=True)
    p = sub.add_parser("gtd-classes", help="generalized tau-invariant classes")
    common(p, pair=False, rank=True)
    p.add_argument("--side", choices=("L", "R"), default="L")
    p = sub.add_parser("verify", help="run verification suites")
    common(p, pair=False, rank=True)
    p.add_argument("--suite", default="all")
    p = sub.add_parser("render", help="ASCII drawing of tableaux")
    common(p)
    p.add_argument("--template", help="a rank-4 template such as C^1 or B_1^2")
    return parser


COMMANDS = {
    "map": cmd_map, "tau": cmd_tau, "apply": cmd_apply, "normalize": cmd_normalize,
    "cells": cmd_cells, "gtd-classes": cmd_gtd_classes, "verify": cmd_verify,
    "render": cmd_render,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, TableauError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        if isinstance(exc, DomainError):
            print(f"domain error: {exc}", file=sys.stderr)
            return EXIT_FAIL
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
