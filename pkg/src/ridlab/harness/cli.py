"""Command-line entry point: ``ridlab solve|check|gen|reduce|enumerate``.

Data goes to stdout, diagnostics to stderr. Exit codes: 0 success (or a
passing sweep), 1 a sweep with counterexamples, 2 bad arguments or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Callable, Iterable, TextIO

from ..families import (
    FamilyInstance,
    build_J,
    build_T4k,
    realizability_tree,
    reduction_gadget,
    terminal_family,
    windmill,
    windmill_minus,
)
from ..graphs import Graph, Graph6Error, enumerate_connected, enumerate_trees, from_graph6, is_tree, to_graph6
from ..graphs.enumerate import MAX_CONNECTED_ORDER, MAX_TREE_ORDER
from ..solvers import (
    domination_number,
    restrained_domination_number,
    rid_number_exact,
    rid_number_tree_dp,
    rrd_number,
)
from ..verify import labeling_to_str
from .checks import SWEEPS, check


class UsageError(Exception):
    """Malformed input or arguments; reported with exit status 2."""


def _read_graphs(path: str) -> list[tuple[int, Graph]]:
    """Parse graph6 lines from a file or '-' (stdin). Blank lines are skipped;
    each graph keeps its 1-based line number for diagnostics."""
    try:
        if path == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(path, encoding="ascii") as fh:
                lines = fh.read().splitlines()
    except (OSError, UnicodeDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    graphs = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            graphs.append((lineno, from_graph6(line.strip())))
        except Graph6Error as exc:
            raise UsageError(f"{path}:{lineno}: {exc}") from exc
    if not graphs:
        raise UsageError(f"{path}: no graphs found")
    return graphs


def _emit(records: Iterable[dict[str, Any]], fmt: str, out: TextIO) -> None:
    for rec in records:
        if fmt == "json":
            out.write(json.dumps(rec, sort_keys=False) + "\n")
        else:
            out.write(" ".join(f"{k}={v}" for k, v in rec.items()) + "\n")


# solve


def _solve_one(g: Graph, args: argparse.Namespace) -> dict[str, Any]:
    if args.tree_dp:
        if not is_tree(g):
            raise UsageError(f"--tree-dp given but {to_graph6(g)} is not a tree")
        res = rid_number_tree_dp(g)
    else:
        res = rid_number_exact(g)
    rec: dict[str, Any] = {
        "graph6": to_graph6(g),
        "n": g.n,
        "m": g.m,
        "gamma_rI": res.value,
        "witness": labeling_to_str(res.witness),
    }
    if args.gamma:
        rec["gamma"] = domination_number(g).value
    if args.gamma_r:
        rec["gamma_r"] = restrained_domination_number(g).value
    if args.gamma_rR:
        rec["gamma_rR"] = rrd_number(g).value
    return rec


def cmd_solve(args: argparse.Namespace) -> int:
    graphs = _read_graphs(args.input)
    _emit((_solve_one(g, args) for _, g in graphs), args.format, sys.stdout)
    return 0


# check


def cmd_check(args: argparse.Namespace) -> int:
    try:
        report = check(args.theorem, args.max_n, args.jobs)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        json.dump(report.to_json(), sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        lo, hi = report.orders_checked
        status = "PASS" if report.passed else "FAIL"
        print(f"{status} {report.theorem} n={lo}..{hi} instances={report.instances_checked} "
              f"counterexamples={report.counterexample_count} ({report.elapsed:.1f}s)")
        for g6, exp, act in report.counterexamples:
            print(f"  {g6}\texpected {exp}\tgot {act}")
    return 0 if report.passed else 1


# gen


def _parse_params(items: list[str]) -> dict[str, str]:
    params = {}
    for item in items:
        for part in item.split(","):
            if not part:
                continue
            key, sep, value = part.partition("=")
            if not sep or not key:
                raise UsageError(f"bad parameter {part!r}; expected KEY=VALUE")
            params[key.strip()] = value.strip()
    return params


def _int_param(params: dict[str, str], key: str) -> int:
    if key not in params:
        raise UsageError(f"missing parameter {key}")
    try:
        return int(params[key])
    except ValueError as exc:
        raise UsageError(f"parameter {key} must be an integer, got {params[key]!r}") from exc


def _terminal(params: dict[str, str]) -> list[FamilyInstance]:
    n = _int_param(params, "n")
    return [FamilyInstance("TERMINAL", {"n": n}, g, n) for g in terminal_family(n)]


FAMILIES: dict[str, tuple[tuple[str, ...], Callable[[dict[str, str]], list[FamilyInstance]]]] = {
    "T4k": (("k",), lambda p: [build_T4k(_int_param(p, "k"))]),
    "J": (("tag",), lambda p: [build_J(p.get("tag", ""))]),
    "TERMINAL": (("n",), _terminal),
    "REALIZE": (("a", "b"), lambda p: [realizability_tree(_int_param(p, "a"), _int_param(p, "b"))]),
    "WINDMILL": (("k",), lambda p: [windmill(_int_param(p, "k"))]),
    "WINDMILL_MINUS": (("k",), lambda p: [windmill_minus(_int_param(p, "k"))]),
}


def cmd_gen(args: argparse.Namespace) -> int:
    family = args.family
    if family.startswith("J/"):  # J/T3 shorthand
        family, tag = "J", family[2:]
        params = {"tag": tag, **_parse_params(args.params)}
    else:
        params = _parse_params(args.params)
    if family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; known: {', '.join(FAMILIES)}")
    expected, build = FAMILIES[family]
    unknown = set(params) - set(expected)
    if unknown:
        raise UsageError(f"family {family} takes {', '.join(expected)}; unexpected {', '.join(sorted(unknown))}")
    try:
        instances = build(params)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    sidecars = []
    for inst in instances:
        g6 = to_graph6(inst.graph)
        side = {"graph6": g6, **inst.sidecar()}
        sidecars.append(side)
        if args.format == "json":
            print(json.dumps(side))
        else:
            print(g6)
    if args.sidecar:
        payload = sidecars[0] if len(sidecars) == 1 else sidecars
        try:
            with open(args.sidecar, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write sidecar {args.sidecar}: {exc}") from exc
    elif args.format != "json":
        for side in sidecars:
            print(json.dumps(side), file=sys.stderr)
    return 0


# reduce


def cmd_reduce(args: argparse.Namespace) -> int:
    for _, g in _read_graphs(args.input):
        gadget = reduction_gadget(g)
        rec: dict[str, Any] = {"graph6": to_graph6(g), "gadget": to_graph6(gadget), "n": g.n, "gadget_n": gadget.n}
        if args.verify:
            gamma = domination_number(g).value
            target = 5 * g.n + gamma
            value = rid_number_exact(gadget).value
            rec.update(gamma=gamma, expected=target, gamma_rI=value, holds=value == target)
        if args.format == "json":
            print(json.dumps(rec))
        elif args.verify:
            print(f"{rec['gadget']}\tgamma={rec['gamma']} expected={rec['expected']} "
                  f"gamma_rI={rec['gamma_rI']} {'OK' if rec['holds'] else 'MISMATCH'}")
        else:
            print(rec["gadget"])
    return 0


# enumerate


def cmd_enumerate(args: argparse.Namespace) -> int:
    limit = MAX_TREE_ORDER if args.cls == "trees" else MAX_CONNECTED_ORDER
    if not 1 <= args.n <= limit:
        raise UsageError(f"--n for {args.cls} must be in 1..{limit}, got {args.n}")
    gen = enumerate_trees if args.cls == "trees" else enumerate_connected
    out = sys.stdout
    for g in gen(args.n):
        out.write(to_graph6(g) + "\n")
    return 0


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep that
        self.print_usage(sys.stderr)
        self.exit(2, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ridlab", description="Exact restrained Italian domination lab.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("solve", help="solve graph6 graphs")
    s.add_argument("--in", dest="input", required=True, help="graph6 file, or - for stdin")
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--tree-dp", action="store_true", help="use the linear tree DP (input must be trees)")
    s.add_argument("--gamma", action="store_true", help="also report the domination number")
    s.add_argument("--gamma-r", action="store_true", help="also report the restrained domination number")
    s.add_argument("--gamma-rR", dest="gamma_rR", action="store_true",
                   help="also report the restrained Roman domination number")
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check", help="sweep a claim over enumerated graphs")
    c.add_argument("--theorem", required=True, choices=sorted(SWEEPS))
    c.add_argument("--max-n", type=int, required=True)
    c.add_argument("--jobs", type=int, default=None, help="worker processes (default: $RID_LAB_JOBS or 1)")
    c.add_argument("--format", choices=("text", "json"), default="json")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="build a named family member")
    g.add_argument("--family", required=True, help=f"one of {', '.join(FAMILIES)} (J/T1..J/T5 accepted)")
    g.add_argument("--params", nargs="*", default=[], help="KEY=VALUE pairs, e.g. k=2")
    g.add_argument("--sidecar", help="write the JSON sidecar here instead of stderr")
    g.add_argument("--format", choices=("text", "json"), default="text")
    g.set_defaults(func=cmd_gen)

    r = sub.add_parser("reduce", help="build the dominating-set reduction gadget")
    r.add_argument("--in", dest="input", required=True)
    r.add_argument("--verify", action="store_true", help="solve the gadget and check the identity")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_reduce)

    e = sub.add_parser("enumerate", help="stream non-isomorphic graphs as graph6")
    e.add_argument("--class", dest="cls", choices=("trees", "connected"), required=True)
    e.add_argument("--n", type=int, required=True)
    e.set_defaults(func=cmd_enumerate)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"ridlab {args.command}: {exc}", file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
