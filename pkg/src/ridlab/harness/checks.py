"""Exhaustive sweeps that compare solver output against each claimed result."""

from __future__ import annotations

import multiprocessing
import os
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterator

from ..families import (
    J_members,
    gadget_certificate,
    is_in_omega,
    is_in_psi,
    is_in_theta,
    is_member,
    lemma1_conditions,
    n_minus_one_listed,
    predicted_rid_three,
    predicted_rid_two,
    reduction_gadget,
    terminal_family,
)
from ..graphs import (
    Graph,
    double_star,
    enumerate_connected,
    enumerate_trees,
    is_isomorphic,
    to_graph6,
)
from ..graphs.enumerate import MAX_CONNECTED_ORDER, MAX_TREE_ORDER
from ..solvers import (
    domination_number,
    eta_bound,
    restrained_domination_number,
    rid_number_exact,
    rid_number_tree_dp,
    rrd_number,
)

SCHEMA = "rid-lab/1"
MAX_LISTED = 100
JOBS_ENV = "RID_LAB_JOBS"

Mismatch = tuple[str, str]  # (expected, actual)

_S22 = double_star(2, 2)


@dataclass
class CheckReport:
    theorem: str
    orders_checked: tuple[int, int]
    instances_checked: int
    counterexamples: list[tuple[str, str, str]]
    counterexample_count: int
    elapsed: float
    details: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.counterexample_count == 0

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "theorem": self.theorem,
            "orders_checked": list(self.orders_checked),
            "instances_checked": self.instances_checked,
            "passed": self.passed,
            "counterexample_count": self.counterexample_count,
            "counterexamples": [
                {"graph6": g6, "expected": exp, "actual": act}
                for g6, exp, act in self.counterexamples
            ],
            "elapsed_seconds": round(self.elapsed, 3),
            "details": self.details,
        }


# Per-graph checks. Each returns the mismatches found on one graph, plus an
# optional tag that is tallied into the report details.


def _tree_value(g: Graph) -> int:
    return rid_number_tree_dp(g).value


def _tree_lower_bound(g: Graph):
    if is_isomorphic(g, _S22):
        return [], "exempt"
    v = _tree_value(g)
    if 2 * v < g.n + 3:
        return [(f"2*gamma_rI >= {g.n + 3}", f"2*gamma_rI = {2 * v}")], None
    return [], None


def _tree_extremal(g: Graph):
    v = _tree_value(g)
    extremal = 2 * v == g.n + 3
    predicted = is_member(g, [inst.graph for inst in J_members(g.n)])
    if extremal != predicted:
        return [(f"extremal={predicted}", f"extremal={extremal} (gamma_rI={v})")], None
    return [], "extremal" if extremal else None


def _sandwich(g: Graph):
    rid = rid_number_exact(g).value
    gr = restrained_domination_number(g).value
    gd = domination_number(g).value
    rrd = rrd_number(g).value
    out = []
    if not gr <= rid <= 2 * gr:
        out.append((f"{gr} <= gamma_rI <= {2 * gr}", f"gamma_rI = {rid}"))
    if gd > gr:
        out.append(("gamma <= gamma_r", f"gamma = {gd}, gamma_r = {gr}"))
    if rid > rrd:
        out.append(("gamma_rI <= gamma_rR", f"gamma_rI = {rid}, gamma_rR = {rrd}"))
    tag = "lower-tight" if rid == gr else "upper-tight" if rid == 2 * gr else None
    return out, tag


def _eta(g: Graph):
    rid = rid_number_exact(g).value
    eta = eta_bound(g)
    if Fraction(rid) < eta:
        return [(f"gamma_rI >= {eta}", f"gamma_rI = {rid}")], None
    return [], "tight" if Fraction(rid) == eta else None


def _rid_eq(value: int, predicate: Callable[[Graph], bool]):
    def check(g: Graph):
        rid = rid_number_exact(g).value
        predicted = predicate(g)
        if (rid == value) != predicted:
            note = "mismatch-in-omega" if g.n >= 3 and is_in_omega(g) else "mismatch"
            return [(f"member={predicted}", f"gamma_rI = {rid}")], note
        return [], "member" if predicted else None

    return check


def _rid_eq_3_omega_excluded(g: Graph) -> bool:
    if g.n < 3:
        return False
    if g.n == 3 and g.m == 2:
        return True
    return (is_in_psi(g) or is_in_theta(g)) and not is_in_omega(g)


def _rid_eq_n(g: Graph):
    rid = rid_number_exact(g).value
    predicted = is_member(g, terminal_family(g.n))
    if (rid == g.n) != predicted:
        return [(f"gamma_rI == n is {predicted}", f"gamma_rI = {rid}, n = {g.n}")], None
    return [], "member" if predicted else None


def _discovery(g: Graph):
    rid = rid_number_exact(g).value
    out = []
    discovered = rid == g.n - 1
    if discovered:
        conds = lemma1_conditions(g)
        if conds:
            out.append(("no lemma1 condition", f"conditions {sorted(conds)} hold"))
    if is_member(g, n_minus_one_listed(g.n)) and not discovered:
        out.append((f"gamma_rI = {g.n - 1} (listed member)", f"gamma_rI = {rid}"))
    return out, "discovered" if discovered else None


def _lemma1(g: Graph, tree: bool):
    conds = lemma1_conditions(g)
    if not conds:
        return [], None
    rid = _tree_value(g) if tree else rid_number_exact(g).value
    if rid > g.n - 2:
        return [(f"gamma_rI <= {g.n - 2} (conditions {sorted(conds)})", f"gamma_rI = {rid}")], None
    return [], "applies"


def _gadget(g: Graph):
    dom = domination_number(g)
    target = 5 * g.n + dom.value
    if g.n <= 3:
        rid = rid_number_exact(reduction_gadget(g)).value
        if rid != target:
            return [(f"gamma_rI(G') = {target}", f"gamma_rI(G') = {rid}")], "direct"
        return [], "direct"
    cert = gadget_certificate(g, dom.value, dom.witness)
    if not cert["holds"]:
        return [(f"certificate for {target}", repr(cert))], "certificate"
    return [], "certificate"


@dataclass(frozen=True)
class Sweep:
    description: str
    source: str  # "trees", "connected", or "both"
    min_n: int
    max_allowed: int


SWEEPS: dict[str, Sweep] = {
    "tree-lower-bound": Sweep("2*gamma_rI(T) >= n+3 for trees other than S_{2,2}", "trees", 3, MAX_TREE_ORDER),
    "tree-extremal": Sweep("2*gamma_rI(T) == n+3 iff T is in the extremal family", "trees", 3, MAX_TREE_ORDER),
    "sandwich": Sweep("gamma_r <= gamma_rI <= 2 gamma_r, gamma <= gamma_r, gamma_rI <= gamma_rR", "connected", 1, MAX_CONNECTED_ORDER),
    "eta": Sweep("gamma_rI >= min{gamma_rR, n-2m/5, n-(2m-5)/3}", "connected", 3, MAX_CONNECTED_ORDER),
    "rid-eq-2": Sweep("gamma_rI == 2 iff Omega or P2", "connected", 2, MAX_CONNECTED_ORDER),
    "rid-eq-3": Sweep("gamma_rI == 3 iff Psi, Theta minus Omega, or P3", "connected", 1, MAX_CONNECTED_ORDER),
    "rid-eq-3-omega-excluded": Sweep("gamma_rI == 3 iff (Psi or Theta) minus Omega, or P3", "connected", 1, MAX_CONNECTED_ORDER),
    "rid-eq-n": Sweep("gamma_rI == n iff terminal family", "connected", 1, MAX_CONNECTED_ORDER),
    "rid-eq-n-minus-1-discovery": Sweep("gamma_rI == n-1 graphs avoid all lemma1 conditions; listed members present", "connected", 1, MAX_CONNECTED_ORDER),
    "lemma1": Sweep("any lemma1 condition forces gamma_rI <= n-2", "both", 1, MAX_TREE_ORDER),
    "gadget": Sweep("gamma_rI(G') == 5n + gamma(G)", "connected", 1, 6),
}


def _graph_check(tag: str, kind: str) -> Callable[[Graph], tuple[list[Mismatch], str | None]]:
    if tag == "tree-lower-bound":
        return _tree_lower_bound
    if tag == "tree-extremal":
        return _tree_extremal
    if tag == "sandwich":
        return _sandwich
    if tag == "eta":
        return _eta
    if tag == "rid-eq-2":
        return _rid_eq(2, predicted_rid_two)
    if tag == "rid-eq-3":
        return _rid_eq(3, predicted_rid_three)
    if tag == "rid-eq-3-omega-excluded":
        return _rid_eq(3, _rid_eq_3_omega_excluded)
    if tag == "rid-eq-n":
        return _rid_eq_n
    if tag == "rid-eq-n-minus-1-discovery":
        return _discovery
    if tag == "lemma1":
        return lambda g: _lemma1(g, kind == "trees")
    if tag == "gadget":
        return _gadget
    raise ValueError(f"unknown theorem tag {tag!r}")


def _instances(tag: str, max_n: int) -> Iterator[tuple[str, Graph]]:
    sweep = SWEEPS[tag]
    if sweep.source in ("trees", "both"):
        for n in range(sweep.min_n, max_n + 1):
            for g in enumerate_trees(n):
                yield "trees", g
    if sweep.source in ("connected", "both"):
        for n in range(sweep.min_n, min(max_n, MAX_CONNECTED_ORDER) + 1):
            for g in enumerate_connected(n):
                yield "connected", g


def _run_chunk(tag: str, items: list[tuple[str, Graph]]):
    found = []
    tally: dict[str, dict[int, int]] = {}
    for kind, g in items:
        mismatches, note = _graph_check(tag, kind)(g)
        g6 = to_graph6(g)
        found += [(g6, exp, act) for exp, act in mismatches]
        if note:
            per_n = tally.setdefault(note, {})
            per_n[g.n] = per_n.get(g.n, 0) + 1
    return found, tally


def resolve_jobs(jobs: int | None) -> int:
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV, "1"))
    if jobs < 1:
        raise ValueError(f"jobs must be >= 1, got {jobs}")
    return jobs


def check(theorem: str, max_n: int, jobs: int | None = None) -> CheckReport:
    """Sweep every enumerated graph relevant to ``theorem`` up to order
    ``max_n`` and report each violation of the claim."""
    if theorem not in SWEEPS:
        raise ValueError(f"unknown theorem tag {theorem!r}; known: {', '.join(SWEEPS)}")
    sweep = SWEEPS[theorem]
    if not sweep.min_n <= max_n <= sweep.max_allowed:
        raise ValueError(
            f"max_n for {theorem} must be in {sweep.min_n}..{sweep.max_allowed}, got {max_n}"
        )
    jobs = resolve_jobs(jobs)
    start = time.perf_counter()
    items = list(_instances(theorem, max_n))
    if jobs == 1:
        results = [_run_chunk(theorem, items)]
    else:
        chunks = [items[j::jobs] for j in range(jobs)]
        ctx = multiprocessing.get_context("spawn")
        with ctx.Pool(jobs) as pool:
            results = pool.starmap(_run_chunk, [(theorem, c) for c in chunks])
    found: list[tuple[str, str, str]] = []
    tally: dict[str, dict[int, int]] = {}
    for part, part_tally in results:
        found += part
        for note, per_n in part_tally.items():
            dest = tally.setdefault(note, {})
            for n, c in per_n.items():
                dest[n] = dest.get(n, 0) + c
    found.sort()
    details = {
        "claim": sweep.description,
        "counts": {note: {str(n): per_n[n] for n in sorted(per_n)} for note, per_n in sorted(tally.items())},
    }
    return CheckReport(
        theorem=theorem,
        orders_checked=(sweep.min_n, max_n),
        instances_checked=len(items),
        counterexamples=found[:MAX_LISTED],
        counterexample_count=len(found),
        elapsed=time.perf_counter() - start,
        details=details,
    )
