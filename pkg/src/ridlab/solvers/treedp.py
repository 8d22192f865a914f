"""Linear-time restrained Italian domination on trees.

Root the tree; for every vertex keep the cheapest labeling of its subtree for
each of eight states:

    0: label 1
    1: label 2
    2 + 2*owed + needs_zero_parent: label 0, where ``owed`` in {0, 1, 2} is the
       coverage still missing after the children (the parent's label must be
       at least this) and ``needs_zero_parent`` says no child is labeled 0,
       so the parent must be.

A 0-state with owed > 0 and needs_zero_parent set cannot be completed by any
parent; it is kept only to make the table total.
"""

from __future__ import annotations

from ..graphs.core import Graph, is_tree, iter_bits
from .search import SolveResult

INF = float("inf")
NSTATES = 8


def state_label(s: int) -> int:
    return 1 if s == 0 else 2 if s == 1 else 0


def zero_state(owed: int, needs_zero_parent: bool) -> int:
    return 2 + 2 * owed + int(needs_zero_parent)


def _unpack(s: int) -> tuple[int, bool]:
    return (s - 2) // 2, bool((s - 2) % 2)


def fits_under(s: int, parent_label: int) -> bool:
    """Whether a child in state ``s`` is satisfied by a parent with this label."""
    if s < 2:
        return True
    owed, nzp = _unpack(s)
    if nzp and parent_label != 0:
        return False
    return parent_label >= owed


ROOT_STATES = (0, 1, zero_state(0, False))


def rid_number_tree_dp(t: Graph, root: int = 0) -> SolveResult:
    if not is_tree(t):
        raise ValueError("rid_number_tree_dp requires a tree")
    n = t.n
    if n == 1:
        return SolveResult(1, (1,), 1)

    parent = [-1] * n
    order = [root]
    seen = 1 << root
    for v in order:
        for u in iter_bits(t.adj[v] & ~seen):
            parent[u] = v
            seen |= 1 << u
            order.append(u)
    children: list[list[int]] = [[] for _ in range(n)]
    for v in order[1:]:
        children[parent[v]].append(v)

    cost = [[INF] * NSTATES for _ in range(n)]
    # For labels 1 and 2: the chosen state of each child.
    pick: list[dict[int, list[int]]] = [{} for _ in range(n)]
    # For label 0: per child step, back-pointers (cov, hz) -> (prev key, child state).
    zero_steps: list[list[dict[tuple[int, int], tuple[tuple[int, int], int]]]] = [[] for _ in range(n)]

    for v in reversed(order):
        for label in (1, 2):
            total = label
            chosen = []
            for c in children[v]:
                best_s = min(
                    (s for s in range(NSTATES) if fits_under(s, label)),
                    key=lambda s: (cost[c][s], s),
                )
                total += cost[c][best_s]
                chosen.append(best_s)
            cost[v][label - 1] = total
            pick[v][label] = chosen

        acc = {(0, 0): 0.0}
        steps = []
        for c in children[v]:
            nxt: dict[tuple[int, int], float] = {}
            back: dict[tuple[int, int], tuple[tuple[int, int], int]] = {}
            for s in range(NSTATES):
                if not fits_under(s, 0) or cost[c][s] == INF:
                    continue
                lab = state_label(s)
                for (cov, hz), val in sorted(acc.items()):
                    key = (min(2, cov + lab), hz | (lab == 0))
                    total = val + cost[c][s]
                    if total < nxt.get(key, INF):
                        nxt[key] = total
                        back[key] = ((cov, hz), s)
            acc = nxt
            steps.append(back)
        zero_steps[v] = steps
        for (cov, hz), val in acc.items():
            cost[v][zero_state(2 - cov, not hz)] = val

    root_state = min(ROOT_STATES, key=lambda s: (cost[root][s], s))
    value = cost[root][root_state]
    if value == INF:
        raise AssertionError("tree has no restrained Italian labeling")  # all-ones always works

    labels = [0] * n
    state = [0] * n
    state[root] = root_state
    for v in order:
        s = state[v]
        labels[v] = state_label(s)
        kids = children[v]
        if s < 2:
            for c, cs in zip(kids, pick[v][labels[v]]):
                state[c] = cs
        else:
            owed, nzp = _unpack(s)
            key = (2 - owed, int(not nzp))
            for idx in range(len(kids) - 1, -1, -1):
                key, cs = zero_steps[v][idx][key]
                state[kids[idx]] = cs
    return SolveResult(int(value), tuple(labels), n * NSTATES)
