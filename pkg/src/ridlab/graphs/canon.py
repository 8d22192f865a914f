"""Canonical forms by color refinement plus individualization backtracking.

Adequate for the small orders used here (n <= 16). Twin vertices in the
branching cell are interchangeable, so only one per twin class is tried;
that keeps complete and complete-bipartite graphs from exploding.
"""

from __future__ import annotations

from .core import Graph

MAX_ORDER = 16


def _refine(adj: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = []
        for cell in cells:
            mask = 0
            for v in cell:
                mask |= 1 << v
            masks.append(mask)
        out: list[list[int]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                row = adj[v]
                sig = tuple((row & mask).bit_count() for mask in masks)
                groups.setdefault(sig, []).append(v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[sig] for sig in sorted(groups))
            else:
                out.append(cell)
        if not changed:
            return out
        cells = out


def _code(adj: tuple[int, ...], order: list[int]) -> int:
    code = 0
    n = len(order)
    for j in range(1, n):
        row = adj[order[j]]
        for i in range(j):
            code = code << 1 | (row >> order[i] & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, order)`` where ``order`` lists the vertices in canonical
    position and ``code`` is the upper-triangle adjacency bit string under it.
    Two graphs of equal order are isomorphic iff their codes are equal."""
    if g.n > MAX_ORDER:
        raise ValueError(f"canonical form supports n <= {MAX_ORDER}, got n={g.n}")
    adj = g.adj
    if g.n == 0:
        return 0, []
    # Seed with degree classes so refinement starts from a useful partition.
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = [by_degree[d] for d in sorted(by_degree)]

    best: list = [None, None]

    def search(cells: list[list[int]]) -> None:
        cells = _refine(adj, cells)
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(adj, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        cell = cells[target]
        reps: list[int] = []
        for v in cell:
            if any(adj[v] & ~(1 << r) == adj[r] & ~(1 << v) for r in reps):
                continue
            reps.append(v)
            rest = [u for u in cell if u != v]
            search(cells[:target] + [[v], rest] + cells[target + 1:])

    search(start)
    return best[0], best[1]


def canonical_form(g: Graph) -> tuple[int, int]:
    """Hashable isomorphism-class key ``(n, code)``."""
    return g.n, canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabeling of ``g``."""
    return g.relabel(canonical_labeling(g)[1])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n > MAX_ORDER or h.n > MAX_ORDER:
        raise ValueError(f"is_isomorphic supports n <= {MAX_ORDER}")
    if g.n != h.n or g.m != h.m or sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
