"""Isomorph-free enumeration of free trees and connected graphs."""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .canon import canonical_labeling
from .core import Graph

MAX_TREE_ORDER = 16
MAX_CONNECTED_ORDER = 8


def _levels_to_graph(levels: list[int]) -> Graph:
    edges = []
    stack: list[int] = []
    for i, level in enumerate(levels):
        while stack and levels[stack[-1]] >= level:
            stack.pop()
        if stack:
            edges.append((stack[-1], i))
        stack.append(i)
    return Graph.from_edges(len(levels), edges)


def _next_rooted(levels: list[int], p: int | None = None) -> list[int] | None:
    # Beyer-Hedetniemi successor on canonical level sequences.
    if p is None:
        p = len(levels) - 1
        while levels[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while levels[q] != levels[p] - 1:
        q -= 1
    out = list(levels)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(levels: list[int]) -> tuple[list[int], list[int]]:
    """Split off the first subtree of the root: (that subtree, the remainder)."""
    second = next((i for i in range(2, len(levels)) if levels[i] == 1), len(levels))
    left = [x - 1 for x in levels[1:second]]
    rest = [0] + levels[second:]
    return left, rest


def _next_free(levels: list[int]) -> list[int] | None:
    # Wright-Richmond-Odlyzko-McKay: skip rooted sequences that are not the
    # centroid-rooted canonical representative of their free tree.
    left, rest = _split(levels)
    lh, rh = max(left), max(rest)
    ok = rh >= lh
    if ok and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            ok = False
    if ok:
        return levels
    p = len(left)
    nxt = _next_rooted(levels, p)
    if nxt is not None and levels[p] > 2:
        new_left, _ = _split(nxt)
        tail = list(range(1, max(new_left) + 2))
        nxt[-len(tail):] = tail
    return nxt


def enumerate_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class on ``n`` vertices, in a fixed order.

    Vertices are numbered in preorder of the level sequence, so vertex 0 is a
    central vertex.
    """
    if not 1 <= n <= MAX_TREE_ORDER:
        raise ValueError(f"tree order must be in 1..{MAX_TREE_ORDER}, got {n}")
    if n == 1:
        yield Graph(1, (0,))
        return
    levels: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while levels is not None:
        levels = _next_free(levels)
        if levels is None:
            return
        yield _levels_to_graph(levels)
        levels = _next_rooted(levels)


@lru_cache(maxsize=None)
def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, (0,)),)
    # Every connected graph has a non-cut vertex, so each class on n vertices
    # arises from a class on n-1 vertices plus a vertex with nonempty neighborhood.
    seen: dict[int, Graph] = {}
    for parent in _connected_classes(n - 1):
        base = list(parent.adj) + [0]
        new = n - 1
        for nbrs in range(1, 1 << new):
            rows = list(base)
            rows[new] = nbrs
            m = nbrs
            while m:
                low = m & -m
                rows[low.bit_length() - 1] |= 1 << new
                m ^= low
            g = Graph(n, tuple(rows))
            code, order = canonical_labeling(g)
            if code not in seen:
                seen[code] = g.relabel(order)
    return tuple(seen[code] for code in sorted(seen))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class on ``n`` vertices, each in its
    canonical labeling, ordered by canonical code."""
    if not 1 <= n <= MAX_CONNECTED_ORDER:
        raise ValueError(f"connected-graph order must be in 1..{MAX_CONNECTED_ORDER}, got {n}")
    yield from _connected_classes(n)
