"""Shared oracles: deliberately naive implementations the library is checked against."""

from __future__ import annotations

import itertools

import networkx as nx
import pytest

from ridlab.graphs import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def naive_rid_ok(g: Graph, f) -> bool:
    """Restrained Italian check written directly from the definition."""
    for v in range(g.n):
        if f[v] != 0:
            continue
        nbrs = g.neighbors(v)
        if sum(f[u] for u in nbrs) < 2:
            return False
        if not any(f[u] == 0 for u in nbrs):
            return False
    return True


def brute_rid(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Minimum over all 3^n labelings; itertools.product runs in
    lexicographic order, so the first minimum found is the lex-first one."""
    best = None
    for f in itertools.product((0, 1, 2), repeat=g.n):
        if naive_rid_ok(g, f) and (best is None or sum(f) < best[0]):
            best = (sum(f), f)
    return best


def brute_sets(g: Graph, restrained: bool) -> int:
    for k in range(g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            inside = set(s)
            ok = True
            for v in range(g.n):
                if v in inside:
                    continue
                nbrs = set(g.neighbors(v))
                if not nbrs & inside or (restrained and not nbrs - inside):
                    ok = False
                    break
            if ok:
                return k
    raise AssertionError("V(G) is always a (restrained) dominating set")


def labeled_connected_classes(n: int) -> int:
    """Number of isomorphism classes of connected graphs on n vertices, by
    running networkx's isomorphism test over all labeled graphs."""
    pairs = list(itertools.combinations(range(n), 2))
    reps: dict[tuple, list[nx.Graph]] = {}
    for bits in range(1 << len(pairs)):
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(p for i, p in enumerate(pairs) if bits >> i & 1)
        if not nx.is_connected(h):
            continue
        key = (h.number_of_edges(), tuple(sorted(d for _, d in h.degree())))
        bucket = reps.setdefault(key, [])
        if not any(nx.is_isomorphic(h, r) for r in bucket):
            bucket.append(h)
    return sum(len(b) for b in reps.values())


@pytest.fixture(scope="session")
def atlas_connected() -> dict[int, list[Graph]]:
    """Connected graphs n <= 7 from networkx's graph atlas."""
    out: dict[int, list[Graph]] = {}
    for h in nx.graph_atlas_g()[1:]:
        if nx.is_connected(h):
            out.setdefault(h.number_of_nodes(), []).append(from_nx(h))
    return out
