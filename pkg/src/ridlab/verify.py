"""Labelings, vertex sets, and verifiers for the domination variants.

A labeling is a tuple of per-vertex values in {0, 1, 2}. All verifiers work
on bitmasks and allocate nothing beyond O(n).

An isolated vertex labeled 0 fails every Italian/Roman condition because its
neighborhood is empty, so no special case is needed for it.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graphs.core import Graph, iter_bits

Labeling = tuple[int, ...]


def weight(f: Sequence[int]) -> int:
    return sum(f)


def labeling_from_str(text: str) -> Labeling:
    text = text.strip()
    if not text or any(ch not in "012" for ch in text):
        raise ValueError(f"labeling must be a nonempty string over 0/1/2, got {text!r}")
    return tuple(int(ch) for ch in text)


def labeling_to_str(f: Sequence[int]) -> str:
    return "".join(str(x) for x in f)


def class_masks(f: Sequence[int]) -> tuple[int, int, int]:
    """Bitmasks of V0, V1, V2."""
    masks = [0, 0, 0]
    for v, x in enumerate(f):
        masks[x] |= 1 << v
    return masks[0], masks[1], masks[2]


def _check_labeling(g: Graph, f: Sequence[int]) -> None:
    if len(f) != g.n:
        raise ValueError(f"labeling has length {len(f)} but graph has n={g.n}")
    for v, x in enumerate(f):
        if x not in (0, 1, 2):
            raise ValueError(f"label {x!r} at vertex {v} is not in {{0, 1, 2}}")


def _vertex_mask(g: Graph, s: Iterable[int]) -> int:
    mask = 0
    for v in s:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
        mask |= 1 << v
    return mask


def is_italian(g: Graph, f: Sequence[int]) -> bool:
    """Every 0-vertex has neighbor-label sum at least 2."""
    _check_labeling(g, f)
    zeros, ones, twos = class_masks(f)
    for v in iter_bits(zeros):
        row = g.adj[v]
        if not row & twos and (row & ones).bit_count() < 2:
            return False
    return True


def is_restrained_italian(g: Graph, f: Sequence[int]) -> bool:
    """Italian, and the 0-vertices induce a subgraph without isolated vertices."""
    if not is_italian(g, f):
        return False
    zeros = class_masks(f)[0]
    return all(g.adj[v] & zeros for v in iter_bits(zeros))


def is_rrd_function(g: Graph, f: Sequence[int]) -> bool:
    """Restrained Roman: every 0-vertex has a 2-neighbor and a 0-neighbor."""
    _check_labeling(g, f)
    zeros, _, twos = class_masks(f)
    return all(g.adj[v] & twos and g.adj[v] & zeros for v in iter_bits(zeros))


def is_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    inside = _vertex_mask(g, s)
    return all(g.adj[v] & inside for v in iter_bits(g.full_mask & ~inside))


def is_restrained_dominating_set(g: Graph, s: Iterable[int]) -> bool:
    inside = _vertex_mask(g, s)
    outside = g.full_mask & ~inside
    return all(g.adj[v] & inside and g.adj[v] & outside for v in iter_bits(outside))
