"""Short-form graph6 encoding (n <= 62)."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .core import Graph

HEADER = ">>graph6<<"
MAX_ORDER = 62


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the 0-based byte position of the fault."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def _upper_pairs(n: int) -> Iterator[tuple[int, int]]:
    for j in range(1, n):
        for i in range(j):
            yield i, j


def to_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise ValueError(f"graph6 short form supports n <= {MAX_ORDER}, got n={g.n}")
    bits = [g.adj[i] >> j & 1 for i, j in _upper_pairs(g.n)]
    bits += [0] * (-len(bits) % 6)
    chars = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chars.append(chr(value + 63))
    return "".join(chars)


def from_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    start = 0
    if line.startswith(HEADER):
        start = len(HEADER)
    if start >= len(line):
        raise Graph6Error("missing length prefix", start)
    lead = ord(line[start])
    if lead == 126:
        raise Graph6Error("long-form graph6 (n > 62) is not supported", start)
    if not 63 <= lead <= 125:
        raise Graph6Error(f"malformed length prefix {line[start]!r}", start)
    n = lead - 63
    nbits = n * (n - 1) // 2
    nchars = -(-nbits // 6)
    body = line[start + 1:]
    if len(body) != nchars:
        raise Graph6Error(
            f"expected {nchars} data bytes for n={n}, found {len(body)}",
            start + 1 + min(len(body), nchars),
        )
    bits: list[int] = []
    for k, ch in enumerate(body):
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise Graph6Error(f"illegal character {ch!r}", start + 1 + k)
        bits.extend(value >> s & 1 for s in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits", start + nchars)
    rows = [0] * n
    for b, (i, j) in zip(bits, _upper_pairs(n)):
        if b:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """Decode one graph per non-blank line."""
    for line in lines:
        line = line.strip()
        if line:
            yield from_graph6(line)
