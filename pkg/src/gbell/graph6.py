"""graph6 reading and writing for orders up to 62.

The first byte is ``63 + n``. The upper triangle ``x01, x02, x12, x03, ...``
(column by column) is packed six bits per byte, most significant bit first,
zero padded, each group offset by 63.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterator, Sequence

from .graph import Graph

G6_MAX_ORDER = 62


class Graph6Error(ValueError):
    def __init__(self, msg: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {msg}" if line is not None else msg)


def encode_adj(n: int, adj: Sequence[int]) -> str:
    if not 0 <= n <= G6_MAX_ORDER:
        raise Graph6Error(f"graph6 order must be in [0, {G6_MAX_ORDER}], got {n}")
    out = [chr(63 + n)]
    acc = nbits = 0
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def to_graph6(g: Graph) -> str:
    return encode_adj(g.n, g.adj)


def from_graph6(text: str, line: int | None = None) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6Error("empty graph6 record", line)
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise Graph6Error(f"byte outside [63, 126] in {text.strip()!r}", line)
    n = codes[0]
    if n > G6_MAX_ORDER:
        raise Graph6Error("multi-byte graph6 orders are not supported", line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(codes) - 1 != need:
        raise Graph6Error(f"expected {need} payload bytes for order {n}, got {len(codes) - 1}", line)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if codes[1 + k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if nbits % 6 and codes[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise Graph6Error("nonzero padding bits", line)
    return Graph(n, tuple(adj))


def read_graph6_file(path: str | Path) -> Iterator[Graph]:
    """Yield every graph in a graph6 file; blank lines are skipped."""
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, raw in enumerate(fh, start=1):
            if raw.strip():
                yield from_graph6(raw, line=lineno)


def write_graph6_file(path: str | Path, graphs) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(to_graph6(g) + "\n")
