"""Graph representation, graph6 codec, BFS distances and small-n canonical labeling.

Graphs are stored as a tuple of adjacency bitmasks over vertices ``0..n-1``,
which keeps them hashable and makes BFS and refinement cheap for the
sizes this package cares about (``n <= 64``).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

MAX_VERTICES = 64
MAX_GRAPH6_VERTICES = 62
CANONICAL_MAX_N = 10
GRAPH6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Raised for malformed graph6 input; ``offset`` is the offending byte index."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class NotConnectedError(ValueError):
    pass


class UnsupportedSizeError(ValueError):
    pass


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``adj[v]`` is a bitmask of the neighbours of ``v``.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"n must lie in 1..{MAX_VERTICES}, got {self.n}")
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match n")
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adj):
            if mask & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if mask >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            m = mask
            while m:
                low = m & -m
                u = low.bit_length() - 1
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
                m ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [mask.bit_count() for mask in self.adj]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for v in range(self.n) for u in range(v) if self.adj[u] >> v & 1]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of the vertex set")
        return Graph.from_edges(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    def delete_vertex(self, v: int) -> "Graph":
        keep = [u for u in range(self.n) if u != v]
        index = {u: i for i, u in enumerate(keep)}
        return Graph.from_edges(
            self.n - 1, [(index[a], index[b]) for a, b in self.edges() if v not in (a, b)]
        )

    def to_networkx(self):
        import networkx as nx

        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges())
        return g

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """Exact integer shortest-path distances; ``d`` is a read-only int64 array."""

    n: int
    d: np.ndarray = field(repr=False)

    def __post_init__(self):
        self.d.setflags(write=False)

    def __eq__(self, other):
        if not isinstance(other, DistanceMatrix):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.d, other.d)

    def __hash__(self):
        return hash((self.n, self.d.tobytes()))

    def tolist(self) -> list[list[int]]:
        return self.d.tolist()

    @property
    def diameter(self) -> int:
        return int(self.d.max())


@dataclass(frozen=True)
class TransmissionProfile:
    transmissions: tuple[int, ...]
    d_max: int
    d_min: int
    wiener: int

    @property
    def transmission_regular(self) -> bool:
        return self.d_max == self.d_min


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


# graph6


def encode_graph6(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    if g.n > MAX_GRAPH6_VERTICES:
        raise UnsupportedSizeError(f"graph6 size field supports n <= {MAX_GRAPH6_VERTICES}, got {g.n}")
    bits = [g.adj[i] >> j & 1 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    chunks = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        chunks.append(chr(63 + value))
    return chr(63 + g.n) + "".join(chunks)


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 line. A leading ``>>graph6<<`` header is stripped."""
    s = line.rstrip("\r\n")
    base = 0
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
        base = len(GRAPH6_HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ch!r} outside graph6 range 63..126", base + i)
    n = ord(s[0]) - 63
    if n > MAX_GRAPH6_VERTICES:
        raise Graph6Error("multi-byte size field is not supported", base)
    if n == 0:
        raise Graph6Error("graph with zero vertices", base)
    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(s) - 1 < nbytes:
        raise Graph6Error(f"expected {nbytes} edge bytes, got {len(s) - 1}", base + len(s))
    if len(s) - 1 > nbytes:
        raise Graph6Error("trailing garbage after edge bytes", base + 1 + nbytes)
    if nbits % 6:
        pad = 6 - nbits % 6
        if (ord(s[-1]) - 63) & ((1 << pad) - 1):
            raise Graph6Error("non-zero padding bits", base + len(s) - 1)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(s[1 + k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]):
    """Yield ``(line_number, Graph | Graph6Error)`` for each non-blank line."""
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text == GRAPH6_HEADER:
            continue
        try:
            yield lineno, parse_graph6(text)
        except Graph6Error as exc:
            yield lineno, exc


# distances


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


def distance_matrix(g: Graph) -> DistanceMatrix:
    """All-pairs shortest paths by one bitset BFS per vertex."""
    full = (1 << g.n) - 1
    d = np.zeros((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        depth = 0
        while frontier:
            depth += 1
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
            for v in _bits(frontier):
                d[s, v] = depth
        if seen != full:
            raise NotConnectedError(f"graph is not connected (vertex {s} reaches {seen.bit_count()} of {g.n})")
    return DistanceMatrix(g.n, d)


def transmissions(d: DistanceMatrix) -> TransmissionProfile:
    rows = tuple(int(x) for x in d.d.sum(axis=1))
    total = sum(rows)
    assert total % 2 == 0
    return TransmissionProfile(rows, max(rows), min(rows), total // 2)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ mask ^ (1 << v) for v, mask in enumerate(g.adj)))


# canonical labeling


def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    # Split cells by neighbour counts into every cell until stable; cell order is label-free.
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((adj[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[sig] for sig in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _certificate(g: Graph, order: Sequence[int]) -> bytes:
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    adj = [0] * g.n
    for v, mask in enumerate(g.adj):
        for u in _bits(mask):
            adj[perm[v]] |= 1 << perm[u]
    return encode_graph6(Graph(g.n, tuple(adj))).encode("ascii")


def _canonical(g: Graph) -> bytes:
    adj = g.adj
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(adj[v].bit_count(), []).append(v)
    start = _refine(adj, [by_degree[k] for k in sorted(by_degree)])
    best: bytes | None = None

    def search(cells: list[list[int]]) -> None:
        nonlocal best
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            cert = _certificate(g, [c[0] for c in cells])
            if best is None or cert < best:
                best = cert
            return
        cell = cells[target]
        tried: list[int] = []
        for v in cell:
            # swapping twins is an automorphism fixing the prefix, so their subtrees agree
            if any((adj[u] ^ adj[v]) & ~(1 << u | 1 << v) == 0 for u in tried):
                continue
            tried.append(v)
            rest = [u for u in cell if u != v]
            search(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(start)
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """Label-invariant byte string; equal outputs iff the graphs are isomorphic."""
    if g.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"canonical_form supports n <= {CANONICAL_MAX_N}, got {g.n}")
    return _canonical(g)


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n > CANONICAL_MAX_N or b.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"is_isomorphic supports n <= {CANONICAL_MAX_N}")
    if a.n != b.n or sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_form(a) == canonical_form(b)
