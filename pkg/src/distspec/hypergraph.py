"""Uniform hypergraphs and their shadow graphs.

Distances in a hypergraph are taken to be distances in its shadow, so every
distance-spectral quantity of ``h`` is computed on ``shadow(h)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, TextIO

from distspec.graph_core import (
    CANONICAL_MAX_N,
    DistanceMatrix,
    Graph,
    UnsupportedSizeError,
    distance_matrix,
)

# the two 3-uniform hypergraphs on {1..7} sharing the shadow K_{1,2,2,2}
_H1_EDGES = [(1, 2, 6), (1, 2, 7), (1, 3, 5), (1, 3, 7), (1, 4, 5), (1, 4, 6), (2, 3, 4), (5, 6, 7)]
_H2_EDGES = [(1, 3, 5), (1, 4, 6), (1, 6, 7), (2, 3, 6), (2, 3, 7), (2, 4, 5), (4, 5, 7)]


@dataclass(frozen=True)
class UniformHypergraph:
    n: int
    r: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        if self.n < 1 or self.r < 1:
            raise ValueError("n and r must be positive")
        for e in self.edges:
            if len(e) != self.r:
                raise ValueError(f"edge {sorted(e)} does not have {self.r} vertices")
            if not all(0 <= v < self.n for v in e):
                raise ValueError(f"edge {sorted(e)} has a vertex outside 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, r: int, edges: Iterable[Iterable[int]]) -> "UniformHypergraph":
        edge_list = [frozenset(e) for e in edges]
        if len(set(edge_list)) != len(edge_list):
            raise ValueError("duplicate edges")
        return cls(n, r, frozenset(edge_list))

    def sorted_edges(self) -> list[tuple[int, ...]]:
        return sorted(tuple(sorted(e)) for e in self.edges)

    def relabel(self, perm) -> "UniformHypergraph":
        return UniformHypergraph(self.n, self.r, frozenset(frozenset(perm[v] for v in e) for e in self.edges))

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg


def shadow(h: UniformHypergraph) -> Graph:
    """Graph joining every pair of vertices covered by a common edge."""
    pairs = {(u, v) for e in h.edges for u, v in combinations(sorted(e), 2)}
    return Graph.from_edges(h.n, pairs)


def hypergraph_distance_matrix(h: UniformHypergraph) -> DistanceMatrix:
    return distance_matrix(shadow(h))


def is_hypergraph_isomorphic(a: UniformHypergraph, b: UniformHypergraph) -> bool:
    """Brute-force search for a vertex bijection carrying edges onto edges.

    Candidate images of each vertex are restricted to vertices with the same
    degree and the same shadow degree.
    """
    if a.n != b.n:
        raise ValueError("hypergraphs must have the same order")
    if a.r != b.r:
        raise ValueError("hypergraphs must have the same uniformity")
    if a.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(f"hypergraph isomorphism supports n <= {CANONICAL_MAX_N}")
    if len(a.edges) != len(b.edges):
        return False
    sa, sb = shadow(a), shadow(b)
    prof_a = [(d, sa.degree(v)) for v, d in enumerate(a.degrees())]
    prof_b = [(d, sb.degree(v)) for v, d in enumerate(b.degrees())]
    if sorted(prof_a) != sorted(prof_b):
        return False
    classes: dict[tuple[int, int], list[int]] = {}
    for v, p in enumerate(prof_b):
        classes.setdefault(p, []).append(v)
    target = b.edges
    order = sorted(range(a.n), key=lambda v: len(classes[prof_a[v]]))
    perm = [-1] * a.n
    used = [False] * b.n

    def extend(k: int) -> bool:
        if k == a.n:
            return all(frozenset(perm[v] for v in e) in target for e in a.edges)
        v = order[k]
        for w in classes[prof_a[v]]:
            if used[w]:
                continue
            perm[v] = w
            used[w] = True
            if extend(k + 1):
                return True
            used[w] = False
        perm[v] = -1
        return False

    return extend(0)


def paper_fixtures() -> tuple[UniformHypergraph, UniformHypergraph]:
    h1 = UniformHypergraph.from_edges(7, 3, [[v - 1 for v in e] for e in _H1_EDGES])
    h2 = UniformHypergraph.from_edges(7, 3, [[v - 1 for v in e] for e in _H2_EDGES])
    return h1, h2


def read_hypergraph(stream: TextIO) -> UniformHypergraph:
    """Parse the fixture format: header ``n r``, then one 1-based edge per line."""
    lines = [ln.split() for ln in stream if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines or len(lines[0]) != 2:
        raise ValueError("first line must be the header 'n r'")
    n, r = (int(t) for t in lines[0])
    return UniformHypergraph.from_edges(n, r, [[int(t) - 1 for t in ln] for ln in lines[1:]])


def write_hypergraph(h: UniformHypergraph, stream: TextIO) -> None:
    stream.write(f"{h.n} {h.r}\n")
    for e in h.sorted_edges():
        stream.write(" ".join(str(v + 1) for v in e) + "\n")
