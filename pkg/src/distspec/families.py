"""Extremal graph families: K_{1,2,...,2} and (n-4)-DVDR graphs.

Every constructor uses a fixed labeling with the distinguished vertex at 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from distspec.graph_core import Graph, complement

ODD_MULTIPARTITE = "odd-multipartite"
DVDR_EVEN = "dvdr-even"


@dataclass(frozen=True)
class DvdrSpec:
    n: int
    r: int
    base: Graph

    def __post_init__(self):
        if self.base.n != self.n - 1:
            raise ValueError("base must have n - 1 vertices")
        if any(deg != self.r for deg in self.base.degrees()):
            raise ValueError(f"base is not {self.r}-regular")

    def build(self) -> Graph:
        return dvdr(self.base)


def complete_odd_multipartite(n: int) -> Graph:
    """K_{1,2,...,2} on ``n`` vertices: apex 0, partner pairs (1,2), (3,4), ..."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    matching = Graph.from_edges(n, [(i, i + 1) for i in range(1, n, 2)])
    return complement(matching)


def dvdr(base: Graph) -> Graph:
    """Join a new apex (vertex 0) to every vertex of the regular graph ``base``."""
    degrees = set(base.degrees())
    if len(degrees) != 1:
        raise ValueError("base graph is not regular")
    edges = [(0, v + 1) for v in range(base.n)]
    edges += [(u + 1, v + 1) for u, v in base.edges()]
    return Graph.from_edges(base.n + 1, edges)


def disjoint_cycles(lengths) -> Graph:
    edges = []
    offset = 0
    for k in lengths:
        if k < 3:
            raise ValueError("cycle lengths must be >= 3")
        edges += [(offset + i, offset + (i + 1) % k) for i in range(k)]
        offset += k
    return Graph.from_edges(offset, edges)


def cycle_partitions(total: int, smallest: int = 3) -> Iterator[tuple[int, ...]]:
    """Partitions of ``total`` into parts ``>= smallest``, parts nondecreasing."""
    if total == 0:
        yield ()
        return
    for first in range(smallest, total + 1):
        rest = total - first
        if rest == 0 or rest >= first:
            for tail in cycle_partitions(rest, first):
                yield (first, *tail)


def enumerate_n_minus_4_dvdr(n: int) -> list[Graph]:
    """All (n-4)-DVDR graphs on ``n`` vertices, one per isomorphism class.

    The vertex-deleted graph is (n-4)-regular on n-1 vertices, so its
    complement is 2-regular: a disjoint union of cycles.
    """
    if n < 4 or n % 2:
        raise ValueError(f"n must be even and >= 4, got {n}")
    return [dvdr(complement(disjoint_cycles(parts))) for parts in cycle_partitions(n - 1)]


def wheel(n: int) -> Graph:
    return dvdr(Graph.cycle(n - 1))


def star(n: int) -> Graph:
    return dvdr(Graph.empty(n - 1))


def closed_form_lambda1(n: int, family: str) -> float:
    if family == ODD_MULTIPARTITE:
        if n % 2 == 0 or n < 3:
            raise ValueError(f"{family} needs odd n >= 3, got {n}")
        return (n - 1 + math.sqrt((n - 1) * (n + 3))) / 2
    if family == DVDR_EVEN:
        if n % 2 or n < 4:
            raise ValueError(f"{family} needs even n >= 4, got {n}")
        return (n + math.sqrt(n * n + 4 * n - 4)) / 2
    raise ValueError(f"unknown family {family!r}")


def closed_form_d_max(n: int, family: str) -> int:
    return {ODD_MULTIPARTITE: n, DVDR_EVEN: n + 1}[family]
