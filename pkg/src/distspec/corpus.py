"""Graph enumeration, the per-graph scan, minimizer aggregation and reports."""

from __future__ import annotations

import csv
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, fields
from functools import lru_cache
from typing import Iterable, Iterator, TextIO, Union

from distspec.bounds import CERTIFIED, INCONCLUSIVE, SigmaRecord, sigma, sigma_record
from distspec.graph_core import (
    GRAPH6_HEADER,
    Graph,
    Graph6Error,
    UnsupportedSizeError,
    _canonical,
    is_connected,
    parse_graph6,
)
from distspec.spectral import DEFAULT_TOL, ConvergenceError


ENUM_MAX_N = 7
REFINE_ROUNDS = 3
RECORD_FIELDS = [f.name for f in fields(SigmaRecord)]


@dataclass(frozen=True)
class ScanIssue:
    """Non-record output of a scan: an unreadable line or a skipped graph."""

    ordinal: int
    kind: str  # "error" | "warning"
    message: str


@dataclass
class NSummary:
    graphs_scanned: int = 0
    non_tr_count: int = 0
    min_sigma_lo: float = math.nan
    min_sigma_hi: float = math.nan
    argmin_graph6_list: list[str] = field(default_factory=list)
    all_conjecture_certified: bool = True
    all_theorem_resolved: bool = True
    unresolved_tie: bool = False


@dataclass
class ScanSummary:
    per_n: dict[int, NSummary] = field(default_factory=dict)
    issues: list[ScanIssue] = field(default_factory=list)


# enumeration


def _extend(g: Graph, mask: int) -> Graph:
    n = g.n
    adj = list(g.adj)
    for v in range(n):
        if mask >> v & 1:
            adj[v] |= 1 << n
    adj.append(mask)
    return Graph(n + 1, tuple(adj))


@lru_cache(maxsize=None)
def _all_graphs(n: int) -> tuple[Graph, ...]:
    # every graph on n vertices, up to isomorphism: extend each class on n-1 by a new vertex
    if n == 1:
        return (Graph.empty(1),)
    forms = {_canonical(_extend(g, mask)) for g in _all_graphs(n - 1) for mask in range(1 << (n - 1))}
    return tuple(parse_graph6(f.decode("ascii")) for f in sorted(forms))


def enumerate_connected(n: int) -> Iterator[Graph]:
    """One canonically labeled representative per connected graph on ``n`` vertices."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > ENUM_MAX_N:
        raise UnsupportedSizeError(
            f"built-in enumeration stops at n={ENUM_MAX_N}; "
            "scan a graph6 file generated externally (e.g. nauty geng -c) instead"
        )
    return (g for g in _all_graphs(n) if is_connected(g))


# scanning

ScanItem = Union[Graph, str]
ScanOutput = Union[SigmaRecord, ScanIssue]


def _scan_one(args: tuple[int, ScanItem, float]) -> ScanOutput | None:
    ordinal, item, tol = args
    if isinstance(item, str):
        text = item.strip()
        if not text or text == GRAPH6_HEADER:
            return None
        try:
            item = parse_graph6(text)
        except Graph6Error as exc:
            return ScanIssue(ordinal, "error", f"line {ordinal}: {exc}")
    if not is_connected(item):
        return ScanIssue(ordinal, "warning", f"item {ordinal}: graph is not connected, skipped")
    if item.n < 2:
        return ScanIssue(ordinal, "warning", f"item {ordinal}: n < 2, skipped")
    try:
        return sigma_record(item, tol)
    except ConvergenceError as exc:
        return ScanIssue(ordinal, "error", f"item {ordinal}: {exc}")


def scan(items: Iterable[ScanItem], tol: float = DEFAULT_TOL, workers: int = 1) -> Iterator[ScanOutput]:
    """Analyse each graph (or graph6 line), yielding outputs in input order.

    Ordinals are 1-based input positions, so for file lines they are line
    numbers. Blank lines and graph6 headers produce no output.
    """
    jobs = ((i, item, tol) for i, item in enumerate(items, start=1))
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = pool.map(_scan_one, jobs, chunksize=64)
            for out in results:
                if out is not None:
                    yield out
    else:
        for job in jobs:
            out = _scan_one(job)
            if out is not None:
                yield out


def _refine(g6: str, tol: float, current: tuple[float, float]) -> tuple[float, float]:
    try:
        lo, hi = sigma(parse_graph6(g6), tol)
    except ConvergenceError:
        return current
    # both enclosures are valid, so their intersection is too
    return max(lo, current[0]), min(hi, current[1])


def aggregate(records: Iterable[ScanOutput], tol: float = DEFAULT_TOL,
              refine_rounds: int = REFINE_ROUNDS) -> ScanSummary:
    """Per-n minimum of sigma over non-transmission-regular graphs.

    Graphs whose enclosure overlaps the running minimum are re-certified at a
    10x tighter tolerance, up to ``refine_rounds`` times. Whatever still
    overlaps afterwards is reported as a co-minimizer with ``unresolved_tie``.
    """
    summary = ScanSummary()
    candidates: dict[int, dict[str, tuple[float, float]]] = {}
    for rec in records:
        if isinstance(rec, ScanIssue):
            summary.issues.append(rec)
            continue
        ns = summary.per_n.setdefault(rec.n, NSummary())
        ns.graphs_scanned += 1
        if rec.transmission_regular:
            continue
        ns.non_tr_count += 1
        ns.all_conjecture_certified &= rec.conjecture == CERTIFIED
        ns.all_theorem_resolved &= rec.theorem != INCONCLUSIVE
        encl = candidates.setdefault(rec.n, {})
        old = encl.get(rec.graph6)
        encl[rec.graph6] = (rec.sigma_lo, rec.sigma_hi) if old is None else (
            max(old[0], rec.sigma_lo), min(old[1], rec.sigma_hi))

    for n, encl in candidates.items():
        ns = summary.per_n[n]
        cur_tol = tol
        for round_ in range(refine_rounds + 1):
            min_hi = min(hi for _, hi in encl.values())
            encl = {g6: e for g6, e in encl.items() if e[0] <= min_hi}
            if len(encl) == 1 or round_ == refine_rounds:
                break
            cur_tol /= 10
            encl = {g6: _refine(g6, cur_tol, e) for g6, e in sorted(encl.items())}
        min_hi = min(hi for _, hi in encl.values())
        encl = {g6: e for g6, e in encl.items() if e[0] <= min_hi}
        ns.min_sigma_lo = min(lo for lo, _ in encl.values())
        ns.min_sigma_hi = min_hi
        ns.argmin_graph6_list = sorted(encl)
        ns.unresolved_tie = len(encl) > 1
    summary.per_n = dict(sorted(summary.per_n.items()))
    summary.issues.sort(key=lambda i: i.ordinal)
    return summary


# reports


def format_value(value) -> str:
    """JSON text for ``value`` with floats at 17 significant digits (NaN as null)."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "null" if not math.isfinite(value) else format(value, ".17g")
    if isinstance(value, int):
        return str(value)
    if value is None:
        return "null"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {format_value(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(format_value(v) for v in value) + "]"
    raise TypeError(f"cannot serialise {type(value).__name__}")


def summary_dict(summary: ScanSummary) -> dict:
    return {
        "per_n": {str(n): vars(ns) for n, ns in summary.per_n.items()},
        "issues": [vars(i) for i in summary.issues],
    }


def write_report(summary: ScanSummary, records: Iterable[ScanOutput], fmt: str, sink: TextIO) -> None:
    """Serialise a scan. Floats carry 17 significant digits.

    JSON: ``{"summary": ..., "records": [...]}`` with one record per line.
    CSV: a header of record field names and one row per record (the summary
    is JSON-only).
    """
    recs = [r for r in records if isinstance(r, SigmaRecord)]
    if fmt == "json":
        sink.write('{"summary": ' + format_value(summary_dict(summary)) + ',\n "records": [')
        for i, rec in enumerate(recs):
            sink.write(("," if i else "") + "\n  " + format_value(rec.as_dict()))
        sink.write("\n ]}\n" if recs else "]}\n")
    elif fmt == "csv":
        writer = csv.writer(sink, lineterminator="\n")
        writer.writerow(RECORD_FIELDS)
        for rec in recs:
            row = []
            for name in RECORD_FIELDS:
                v = getattr(rec, name)
                row.append("" if isinstance(v, float) and not math.isfinite(v)
                           else v if isinstance(v, str) else format_value(v))
            writer.writerow(row)
    else:
        raise ValueError(f"unknown report format {fmt!r}")
