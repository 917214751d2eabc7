"""Desk-scale verification sweep behind ``distspec verify``.

Each check yields a deterministic one-line detail so the sweep output is
byte-for-byte reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from distspec import families
from distspec.bounds import (
    EQUALITY,
    NONE,
    STRICT,
    SigmaRecord,
    minimizer_claims_report,
    sigma,
    sigma_n,
    sigma_n_enclosure,
)
from distspec.corpus import aggregate, enumerate_connected, scan
from distspec.graph_core import canonical_form, distance_matrix, is_isomorphic, parse_graph6, transmissions
from distspec.hypergraph import hypergraph_distance_matrix, is_hypergraph_isomorphic, paper_fixtures, shadow
from distspec.spectral import DEFAULT_TOL, perron, rayleigh_identity_residual

EXPECTED_CONNECTED = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112, 7: 853}
RESIDUAL_TOL = 1e-9
CLAIM3_TOL = 1e-6
CLOSED_FORM_WIDTH = 1e-9


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}: {self.detail}"


def extremal_family(n: int):
    if n % 2:
        return [families.complete_odd_multipartite(n)]
    return families.enumerate_n_minus_4_dvdr(n)


def check_closed_forms(tol: float = DEFAULT_TOL) -> Check:
    bad = []
    total = 0
    for n in (3, 5, 7, 9):
        cert = perron(distance_matrix(families.complete_odd_multipartite(n)), tol)
        total += 1
        if not (cert.contains(families.closed_form_lambda1(n, families.ODD_MULTIPARTITE))
                and cert.width <= CLOSED_FORM_WIDTH):
            bad.append(f"odd n={n}")
    for n in (4, 6, 8, 10):
        for g in families.enumerate_n_minus_4_dvdr(n):
            cert = perron(distance_matrix(g), tol)
            total += 1
            if not (cert.contains(families.closed_form_lambda1(n, families.DVDR_EVEN))
                    and cert.width <= CLOSED_FORM_WIDTH):
                bad.append(f"dvdr n={n}")
    return Check("closed-forms", not bad, f"{total - len(bad)}/{total} enclosures contain the closed form"
                 + (f"; failing {bad}" if bad else ""))


def check_corpus(n: int, tol: float = DEFAULT_TOL) -> list[Check]:
    graphs = list(enumerate_connected(n))
    records = [r for r in scan(graphs, tol) if isinstance(r, SigmaRecord)]
    summary = aggregate(records, tol)
    ns = summary.per_n[n]
    non_tr = [r for r in records if not r.transmission_regular]
    bound_lo, bound_hi = sigma_n_enclosure(n)
    checks = []

    expected = EXPECTED_CONNECTED[n]
    checks.append(Check(f"n={n} count", len(graphs) == expected,
                        f"{len(graphs)} connected graphs (expected {expected})"))

    def certified(r: SigmaRecord) -> bool:
        if r.theorem == STRICT:
            return r.sigma_lo > bound_hi
        return r.theorem == EQUALITY and r.equality_class != NONE

    bad = [r.graph6 for r in non_tr if not certified(r)]
    checks.append(Check(f"n={n} theorem", not bad,
                        f"{len(non_tr) - len(bad)}/{len(non_tr)} non-transmission-regular graphs certified "
                        f"sigma >= sigma_n = {sigma_n(n):.12f}" + (f"; failing {bad}" if bad else "")))

    equality = sorted(r.graph6 for r in non_tr if r.theorem == EQUALITY)
    family = sorted(canonical_form(g) for g in extremal_family(n))
    found = sorted(canonical_form(parse_graph6(g6)) for g6 in ns.argmin_graph6_list)
    ok = equality == ns.argmin_graph6_list and found == family
    checks.append(Check(f"n={n} equality-set", ok,
                        f"argmin {ns.argmin_graph6_list}, equality verdicts {equality}, "
                        f"extremal family size {len(family)}"))

    ok = ns.min_sigma_lo <= bound_hi and bound_lo <= ns.min_sigma_hi
    checks.append(Check(f"n={n} minimum", ok,
                        f"min sigma in [{ns.min_sigma_lo:.12f}, {ns.min_sigma_hi:.12f}]"))

    bad = [r.graph6 for r in non_tr if r.conjecture != "certified-holds"]
    checks.append(Check(f"n={n} conjecture", not bad,
                        f"{len(non_tr) - len(bad)}/{len(non_tr)} certified sigma > 1/{n + 1}"
                        + (f"; failing {bad}" if bad else "")))

    bad = []
    for g6 in ns.argmin_graph6_list:
        rep = minimizer_claims_report(parse_graph6(g6), tol, CLAIM3_TOL)
        if not (rep.claim1 and rep.claim2 and rep.claim3_ratio_ok and rep.claim3_count == n - 1
                and rep.claim4_count == n - 1 and rep.claim5 and rep.diameter2):
            bad.append(g6)
    controls = sum(1 for r in non_tr if r.graph6 not in ns.argmin_graph6_list
                   and not minimizer_claims_report(parse_graph6(r.graph6), tol).claim5)
    checks.append(Check(f"n={n} claims", not bad and controls > 0,
                        f"{len(ns.argmin_graph6_list) - len(bad)}/{len(ns.argmin_graph6_list)} minimizers "
                        f"satisfy claims 1-5; {controls} non-minimizers fail claim 5"))
    return checks


def check_rayleigh(max_n: int, tol: float = DEFAULT_TOL) -> Check:
    worst = 0.0
    count = 0
    for n in range(2, max_n + 1):
        for g in enumerate_connected(n):
            d = distance_matrix(g)
            cert = perron(d, tol)
            worst = max(worst, rayleigh_identity_residual(d, cert.vector, transmissions(d).d_max))
            count += 1
    return Check("rayleigh-identity", worst <= RESIDUAL_TOL,
                 f"{count} graphs, max residual {'<= 1e-12' if worst <= 1e-12 else format(worst, '.3e')}")


def check_hypergraphs(tol: float = DEFAULT_TOL) -> Check:
    h1, h2 = paper_fixtures()
    target = families.complete_odd_multipartite(7)
    shadows_ok = is_isomorphic(shadow(h1), target) and is_isomorphic(shadow(h2), target)
    distinct = not is_hypergraph_isomorphic(h1, h2)
    bound = sigma_n(7)
    encloses = True
    for h in (h1, h2):
        d = hypergraph_distance_matrix(h)
        cert = perron(d, tol)
        d_max = transmissions(d).d_max
        encloses &= d_max - cert.lambda_hi <= bound <= d_max - cert.lambda_lo
    return Check("hypergraph-fixtures", shadows_ok and distinct and encloses,
                 f"shadows are K_(1,2,2,2): {shadows_ok}; H1 not isomorphic to H2: {distinct}; "
                 f"sigma encloses 4-sqrt(15): {encloses}")


def check_dvdr_multiplicity(tol: float = DEFAULT_TOL) -> Check:
    graphs = families.enumerate_n_minus_4_dvdr(8)
    distinct = len({canonical_form(g) for g in graphs}) == len(graphs)
    bound = sigma_n(8)
    encl = [sigma(g, tol) for g in graphs]
    ok = len(graphs) == 2 and distinct and all(lo <= bound <= hi for lo, hi in encl)
    return Check("dvdr-multiplicity-n8", ok,
                 f"{len(graphs)} pairwise non-isomorphic graphs; all enclose 5-sqrt(23): "
                 f"{all(lo <= bound <= hi for lo, hi in encl)}")


def run_checks(max_n: int, tol: float = DEFAULT_TOL) -> list[Check]:
    if not 4 <= max_n <= 7:
        raise ValueError("max_n must lie in 4..7")
    checks = [check_closed_forms(tol)]
    for n in range(4, max_n + 1):
        checks.extend(check_corpus(n, tol))
    checks.append(check_rayleigh(max_n, tol))
    checks.append(check_hypergraphs(tol))
    checks.append(check_dvdr_multiplicity(tol))
    return checks
