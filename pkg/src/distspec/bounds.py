"""The gap sigma(G) = D_max(G) - lambda_1(G) and the parity-dependent lower bound.

Strict verdicts come from separated enclosures, equality verdicts from
exact structural tests. No verdict is ever decided by comparing two
floating-point point estimates.
"""

from __future__ import annotations

import logging
import math
from dataclasses import asdict, dataclass
from fractions import Fraction

import numpy as np

from distspec.graph_core import (
    Graph,
    TransmissionProfile,
    complement,
    distance_matrix,
    encode_graph6,
    transmissions,
)
from distspec.spectral import DEFAULT_TOL, PerronCertificate, perron

log = logging.getLogger(__name__)

CERTIFIED = "certified-holds"
INCONCLUSIVE = "inconclusive"
NOT_APPLICABLE = "not-applicable"
STRICT = "strict"
EQUALITY = "equality"
ODD_MULTIPARTITE = "odd-multipartite"
EVEN_DVDR = "even-dvdr"
NONE = "none"

EIGENVECTOR_RTOL = 1e-7


class DomainError(ValueError):
    """Input lies outside the hypothesis (e.g. a transmission-regular graph)."""


@dataclass(frozen=True)
class SigmaRecord:
    graph6: str
    n: int
    d_max: int
    d_min: int
    wiener: int
    transmission_regular: bool
    sigma_lo: float
    sigma_hi: float
    sigma_bound: float
    conjecture: str
    theorem: str
    equality_class: str

    def as_dict(self) -> dict:
        return asdict(self)


@dataclass(frozen=True)
class ClaimsReport:
    claim1: bool
    claim2: bool
    claim3_ratio_ok: bool
    claim3_count: int
    claim4_count: int
    claim5: bool
    diameter2: bool
    ratio: float


def gamma(n: int) -> int:
    return 1 if n % 2 else 2


def sigma_n(n: int) -> float:
    """Smaller root of s^2 - (n + g) s + g = 0 with g = gamma(n)."""
    if n < 3:
        raise ValueError(f"sigma_n is defined for n >= 3, got {n}")
    g = gamma(n)
    return 2 * g / (n + g + math.sqrt((n + g) ** 2 - 4 * g))


def _bound_poly(n: int, s: Fraction) -> Fraction:
    g = gamma(n)
    return s * s - (n + g) * s + g


def sigma_n_enclosure(n: int) -> tuple[float, float]:
    """Floats ``lo <= sigma_n <= hi``, certified by the sign of the quadratic.

    The quadratic is decreasing through its smaller root, so it is positive
    just left of it and negative just right of it.
    """
    s = sigma_n(n)
    lo = hi = s
    while _bound_poly(n, Fraction(lo)) < 0:
        lo = math.nextafter(lo, -math.inf)
    while _bound_poly(n, Fraction(hi)) > 0:
        hi = math.nextafter(hi, math.inf)
    return lo, hi


def _sigma_from(profile: TransmissionProfile, cert: PerronCertificate) -> tuple[float, float]:
    lo = profile.d_max - cert.lambda_hi
    hi = profile.d_max - cert.lambda_lo
    # one subtraction each; widen by an ulp so the enclosure stays sound
    return math.nextafter(lo, -math.inf), math.nextafter(hi, math.inf)


def _analyze(g: Graph, tol: float):
    d = distance_matrix(g)
    profile = transmissions(d)
    cert = perron(d, tol)
    return d, profile, cert


def sigma(g: Graph, tol: float = DEFAULT_TOL) -> tuple[float, float]:
    """Enclosure ``(sigma_lo, sigma_hi)`` of D_max - lambda_1."""
    _, profile, cert = _analyze(g, tol)
    return _sigma_from(profile, cert)


def _require_non_tr(profile: TransmissionProfile) -> None:
    if profile.transmission_regular:
        raise DomainError("graph is transmission-regular")


def _conjecture_verdict(n: int, sigma_lo: float) -> str:
    return CERTIFIED if Fraction(sigma_lo) > Fraction(1, n + 1) else INCONCLUSIVE


def check_conjecture(g: Graph, tol: float = DEFAULT_TOL) -> str:
    _, profile, cert = _analyze(g, tol)
    _require_non_tr(profile)
    lo, _ = _sigma_from(profile, cert)
    return _conjecture_verdict(g.n, lo)


def classify_equality_case(g: Graph) -> str:
    """Structural membership in the extremal families (no spectral work)."""
    n = g.n
    if n >= 3 and n % 2 == 1:
        comp = complement(g).degrees()
        if comp.count(0) == 1 and comp.count(1) == n - 1:
            return ODD_MULTIPARTITE
    if n >= 4 and n % 2 == 0:
        for v in range(n):
            if g.degree(v) == n - 1:
                rest = g.delete_vertex(v)
                if all(deg == n - 4 for deg in rest.degrees()):
                    return EVEN_DVDR
    return NONE


def _theorem_verdict(g: Graph, sigma_lo: float) -> tuple[str, str]:
    cls = classify_equality_case(g)
    if cls != NONE:
        return EQUALITY, cls
    if g.n >= 3 and sigma_lo > sigma_n_enclosure(g.n)[1]:
        return STRICT, cls
    return INCONCLUSIVE, cls


def check_theorem(g: Graph, tol: float = DEFAULT_TOL) -> str:
    _, profile, cert = _analyze(g, tol)
    _require_non_tr(profile)
    lo, _ = _sigma_from(profile, cert)
    return _theorem_verdict(g, lo)[0]


def sigma_record(g: Graph, tol: float = DEFAULT_TOL) -> SigmaRecord:
    """Full verdict record for one connected graph with n >= 2."""
    _, profile, cert = _analyze(g, tol)
    lo, hi = _sigma_from(profile, cert)
    bound = sigma_n(g.n) if g.n >= 3 else math.nan
    if profile.transmission_regular:
        conj = theo = NOT_APPLICABLE
        cls = classify_equality_case(g)
    else:
        conj = _conjecture_verdict(g.n, lo)
        theo, cls = _theorem_verdict(g, lo)
        if theo == INCONCLUSIVE and g.n >= 3 and hi < sigma_n_enclosure(g.n)[0]:
            log.warning("graph %s has sigma enclosure below the bound; flagged for exact review",
                        encode_graph6(g))
    return SigmaRecord(
        graph6=encode_graph6(g),
        n=g.n,
        d_max=profile.d_max,
        d_min=profile.d_min,
        wiener=profile.wiener,
        transmission_regular=profile.transmission_regular,
        sigma_lo=lo,
        sigma_hi=hi,
        sigma_bound=bound,
        conjecture=conj,
        theorem=theo,
        equality_class=cls,
    )


def minimizer_claims_report(g: Graph, tol: float = DEFAULT_TOL, ratio_tol: float = 1e-6) -> ClaimsReport:
    """Evaluate the structural claims that every true minimizer satisfies.

    On a non-minimizer some of them are expected to fail; the report just
    records what holds.
    """
    d, profile, cert = _analyze(g, tol)
    _require_non_tr(profile)
    n = g.n
    gam = gamma(n)
    x = np.asarray(cert.vector)
    D = profile.transmissions
    u = int(np.argmax(x))
    v = int(np.argmin(x))
    x_max, x_min = float(x[u]), float(x[v])
    ratio = x_max / x_min
    target = 1.0 / (1.0 - sigma_n(n))
    return ClaimsReport(
        claim1=n * profile.d_max - 2 * profile.wiener == gam,
        claim2=D[u] > profile.d_min and D[v] < profile.d_max,
        claim3_ratio_ok=abs(ratio - target) <= ratio_tol,
        claim3_count=int(np.sum(x >= x_max * (1 - EIGENVECTOR_RTOL))),
        claim4_count=sum(1 for t in D if t == profile.d_max),
        claim5=profile.d_max == n + gam - 1 and profile.d_min == n - 1,
        diameter2=d.diameter == 2,
        ratio=ratio,
    )


def exact_review(g: Graph) -> str:
    """Decide sigma(G) against the bound in exact arithmetic.

    Returns ``"holds"`` (sigma > bound), ``"equal"``, ``"violated"`` or
    ``"unresolved"``. Uses the integer characteristic polynomial of the
    distance matrix and rational root isolation.
    """
    import sympy

    n = g.n
    if n < 3:
        raise ValueError("bound is defined for n >= 3")
    d = distance_matrix(g)
    profile = transmissions(d)
    _require_non_tr(profile)
    d_max = profile.d_max
    t = sympy.Symbol("t")
    p = sympy.Poly(sympy.Matrix(d.tolist()).charpoly(t).as_expr(), t)
    gam = gamma(n)
    # lambda_1 = d_max - sigma_n  <=>  t is the larger root of this quadratic
    quad = sympy.Poly((d_max - t) ** 2 - (n + gam) * (d_max - t) + gam, t)
    (a2, b2), _ = quad.intervals()[-1]
    factor = next(f for f, _ in quad.factor_list()[1] if f.count_roots(a2, b2) == 1)
    rest = p
    while rest.degree() > 0 and rest.rem(factor).is_zero:
        rest = rest.quo(factor)
    shared = rest.degree() < p.degree()
    if rest.degree() == 0:
        return "equal" if shared else "unresolved"
    for k in range(1, 9):
        eps = sympy.Rational(1, 10 ** (4 * k))
        (a1, b1), _ = rest.intervals(eps=eps)[-1]
        (a2, b2), _ = quad.intervals(eps=eps)[-1]
        if b1 < a2:
            return "equal" if shared else "holds"
        if b2 < a1:
            return "violated"
    return "unresolved"
