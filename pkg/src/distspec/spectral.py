"""Certified Perron root of distance matrices and equitable quotient matrices.

The Perron root is bracketed with the Collatz-Wielandt bounds
``min_i (Dx)_i / x_i <= lambda_1 <= max_i (Dx)_i / x_i``, valid for any
positive ``x`` when ``D`` is nonnegative and irreducible. The bounds for the
final iterate are evaluated in exact rational arithmetic and rounded outward,
so the returned interval is safe against floating-point error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from distspec.graph_core import DistanceMatrix

DEFAULT_TOL = 1e-10
SHIFT = 1.0


class DegenerateSizeError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    def __init__(self, message: str, gap: float, iterations: int):
        super().__init__(message)
        self.gap = gap
        self.iterations = iterations


@dataclass(frozen=True, eq=False)
class PerronCertificate:
    lambda_lo: float
    lambda_hi: float
    vector: np.ndarray = field(repr=False)
    iterations: int

    @property
    def width(self) -> float:
        return self.lambda_hi - self.lambda_lo

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.lambda_lo + self.lambda_hi)

    def contains(self, value: float) -> bool:
        return self.lambda_lo <= value <= self.lambda_hi


@dataclass(frozen=True, eq=False)
class QuotientMatrix:
    blocks: tuple[tuple[int, ...], ...]
    q: np.ndarray = field(repr=False)
    equitable: bool


def iteration_cap(n: int, tol: float) -> int:
    return 100 * n * max(1, math.ceil(math.log10(1.0 / tol)))


def _round_down(r: Fraction) -> float:
    f = float(r)
    return math.nextafter(f, -math.inf) if Fraction(f) > r else f


def _round_up(r: Fraction) -> float:
    f = float(r)
    return math.nextafter(f, math.inf) if Fraction(f) < r else f


def collatz_wielandt_bounds(d: np.ndarray, x: np.ndarray) -> tuple[float, float]:
    """Outward-rounded ``(min, max)`` of ``(d @ x)_i / x_i`` computed exactly.

    ``d`` must hold integers and ``x`` must be strictly positive.
    """
    ratios = [v.as_integer_ratio() for v in map(float, x)]
    # put every entry over the common denominator 2**shift
    shift = max(den.bit_length() - 1 for _, den in ratios)
    scaled = [num << (shift - (den.bit_length() - 1)) for num, den in ratios]
    rows = d.tolist()
    lo = hi = None
    for i, row in enumerate(rows):
        r = Fraction(sum(int(a) * b for a, b in zip(row, scaled)), scaled[i])
        if lo is None or r < lo:
            lo = r
        if hi is None or r > hi:
            hi = r
    return _round_down(lo), _round_up(hi)


def perron(d: DistanceMatrix, tol: float = DEFAULT_TOL) -> PerronCertificate:
    """Enclose the Perron root of ``d`` to width ``tol`` by shifted power iteration."""
    if not tol > 0:
        raise ValueError("tol must be positive")
    n = d.n
    if n < 2:
        raise DegenerateSizeError("Perron certificate needs n >= 2")
    dense = d.d.astype(np.float64)
    x = np.full(n, 1.0 / math.sqrt(n))
    cap = iteration_cap(n, tol)
    gap = math.inf
    for it in range(cap + 1):
        y = dense @ x
        ratios = y / x
        if ratios.max() - ratios.min() <= tol:
            lo, hi = collatz_wielandt_bounds(d.d, x)
            gap = hi - lo
            if gap <= tol:
                vec = x.copy()
                vec.setflags(write=False)
                return PerronCertificate(lo, hi, vec, it)
        else:
            gap = float(ratios.max() - ratios.min())
        x = y + SHIFT * x
        x /= np.linalg.norm(x)
    raise ConvergenceError(
        f"Collatz-Wielandt gap {gap:.3e} above tol {tol:.3e} after {cap} iterations", gap, cap
    )


def rayleigh_identity_residual(d: DistanceMatrix, x: Sequence[float], d_max: int) -> float:
    """|(d_max - x'Dx) - (sum (d_max - D_u) x_u^2 + sum_{u<v} d_uv (x_u - x_v)^2)|."""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (d.n,):
        raise ValueError("vector length does not match matrix")
    if not np.all(x > 0):
        raise ValueError("vector must be strictly positive")
    if abs(float(np.linalg.norm(x)) - 1.0) > 1e-10:
        raise ValueError("vector must have unit Euclidean norm")
    dense = d.d.astype(np.float64)
    lhs = d_max - x @ dense @ x
    row = dense.sum(axis=1)
    diff = x[:, None] - x[None, :]
    rhs = np.sum((d_max - row) * x**2) + 0.5 * np.sum(dense * diff**2)
    return float(abs(lhs - rhs))


def quotient_matrix(d: DistanceMatrix, partition: Sequence[Sequence[int]]) -> QuotientMatrix:
    blocks = tuple(tuple(int(v) for v in block) for block in partition)
    flat = [v for block in blocks for v in block]
    if any(not block for block in blocks):
        raise ValueError("partition blocks must be nonempty")
    if sorted(flat) != list(range(d.n)):
        raise ValueError("partition must cover 0..n-1 with disjoint blocks")
    k = len(blocks)
    q = np.zeros((k, k))
    equitable = True
    for a, rows in enumerate(blocks):
        for b, cols in enumerate(blocks):
            sums = d.d[np.ix_(rows, cols)].sum(axis=1)
            q[a, b] = sums.sum() / len(rows)
            equitable = equitable and bool(np.all(sums == sums[0]))
    q.setflags(write=False)
    return QuotientMatrix(blocks, q, equitable)


def largest_eig_2x2(q) -> float:
    """Larger root of ``t^2 - tr(q) t + det(q)`` for a 2x2 matrix."""
    m = np.asarray(q.q if isinstance(q, QuotientMatrix) else q, dtype=np.float64)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {m.shape}")
    (a, b), (c, e) = m
    half = 0.5 * (a - e)
    disc = half * half + b * c
    if disc < 0:
        raise ValueError("matrix has complex eigenvalues")
    return 0.5 * (a + e) + math.sqrt(disc)
