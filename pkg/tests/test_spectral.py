import math

import numpy as np
import pytest
from hypothesis import given

from distspec import spectral
from distspec.corpus import enumerate_connected
from distspec.families import complete_odd_multipartite, wheel
from distspec.graph_core import DistanceMatrix, Graph, distance_matrix, transmissions
from distspec.spectral import (
    ConvergenceError,
    DegenerateSizeError,
    collatz_wielandt_bounds,
    largest_eig_2x2,
    perron,
    quotient_matrix,
    rayleigh_identity_residual,
)

from conftest import graphs


def eig_oracle(d: DistanceMatrix) -> float:
    return float(np.linalg.eigvalsh(d.d.astype(float))[-1])


def small_corpus(max_n=6):
    return [g for n in range(2, max_n + 1) for g in enumerate_connected(n)]


class TestPerron:
    def test_p3(self):
        cert = perron(distance_matrix(Graph.path(3)), 1e-9)
        # characteristic polynomial of [[0,1,2],[1,0,1],[2,1,0]] is -(t+2)(t^2-2t-2)
        assert cert.contains(1 + math.sqrt(3))
        assert cert.width <= 1e-9

    def test_k122(self):
        cert = perron(distance_matrix(complete_odd_multipartite(5)))
        assert cert.contains(2 + 2 * math.sqrt(2))

    def test_wheel6(self):
        cert = perron(distance_matrix(wheel(6)))
        assert cert.contains(3 + math.sqrt(14))

    def test_vector_positive_unit(self):
        cert = perron(distance_matrix(Graph.path(5)))
        assert np.all(cert.vector > 0)
        assert abs(np.linalg.norm(cert.vector) - 1) < 1e-14
        assert cert.lambda_lo <= cert.lambda_hi

    def test_bounds_match_stored_vector(self):
        d = distance_matrix(Graph.path(6))
        cert = perron(d)
        ratios = (d.d @ cert.vector) / cert.vector
        assert cert.lambda_lo <= ratios.min() and ratios.max() <= cert.lambda_hi
        assert ratios.min() - cert.lambda_lo < 1e-12
        assert cert.lambda_hi - ratios.max() < 1e-12

    def test_deterministic(self):
        d = distance_matrix(Graph.path(7))
        a, b = perron(d), perron(d)
        assert (a.lambda_lo, a.lambda_hi, a.iterations) == (b.lambda_lo, b.lambda_hi, b.iterations)
        assert np.array_equal(a.vector, b.vector)

    def test_n1_rejected(self):
        with pytest.raises(DegenerateSizeError):
            perron(distance_matrix(Graph.empty(1)))

    def test_cap_exceeded(self, monkeypatch):
        monkeypatch.setattr(spectral, "iteration_cap", lambda n, tol: 2)
        with pytest.raises(ConvergenceError) as info:
            perron(distance_matrix(Graph.path(8)), 1e-12)
        assert info.value.gap > 1e-12

    def test_bad_tol(self):
        with pytest.raises(ValueError):
            perron(distance_matrix(Graph.path(3)), 0.0)

    def test_oracle_on_small_corpus(self):
        for g in small_corpus(6):
            d = distance_matrix(g)
            cert = perron(d)
            lam = eig_oracle(d)
            # the oracle itself carries a few ulps of error
            slack = 4 * np.finfo(float).eps * lam
            assert cert.lambda_lo - slack <= lam <= cert.lambda_hi + slack, g

    def test_rayleigh_and_row_sum_bounds(self):
        for g in small_corpus(6):
            d = distance_matrix(g)
            t = transmissions(d)
            cert = perron(d)
            assert 2 * t.wiener / g.n <= cert.lambda_hi
            assert cert.lambda_lo <= t.d_max

    def test_transmission_regular_contains_row_sum(self):
        for g in [Graph.cycle(4), Graph.complete(4), Graph.cycle(5), Graph.cycle(6), Graph.complete(2)]:
            d = distance_matrix(g)
            t = transmissions(d)
            assert t.transmission_regular
            assert perron(d).contains(t.d_max)


def test_collatz_wielandt_exact_rounding():
    d = np.array([[0, 1], [1, 0]])
    x = np.array([0.1, 0.3])
    lo, hi = collatz_wielandt_bounds(d, x)
    # exact ratios are 3 and 1/3 of the binary values of 0.3/0.1
    from fractions import Fraction
    a, b = Fraction(0.1), Fraction(0.3)
    assert Fraction(lo) <= a / b <= Fraction(hi)
    assert Fraction(lo) <= b / a <= Fraction(hi)


class TestRayleighIdentity:
    @given(graphs(min_n=2, max_n=8, connected=True))
    def test_uniform_vector(self, g):
        d = distance_matrix(g)
        x = np.full(g.n, 1 / math.sqrt(g.n))
        assert rayleigh_identity_residual(d, x, transmissions(d).d_max) <= 1e-12

    def test_p3_perron_vector(self):
        d = distance_matrix(Graph.path(3))
        assert rayleigh_identity_residual(d, perron(d).vector, 3) <= 1e-9

    def test_k4_random_vector(self, rng):
        d = distance_matrix(Graph.complete(4))
        for _ in range(20):
            x = np.array([rng.uniform(0.1, 1) for _ in range(4)])
            x /= np.linalg.norm(x)
            assert rayleigh_identity_residual(d, x, 3) <= 1e-12

    def test_corpus_perron_vectors(self):
        for g in small_corpus(7):
            d = distance_matrix(g)
            assert rayleigh_identity_residual(d, perron(d).vector, transmissions(d).d_max) <= 1e-9

    @pytest.mark.parametrize("x", [[0.6, 0.8, 0.1], [1.0, 0.0, 0.0], [-0.6, 0.8, 0.0]])
    def test_preconditions(self, x):
        with pytest.raises(ValueError):
            rayleigh_identity_residual(distance_matrix(Graph.path(3)), x, 3)


class TestQuotient:
    def test_k122(self):
        q = quotient_matrix(distance_matrix(complete_odd_multipartite(5)), [[0], [1, 2, 3, 4]])
        assert q.equitable
        assert q.q.tolist() == [[0, 4], [1, 4]]

    def test_wheel6(self):
        q = quotient_matrix(distance_matrix(wheel(6)), [[0], [1, 2, 3, 4, 5]])
        assert q.equitable
        assert q.q.tolist() == [[0, 5], [1, 6]]

    def test_p4_ends_middles_is_equitable(self):
        # ends see (3, 3) and middles see (3, 1): constant row sums per block
        d = distance_matrix(Graph.path(4))
        q = quotient_matrix(d, [[0, 3], [1, 2]])
        assert q.equitable
        assert q.q.tolist() == [[3, 3], [3, 1]]
        assert perron(d).contains(2 + math.sqrt(10))

    def test_p4_halves_not_equitable(self):
        q = quotient_matrix(distance_matrix(Graph.path(4)), [[0, 1], [2, 3]])
        assert not q.equitable
        assert q.q.tolist() == [[1, 4], [4, 1]]

    @pytest.mark.parametrize("partition", [[[0], [1]], [[0, 1], [1, 2]], [[], [0, 1, 2]], [[0, 1, 2, 3]]])
    def test_invalid_partition(self, partition):
        with pytest.raises(ValueError):
            quotient_matrix(distance_matrix(Graph.path(3)), partition)

    def test_equitable_root_inside_enclosure(self):
        for g in small_corpus(6):
            d = distance_matrix(g)
            for v in range(g.n):
                q = quotient_matrix(d, [[v], [u for u in range(g.n) if u != v]])
                if q.equitable:
                    assert perron(d).contains(largest_eig_2x2(q))


class TestLargestEig2x2:
    def test_lemma_matrices(self):
        assert largest_eig_2x2([[0, 4], [1, 4]]) == pytest.approx(2 + 2 * math.sqrt(2), abs=1e-14)
        assert largest_eig_2x2([[0, 5], [1, 6]]) == pytest.approx(3 + math.sqrt(14), abs=1e-14)

    def test_scalar(self):
        assert largest_eig_2x2([[2.5, 0], [0, 2.5]]) == 2.5

    def test_wrong_shape(self):
        with pytest.raises(ValueError):
            largest_eig_2x2(np.eye(3))

    def test_matches_numpy(self, rng):
        for _ in range(50):
            m = np.array([[rng.uniform(-5, 5), rng.uniform(0, 5)], [rng.uniform(0, 5), rng.uniform(-5, 5)]])
            assert largest_eig_2x2(m) == pytest.approx(max(np.linalg.eigvals(m).real))
