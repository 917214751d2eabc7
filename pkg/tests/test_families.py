import math

import pytest

from distspec.families import (
    DVDR_EVEN,
    ODD_MULTIPARTITE,
    DvdrSpec,
    closed_form_lambda1,
    complete_odd_multipartite,
    cycle_partitions,
    disjoint_cycles,
    dvdr,
    enumerate_n_minus_4_dvdr,
    star,
    wheel,
)
from distspec.graph_core import Graph, canonical_form, complement, distance_matrix, is_connected, is_isomorphic, transmissions
from distspec.spectral import perron


class TestOddMultipartite:
    def test_n3_is_p3(self):
        assert is_isomorphic(complete_odd_multipartite(3), Graph.path(3))

    def test_n5_degrees(self):
        g = complete_odd_multipartite(5)
        assert g.degrees() == [4, 3, 3, 3, 3]
        assert not g.has_edge(1, 2) and not g.has_edge(3, 4)

    def test_n7_degrees(self):
        assert sorted(complete_odd_multipartite(7).degrees(), reverse=True) == [6, 5, 5, 5, 5, 5, 5]

    @pytest.mark.parametrize("n", [1, 2, 4, 6])
    def test_rejects(self, n):
        with pytest.raises(ValueError):
            complete_odd_multipartite(n)

    @pytest.mark.parametrize("n", [3, 5, 7, 9])
    def test_transmissions(self, n):
        t = transmissions(distance_matrix(complete_odd_multipartite(n)))
        assert t.d_max == n
        assert t.transmissions[0] == n - 1
        assert set(t.transmissions[1:]) == {n}


class TestDvdr:
    def test_star(self):
        g = dvdr(Graph.empty(3))
        assert g.degrees() == [3, 1, 1, 1]
        assert g == star(4)

    def test_wheel(self):
        g = dvdr(Graph.cycle(5))
        assert g.degree(0) == 5 and set(g.degrees()[1:]) == {3}
        assert g == wheel(6)

    def test_k5(self):
        g = dvdr(Graph.complete(4))
        assert g == Graph.complete(5)
        assert transmissions(distance_matrix(g)).transmission_regular

    def test_non_regular_base(self):
        with pytest.raises(ValueError):
            dvdr(Graph.path(3))

    def test_spec_type(self):
        spec = DvdrSpec(6, 2, Graph.cycle(5))
        assert spec.build() == wheel(6)
        with pytest.raises(ValueError):
            DvdrSpec(6, 3, Graph.cycle(5))


class TestEnumerateDvdr:
    def test_n4(self):
        (g,) = enumerate_n_minus_4_dvdr(4)
        assert is_isomorphic(g, star(4))

    def test_n6(self):
        (g,) = enumerate_n_minus_4_dvdr(6)
        assert is_isomorphic(g, wheel(6))

    def test_n8(self):
        gs = enumerate_n_minus_4_dvdr(8)
        assert len(gs) == 2
        bases = {canonical_form(complement(g.delete_vertex(0))) for g in gs}
        assert bases == {canonical_form(Graph.cycle(7)), canonical_form(disjoint_cycles([3, 4]))}

    def test_n10_count(self):
        assert sorted(cycle_partitions(9)) == [(3, 3, 3), (3, 6), (4, 5), (9,)]
        assert len(enumerate_n_minus_4_dvdr(10)) == 4

    @pytest.mark.parametrize("n", [3, 5, 2])
    def test_rejects(self, n):
        with pytest.raises(ValueError):
            enumerate_n_minus_4_dvdr(n)

    @pytest.mark.parametrize("n", [4, 6, 8, 10])
    def test_structure(self, n):
        gs = enumerate_n_minus_4_dvdr(n)
        assert len({canonical_form(g) for g in gs}) == len(gs)
        for g in gs:
            d = distance_matrix(g)
            t = transmissions(d)
            assert t.d_max == n + 1
            assert t.transmissions[0] == n - 1
            assert d.diameter == 2
            assert set(g.delete_vertex(0).degrees()) == {n - 4}

    def test_members_connected_non_regular(self):
        members = [complete_odd_multipartite(n) for n in (3, 5, 7, 9)]
        members += [g for n in (4, 6, 8, 10) for g in enumerate_n_minus_4_dvdr(n)]
        for g in members:
            assert is_connected(g)
            assert not transmissions(distance_matrix(g)).transmission_regular


class TestClosedForms:
    def test_values(self):
        assert closed_form_lambda1(3, ODD_MULTIPARTITE) == pytest.approx(1 + math.sqrt(3), abs=1e-14)
        assert closed_form_lambda1(5, ODD_MULTIPARTITE) == pytest.approx(2 + 2 * math.sqrt(2), abs=1e-14)
        assert closed_form_lambda1(6, DVDR_EVEN) == pytest.approx(3 + math.sqrt(14), abs=1e-14)

    def test_parity_mismatch(self):
        with pytest.raises(ValueError):
            closed_form_lambda1(6, ODD_MULTIPARTITE)
        with pytest.raises(ValueError):
            closed_form_lambda1(5, DVDR_EVEN)

    @pytest.mark.parametrize("n", [3, 5, 7, 9, 11])
    def test_inside_enclosure_odd(self, n):
        cert = perron(distance_matrix(complete_odd_multipartite(n)))
        assert cert.contains(closed_form_lambda1(n, ODD_MULTIPARTITE))

    @pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
    def test_inside_enclosure_even(self, n):
        for g in enumerate_n_minus_4_dvdr(n):
            assert perron(distance_matrix(g)).contains(closed_form_lambda1(n, DVDR_EVEN))
