"""Adjacency rule, edge classification, and the recursive-construction oracle."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, strategies as st

from aqcist import (
    AugmentedCube,
    EdgeKind,
    InvalidVertexError,
    NotAdjacentError,
    UnsupportedDimensionError,
    aq_edges,
    are_adjacent,
    build_recursive,
    classify_edge,
    graph_stats,
    neighbors,
)
from aqcist.topology import (
    apply_edge_kind,
    format_vertex,
    from_paper_label,
    paper_label,
    parse_vertex,
)


def bits(s: str) -> int:
    return int(s, 2)


class TestAdjacency:
    def test_listed_edges(self):
        assert are_adjacent(5, bits("00000"), bits("00001"))
        # agree on bit 1, differ on bits 2..5
        assert are_adjacent(5, bits("00110"), bits("01001"))
        assert not are_adjacent(5, bits("00000"), bits("00110"))

    def test_self_loop(self):
        assert not are_adjacent(5, 7, 7)

    def test_exhaustive_case_check(self):
        # independent oracle: try every k for both clauses explicitly
        def slow_adjacent(n, u, v):
            ubits = [(u >> (n - i)) & 1 for i in range(1, n + 1)]
            vbits = [(v >> (n - i)) & 1 for i in range(1, n + 1)]
            for k in range(1, n + 1):
                if all(ubits[i] != vbits[i] if i == k - 1 else ubits[i] == vbits[i]
                       for i in range(n)):
                    return True
                if all(ubits[i] == vbits[i] for i in range(k - 1)) and \
                        all(ubits[i] != vbits[i] for i in range(k - 1, n)):
                    return True
            return False

        for n in (1, 2, 3, 5):
            for u in range(2**n):
                for v in range(2**n):
                    assert are_adjacent(n, u, v) == slow_adjacent(n, u, v), (n, u, v)

    def test_dimension_validation(self):
        with pytest.raises(InvalidVertexError):
            are_adjacent(3, 8, 0)
        with pytest.raises(UnsupportedDimensionError):
            are_adjacent(0, 0, 0)
        with pytest.raises(UnsupportedDimensionError):
            are_adjacent(31, 0, 1)

    @given(st.integers(1, 8), st.data())
    def test_symmetric_and_irreflexive(self, n, data):
        u = data.draw(st.integers(0, 2**n - 1))
        v = data.draw(st.integers(0, 2**n - 1))
        assert are_adjacent(n, u, v) == are_adjacent(n, v, u)
        assert not are_adjacent(n, u, u)


class TestNeighbors:
    def test_aq1_is_k2(self):
        assert neighbors(1, 0) == [1]
        assert neighbors(1, 1) == [0]

    def test_degree(self):
        assert len(neighbors(5, 0)) == 9

    def test_aq3_origin(self):
        got = set(neighbors(3, 0))
        assert got == {bits("001"), bits("010"), bits("100"), bits("011"), bits("111")}

    @given(st.integers(1, 9), st.data())
    def test_neighbors_match_adjacency(self, n, data):
        u = data.draw(st.integers(0, 2**n - 1))
        via_scan = {v for v in range(2**n) if are_adjacent(n, u, v)}
        assert set(neighbors(n, u)) == via_scan
        assert len(neighbors(n, u)) == 2 * n - 1


class TestEdgeEnumeration:
    @pytest.mark.parametrize("n,count", [(1, 1), (2, 6), (3, 20), (5, 144)])
    def test_edge_counts(self, n, count):
        assert aq_edges(n).shape == (count, 2)
        assert build_recursive(n).shape == (count, 2)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_recursive_matches_closed_form(self, n):
        assert np.array_equal(aq_edges(n), build_recursive(n))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_regular(self, n):
        deg = np.bincount(aq_edges(n).ravel(), minlength=2**n)
        assert (deg == 2 * n - 1).all()

    def test_cap(self):
        with pytest.raises(UnsupportedDimensionError):
            build_recursive(21)
        assert build_recursive(5, max_dim=30).shape == (144, 2)


class TestClassification:
    def test_examples(self):
        assert classify_edge(5, bits("00000"), bits("10000")) == EdgeKind("hypercube", 1)
        assert classify_edge(5, bits("00000"), bits("11111")) == EdgeKind("complement", 1)
        assert classify_edge(5, bits("00110"), bits("01001")) == EdgeKind("complement", 2)

    def test_last_bit_flip_is_hypercube(self):
        # satisfies both clauses with k = n; reported as hypercube
        assert classify_edge(4, bits("0110"), bits("0111")) == EdgeKind("hypercube", 4)

    def test_non_adjacent_rejected(self):
        with pytest.raises(NotAdjacentError):
            classify_edge(5, bits("00000"), bits("00110"))
        with pytest.raises(NotAdjacentError):
            classify_edge(5, 3, 3)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_partition_and_reconstruction(self, n):
        for u, v in aq_edges(n):
            u, v = int(u), int(v)
            kind = classify_edge(n, u, v)
            assert 1 <= kind.split_dim <= n
            if kind.kind == "complement":
                assert kind.split_dim < n
            assert apply_edge_kind(n, u, kind) == v
            assert apply_edge_kind(n, v, kind) == u

    @pytest.mark.parametrize("n", range(1, 8))
    def test_hypercube_edges_form_qn(self, n):
        hyper = [(int(u), int(v)) for u, v in aq_edges(n)
                 if classify_edge(n, int(u), int(v)).kind == "hypercube"]
        assert len(hyper) == 2 ** (n - 1) * n
        deg = np.zeros(2**n, dtype=int)
        for u, v in hyper:
            assert (u ^ v).bit_count() == 1
            deg[u] += 1
            deg[v] += 1
        assert (deg == n).all()


class TestStats:
    @pytest.mark.parametrize("n,expected", [
        (1, (2, 1, 1)),
        (3, (8, 20, 5)),
        (5, (32, 144, 9)),
    ])
    def test_formula(self, n, expected):
        assert tuple(graph_stats(n)) == expected

    @pytest.mark.parametrize("n", range(1, 9))
    def test_edge_count_matches_recursive(self, n):
        assert graph_stats(n).edge_count == build_recursive(n).shape[0]

    def test_cube_object(self):
        aq = AugmentedCube(5)
        assert (aq.vertex_count, aq.edge_count, aq.degree) == (32, 144, 9)
        assert aq.are_adjacent(0, 31)
        assert aq.classify_edge(0, 31) == EdgeKind("complement", 1)


class TestLabels:
    def test_paper_label_offset(self):
        assert paper_label(bits("00000")) == 1
        assert paper_label(bits("11111")) == 32
        assert from_paper_label(17) == bits("10000")

    @given(st.integers(1, 30), st.data())
    def test_roundtrips(self, n, data):
        u = data.draw(st.integers(0, 2**n - 1))
        assert from_paper_label(paper_label(u)) == u
        assert parse_vertex(format_vertex(n, u), n) == u

    def test_parse_rejects_bad_labels(self):
        with pytest.raises(InvalidVertexError):
            parse_vertex("0012")
        with pytest.raises(InvalidVertexError):
            parse_vertex("010", 5)
        with pytest.raises(InvalidVertexError):
            from_paper_label(0)
