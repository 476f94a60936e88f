import math

import numpy as np
import pytest

from girthstretch.errors import AcyclicGraphError, DomainError
from girthstretch.graph import (
    ACYCLIC,
    Graph,
    count_cycles_of_length,
    cycles_of_length,
    distance_matrix,
    from_edge_list,
    girth,
    is_connected,
    leaf_count,
    moore_min_nodes,
    non_bridge_edges,
    shortest_cycles,
    to_adjacency_lines,
    to_edge_list,
)
from tests.oracles import (
    bowtie,
    brute_girth,
    enumerate_cycles,
    floyd_warshall,
    petersen,
    random_graph,
    removal_non_bridges,
)


class TestGraphBasics:
    def test_rejects_self_loop_and_duplicates(self):
        g = Graph(3)
        with pytest.raises(DomainError):
            g.add_edge(1, 1)
        g.add_edge(0, 1)
        with pytest.raises(DomainError):
            g.add_edge(1, 0)
        with pytest.raises(DomainError):
            g.add_edge(0, 5)

    def test_degree_matches_adjacency_and_matrix(self):
        g = bowtie()
        a = g.adjacency_matrix()
        for v in range(g.n):
            assert g.degree(v) == len(g.neighbors(v)) == a[v].sum()

    def test_incidence_product_is_laplacian(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            g = random_graph(7, 0.4, rng)
            if g.m == 0:
                continue
            b = g.incidence_matrix()
            a = g.adjacency_matrix()
            lap = np.diag(a.sum(axis=1)) - a
            assert (b @ b.T == lap).all()

    def test_copy_is_independent(self):
        g = Graph.cycle(4)
        h = g.copy()
        h.remove_edge(0, 1)
        assert g.has_edge(0, 1) and not h.has_edge(0, 1)


class TestGirth:
    def test_cycle_graph(self):
        assert girth(Graph.cycle(5)) == 5

    def test_star_is_acyclic(self):
        assert girth(Graph.star(10)) == ACYCLIC

    def test_petersen(self):
        assert girth(petersen()) == 5

    def test_acyclic_compares_above_any_finite_girth(self):
        assert ACYCLIC > 10**9
        assert girth(Graph.path(6)) >= 100  # vacuous girth constraint

    def test_matches_brute_force_on_random_graphs(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            g = random_graph(int(rng.integers(4, 9)), rng.uniform(0.1, 0.7), rng)
            assert girth(g) == brute_girth(g)


class TestCycles:
    def test_c6_single_shortest_cycle(self):
        cs = shortest_cycles(Graph.cycle(6))
        assert cs.length == 6 and len(cs) == 1

    def test_k4_triangles(self):
        cs = shortest_cycles(Graph.complete(4))
        assert cs.length == 3
        assert set(cs.cycles) == enumerate_cycles(Graph.complete(4), 3)
        assert len(cs) == 4

    def test_petersen_five_cycles(self):
        assert len(shortest_cycles(petersen())) == 12

    def test_acyclic_raises(self):
        with pytest.raises(AcyclicGraphError):
            shortest_cycles(Graph.star(4))

    def test_c5_has_no_4_cycles(self):
        assert len(cycles_of_length(Graph.cycle(5), 4)) == 0

    def test_k5_4_cycles(self):
        assert len(cycles_of_length(Graph.complete(5), 4)) == 15

    def test_triangle_counts_are_binomial(self):
        for n in range(3, 11):
            assert len(cycles_of_length(Graph.complete(n), 3)) == math.comb(n, 3)
            assert count_cycles_of_length(Graph.complete(n), 3) == math.comb(n, 3)

    def test_count_matches_enumeration(self):
        rng = np.random.default_rng(9)
        for _ in range(25):
            g = random_graph(8, 0.5, rng)
            for length in (3, 4, 5, 6):
                cyc = cycles_of_length(g, length)
                assert len(cyc) == count_cycles_of_length(g, length)
                assert set(cyc.cycles) == enumerate_cycles(g, length)

    def test_every_cycle_uses_graph_edges(self):
        g = petersen()
        for cyc in shortest_cycles(g):
            for i in range(len(cyc)):
                assert g.has_edge(cyc[i], cyc[(i + 1) % len(cyc)])

    def test_count_limit_stops_early(self):
        # K25 has 2300 triangles; the capped count must exceed the limit.
        c = count_cycles_of_length(Graph.complete(25), 3, limit=100)
        assert c > 100

    def test_length_below_three_rejected(self):
        with pytest.raises(DomainError):
            cycles_of_length(Graph.cycle(4), 2)


class TestDistances:
    def test_path_endpoints(self):
        d = distance_matrix(Graph.path(3))
        assert d[0, 2] == 2

    def test_complete_graph_all_ones(self):
        d = distance_matrix(Graph.complete(6))
        off = d[~np.eye(6, dtype=bool)]
        assert (off == 1).all()

    def test_petersen_diameter_two(self):
        assert distance_matrix(petersen()).max() == 2

    def test_matches_floyd_warshall(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            g = random_graph(8, 0.3, rng)
            assert np.array_equal(
                distance_matrix(g), np.array(floyd_warshall(g))
            )

    def test_metric_properties(self):
        rng = np.random.default_rng(4)
        for _ in range(15):
            g = random_graph(8, 0.4, rng)
            d = distance_matrix(g)
            assert np.array_equal(d, d.T)
            assert (np.diag(d) == 0).all()
            for u, v in g.edges():
                assert d[u, v] == 1
            finite = np.where(np.isinf(d), 1e9, d)
            for k in range(g.n):
                assert (finite <= finite[:, [k]] + finite[[k], :] + 1e-9).all()

    def test_removal_never_shrinks_addition_never_grows(self):
        rng = np.random.default_rng(6)
        for _ in range(15):
            g = random_graph(8, 0.5, rng)
            d = distance_matrix(g)
            edges = g.edges()
            if edges:
                h = g.copy()
                h.remove_edge(*edges[0])
                assert (distance_matrix(h) >= d - 1e-9).all()
            non_edges = [
                (u, v)
                for u in range(8)
                for v in range(u + 1, 8)
                if not g.has_edge(u, v)
            ]
            if non_edges:
                h = g.copy()
                h.add_edge(*non_edges[0])
                assert (distance_matrix(h) <= d + 1e-9).all()


class TestConnectivityAndBridges:
    def test_two_triangles_disconnected(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        assert not is_connected(g)

    def test_cycle_connected(self):
        assert is_connected(Graph.cycle(7))

    def test_single_vertex_connected(self):
        assert is_connected(Graph(1))

    def test_tree_has_no_cycle_edges(self):
        assert non_bridge_edges(Graph.path(8)) == set()

    def test_cycle_all_edges(self):
        assert non_bridge_edges(Graph.cycle(5)) == set(Graph.cycle(5).edges())

    def test_bowtie_all_edges(self):
        g = bowtie()
        assert non_bridge_edges(g) == removal_non_bridges(g) == set(g.edges())

    def test_matches_removal_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(40):
            g = random_graph(8, rng.uniform(0.15, 0.5), rng)
            assert non_bridge_edges(g) == removal_non_bridges(g)


class TestMooreBound:
    def test_petersen_extremal(self):
        assert moore_min_nodes(3, 5) == 10

    def test_even_branch(self):
        assert moore_min_nodes(3, 4) == 6

    def test_degree_two_is_cycle(self):
        for g in range(3, 12):
            assert moore_min_nodes(2, g) == g

    def test_monotone_in_both_arguments(self):
        for d in range(2, 6):
            for g in range(3, 9):
                assert moore_min_nodes(d + 1, g) >= moore_min_nodes(d, g)
                assert moore_min_nodes(d, g + 1) >= moore_min_nodes(d, g)

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            moore_min_nodes(1, 5)
        with pytest.raises(DomainError):
            moore_min_nodes(3, 2)


class TestLeafCount:
    def test_star(self):
        assert leaf_count(Graph.star(10)) == 10

    def test_cycle_has_none(self):
        assert leaf_count(Graph.cycle(8)) == 0

    def test_path_endpoints(self):
        assert leaf_count(Graph.path(5)) == 2


class TestSerialisation:
    def test_round_trip_bit_exact(self):
        rng = np.random.default_rng(8)
        for _ in range(10):
            g = random_graph(9, 0.4, rng)
            text = to_edge_list(g)
            h = from_edge_list(text)
            assert h == g
            assert to_edge_list(h) == text

    def test_header_mismatch_rejected(self):
        with pytest.raises(DomainError):
            from_edge_list("3 2\n0 1\n")

    def test_adjacency_export(self):
        assert to_adjacency_lines(Graph.path(3)) == "0: 1\n1: 0 2\n2: 1\n"
