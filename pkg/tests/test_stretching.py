import numpy as np
import pytest

from girthstretch.errors import (
    AcyclicGraphError,
    EmptyIncidenceError,
    NotConnectedError,
)
from girthstretch.graph import ACYCLIC, Graph, girth, is_connected
from girthstretch.stretching import (
    CycleIncidence,
    StretchMethod,
    rebuild_incidence,
    select_edge,
    stretch,
)
from tests.oracles import bowtie, petersen, random_connected_graph


def c6_with_chord():
    g = Graph.cycle(6)
    g.add_edge(0, 3)
    return g


class TestCycleIncidence:
    def test_c5_single_row(self):
        inc = rebuild_incidence(Graph.cycle(5))
        assert inc.n_rows == 1 and inc.n_columns == 5

    def test_petersen_rows(self):
        assert rebuild_incidence(petersen()).n_rows == 12

    def test_k25_triangle_rows(self):
        assert rebuild_incidence(Graph.complete(25)).n_rows == 2300

    def test_acyclic_raises(self):
        with pytest.raises(AcyclicGraphError):
            rebuild_incidence(Graph.path(5))

    def test_remove_edge_drops_rows_and_columns(self):
        inc = rebuild_incidence(c6_with_chord())  # two 4-cycles share (0,3)
        assert inc.n_rows == 2
        inc.remove_edge((0, 3))
        assert inc.n_rows == 0 and inc.n_columns == 0

    def test_remove_edge_keeps_other_rows(self):
        inc = rebuild_incidence(c6_with_chord())
        inc.remove_edge((1, 2))  # kills only the 0-1-2-3 cycle
        assert inc.n_rows == 1
        assert inc.weight((0, 3)) == 1


class TestSelectEdge:
    def test_k4_all_edges_tied(self):
        inc = rebuild_incidence(Graph.complete(4))
        for e in inc.columns():
            assert inc.weight(e) == 2
        seen = {select_edge(inc, StretchMethod.MOST_CYCLES, s) for s in range(40)}
        assert seen == set(inc.columns())

    def test_bowtie_every_edge_weight_one(self):
        inc = rebuild_incidence(bowtie())
        assert all(inc.weight(e) == 1 for e in inc.columns())
        assert select_edge(inc, StretchMethod.MOST_CYCLES, 0) in inc.columns()

    def test_chord_is_most_cycles_choice(self):
        inc = rebuild_incidence(c6_with_chord())
        for seed in range(10):
            assert select_edge(inc, StretchMethod.MOST_CYCLES, seed) == (0, 3)

    def test_least_cycles_avoids_chord(self):
        inc = rebuild_incidence(c6_with_chord())
        for seed in range(10):
            assert select_edge(inc, StretchMethod.LEAST_CYCLES, seed) != (0, 3)

    def test_empty_incidence_raises(self):
        inc = CycleIncidence([])
        with pytest.raises(EmptyIncidenceError):
            select_edge(inc, StretchMethod.RANDOM, 0)


class TestStretch:
    def test_target_three_is_noop(self):
        for method in StretchMethod:
            report = stretch(Graph.complete(6), 3, method, 0)
            assert report.removed == []
            assert report.graph.m == 15

    def test_k4_to_girth_4_gives_c4(self):
        for seed in range(10):
            report = stretch(Graph.complete(4), 4, StretchMethod.MOST_CYCLES,
                             seed)
            out = report.graph
            assert len(report.removed) == 2
            assert girth(out) == 4 and out.m == 4 and is_connected(out)

    def test_c6_with_chord_any_method(self):
        for method in StretchMethod:
            for seed in range(5):
                report = stretch(c6_with_chord(), 6, method, seed)
                out = report.graph
                assert girth(out) >= 6
                assert is_connected(out)

    def test_c6_with_chord_most_cycles_removes_chord(self):
        report = stretch(c6_with_chord(), 6, StretchMethod.MOST_CYCLES, 0)
        assert report.removed == [(0, 3)]
        assert girth(report.graph) == 6

    def test_disconnected_rejected(self):
        g = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
        with pytest.raises(NotConnectedError):
            stretch(g, 4, StretchMethod.RANDOM, 0)

    def test_girth_trace_non_decreasing(self):
        rng = np.random.default_rng(31)
        for _ in range(10):
            g = random_connected_graph(14, 0.35, rng)
            report = stretch(g, 7, StretchMethod.RANDOM, rng)
            trace = [report.start_girth] + report.girth_trace
            assert all(a <= b for a, b in zip(trace, trace[1:]))
            assert report.final_girth >= 7  # ACYCLIC satisfies any target

    def test_replay_reproduces_output_and_keeps_connectivity(self):
        rng = np.random.default_rng(32)
        g = random_connected_graph(16, 0.3, rng)
        report = stretch(g, 6, StretchMethod.LEAST_CYCLES, 5)
        h = g.copy()
        for u, v in report.removed:
            h.remove_edge(u, v)
            assert is_connected(h)
        assert h == report.graph

    def test_only_shortest_cycle_edges_removed(self):
        # Replay and confirm each removed edge sat on a shortest cycle.
        from girthstretch.graph import shortest_cycles

        rng = np.random.default_rng(33)
        g = random_connected_graph(12, 0.4, rng)
        report = stretch(g, 5, StretchMethod.MOST_CYCLES, 7)
        h = g.copy()
        for u, v in report.removed:
            on_cycle = {
                frozenset((c[i], c[(i + 1) % len(c)]))
                for c in shortest_cycles(h)
                for i in range(len(c))
            }
            assert frozenset((u, v)) in on_cycle
            h.remove_edge(u, v)

    def test_deterministic(self):
        g = random_connected_graph(15, 0.3, np.random.default_rng(34))
        r1 = stretch(g, 6, StretchMethod.RANDOM, 99)
        r2 = stretch(g, 6, StretchMethod.RANDOM, 99)
        assert r1.removed == r2.removed and r1.girth_trace == r2.girth_trace

    def test_least_cycles_may_reach_acyclic(self):
        # Aggressive stretching may exhaust all cycles; that satisfies the
        # target and is flagged on the report.
        g = Graph.complete(5)
        report = stretch(g, 10, StretchMethod.LEAST_CYCLES, 3)
        assert report.final_girth >= 10
        if report.final_girth == ACYCLIC:
            assert report.became_acyclic

    def test_log_lines_shape(self):
        report = stretch(Graph.complete(4), 4, StretchMethod.MOST_CYCLES, 0)
        lines = report.to_log_lines()
        assert len(lines) == len(report.removed)
        assert all(len(ln.split()) == 5 for ln in lines)
