"""Girth stretching: remove cycle edges until the girth reaches a target.

A sparse shortest-cycle x edge incidence structure is rebuilt whenever the
girth increases and patched incrementally in between: removing an edge drops
its column and every row (cycle) that contained it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from . import graph as G
from .errors import AcyclicGraphError, EmptyIncidenceError, NotConnectedError
from .seeds import SeedLike, as_generator


class StretchMethod(str, Enum):
    RANDOM = "random"
    LEAST_CYCLES = "least-cycles"
    MOST_CYCLES = "most-cycles"


class CycleIncidence:
    """Rows = current shortest cycles, columns = edges on >= 1 such cycle."""

    def __init__(self, cycles: list[tuple[int, ...]]):
        self.rows: dict[int, tuple[tuple[int, int], ...]] = {}
        self.edge_rows: dict[tuple[int, int], set[int]] = {}
        for rid, cyc in enumerate(cycles):
            edges = tuple(
                G.canonical_edge(cyc[i], cyc[(i + 1) % len(cyc)])
                for i in range(len(cyc))
            )
            self.rows[rid] = edges
            for e in edges:
                self.edge_rows.setdefault(e, set()).add(rid)

    @property
    def n_rows(self) -> int:
        return len(self.rows)

    @property
    def n_columns(self) -> int:
        return len(self.edge_rows)

    def columns(self) -> list[tuple[int, int]]:
        return sorted(self.edge_rows)

    def weight(self, edge: tuple[int, int]) -> int:
        return len(self.edge_rows[edge])

    def remove_edge(self, edge: tuple[int, int]) -> None:
        """Drop the edge's column and every row that contained it."""
        dead_rows = self.edge_rows.pop(edge)
        for rid in dead_rows:
            for e in self.rows.pop(rid):
                if e == edge:
                    continue
                rows = self.edge_rows.get(e)
                if rows is None:
                    continue
                rows.discard(rid)
                if not rows:
                    del self.edge_rows[e]


def rebuild_incidence(g: G.Graph) -> CycleIncidence:
    """Fresh incidence over the shortest cycles of the current graph."""
    return CycleIncidence(G.shortest_cycles(g).cycles)


def select_edge(
    inc: CycleIncidence, method: StretchMethod, seed: SeedLike
) -> tuple[int, int]:
    """Pick the next edge to remove; ties broken uniformly at random."""
    if inc.n_columns == 0:
        raise EmptyIncidenceError("no removable edges")
    rng = as_generator(seed)
    cols = inc.columns()
    method = StretchMethod(method)
    if method is StretchMethod.RANDOM:
        return cols[int(rng.integers(len(cols)))]
    weights = [inc.weight(e) for e in cols]
    best = min(weights) if method is StretchMethod.LEAST_CYCLES else max(weights)
    tied = [e for e, w in zip(cols, weights) if w == best]
    return tied[int(rng.integers(len(tied)))]


@dataclass
class StretchReport:
    """Audit trail of one stretch run; replaying ``removed`` reproduces ``graph``."""

    target_girth: int
    method: StretchMethod
    start_girth: float
    removed: list[tuple[int, int]] = field(default_factory=list)
    girth_trace: list[float] = field(default_factory=list)
    candidate_counts: list[int] = field(default_factory=list)
    graph: G.Graph | None = None

    @property
    def final_girth(self) -> float:
        return self.girth_trace[-1] if self.girth_trace else self.start_girth

    @property
    def became_acyclic(self) -> bool:
        return self.final_girth == G.ACYCLIC

    def to_log_lines(self) -> list[str]:
        """One removal per line: step, edge, girth after, candidates before."""
        return [
            f"{i} {u} {v} {girth} {cand}"
            for i, ((u, v), girth, cand) in enumerate(
                zip(self.removed, self.girth_trace, self.candidate_counts)
            )
        ]


def stretch(
    g: G.Graph,
    target_girth: int,
    method: StretchMethod,
    seed: SeedLike = None,
) -> StretchReport:
    """Remove shortest-cycle edges until girth >= target (Acyclic counts).

    The output stays connected: every removed edge lies on a cycle at the
    moment of removal, so it is never a bridge.
    """
    if not G.is_connected(g):
        raise NotConnectedError("stretching requires a connected graph")
    rng = as_generator(seed)
    h = g.copy()
    cur = G.girth(h)
    report = StretchReport(target_girth, StretchMethod(method), cur, graph=h)
    while cur < target_girth:
        try:
            inc = rebuild_incidence(h)
        except AcyclicGraphError:
            break
        while inc.n_rows > 0 and cur < target_girth:
            report.candidate_counts.append(inc.n_columns)
            e = select_edge(inc, method, rng)
            h.remove_edge(*e)
            inc.remove_edge(e)
            report.removed.append(e)
            if inc.n_rows > 0:
                report.girth_trace.append(cur)
            else:
                cur = G.girth(h)
                report.girth_trace.append(cur)
    return report
