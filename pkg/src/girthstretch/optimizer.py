"""Greedy steepest-ascent topology optimisation under girth/leaf constraints.

Each step evaluates every legal single-edge addition or removal on a scratch
copy and applies the best strictly-improving one. Legality is built into the
candidate sets: additions join pairs at distance >= girth_floor - 1, removals
take non-bridge edges whose endpoints both keep degree >= 2, so connectivity,
girth, and leaf count are preserved by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import graph as G
from . import metrics
from .errors import GirthViolationError, NotConnectedError
from .seeds import SeedLike, as_generator

# Relative improvement guard against eigensolver noise.
IMPROVEMENT_RTOL = 1e-12


class MoveKind(str, Enum):
    ADD = "add"
    REMOVE = "remove"


@dataclass(frozen=True)
class Move:
    kind: MoveKind
    edge: tuple[int, int]
    score_after: float


def removal_candidates(g: G.Graph) -> list[tuple[int, int]]:
    """Non-bridge edges whose endpoints both have degree >= 3."""
    return sorted(
        e
        for e in G.non_bridge_edges(g)
        if g.degree(e[0]) >= 3 and g.degree(e[1]) >= 3
    )


def addition_candidates(g: G.Graph, girth_floor: int) -> list[tuple[int, int]]:
    """Non-adjacent pairs at distance >= girth_floor - 1."""
    dist = G.distance_matrix(g)
    min_d = girth_floor - 1
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if dist[u, v] >= min_d and not g.has_edge(u, v)
    ]


def _legal_moves(g: G.Graph, girth_floor: int):
    for e in addition_candidates(g, girth_floor):
        yield MoveKind.ADD, e
    for e in removal_candidates(g):
        yield MoveKind.REMOVE, e


def _improves(score: float, current: float) -> bool:
    return score > current + IMPROVEMENT_RTOL * max(abs(current), 1.0)


def score_moves(
    g: G.Graph, girth_floor: int, kind: metrics.Heuristic
) -> list[tuple[MoveKind, tuple[int, int], float]]:
    """Heuristic score of every legal move, evaluated on a scratch copy."""
    scratch = g.copy()
    scored: list[tuple[MoveKind, tuple[int, int], float]] = []
    for move_kind, (u, v) in _legal_moves(g, girth_floor):
        if move_kind is MoveKind.ADD:
            scratch.add_edge(u, v)
        else:
            scratch.remove_edge(u, v)
        score = metrics.evaluate(scratch, kind)
        if move_kind is MoveKind.ADD:
            scratch.remove_edge(u, v)
        else:
            scratch.add_edge(u, v)
        scored.append((move_kind, (u, v), score))
    return scored


def _select(scored, current_score: float, rng) -> Move | None:
    if not scored:
        return None
    best = max(s for _, _, s in scored)
    if not _improves(best, current_score):
        return None
    tol = IMPROVEMENT_RTOL * max(abs(best), 1.0)
    tied = [(mk, e, s) for mk, e, s in scored if s >= best - tol]
    mk, e, s = tied[int(rng.integers(len(tied)))]
    return Move(mk, e, s)


def greedy_step(
    g: G.Graph,
    girth_floor: int,
    kind: metrics.Heuristic,
    seed: SeedLike = None,
    current_score: float | None = None,
) -> Move | None:
    """Best strictly-improving legal move, or None; ties uniform-random."""
    rng = as_generator(seed)
    if current_score is None:
        current_score = metrics.evaluate(g, kind)
    return _select(score_moves(g, girth_floor, kind), current_score, rng)


@dataclass
class OptimizeReport:
    girth_floor: int
    heuristic: metrics.Heuristic
    initial_score: float
    moves: list[Move] = field(default_factory=list)
    final_score: float = 0.0
    evaluations: int = 0
    truncated: bool = False
    graph: G.Graph | None = None

    @property
    def edges_changed(self) -> int:
        return len(self.moves)

    def to_log_lines(self) -> list[str]:
        return [
            f"{i} {m.kind.value} {m.edge[0]} {m.edge[1]} {m.score_after!r}"
            for i, m in enumerate(self.moves)
        ]


def optimise(
    g: G.Graph,
    girth_floor: int,
    kind: metrics.Heuristic,
    seed: SeedLike = None,
    max_steps: int | None = None,
) -> OptimizeReport:
    """Greedy ascent to a local optimum of the heuristic."""
    if not G.is_connected(g):
        raise NotConnectedError("optimisation requires a connected graph")
    if G.girth(g) < girth_floor:
        raise GirthViolationError(
            f"input girth {G.girth(g)} below floor {girth_floor}"
        )
    if max_steps is None:
        max_steps = 10 * g.n
    rng = as_generator(seed)
    h = g.copy()
    score = metrics.evaluate(h, kind)
    report = OptimizeReport(girth_floor, metrics.Heuristic(kind), score, graph=h)
    for _ in range(max_steps):
        scored = score_moves(h, girth_floor, kind)
        report.evaluations += len(scored)
        move = _select(scored, score, rng)
        if move is None:
            break
        if move.kind is MoveKind.ADD:
            h.add_edge(*move.edge)
        else:
            h.remove_edge(*move.edge)
        score = move.score_after
        report.moves.append(move)
    else:
        report.truncated = True
    report.final_score = score
    return report
