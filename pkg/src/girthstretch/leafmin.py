"""Leaf minimisation: add edges to reduce degree-<2 vertices, girth-safely.

Only pairs at distance >= girth_floor - 1 are eligible, so every added edge
closes a cycle no shorter than the floor. Leaf-leaf pairs are exhausted
before leaf-nonleaf pairs are considered.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

import numpy as np

from . import graph as G
from .errors import NotConnectedError
from .seeds import SeedLike, as_generator


class LeafMinMethod(str, Enum):
    RANDOM = "random"
    CLOSEST = "closest"
    FURTHEST = "furthest"
    NONE = "none"  # experiment arm without leaf minimisation


class Phase(str, Enum):
    LEAF_LEAF = "leaf-leaf"
    LEAF_NONLEAF = "leaf-nonleaf"


def _leaves(g: G.Graph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) < 2]


def eligible_pairs(
    g: G.Graph,
    girth_floor: int,
    phase: Phase,
    dist: np.ndarray | None = None,
) -> list[tuple[int, int]]:
    """Candidate pairs for one phase, at distance >= girth_floor - 1."""
    if dist is None:
        dist = G.distance_matrix(g)
    leaves = _leaves(g)
    leaf_set = set(leaves)
    min_d = girth_floor - 1
    pairs = []
    if Phase(phase) is Phase.LEAF_LEAF:
        for i, u in enumerate(leaves):
            for v in leaves[i + 1 :]:
                if dist[u, v] >= min_d:
                    pairs.append(G.canonical_edge(u, v))
    else:
        for u in leaves:
            for v in range(g.n):
                if v not in leaf_set and dist[u, v] >= min_d:
                    pairs.append(G.canonical_edge(u, v))
    return sorted(set(pairs))


@dataclass
class LeafMinReport:
    girth_floor: int
    method: LeafMinMethod
    leaves_before: int
    added: list[tuple[tuple[int, int], Phase]] = field(default_factory=list)
    leaves_after: int = 0
    graph: G.Graph | None = None

    @property
    def edges_added(self) -> int:
        return len(self.added)

    def to_log_lines(self) -> list[str]:
        return [
            f"{i} {u} {v} {phase.value}"
            for i, ((u, v), phase) in enumerate(self.added)
        ]


def _pick(pairs, dist, method: LeafMinMethod, rng) -> tuple[int, int]:
    if method is LeafMinMethod.RANDOM:
        return pairs[int(rng.integers(len(pairs)))]
    ds = [dist[u, v] for u, v in pairs]
    best = min(ds) if method is LeafMinMethod.CLOSEST else max(ds)
    tied = [p for p, d in zip(pairs, ds) if d == best]
    return tied[int(rng.integers(len(tied)))]


def minimise_leaves(
    g: G.Graph,
    girth_floor: int,
    method: LeafMinMethod,
    seed: SeedLike = None,
) -> LeafMinReport:
    """Two-phase greedy edge addition; never drops girth below the floor."""
    if not G.is_connected(g):
        raise NotConnectedError("leaf minimisation requires a connected graph")
    method = LeafMinMethod(method)
    rng = as_generator(seed)
    h = g.copy()
    report = LeafMinReport(girth_floor, method, len(_leaves(h)), graph=h)
    if method is not LeafMinMethod.NONE:
        for phase in (Phase.LEAF_LEAF, Phase.LEAF_NONLEAF):
            while True:
                dist = G.distance_matrix(h)
                pairs = eligible_pairs(h, girth_floor, phase, dist)
                if not pairs:
                    break
                u, v = _pick(pairs, dist, method, rng)
                h.add_edge(u, v)
                report.added.append(((u, v), phase))
    report.leaves_after = len(_leaves(h))
    return report
