"""Sequentialised asynchronous push-pull distributed averaging.

One round = one initiator activation: a uniformly random node and a
uniformly random neighbour both replace their values by the pair's mean.

Two stopping norms are available. The "initial" norm measures distance from
the initial value vector; under it, averaging of unequal values moves away
from the reference and generally never converges. The "mean" norm measures
distance from the constant vector at the initial mean and is the default
for experiments, since the protocol converges to that vector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import graph as G
from .errors import (
    DomainError,
    MaxRoundsExceededError,
    NotConnectedError,
    ZeroInitialNormError,
)
from .seeds import SeedLike, as_generator

NORM_INITIAL = "initial"
NORM_MEAN = "mean"

DEFAULT_THRESHOLD = 0.01
DEFAULT_MAX_ROUNDS = 10_000_000
DEFAULT_INSTANCES = 10

_BLOCK = 4096  # random draws consumed per block, for speed and determinism


def error_norm(current, initial) -> float:
    """||x_bar - x0||_2 / ||x0||_2, the deviation from the initial vector."""
    x = np.asarray(current, dtype=float)
    x0 = np.asarray(initial, dtype=float)
    denom = float(np.linalg.norm(x0))
    if denom == 0.0:
        raise ZeroInitialNormError("initial values all zero")
    return float(np.linalg.norm(x - x0)) / denom


def mean_deviation_norm(current, initial) -> float:
    """||x_bar - mu.1||_2 / ||x0||_2 with mu the initial mean."""
    x = np.asarray(current, dtype=float)
    x0 = np.asarray(initial, dtype=float)
    denom = float(np.linalg.norm(x0))
    if denom == 0.0:
        raise ZeroInitialNormError("initial values all zero")
    return float(np.linalg.norm(x - x0.mean())) / denom


@dataclass
class GossipOutcome:
    rounds: int
    final_norm: float
    trace: list[tuple[int, float]] | None = None
    values: np.ndarray | None = None


def draw_initial_values(n: int, rng) -> np.ndarray:
    """Integer node values uniform on [0, 50], as floats."""
    return rng.integers(0, 51, size=n).astype(float)


def run_instance(
    g: G.Graph,
    threshold: float = DEFAULT_THRESHOLD,
    seed: SeedLike = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    values=None,
    norm: str = NORM_MEAN,
    trace_stride: int = 0,
    strict: bool = True,
) -> GossipOutcome:
    """One averaging instance; rounds until the error norm drops below threshold.

    With ``strict=False`` an exhausted round budget returns the outcome so
    far instead of raising, which is useful for fixed-length runs.
    """
    if g.n < 2:
        raise DomainError("gossip needs n >= 2")
    if not G.is_connected(g):
        raise NotConnectedError("gossip requires a connected graph")
    if norm not in (NORM_INITIAL, NORM_MEAN):
        raise DomainError(f"unknown norm {norm!r}")
    rng = as_generator(seed)
    n = g.n
    if values is None:
        values = draw_initial_values(n, rng)
    x = [float(v) for v in values]
    if len(x) != n:
        raise DomainError("values length must equal vertex count")
    x0 = list(x)
    denom_sq = math.fsum(v * v for v in x0)
    if denom_sq == 0.0:
        # All-zero start: already at consensus; converged immediately.
        return GossipOutcome(0, 0.0, [(0, 0.0)] if trace_stride else None,
                             np.array(x))
    ref = x0 if norm == NORM_INITIAL else [math.fsum(x0) / n] * n
    target_ssd = (threshold * threshold) * denom_sq
    denom = math.sqrt(denom_sq)

    adj = [g.sorted_neighbors(v) for v in range(n)]
    degs = [len(a) for a in adj]
    ssd = math.fsum((xi - ri) ** 2 for xi, ri in zip(x, ref))
    trace: list[tuple[int, float]] | None = [] if trace_stride else None
    rounds = 0
    while True:
        if ssd < target_ssd:
            return GossipOutcome(
                rounds, math.sqrt(max(ssd, 0.0)) / denom, trace, np.array(x)
            )
        if rounds >= max_rounds:
            if strict:
                raise MaxRoundsExceededError(
                    f"no convergence within {max_rounds} rounds "
                    f"(norm {math.sqrt(max(ssd, 0.0)) / denom:.4g})"
                )
            return GossipOutcome(
                rounds, math.sqrt(max(ssd, 0.0)) / denom, trace, np.array(x)
            )
        initiators = rng.integers(0, n, size=_BLOCK)
        picks = rng.random(_BLOCK)
        for k in range(_BLOCK):
            if ssd < target_ssd or rounds >= max_rounds:
                break
            i = int(initiators[k])
            nbrs = adj[i]
            w = nbrs[int(picks[k] * degs[i])]
            xi = x[i]
            xw = x[w]
            m = (xi + xw) * 0.5
            ri = ref[i]
            rw = ref[w]
            ssd += (m - ri) ** 2 + (m - rw) ** 2 - (xi - ri) ** 2 - (xw - rw) ** 2
            x[i] = m
            x[w] = m
            rounds += 1
            if trace_stride and rounds % trace_stride == 0:
                trace.append((rounds, math.sqrt(max(ssd, 0.0)) / denom))
        # Re-anchor the incremental sum once per block to bound float drift.
        ssd = math.fsum((xi - ri) ** 2 for xi, ri in zip(x, ref))


def convergence_time(
    g: G.Graph,
    instances: int = DEFAULT_INSTANCES,
    threshold: float = DEFAULT_THRESHOLD,
    seed: SeedLike = None,
    max_rounds: int = DEFAULT_MAX_ROUNDS,
    norm: str = NORM_MEAN,
) -> float:
    """Mean rounds-to-convergence over independent instances.

    Each instance draws fresh integer initial values uniform on [0, 50].
    """
    if instances < 1:
        raise DomainError("instances must be >= 1")
    ss = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    children = ss.spawn(instances)
    totals = [
        run_instance(g, threshold, child, max_rounds, norm=norm).rounds
        for child in children
    ]
    return sum(totals) / instances
