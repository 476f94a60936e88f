"""Random graph generation for four families, retried until connected.

Families: Erdos-Renyi, Watts-Strogatz, Barabasi-Albert (star seed), and
random geometric graphs in the unit square. Parameter ranges are those that
make connectivity overwhelmingly likely; generation retries until connected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, ExhaustedAttemptsError
from .graph import Graph, is_connected
from .seeds import SeedLike, as_generator

FAMILIES = ("er", "ws", "ba", "geo")

DEFAULT_N_RANGE = (25, 100)
DEFAULT_MAX_ATTEMPTS = 1000


@dataclass(frozen=True)
class ERParams:
    n: int
    p: float
    family = "er"


@dataclass(frozen=True)
class WSParams:
    n: int
    k: int
    p: float
    family = "ws"


@dataclass(frozen=True)
class BAParams:
    n: int
    m: int
    family = "ba"


@dataclass(frozen=True)
class GeoParams:
    n: int
    r: float
    family = "geo"


FamilyParams = ERParams | WSParams | BAParams | GeoParams


def er_p_lower_bound(n: int) -> float:
    return math.log(n) / n


def geo_r_lower_bound(n: int) -> float:
    # Natural log, matching the Penrose connectivity threshold.
    return 1.1 * math.sqrt(math.log(n) / (n * math.pi))


def sample_params(
    family: str,
    seed: SeedLike,
    n_range: tuple[int, int] = DEFAULT_N_RANGE,
) -> FamilyParams:
    """Draw family parameters from their connectivity-friendly ranges."""
    rng = as_generator(seed)
    lo, hi = n_range
    n = int(rng.integers(lo, hi + 1))
    if family == "er":
        p_lo = er_p_lower_bound(n)
        return ERParams(n, p_lo + (1.0 - p_lo) * rng.random())
    if family == "ws":
        k = int(rng.integers(1, max(2, n // 2)))  # integer range [1, floor(n/2))
        return WSParams(n, k, float(rng.random()))
    if family == "ba":
        return BAParams(n, int(rng.integers(1, n)))
    if family == "geo":
        r_lo = geo_r_lower_bound(n)
        return GeoParams(n, r_lo + (1.0 - r_lo) * rng.random())
    raise DomainError(f"unknown family {family!r}")


def _generate_er(p: ERParams, rng: np.random.Generator) -> Graph:
    g = Graph(p.n)
    draws = rng.random(p.n * (p.n - 1) // 2)
    i = 0
    for u in range(p.n):
        for v in range(u + 1, p.n):
            if draws[i] < p.p:
                g.add_edge(u, v)
            i += 1
    return g


def _generate_ws(p: WSParams, rng: np.random.Generator) -> Graph:
    n, k = p.n, p.k
    g = Graph(n)
    for u in range(n):
        for i in range(1, k + 1):
            v = (u + i) % n
            if not g.has_edge(u, v):
                g.add_edge(u, v)
    # Rewire the far endpoint of each lattice edge with probability p,
    # to a uniform valid target; skip edges with no valid target left.
    for u in range(n):
        for i in range(1, k + 1):
            v = (u + i) % n
            if not g.has_edge(u, v):
                continue  # already rewired away
            if rng.random() >= p.p:
                continue
            candidates = [w for w in range(n) if w != u and not g.has_edge(u, w)]
            if not candidates:
                continue
            w = candidates[int(rng.integers(len(candidates)))]
            g.remove_edge(u, v)
            g.add_edge(u, w)
    return g


def _generate_ba(p: BAParams, rng: np.random.Generator) -> Graph:
    n, m = p.n, p.m
    if m >= n:
        raise DomainError(f"BA needs m < n, got m={m}, n={n}")
    g = Graph(n)
    for v in range(1, m + 1):  # star seed on m+1 nodes, centre 0
        g.add_edge(0, v)
    for new in range(m + 1, n):
        degs = np.array([g.degree(v) for v in range(new)], dtype=float)
        targets = rng.choice(new, size=m, replace=False, p=degs / degs.sum())
        for t in sorted(int(t) for t in targets):
            g.add_edge(new, t)
    return g


def _generate_geo(p: GeoParams, rng: np.random.Generator) -> Graph:
    pts = rng.random((p.n, 2))
    g = Graph(p.n)
    r2 = p.r * p.r
    for u in range(p.n):
        du = pts[u + 1 :] - pts[u]
        close = np.nonzero((du * du).sum(axis=1) <= r2)[0]
        for off in close:
            g.add_edge(u, u + 1 + int(off))
    return g


_GENERATORS = {
    ERParams: _generate_er,
    WSParams: _generate_ws,
    BAParams: _generate_ba,
    GeoParams: _generate_geo,
}


def generate(params: FamilyParams, seed: SeedLike) -> Graph:
    """One sample from the family; not necessarily connected."""
    return _GENERATORS[type(params)](params, as_generator(seed))


def generate_connected(
    params: FamilyParams,
    seed: SeedLike,
    max_attempts: int = DEFAULT_MAX_ATTEMPTS,
) -> tuple[Graph, int]:
    """Resample until connected; returns (graph, attempts used)."""
    if max_attempts < 1:
        raise DomainError("max_attempts must be >= 1")
    rng = as_generator(seed)
    for attempt in range(1, max_attempts + 1):
        g = generate(params, rng)
        if is_connected(g):
            return g, attempt
    raise ExhaustedAttemptsError(
        f"no connected {params} sample within {max_attempts} attempts"
    )
