"""Convergence-speed heuristics: two spectral, two distance-based.

All four are maximised; higher values predict faster distributed averaging.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from . import graph as G
from .errors import (
    DegenerateSpectrumError,
    DisconnectedGraphError,
    DomainError,
    NumericalFailureError,
)

# Absolute tolerance for clamping lambda_1 and for connectivity-by-spectrum.
EIGEN_TOL = 1e-9


class Heuristic(str, Enum):
    EIGENRATIO = "eigenratio"
    ALGEBRAIC_CONNECTIVITY = "algebraic-connectivity"
    CLOSENESS_CENTRALITY = "closeness-centrality"
    GLOBAL_EFFICIENCY = "global-efficiency"


def laplacian(g: G.Graph) -> np.ndarray:
    """Degree-minus-adjacency Laplacian as a dense float matrix."""
    a = g.adjacency_matrix().astype(float)
    return np.diag(a.sum(axis=1)) - a


def laplacian_spectrum(g: G.Graph) -> np.ndarray:
    """Ascending Laplacian eigenvalues; lambda_1 clamped to exactly 0."""
    try:
        vals = np.linalg.eigvalsh(laplacian(g))
    except np.linalg.LinAlgError as exc:
        raise NumericalFailureError(str(exc)) from exc
    vals = np.sort(vals)
    if abs(vals[0]) < EIGEN_TOL:
        vals[0] = 0.0
    return vals


def algebraic_connectivity(g: G.Graph) -> float:
    """Second-smallest Laplacian eigenvalue; > 0 iff connected."""
    if g.n < 2:
        raise DomainError("algebraic connectivity needs n >= 2")
    lam2 = float(laplacian_spectrum(g)[1])
    return 0.0 if abs(lam2) < EIGEN_TOL else lam2


def eigenratio(g: G.Graph) -> float:
    """lambda_2 / lambda_n, in [0, 1]."""
    if g.n < 2:
        raise DomainError("eigenratio needs n >= 2")
    spec = laplacian_spectrum(g)
    lam_n = float(spec[-1])
    if lam_n < EIGEN_TOL:
        raise DegenerateSpectrumError("spectral radius is zero (edgeless graph)")
    lam2 = float(spec[1])
    if abs(lam2) < EIGEN_TOL:
        return 0.0
    return lam2 / lam_n


def closeness_centrality(g: G.Graph) -> float:
    """Mean over vertices of (n-1) / (sum of distances from the vertex)."""
    if g.n < 2:
        raise DomainError("closeness centrality needs n >= 2")
    d = G.distance_matrix(g)
    if np.isinf(d).any():
        raise DisconnectedGraphError("closeness is undefined with unreachable pairs")
    sums = d.sum(axis=1)
    return float(np.mean((g.n - 1) / sums))


def global_efficiency(g: G.Graph) -> float:
    """Mean inverse distance over ordered vertex pairs; unreachable counts 0."""
    if g.n < 2:
        raise DomainError("global efficiency needs n >= 2")
    d = G.distance_matrix(g)
    with np.errstate(divide="ignore"):
        inv = 1.0 / d
    np.fill_diagonal(inv, 0.0)
    inv[np.isinf(d)] = 0.0
    return float(inv.sum() / (g.n * (g.n - 1)))


_DISPATCH = {
    Heuristic.EIGENRATIO: eigenratio,
    Heuristic.ALGEBRAIC_CONNECTIVITY: algebraic_connectivity,
    Heuristic.CLOSENESS_CENTRALITY: closeness_centrality,
    Heuristic.GLOBAL_EFFICIENCY: global_efficiency,
}


def evaluate(g: G.Graph, kind: Heuristic) -> float:
    """Score a connected graph under one heuristic (higher is better)."""
    if not G.is_connected(g):
        raise DisconnectedGraphError("heuristics are evaluated on connected graphs")
    return _DISPATCH[Heuristic(kind)](g)
