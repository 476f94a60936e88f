"""Girth stretching and convergence-optimised topologies for distributed averaging."""

from .graph import (
    ACYCLIC,
    UNREACHABLE,
    CycleSet,
    Graph,
    canonical_edge,
    count_cycles_of_length,
    cycles_of_length,
    distance_matrix,
    from_edge_list,
    girth,
    is_connected,
    leaf_count,
    moore_min_nodes,
    non_bridge_edges,
    read_graph,
    shortest_cycles,
    to_edge_list,
    write_graph,
)
from .metrics import (
    Heuristic,
    algebraic_connectivity,
    closeness_centrality,
    eigenratio,
    evaluate,
    global_efficiency,
    laplacian,
    laplacian_spectrum,
)
from .generators import (
    BAParams,
    ERParams,
    GeoParams,
    WSParams,
    generate,
    generate_connected,
    sample_params,
)
from .stretching import CycleIncidence, StretchMethod, StretchReport, stretch
from .leafmin import LeafMinMethod, LeafMinReport, Phase, minimise_leaves
from .optimizer import (
    Move,
    MoveKind,
    OptimizeReport,
    addition_candidates,
    greedy_step,
    optimise,
    removal_candidates,
)
from .gossip import (
    GossipOutcome,
    convergence_time,
    error_norm,
    mean_deviation_norm,
    run_instance,
)
from .harness import ExperimentConfig, run_pipeline, run_sweep, seed_for

__version__ = "0.1.0"
