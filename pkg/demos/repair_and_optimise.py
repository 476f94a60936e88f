"""The full pipeline on one graph: stretch, repair leaves, optimise.

Stretching to a high girth strips the graph down and can leave degree-1
vertices; leaf minimisation adds long-range edges back without creating
short cycles, and the greedy optimiser then climbs a convergence heuristic
under the same girth floor.
"""

from girthstretch import (
    ERParams,
    Heuristic,
    LeafMinMethod,
    StretchMethod,
    evaluate,
    generate_connected,
    girth,
    leaf_count,
    minimise_leaves,
    optimise,
    stretch,
)

FLOOR = 6

graph, _ = generate_connected(ERParams(n=30, p=0.4), seed=21)
print(f"generated: m={graph.m} girth={girth(graph)}")

stretched = stretch(graph, FLOOR, StretchMethod.MOST_CYCLES, seed=21).graph
print(f"stretched: m={stretched.m} girth={girth(stretched)} "
      f"leaves={leaf_count(stretched)}")

repaired = minimise_leaves(stretched, FLOOR, LeafMinMethod.FURTHEST,
                           seed=21).graph
print(f"repaired:  m={repaired.m} girth={girth(repaired)} "
      f"leaves={leaf_count(repaired)}")

for kind in Heuristic:
    report = optimise(repaired, FLOOR, kind, seed=21)
    print(f"{kind.value:>22}: {report.edges_changed:2d} moves, "
          f"{report.initial_score:.4f} -> {report.final_score:.4f} "
          f"(girth stays {girth(report.graph)})")

best = optimise(repaired, FLOOR, Heuristic.GLOBAL_EFFICIENCY, seed=21).graph
print(f"eigenratio of the efficiency-optimised graph: "
      f"{evaluate(best, Heuristic.EIGENRATIO):.4f}")
