"""Synthetic sweep-CSV fixtures matching the version-1 schema."""

import csv
import io

COLUMNS = [
    "schema_version", "combination_index", "repetition", "family",
    "girth_target", "stretch_method", "leafmin_method", "heuristic",
    "master_seed", "trial_seed", "n", "param_p", "param_k", "param_m",
    "param_r", "generate_attempts", "edges_before_stretch",
    "edges_after_stretch", "edges_removed_stretch", "girth_after_stretch",
    "leaves_after_stretch", "edges_added_leafmin", "leaves_after_leafmin",
    "edges_changed_opt", "heuristic_before_opt", "heuristic_after_opt",
    "convergence_rounds_mean", "census_lengths", "census_counts",
    "wall_generate", "wall_stretch", "wall_leafmin", "wall_optimize",
    "wall_gossip", "error_stage", "error_reason",
]

FAMILIES = ["er", "ws"]
STRETCH_METHODS = ["random", "least-cycles", "most-cycles"]
LEAFMIN_METHODS = ["random", "closest"]
HEURISTICS = ["eigenratio", "none"]
GIRTHS = [3, 4, 5, 6]
REPS = 3


def _row(**overrides):
    row = {c: "" for c in COLUMNS}
    row["schema_version"] = 1
    row.update(overrides)
    return row


def sweep_rows():
    """A deterministic grid with simple arithmetic values for every cell."""
    rows = []
    comb = 0
    for family in FAMILIES:
        for girth in GIRTHS:
            for sm in STRETCH_METHODS:
                for lm in LEAFMIN_METHODS:
                    for heur in HEURISTICS:
                        for rep in range(REPS):
                            sm_i = STRETCH_METHODS.index(sm)
                            removed = (girth - 3) * (sm_i + 1) + rep
                            rows.append(_row(
                                combination_index=comb,
                                repetition=rep,
                                family=family,
                                girth_target=girth,
                                stretch_method=sm,
                                leafmin_method=lm,
                                heuristic=heur,
                                master_seed=0,
                                trial_seed=comb * 100 + rep,
                                n=30,
                                generate_attempts=1,
                                edges_before_stretch=100,
                                edges_after_stretch=100 - removed,
                                edges_removed_stretch=removed,
                                girth_after_stretch=girth,
                                leaves_after_stretch=(girth - 3) * sm_i + rep,
                                edges_added_leafmin=girth + rep,
                                leaves_after_leafmin=rep,
                                edges_changed_opt=(
                                    "" if heur == "none" else girth * 2 + rep
                                ),
                                heuristic_before_opt=(
                                    "" if heur == "none" else 0.5 - girth * 0.01
                                ),
                                heuristic_after_opt=(
                                    "" if heur == "none" else 0.6 - girth * 0.01
                                ),
                                convergence_rounds_mean=100.0 * girth + rep,
                                census_lengths=f"{girth};{girth + 1}",
                                census_counts=f"{20 - girth};{15 - girth}",
                            ))
                        comb += 1
    return rows


def k25_census_row():
    """Census of a complete graph on 25 vertices; 6-cycles exceed the cap."""
    return _row(
        combination_index=999, repetition=0, family="er", girth_target=3,
        stretch_method="most-cycles", leafmin_method="none", heuristic="none",
        master_seed=0, trial_seed=1, n=25, edges_before_stretch=300,
        edges_after_stretch=300, edges_removed_stretch=0,
        girth_after_stretch=3, leaves_after_stretch=0, edges_added_leafmin=0,
        leaves_after_leafmin=0, convergence_rounds_mean=150.0,
        census_lengths="3;4;5;6", census_counts="2300;37950;637560;-1",
    )


def to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=COLUMNS)
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def write_fixture(path, rows=None) -> None:
    if rows is None:
        rows = sweep_rows() + [k25_census_row()]
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(to_csv(rows))
