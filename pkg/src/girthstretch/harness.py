"""Experiment driver: parameter sweeps with deterministic seeding and CSV output.

A sweep iterates over every combination of (family, girth target, stretch
method, leaf-min method, heuristic) and runs the five-stage pipeline
(generate, stretch, minimise leaves, optimise, gossip) ``repetitions`` times
per combination. Every random choice is derived from the master seed and the
(combination, repetition, stage) coordinates, so reruns are bit-identical
except for wall-clock columns.
"""

from __future__ import annotations

import csv
import os
import time
from dataclasses import dataclass, field, fields
from itertools import product

import numpy as np

from . import gossip
from . import graph as G
from . import metrics
from .errors import DomainError, GirthStretchError
from .generators import generate_connected, sample_params
from .leafmin import LeafMinMethod, minimise_leaves
from .optimizer import optimise
from .seeds import derive, fingerprint
from .stretching import StretchMethod, stretch

SCHEMA_VERSION = 1

STAGES = ("generate", "stretch", "leafmin", "optimize", "gossip", "census")

# "none" disables the optimisation stage (ablation arm).
HEURISTIC_CHOICES = tuple(h.value for h in metrics.Heuristic) + ("none",)

# Fixed, versioned column order; the plots component depends on it.
COLUMNS = [
    "schema_version",
    "combination_index",
    "repetition",
    "family",
    "girth_target",
    "stretch_method",
    "leafmin_method",
    "heuristic",
    "master_seed",
    "trial_seed",
    "n",
    "param_p",
    "param_k",
    "param_m",
    "param_r",
    "generate_attempts",
    "edges_before_stretch",
    "edges_after_stretch",
    "edges_removed_stretch",
    "girth_after_stretch",
    "leaves_after_stretch",
    "edges_added_leafmin",
    "leaves_after_leafmin",
    "edges_changed_opt",
    "heuristic_before_opt",
    "heuristic_after_opt",
    "convergence_rounds_mean",
    "census_lengths",
    "census_counts",
    "wall_generate",
    "wall_stretch",
    "wall_leafmin",
    "wall_optimize",
    "wall_gossip",
    "error_stage",
    "error_reason",
]

# Columns excluded when comparing two runs for determinism.
WALL_CLOCK_COLUMNS = [c for c in COLUMNS if c.startswith("wall_")]

# Columns each figure family needs from the CSV (schema-coverage manifest).
FIGURE_COLUMN_MANIFEST = {
    "stretch-edges": ["family", "girth_target", "stretch_method",
                      "edges_before_stretch", "edges_removed_stretch"],
    "stretch-leaves": ["family", "girth_target", "stretch_method",
                       "leaves_after_stretch"],
    "stretch-heuristics": ["family", "girth_target", "stretch_method",
                           "heuristic", "heuristic_before_opt"],
    "stretch-convergence": ["family", "girth_target", "stretch_method",
                            "convergence_rounds_mean"],
    "leafmin-remaining": ["girth_target", "stretch_method", "leafmin_method",
                          "leaves_after_leafmin"],
    "leafmin-added": ["girth_target", "stretch_method", "leafmin_method",
                      "edges_added_leafmin"],
    "leafmin-convergence": ["girth_target", "stretch_method", "leafmin_method",
                            "convergence_rounds_mean"],
    "opt-edges-changed": ["family", "girth_target", "stretch_method",
                          "heuristic", "edges_changed_opt"],
    "opt-convergence": ["family", "girth_target", "stretch_method",
                        "leafmin_method", "heuristic",
                        "convergence_rounds_mean"],
    "census": ["girth_target", "census_lengths", "census_counts"],
}


@dataclass
class ExperimentConfig:
    families: list[str] = field(default_factory=lambda: ["er", "ws", "ba", "geo"])
    girths: list[int] = field(default_factory=lambda: list(range(3, 9)))
    stretch_methods: list[str] = field(
        default_factory=lambda: [m.value for m in StretchMethod]
    )
    leafmin_methods: list[str] = field(
        default_factory=lambda: [m.value for m in LeafMinMethod]
    )
    heuristics: list[str] = field(default_factory=lambda: list(HEURISTIC_CHOICES))
    repetitions: int = 20
    gossip_instances: int = 10
    threshold: float = 0.01
    master_seed: int = 0
    n_min: int = 10
    n_max: int = 40
    gossip_norm: str = gossip.NORM_MEAN
    max_gossip_rounds: int = gossip.DEFAULT_MAX_ROUNDS
    census_limit: int = 100_000
    census_extra_lengths: int = 3

    def validate(self) -> None:
        for name in ("families", "girths", "stretch_methods",
                     "leafmin_methods", "heuristics"):
            if not getattr(self, name):
                raise DomainError(f"config field {name} must be non-empty")
        if self.repetitions < 1:
            raise DomainError("repetitions must be >= 1")
        if self.n_min < 2 or self.n_max < self.n_min:
            raise DomainError("invalid n range")
        for h in self.heuristics:
            if h not in HEURISTIC_CHOICES:
                raise DomainError(f"unknown heuristic {h!r}")


_LIST_FIELDS = {"families", "girths", "stretch_methods", "leafmin_methods",
                "heuristics"}
_INT_FIELDS = {"repetitions", "gossip_instances", "master_seed", "n_min",
               "n_max", "max_gossip_rounds", "census_limit",
               "census_extra_lengths"}
_FLOAT_FIELDS = {"threshold"}


def parse_config(text: str) -> ExperimentConfig:
    """Parse the ``key = value`` config format (lists comma-separated)."""
    cfg = ExperimentConfig()
    known = {f.name for f in fields(ExperimentConfig)}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise DomainError(f"config line {lineno}: expected key = value")
        key, val = (part.strip() for part in line.split("=", 1))
        if key not in known:
            raise DomainError(f"config line {lineno}: unknown key {key!r}")
        if key in _LIST_FIELDS:
            items = [tok.strip() for tok in val.split(",") if tok.strip()]
            if key == "girths":
                setattr(cfg, key, [int(t) for t in items])
            else:
                setattr(cfg, key, items)
        elif key in _INT_FIELDS:
            setattr(cfg, key, int(val))
        elif key in _FLOAT_FIELDS:
            setattr(cfg, key, float(val))
        else:
            setattr(cfg, key, val)
    cfg.validate()
    return cfg


def format_config(cfg: ExperimentConfig) -> str:
    lines = []
    for f in fields(ExperimentConfig):
        val = getattr(cfg, f.name)
        if f.name in _LIST_FIELDS:
            val = ", ".join(str(v) for v in val)
        lines.append(f"{f.name} = {val}")
    return "\n".join(lines) + "\n"


def load_config(path) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config(fh.read())


def combinations(cfg: ExperimentConfig) -> list[tuple[str, int, str, str, str]]:
    """Deterministic order of the sweep's (family, girth, methods) grid."""
    return list(
        product(cfg.families, cfg.girths, cfg.stretch_methods,
                cfg.leafmin_methods, cfg.heuristics)
    )


def seed_for(
    master_seed: int, combination_index: int, repetition_index: int, stage: str
) -> np.random.SeedSequence:
    """Collision-free per-stage seed stream."""
    return derive(master_seed, combination_index, repetition_index,
                  STAGES.index(stage))


def _census(graph: G.Graph, start_girth: int, extra: int, limit: int):
    lengths, counts = [], []
    for length in range(start_girth, min(start_girth + extra + 1, graph.n + 1)):
        c = G.count_cycles_of_length(graph, length, limit=limit)
        lengths.append(length)
        counts.append(-1 if c > limit else c)  # -1 marks a capped count
    return lengths, counts


def _fmt_girth(value) -> str:
    return "acyclic" if value == G.ACYCLIC else str(int(value))


def run_pipeline(
    family: str,
    girth_target: int,
    stretch_method: str,
    leafmin_method: str,
    heuristic: str,
    cfg: ExperimentConfig,
    combination_index: int,
    repetition: int,
) -> dict:
    """One trial; stage errors are recorded in the row, never raised."""
    row = {c: "" for c in COLUMNS}
    row.update(
        schema_version=SCHEMA_VERSION,
        combination_index=combination_index,
        repetition=repetition,
        family=family,
        girth_target=girth_target,
        stretch_method=stretch_method,
        leafmin_method=leafmin_method,
        heuristic=heuristic,
        master_seed=cfg.master_seed,
    )
    stage = "generate"
    try:
        t0 = time.perf_counter()
        ss = seed_for(cfg.master_seed, combination_index, repetition, "generate")
        row["trial_seed"] = fingerprint(ss)
        params_ss, graph_ss = ss.spawn(2)
        params = sample_params(family, params_ss, (cfg.n_min, cfg.n_max))
        graph, attempts = generate_connected(params, graph_ss)
        row["n"] = params.n
        for key in ("p", "k", "m", "r"):
            if hasattr(params, key):
                row[f"param_{key}"] = getattr(params, key)
        row["generate_attempts"] = attempts
        row["edges_before_stretch"] = graph.m
        row["wall_generate"] = time.perf_counter() - t0

        stage = "stretch"
        t0 = time.perf_counter()
        sreport = stretch(
            graph, girth_target, StretchMethod(stretch_method),
            seed_for(cfg.master_seed, combination_index, repetition, "stretch"),
        )
        graph = sreport.graph
        row["edges_after_stretch"] = graph.m
        row["edges_removed_stretch"] = len(sreport.removed)
        row["girth_after_stretch"] = _fmt_girth(sreport.final_girth)
        row["leaves_after_stretch"] = G.leaf_count(graph)
        row["wall_stretch"] = time.perf_counter() - t0

        stage = "leafmin"
        t0 = time.perf_counter()
        lreport = minimise_leaves(
            graph, girth_target, LeafMinMethod(leafmin_method),
            seed_for(cfg.master_seed, combination_index, repetition, "leafmin"),
        )
        graph = lreport.graph
        row["edges_added_leafmin"] = lreport.edges_added
        row["leaves_after_leafmin"] = lreport.leaves_after
        row["wall_leafmin"] = time.perf_counter() - t0

        stage = "optimize"
        t0 = time.perf_counter()
        if heuristic != "none":
            kind = metrics.Heuristic(heuristic)
            oreport = optimise(
                graph, girth_target, kind,
                seed_for(cfg.master_seed, combination_index, repetition,
                         "optimize"),
            )
            graph = oreport.graph
            row["edges_changed_opt"] = oreport.edges_changed
            row["heuristic_before_opt"] = oreport.initial_score
            row["heuristic_after_opt"] = oreport.final_score
        row["wall_optimize"] = time.perf_counter() - t0

        stage = "gossip"
        t0 = time.perf_counter()
        row["convergence_rounds_mean"] = gossip.convergence_time(
            graph,
            instances=cfg.gossip_instances,
            threshold=cfg.threshold,
            seed=seed_for(cfg.master_seed, combination_index, repetition,
                          "gossip"),
            max_rounds=cfg.max_gossip_rounds,
            norm=cfg.gossip_norm,
        )
        row["wall_gossip"] = time.perf_counter() - t0

        stage = "census"
        girth_now = G.girth(graph)
        if girth_now != G.ACYCLIC:
            lengths, counts = _census(
                graph, int(girth_now), cfg.census_extra_lengths,
                cfg.census_limit,
            )
            row["census_lengths"] = ";".join(map(str, lengths))
            row["census_counts"] = ";".join(map(str, counts))
    except GirthStretchError as exc:
        row["error_stage"] = stage
        row["error_reason"] = f"{type(exc).__name__}: {exc}"
    return row


def _done_keys(path) -> set[tuple[str, str]]:
    done = set()
    with open(path, "r", encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            done.add((row["combination_index"], row["repetition"]))
    return done


def run_sweep(cfg: ExperimentConfig, out_path, resume: bool = False) -> int:
    """Run (or resume) a full sweep; returns the number of rows written.

    Rows are flushed as written, so a killed run leaves a clean partial CSV
    that a ``resume=True`` rerun extends without recomputing finished trials.
    """
    cfg.validate()
    combos = combinations(cfg)
    done: set[tuple[str, str]] = set()
    exists = os.path.exists(out_path) and os.path.getsize(out_path) > 0
    if exists and not resume:
        raise DomainError(f"{out_path} exists; pass resume to extend it")
    if exists:
        done = _done_keys(out_path)
    written = 0
    mode = "a" if exists else "w"
    with open(out_path, mode, encoding="utf-8", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=COLUMNS)
        if not exists:
            writer.writeheader()
            fh.flush()
        for comb_idx, combo in enumerate(combos):
            for rep in range(cfg.repetitions):
                if (str(comb_idx), str(rep)) in done:
                    continue
                family, girth_target, sm, lm, heur = combo
                row = run_pipeline(family, girth_target, sm, lm, heur, cfg,
                                   comb_idx, rep)
                writer.writerow(row)
                fh.flush()
                written += 1
    return written
