"""The nine figure families over sweep CSVs, plus their shared aggregation.

Every figure plots a per-trial value against the target girth, one line per
grouping value, one panel per facet value, with mean lines and bootstrap
confidence bands. ``aggregate`` returns the exact numbers a figure draws, so
tests can verify plotted values against independently computed group means.
"""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np
import pandas as pd

from .data import load_csv, numeric, require_columns
from .errors import EmptyDataError

BOOTSTRAP_RESAMPLES = 1000
BOOTSTRAP_SEED = 0
CONFIDENCE = 0.95

_GIRTH = "girth_target"


@dataclass(frozen=True)
class FigureSpec:
    figure_id: str
    value: str  # value column, or "removal_fraction" (derived)
    line_key: str
    facet_key: str
    ylabel: str
    title: str

    @property
    def columns(self) -> list[str]:
        cols = [_GIRTH, self.line_key, self.facet_key]
        if self.value == "removal_fraction":
            cols += ["edges_before_stretch", "edges_removed_stretch"]
        else:
            cols.append(self.value)
        return list(dict.fromkeys(cols))


FIGURES = {
    spec.figure_id: spec
    for spec in [
        FigureSpec("stretch-edges", "removal_fraction", "stretch_method",
                   "family", "proportion of edges removed",
                   "Edges removed by stretching"),
        FigureSpec("stretch-leaves", "leaves_after_stretch", "stretch_method",
                   "family", "leaves after stretching",
                   "Leaves created by stretching"),
        FigureSpec("stretch-heuristics", "heuristic_before_opt",
                   "stretch_method", "heuristic", "heuristic value",
                   "Convergence heuristics of stretched graphs"),
        FigureSpec("stretch-convergence", "convergence_rounds_mean",
                   "stretch_method", "family", "rounds to convergence",
                   "Convergence time after stretching"),
        FigureSpec("leafmin-remaining", "leaves_after_leafmin",
                   "leafmin_method", "stretch_method", "remaining leaves",
                   "Leaves remaining after leaf minimisation"),
        FigureSpec("leafmin-added", "edges_added_leafmin", "leafmin_method",
                   "stretch_method", "edges added",
                   "Edges added by leaf minimisation"),
        FigureSpec("leafmin-convergence", "convergence_rounds_mean",
                   "leafmin_method", "stretch_method",
                   "rounds to convergence",
                   "Convergence time after leaf minimisation"),
        FigureSpec("opt-edges-changed", "edges_changed_opt", "heuristic",
                   "stretch_method", "edges changed",
                   "Edges changed during optimisation"),
        FigureSpec("opt-convergence", "convergence_rounds_mean", "heuristic",
                   "family", "rounds to convergence",
                   "Convergence time after optimisation"),
    ]
}


def _bootstrap_ci(values: np.ndarray, rng) -> tuple[float, float]:
    if len(values) < 2:
        v = float(values[0])
        return v, v
    idx = rng.integers(0, len(values), size=(BOOTSTRAP_RESAMPLES, len(values)))
    means = values[idx].mean(axis=1)
    alpha = (1.0 - CONFIDENCE) / 2.0
    return (float(np.quantile(means, alpha)),
            float(np.quantile(means, 1.0 - alpha)))


def _value_series(df: pd.DataFrame, spec: FigureSpec) -> pd.Series:
    if spec.value == "removal_fraction":
        before = numeric(df, "edges_before_stretch")
        removed = numeric(df, "edges_removed_stretch")
        return removed / before
    return numeric(df, spec.value)


def aggregate(df: pd.DataFrame, spec: FigureSpec) -> pd.DataFrame:
    """Mean and bootstrap CI per (facet, line, girth); the plotted numbers."""
    require_columns(df, spec.columns)
    work = pd.DataFrame(
        {
            "facet": df[spec.facet_key],
            "line": df[spec.line_key],
            "girth": numeric(df, _GIRTH),
            "value": _value_series(df, spec),
        }
    ).dropna()
    if work.empty:
        raise EmptyDataError(f"{spec.figure_id}: no usable rows")
    rng = np.random.default_rng(BOOTSTRAP_SEED)
    rows = []
    for (facet, line, girth), grp in sorted(
        work.groupby(["facet", "line", "girth"], sort=True)
    ):
        vals = grp["value"].to_numpy(dtype=float)
        lo, hi = _bootstrap_ci(vals, rng)
        rows.append(
            {
                "facet": facet,
                "line": line,
                "girth": girth,
                "mean": float(vals.mean()),
                "ci_low": lo,
                "ci_high": hi,
                "count": len(vals),
            }
        )
    return pd.DataFrame(rows)


def _save(fig, out_dir, stem) -> list[str]:
    paths = []
    for ext in ("svg", "png"):
        path = f"{out_dir}/{stem}.{ext}"
        fig.savefig(path, metadata={"Date": None} if ext == "svg" else None)
        paths.append(path)
    plt.close(fig)
    return paths


def render(csv_path, spec: FigureSpec, out_dir) -> list[str]:
    """Render one figure family to SVG and PNG; returns the written paths."""
    plt.rcParams["svg.hashsalt"] = "stretchplots"
    df = load_csv(csv_path)
    agg = aggregate(df, spec)
    facets = sorted(agg["facet"].unique())
    fig, axes = plt.subplots(
        1, len(facets), figsize=(4 * len(facets), 3.2),
        sharey=True, squeeze=False,
    )
    for ax, facet in zip(axes[0], facets):
        sub = agg[agg["facet"] == facet]
        for line in sorted(sub["line"].unique()):
            cur = sub[sub["line"] == line].sort_values("girth")
            ax.plot(cur["girth"], cur["mean"], marker="o", label=str(line))
            ax.fill_between(cur["girth"], cur["ci_low"], cur["ci_high"],
                            alpha=0.2)
        ax.set_title(f"{spec.facet_key} = {facet}", fontsize=9)
        ax.set_xlabel("target girth")
    axes[0][0].set_ylabel(spec.ylabel)
    axes[0][-1].legend(title=spec.line_key, fontsize=7)
    fig.suptitle(spec.title)
    fig.tight_layout()
    return _save(fig, out_dir, spec.figure_id)


def census_aggregate(df: pd.DataFrame) -> pd.DataFrame:
    """Mean cycle count per (girth target, cycle length); capped rows dropped."""
    require_columns(df, ["girth_target", "census_lengths", "census_counts"])
    rows = []
    for _, row in df.iterrows():
        lengths = str(row["census_lengths"])
        counts = str(row["census_counts"])
        if not lengths or lengths == "nan":
            continue
        for length, count in zip(lengths.split(";"), counts.split(";")):
            count = int(count)
            if count < 0:  # -1 marks a count that hit the census cap
                continue
            rows.append(
                {
                    "girth": int(row["girth_target"]),
                    "length": int(length),
                    "count": count,
                }
            )
    if not rows:
        raise EmptyDataError("census: no usable rows")
    work = pd.DataFrame(rows)
    agg = (
        work.groupby(["girth", "length"], sort=True)["count"]
        .mean()
        .reset_index(name="mean")
    )
    agg["parity"] = np.where(agg["length"] % 2 == 0, "even", "odd")
    return agg


def census_plot(csv_path, out_dir) -> list[str]:
    """Odd/even cycle-count bars per girth target."""
    plt.rcParams["svg.hashsalt"] = "stretchplots"
    df = load_csv(csv_path)
    agg = census_aggregate(df)
    girths = sorted(agg["girth"].unique())
    fig, axes = plt.subplots(
        1, len(girths), figsize=(3.6 * len(girths), 3.2), squeeze=False
    )
    colors = {"odd": "tab:orange", "even": "tab:blue"}
    for ax, girth in zip(axes[0], girths):
        sub = agg[agg["girth"] == girth].sort_values("length")
        ax.bar(sub["length"], sub["mean"],
               color=[colors[p] for p in sub["parity"]])
        ax.set_title(f"target girth {girth}", fontsize=9)
        ax.set_xlabel("cycle length")
        ax.set_yscale("symlog")
    axes[0][0].set_ylabel("mean cycle count")
    fig.suptitle("Shortest-cycle census (odd vs even lengths)")
    fig.tight_layout()
    return _save(fig, out_dir, "census")
