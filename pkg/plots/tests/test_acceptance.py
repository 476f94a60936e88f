"""Contract-level check for the plotting component, with a printed verdict."""

import os

import pandas as pd

from stretchplots import FIGURES, aggregate, census_aggregate, census_plot, load_csv, render
from sweep_fixtures import write_fixture


def test_plot_generation(tmp_path):
    csv_path = tmp_path / "sweep.csv"
    write_fixture(csv_path)
    out_dir = tmp_path / "figs"
    out_dir.mkdir()
    failures = []

    # All nine figure families render to non-empty SVG and PNG files.
    for fid, spec in FIGURES.items():
        paths = render(csv_path, spec, out_dir)
        if not all(os.path.getsize(p) > 0 for p in paths):
            failures.append(f"{fid} output empty")
    if len(os.listdir(out_dir)) != 2 * len(FIGURES):
        failures.append("file count")

    # Plotted aggregates equal independently computed group means.
    df = load_csv(csv_path)
    for fid, spec in FIGURES.items():
        agg = aggregate(df, spec)
        if spec.value == "removal_fraction":
            values = (
                pd.to_numeric(df["edges_removed_stretch"], errors="coerce")
                / pd.to_numeric(df["edges_before_stretch"], errors="coerce")
            )
        else:
            values = pd.to_numeric(df[spec.value], errors="coerce")
        ref = pd.DataFrame(
            {
                "facet": df[spec.facet_key],
                "line": df[spec.line_key],
                "girth": pd.to_numeric(df["girth_target"], errors="coerce"),
                "value": values,
            }
        ).dropna()
        expect = ref.groupby(["facet", "line", "girth"])["value"].mean()
        for _, row in agg.iterrows():
            want = expect.loc[(row["facet"], row["line"], row["girth"])]
            if abs(row["mean"] - want) > 1e-12 * max(1.0, abs(want)):
                failures.append(f"{fid} aggregation mismatch")
                break

    # The census shows the complete-graph triangle bar at 2300.
    census = census_aggregate(df)
    k25 = census[(census["girth"] == 3) & (census["length"] == 3)]
    # The fixture mixes the K25 row with synthetic girth-3 rows, so check the
    # isolated row too.
    solo = census_aggregate(df[df["n"] == "25"])
    bar = solo[(solo["girth"] == 3) & (solo["length"] == 3)]["mean"]
    if len(k25) != 1 or len(bar) != 1 or bar.iloc[0] != 2300:
        failures.append("census triangle bar")
    if not all(os.path.getsize(p) > 0 for p in census_plot(csv_path, out_dir)):
        failures.append("census render")

    line = f"[acceptance] plot-generation: {'PASS' if not failures else 'FAIL'}"
    if failures:
        line += f" (failures={failures})"
    print(line)
    assert not failures, line
