"""CSV loading and schema validation for sweep output files."""

from __future__ import annotations

import pandas as pd

from .errors import EmptyDataError, MissingColumnsError, SchemaMismatchError

SUPPORTED_SCHEMA_VERSIONS = (1,)


def load_csv(path) -> pd.DataFrame:
    try:
        df = pd.read_csv(path, dtype=str, keep_default_na=False)
    except pd.errors.EmptyDataError as exc:
        raise EmptyDataError(f"{path}: no data") from exc
    if df.empty:
        raise EmptyDataError(f"{path}: no rows")
    if "schema_version" not in df.columns:
        raise MissingColumnsError(f"{path}: missing schema_version column")
    versions = set(pd.to_numeric(df["schema_version"], errors="coerce"))
    bad = versions - set(SUPPORTED_SCHEMA_VERSIONS)
    if bad:
        raise SchemaMismatchError(
            f"{path}: unsupported schema version(s) {sorted(bad)}"
        )
    return df


def require_columns(df: pd.DataFrame, columns) -> None:
    missing = [c for c in columns if c not in df.columns]
    if missing:
        raise MissingColumnsError(f"missing column(s): {', '.join(missing)}")


def numeric(df: pd.DataFrame, column: str) -> pd.Series:
    """Column as floats; blank cells (skipped stages, errors) become NaN."""
    return pd.to_numeric(df[column], errors="coerce")
