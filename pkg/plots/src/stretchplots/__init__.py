from .data import SUPPORTED_SCHEMA_VERSIONS, load_csv, require_columns
from .errors import (
    EmptyDataError,
    MissingColumnsError,
    PlotsError,
    SchemaMismatchError,
)
from .figures import (
    FIGURES,
    FigureSpec,
    aggregate,
    census_aggregate,
    census_plot,
    render,
)

__version__ = "0.1.0"

__all__ = [
    "SUPPORTED_SCHEMA_VERSIONS",
    "load_csv",
    "require_columns",
    "PlotsError",
    "SchemaMismatchError",
    "MissingColumnsError",
    "EmptyDataError",
    "FIGURES",
    "FigureSpec",
    "aggregate",
    "census_aggregate",
    "census_plot",
    "render",
    "__version__",
]
