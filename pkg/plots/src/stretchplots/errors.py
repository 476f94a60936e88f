class PlotsError(Exception):
    """Base class for figure-rendering failures."""


class SchemaMismatchError(PlotsError):
    """The CSV's schema_version is not one this tool understands."""


class MissingColumnsError(PlotsError):
    """A required column is absent from the CSV."""


class EmptyDataError(PlotsError):
    """The CSV has no usable rows for the requested figure."""
