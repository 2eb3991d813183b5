"""Exception types shared across the package."""


class NetComplexityError(Exception):
    """Base class for every error this package raises on purpose."""


class CidrError(NetComplexityError):
    """An IPv4 prefix string failed validation."""


class GraphError(NetComplexityError):
    """Graph construction was asked to do something inconsistent."""


class TaxonomyError(NetComplexityError):
    """A (dialect, type name) pair is unmapped, or a taxonomy file is malformed."""


class ParseError(NetComplexityError):
    """An input document could not be parsed under the selected dialect."""


class BuildError(NetComplexityError):
    """A resource set could not be turned into a well-formed graph."""


class MetricsError(NetComplexityError):
    """A metric is undefined for the given graph."""


class ReportError(NetComplexityError):
    """A report cannot be rendered from the given data."""
