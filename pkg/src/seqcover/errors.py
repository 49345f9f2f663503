"""Exception types shared across the package."""


class TraceParseError(ValueError):
    """A trace file contained something other than non-negative decimal integers."""


class ConfigurationError(ValueError):
    """A run was configured inconsistently (empty split, bad threshold, ...)."""
