"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Invalid user-supplied configuration (specs, plans, CLI arguments)."""


class DataError(ValueError):
    """A dataset cannot support the requested computation."""


class StructuralError(RuntimeError):
    """An internal structure (graph, model) violates its invariants."""


class ScoringError(RuntimeError):
    """A parent set cannot be scored; callers treat the set as rejected."""
