"""Exception types shared across the package."""

from __future__ import annotations


class CcmfgError(Exception):
    """Base class for all package errors."""


class DivergenceError(CcmfgError):
    """An ODE integration produced a non-finite value.

    Carries the index of the first grid node at which the solution
    stopped being finite.
    """

    def __init__(self, message: str, node_index: int):
        super().__init__(message)
        self.node_index = node_index


class IllConditionedError(CcmfgError):
    """A transition-matrix inverse is numerically unreliable."""

    def __init__(self, message: str, condition_estimate: float):
        super().__init__(message)
        self.condition_estimate = condition_estimate


class GridMismatchError(CcmfgError):
    """Two sampled paths do not share the same time grid."""


class ConfigError(CcmfgError):
    """A run configuration failed validation.

    ``field`` is the dotted path of the offending entry, e.g. ``cost.q``.
    """

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field
