"""Uniform time grids and paths sampled on them.

Every ODE solution and every quadrature in the package lives on a shared
uniform grid over [0, T].  Values between nodes are obtained by linear
interpolation; that is the single interpolation rule of the package.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GridMismatchError


@dataclass(frozen=True)
class TimeGrid:
    """Uniform grid t_k = k*T/K on [0, T] with K steps (K+1 nodes)."""

    horizon: float
    steps: int

    def __post_init__(self):
        if not (self.horizon > 0 and np.isfinite(self.horizon)):
            raise ValueError(f"horizon must be positive and finite, got {self.horizon}")
        if self.steps < 2:
            raise ValueError(f"need at least 2 steps, got {self.steps}")

    @property
    def h(self) -> float:
        return self.horizon / self.steps

    @property
    def nodes(self) -> np.ndarray:
        return np.linspace(0.0, self.horizon, self.steps + 1)

    def refined(self, factor: int = 2) -> "TimeGrid":
        """Grid with the same horizon and ``factor`` times as many steps."""
        return TimeGrid(self.horizon, self.steps * factor)

    def index_of(self, t: float) -> float:
        """Fractional node index of time t (clipped to the grid)."""
        return min(max(t / self.h, 0.0), float(self.steps))


def _check_values(grid: TimeGrid, values: np.ndarray, kind: str) -> np.ndarray:
    values = np.asarray(values, dtype=float)
    if values.shape[0] != grid.steps + 1:
        raise ValueError(
            f"{kind} needs one value per node: expected {grid.steps + 1}, got {values.shape[0]}"
        )
    if not np.all(np.isfinite(values)):
        bad = int(np.argmax(~np.isfinite(values).reshape(values.shape[0], -1).all(axis=1)))
        raise ValueError(f"{kind} has non-finite entries, first bad node {bad}")
    values = values.copy()
    values.setflags(write=False)
    return values


def _interp(grid: TimeGrid, values: np.ndarray, t: float) -> np.ndarray:
    x = grid.index_of(t)
    i = min(int(x), grid.steps - 1)
    w = x - i
    return (1.0 - w) * values[i] + w * values[i + 1]


@dataclass(frozen=True)
class MatrixPath:
    """A matrix-valued function of time, sampled on a TimeGrid."""

    grid: TimeGrid
    values: np.ndarray = field(repr=False)  # (K+1, n, p)

    def __post_init__(self):
        vals = _check_values(self.grid, self.values, "MatrixPath")
        if vals.ndim != 3:
            raise ValueError(f"MatrixPath values must be (K+1, n, p), got shape {vals.shape}")
        object.__setattr__(self, "values", vals)

    def at(self, t: float) -> np.ndarray:
        return _interp(self.grid, self.values, t)

    @property
    def initial(self) -> np.ndarray:
        return self.values[0]

    @property
    def terminal(self) -> np.ndarray:
        return self.values[-1]


@dataclass(frozen=True)
class Trajectory:
    """A vector-valued function of time, sampled on a TimeGrid."""

    grid: TimeGrid
    values: np.ndarray = field(repr=False)  # (K+1, n)

    def __post_init__(self):
        vals = _check_values(self.grid, self.values, "Trajectory")
        if vals.ndim != 2:
            raise ValueError(f"Trajectory values must be (K+1, n), got shape {vals.shape}")
        object.__setattr__(self, "values", vals)

    def at(self, t: float) -> np.ndarray:
        return _interp(self.grid, self.values, t)

    @property
    def dim(self) -> int:
        return self.values.shape[1]

    def sup_distance(self, other: "Trajectory") -> float:
        """max over nodes of the Euclidean distance to ``other``."""
        require_same_grid(self.grid, other.grid)
        return float(np.max(np.linalg.norm(self.values - other.values, axis=1)))


def require_same_grid(a: TimeGrid, b: TimeGrid) -> None:
    if a != b:
        raise GridMismatchError(f"grids differ: {a} vs {b}")
