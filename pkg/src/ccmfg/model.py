"""Problem data: linear agent dynamics and the destination-choice cost."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Dynamics:
    """Shared linear dynamics xdot = A x + B u."""

    A: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A, dtype=float))
        B = np.asarray(self.B, dtype=float)
        if B.ndim == 1:
            B = B.reshape(-1, 1)
        if A.shape[0] != A.shape[1]:
            raise ValueError(f"A must be square, got {A.shape}")
        if B.shape[0] != A.shape[0]:
            raise ValueError(f"B rows must match A: {B.shape} vs {A.shape}")
        if not (np.all(np.isfinite(A)) and np.all(np.isfinite(B))):
            raise ValueError("dynamics matrices must be finite")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "B", B)

    @property
    def n(self) -> int:
        return self.A.shape[0]

    @property
    def m(self) -> int:
        return self.B.shape[1]

    @property
    def controllable(self) -> bool:
        """Rank check of [B, AB, ..., A^(n-1) B]."""
        blocks = [self.B]
        for _ in range(self.n - 1):
            blocks.append(self.A @ blocks[-1])
        rank = np.linalg.matrix_rank(np.hstack(blocks))
        return int(rank) == self.n


@dataclass(frozen=True)
class CostSpec:
    """Cost weights and the candidate destination set.

    Running cost (q/2)|x - mean|^2 + (r/2)|u|^2 over [0, T]; terminal cost
    (M/2) min_j |x(T) - p_j|^2 over the destinations p_j.
    """

    q: float
    r: float
    M: float
    horizon: float
    destinations: tuple = field(default=())

    def __post_init__(self):
        if self.q < 0 or not np.isfinite(self.q):
            raise ValueError(f"q must be non-negative and finite, got {self.q}")
        for name in ("r", "M", "horizon"):
            v = getattr(self, name)
            if v <= 0 or not np.isfinite(v):
                raise ValueError(f"{name} must be positive and finite, got {v}")
        dests = tuple(np.asarray(p, dtype=float).reshape(-1) for p in self.destinations)
        if len(dests) < 1:
            raise ValueError("need at least one destination")
        dims = {p.shape[0] for p in dests}
        if len(dims) != 1:
            raise ValueError("destinations must share a dimension")
        for a in range(len(dests)):
            for b in range(a + 1, len(dests)):
                if np.array_equal(dests[a], dests[b]):
                    raise ValueError(f"destinations {a} and {b} coincide")
        object.__setattr__(self, "destinations", dests)

    @property
    def l(self) -> int:
        return len(self.destinations)

    @property
    def dest_matrix(self) -> np.ndarray:
        """Destinations stacked as an (l, n) array."""
        return np.stack(self.destinations)

    def with_(self, **kw) -> "CostSpec":
        """Copy with some fields replaced."""
        data = {
            "q": self.q,
            "r": self.r,
            "M": self.M,
            "horizon": self.horizon,
            "destinations": self.destinations,
        }
        data.update(kw)
        return CostSpec(**data)

    def blend_destination(self, weights: np.ndarray) -> np.ndarray:
        """Convex combination sum_j w_j p_j of the destinations."""
        w = np.asarray(weights, dtype=float)
        return w @ self.dest_matrix
