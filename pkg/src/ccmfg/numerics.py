"""Fixed-step RK4 integration, transition matrices, and trapezoid quadrature.

All solvers use classical 4th-order Runge-Kutta with the step dictated by the
grid, in either time direction.  Transition matrices are stored as one path
t -> Phi(t, 0); values for arbitrary argument pairs come from the group
property Phi(t, eta) = Phi(t, 0) @ inv(Phi(eta, 0)).
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from .errors import DivergenceError, IllConditionedError
from .grid import MatrixPath, TimeGrid

# Inverses of transition matrices beyond this condition number are refused.
COND_LIMIT = 1e12


def rk4_path(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    boundary: np.ndarray,
    grid: TimeGrid,
    direction: str = "forward",
) -> np.ndarray:
    """Integrate dy/dt = rhs(t, y) across the grid and return all node values.

    ``forward`` starts from y(0) = boundary, ``backward`` from y(T) = boundary;
    the returned array is always ordered from t=0 to t=T with shape
    (K+1, *boundary.shape).
    """
    if direction not in ("forward", "backward"):
        raise ValueError(f"direction must be 'forward' or 'backward', got {direction!r}")
    boundary = np.asarray(boundary, dtype=float)
    K = grid.steps
    nodes = grid.nodes
    out = np.empty((K + 1,) + boundary.shape)
    if direction == "forward":
        order = range(K)
        out[0] = boundary
        h = grid.h
    else:
        order = range(K, 0, -1)
        out[K] = boundary
        h = -grid.h

    for k in order:
        t = nodes[k]
        y = out[k]
        k1 = rhs(t, y)
        k2 = rhs(t + 0.5 * h, y + 0.5 * h * k1)
        k3 = rhs(t + 0.5 * h, y + 0.5 * h * k2)
        k4 = rhs(t + h, y + h * k3)
        nxt = k + 1 if direction == "forward" else k - 1
        out[nxt] = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        if not np.all(np.isfinite(out[nxt])):
            raise DivergenceError(
                f"integration diverged at node {nxt} (t={nodes[nxt]:.6g})", nxt
            )
    return out


def integrate_matrix_ode(
    rhs: Callable[[float, np.ndarray], np.ndarray],
    boundary: np.ndarray,
    direction: str,
    grid: TimeGrid,
) -> MatrixPath:
    """RK4 solution of a matrix ODE, sampled on the grid."""
    boundary = np.atleast_2d(np.asarray(boundary, dtype=float))
    values = rk4_path(rhs, boundary, grid, direction)
    return MatrixPath(grid, values)


def transition_path(pi: Callable[[float], np.ndarray], grid: TimeGrid) -> MatrixPath:
    """Solve dPhi(t,0)/dt = pi(t) @ Phi(t,0), Phi(0,0) = I, on the grid."""
    n = np.asarray(pi(0.0)).shape[0]
    return integrate_matrix_ode(
        lambda t, y: pi(t) @ y, np.eye(n), "forward", grid
    )


def path_inverses(phi: MatrixPath) -> np.ndarray:
    """Inverses of Phi(t,0) at every node, with a conditioning check."""
    vals = phi.values
    conds = np.linalg.cond(vals)
    worst = float(np.max(conds))
    if worst > COND_LIMIT:
        raise IllConditionedError(
            f"ill-conditioned transition: condition estimate {worst:.3e}", worst
        )
    return np.linalg.inv(vals)


def transition_pair(
    phi: MatrixPath, t_index: int, eta_index: int, inverses: np.ndarray | None = None
) -> np.ndarray:
    """Phi(t_i, t_j) from the stored path via Phi(t,0) @ inv(Phi(eta,0))."""
    if inverses is None:
        base = phi.values[eta_index]
        cond = float(np.linalg.cond(base))
        if cond > COND_LIMIT:
            raise IllConditionedError(
                f"ill-conditioned transition: condition estimate {cond:.3e}", cond
            )
        inv = np.linalg.inv(base)
    else:
        inv = inverses[eta_index]
    return phi.values[t_index] @ inv


def quad_trapezoid(values: np.ndarray, a: int, b: int, h: float) -> np.ndarray:
    """Composite trapezoid of grid-sampled values between node indices.

    ``values`` has time along axis 0.  Reversed index order negates the
    result, matching the oriented integral.
    """
    if a == b:
        return np.zeros_like(np.asarray(values[0], dtype=float))
    sign = 1.0
    if a > b:
        a, b = b, a
        sign = -1.0
    seg = values[a : b + 1]
    total = seg[0] * 0.5 + seg[-1] * 0.5 + seg[1:-1].sum(axis=0)
    return sign * h * total


def cumtrapz_from_end(values: np.ndarray, h: float) -> np.ndarray:
    """C[k] = oriented trapezoid integral from the last node down to node k.

    C[K] = 0 and C[k] = integral_{t_K}^{t_k} values dt, so entries carry the
    sign of integrating backwards.
    """
    values = np.asarray(values, dtype=float)
    steps = 0.5 * h * (values[1:] + values[:-1])
    out = np.zeros_like(values)
    out[:-1] = -np.cumsum(steps[::-1], axis=0)[::-1]
    return out


def cumtrapz_from_start(values: np.ndarray, h: float) -> np.ndarray:
    """C[k] = trapezoid integral from node 0 up to node k (C[0] = 0)."""
    values = np.asarray(values, dtype=float)
    steps = 0.5 * h * (values[1:] + values[:-1])
    out = np.zeros_like(values)
    np.cumsum(steps, axis=0, out=out[1:])
    return out
