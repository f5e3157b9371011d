"""Exponential-kernel convolution state and its O(1)-per-step recursion.

The convolution Z^n = sum_{j=1..n} k e^{-delta (t_n - t_j)} Wx^j (right
rectangular rule applied to the kernel integral) satisfies the exact
recursion Z^n = e^{-delta k} Z^{n-1} + k Wx^n, so no history is stored.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class MemoryState:
    z: np.ndarray
    delta: float
    dt: float
    decay_factor: float

    @classmethod
    def initial(cls, n_elements: int, delta: float, dt: float) -> "MemoryState":
        """Zero convolution history at simulation start."""
        return cls(
            z=np.zeros(n_elements),
            delta=delta,
            dt=dt,
            decay_factor=math.exp(-delta * dt),
        )


def advance(state: MemoryState, wx_current: np.ndarray) -> MemoryState:
    """One step of the kernel recursion with the current-step gradient."""
    if len(wx_current) != len(state.z):
        raise ValueError(
            f"gradient length {len(wx_current)} does not match memory length {len(state.z)}"
        )
    return replace(state, z=state.decay_factor * state.z + state.dt * wx_current)


def brute_force(history: Sequence[np.ndarray], delta: float, dt: float) -> np.ndarray:
    """Direct evaluation of the quadrature sum the recursion must reproduce.

    history[j-1] holds Wx^j for j = 1..n. Exists as an independent oracle;
    the simulation itself never stores history.
    """
    if len(history) == 0:
        raise ValueError("history must be nonempty")
    n = len(history)
    out = np.zeros_like(np.asarray(history[0], dtype=float))
    for j in range(1, n + 1):
        out += dt * math.exp(-delta * (n - j) * dt) * np.asarray(history[j - 1])
    return out


def boundary_traces(state: MemoryState) -> tuple[float, float]:
    """Piecewise-constant traces of Z on the first and last element."""
    if len(state.z) == 0:
        raise ValueError("memory state is empty")
    return float(state.z[0]), float(state.z[-1])
