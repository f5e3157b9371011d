"""Norms, Lyapunov/energy functionals and decay-rate estimation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .mesh_fem import Mesh, mass_matrix, stiffness_matrix


class NonPositiveValues(ValueError):
    """Raised when a log-linear decay fit is attempted on values <= 0."""


@dataclass(frozen=True)
class DiagnosticsRecord:
    t: float
    l2: float
    h1_semi: float
    linf: float
    w_left: float
    w_right: float
    v0: float
    v1: float
    lyapunov: float
    energy: float
    newton_iters: int


@dataclass(frozen=True)
class DecayEstimate:
    fitted_rate: float
    predicted_rate: float
    # Alternative candidate implied by the exponential-bound constant
    # 2 * alpha with alpha <= min(nu, delta, c0+w_d, c1+w_d) / 2.
    predicted_rate_alt: float
    window: tuple[float, float]


def lyapunov(W: np.ndarray, Z: np.ndarray, mesh: Mesh, params) -> float:
    """V = (1/2) integral (w^2 + rho z^2); exact for P1 w and P0 z."""
    M = mass_matrix(mesh)
    return 0.5 * (float(W @ M.matvec(W)) + params.rho * mesh.h * float(Z @ Z))


def boundary_energy(w_left: float, w_right: float, params) -> float:
    """E = sum over both ends of (c_i+w_d) w(i)^2 + 1/(9 c_i) w(i)^4."""
    return (
        (params.c0 + params.w_d) * w_left**2
        + (1.0 / (9.0 * params.c0)) * w_left**4
        + (params.c1 + params.w_d) * w_right**2
        + (1.0 / (9.0 * params.c1)) * w_right**4
    )


def norms(W: np.ndarray, mesh: Mesh) -> tuple[float, float, float]:
    """(L2 norm, H1 seminorm, Linf norm) of the P1 field."""
    M = mass_matrix(mesh)
    S = stiffness_matrix(mesh)
    l2 = math.sqrt(max(float(W @ M.matvec(W)), 0.0))
    h1 = math.sqrt(max(float(W @ S.matvec(W)), 0.0))
    linf = float(np.max(np.abs(W)))
    return l2, h1, linf


def triple_norm(W: np.ndarray, mesh: Mesh) -> float:
    """Combined norm sqrt(|w_x|^2 + w(0)^2 + w(1)^2) (H1-equivalent)."""
    S = stiffness_matrix(mesh)
    return math.sqrt(float(W @ S.matvec(W)) + W[0] ** 2 + W[-1] ** 2)


def predicted_decay_rate(params) -> float:
    """2 min(nu, delta, (w_d+c0)/2, (3 w_d+c1)/2) from the Lyapunov inequality."""
    return 2.0 * min(
        params.nu,
        params.delta,
        (params.w_d + params.c0) / 2.0,
        (3.0 * params.w_d + params.c1) / 2.0,
    )


def fit_decay(times, values, params, window=None) -> DecayEstimate:
    """Least-squares slope of ln V against t over a time window.

    The default window [0.2 T, T] skips the transient. The fitted rate is
    the negative slope, so exponential decay yields a positive rate.
    """
    t = np.asarray(times, dtype=float)
    v = np.asarray(values, dtype=float)
    if window is None:
        window = (0.2 * t[-1], t[-1])
    t0, t1 = window
    mask = (t >= t0) & (t <= t1)
    if np.count_nonzero(mask) < 10:
        raise ValueError("need at least 10 samples in the fit window")
    vw = v[mask]
    if np.any(vw <= 0.0):
        raise NonPositiveValues("log-linear fit requires positive values in the window")
    slope = np.polyfit(t[mask], np.log(vw), 1)[0]
    alt = min(
        params.nu, params.delta, params.c0 + params.w_d, params.c1 + params.w_d
    )
    return DecayEstimate(
        fitted_rate=-float(slope),
        predicted_rate=predicted_decay_rate(params),
        predicted_rate_alt=alt,
        window=(float(t0), float(t1)),
    )
