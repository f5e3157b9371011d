"""Uniform 1D mesh, P1 hat-function basis and exact element assembly.

All element integrals below are closed-form: the integrands are at most
cubic in the reference coordinate, so no numerical quadrature is used
anywhere in the assembly path.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Mesh:
    """Uniform partition 0 = x_0 < x_1 < ... < x_N = 1 of the unit interval."""

    n_elements: int
    nodes: np.ndarray
    h: float

    @property
    def n_nodes(self) -> int:
        return self.n_elements + 1


def build_mesh(n_elements: int) -> Mesh:
    """Uniform mesh on [0, 1] with n_elements >= 2 intervals of width 1/n_elements."""
    n = int(n_elements)
    if n < 2:
        raise ValueError(f"n_elements must be >= 2, got {n_elements}")
    nodes = np.linspace(0.0, 1.0, n + 1)
    return Mesh(n_elements=n, nodes=nodes, h=1.0 / n)


@dataclass
class BandedSystem:
    """Tridiagonal matrix (lower/diag/upper) with an optional right-hand side.

    ``lower`` and ``upper`` hold the sub- and super-diagonal and are one entry
    shorter than ``diag``.
    """

    lower: np.ndarray
    diag: np.ndarray
    upper: np.ndarray
    rhs: np.ndarray | None = None

    def __post_init__(self):
        n = len(self.diag)
        if len(self.lower) != n - 1 or len(self.upper) != n - 1:
            raise ValueError("off-diagonals must be one entry shorter than diag")
        if self.rhs is not None and len(self.rhs) != n:
            raise ValueError("rhs length must match diag")

    @classmethod
    def zeros(cls, n_nodes: int) -> "BandedSystem":
        return cls(
            lower=np.zeros(n_nodes - 1),
            diag=np.zeros(n_nodes),
            upper=np.zeros(n_nodes - 1),
        )

    def copy(self) -> "BandedSystem":
        rhs = None if self.rhs is None else self.rhs.copy()
        return BandedSystem(self.lower.copy(), self.diag.copy(), self.upper.copy(), rhs)

    def add_scaled(self, other: "BandedSystem", factor: float = 1.0) -> "BandedSystem":
        """In-place ``self += factor * other`` on the matrix part."""
        self.lower += factor * other.lower
        self.diag += factor * other.diag
        self.upper += factor * other.upper
        return self

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = self.diag * v
        out[:-1] += self.upper * v[1:]
        out[1:] += self.lower * v[:-1]
        return out

    def to_dense(self) -> np.ndarray:
        return (
            np.diag(self.diag)
            + np.diag(self.upper, 1)
            + np.diag(self.lower, -1)
        )


def mass_matrix(mesh: Mesh) -> BandedSystem:
    """M_ij = integral phi_j phi_i; interior row (h/6, 2h/3, h/6), ends h/3."""
    h = mesh.h
    diag = np.full(mesh.n_nodes, 2.0 * h / 3.0)
    diag[0] = diag[-1] = h / 3.0
    off = np.full(mesh.n_elements, h / 6.0)
    return BandedSystem(lower=off.copy(), diag=diag, upper=off)


def stiffness_matrix(mesh: Mesh) -> BandedSystem:
    """S_ij = integral phi_j' phi_i'; interior row (-1/h, 2/h, -1/h), ends 1/h."""
    h = mesh.h
    diag = np.full(mesh.n_nodes, 2.0 / h)
    diag[0] = diag[-1] = 1.0 / h
    off = np.full(mesh.n_elements, -1.0 / h)
    return BandedSystem(lower=off.copy(), diag=diag, upper=off)


def convection_matrix(mesh: Mesh) -> BandedSystem:
    """C_ij = integral phi_j' phi_i; interior row (-1/2, 0, 1/2)."""
    diag = np.zeros(mesh.n_nodes)
    diag[0] = -0.5
    diag[-1] = 0.5
    lower = np.full(mesh.n_elements, -0.5)
    upper = np.full(mesh.n_elements, 0.5)
    return BandedSystem(lower=lower, diag=diag, upper=upper)


def nonlinear_convection(W: np.ndarray) -> np.ndarray:
    """Entries integral W W_x phi_i, assembled from exact per-element closed forms.

    On an element with endpoint values (a, b) the contribution to the left
    node is (b-a)(2a+b)/6 and to the right node (b-a)(a+2b)/6.
    """
    a = W[:-1]
    b = W[1:]
    d = b - a
    out = np.zeros_like(W)
    out[:-1] += d * (2.0 * a + b) / 6.0
    out[1:] += d * (a + 2.0 * b) / 6.0
    return out


def nonlinear_convection_jacobian(W: np.ndarray) -> BandedSystem:
    """Exact tridiagonal derivative of :func:`nonlinear_convection`."""
    a = W[:-1]
    b = W[1:]
    sys = BandedSystem.zeros(len(W))
    # left-node contribution (b-a)(2a+b)/6: d/da, d/db
    sys.diag[:-1] += (b - 4.0 * a) / 6.0
    sys.upper += (a + 2.0 * b) / 6.0
    # right-node contribution (b-a)(a+2b)/6: d/da, d/db
    sys.lower += -(2.0 * a + b) / 6.0
    sys.diag[1:] += (4.0 * b - a) / 6.0
    return sys


def memory_load(Z: np.ndarray) -> np.ndarray:
    """Entries integral Z phi_i' for piecewise-constant Z: -Z_e at the left
    node of each element, +Z_e at the right node."""
    out = np.zeros(len(Z) + 1)
    out[:-1] -= Z
    out[1:] += Z
    return out


def boundary_feedback_residual(W: np.ndarray, params) -> np.ndarray:
    """Nonlinear boundary closure terms of the controlled weak form."""
    out = np.zeros_like(W)
    w0 = W[0]
    w1 = W[-1]
    out[0] = (params.c0 + params.w_d) * w0 + (2.0 / (9.0 * params.c0)) * w0**3
    out[-1] = (params.c1 + params.w_d) * w1 + (2.0 / (9.0 * params.c1)) * w1**3
    return out


def boundary_feedback_jacobian(W: np.ndarray, params) -> BandedSystem:
    """Diagonal derivative of :func:`boundary_feedback_residual`."""
    sys = BandedSystem.zeros(len(W))
    sys.diag[0] = (params.c0 + params.w_d) + (2.0 / (3.0 * params.c0)) * W[0] ** 2
    sys.diag[-1] = (params.c1 + params.w_d) + (2.0 / (3.0 * params.c1)) * W[-1] ** 2
    return sys


def gradient(W: np.ndarray, mesh: Mesh) -> np.ndarray:
    """Per-element slope of the P1 interpolant (piecewise constant)."""
    return np.diff(W) / mesh.h


def interpolate_initial(f, mesh: Mesh) -> np.ndarray:
    """Nodal interpolant of a function: values[j] = f(nodes[j])."""
    try:
        values = np.asarray(f(mesh.nodes), dtype=float)
        if values.shape != mesh.nodes.shape:
            raise ValueError
    except (TypeError, ValueError):
        values = np.array([float(f(x)) for x in mesh.nodes])
    return values
