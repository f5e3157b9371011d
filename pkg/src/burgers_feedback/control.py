"""Boundary feedback control laws and the adaptive identifier controller.

The non-adaptive laws are diagnostic outputs: the closed-loop dynamics
already embed them through the boundary terms of the weak form. The
adaptive controller replaces those boundary terms by identifier-scaled
versions and evolves the identifiers eta_0, eta_1 (estimates of 1/(2 nu))
by an explicit Euler update of their gradient-like law.
"""

from __future__ import annotations

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class ControlSample:
    t: float
    v0: float
    v1: float


@dataclass(frozen=True)
class AdaptiveState:
    eta0: float
    eta1: float
    gamma: float

    def __post_init__(self):
        if self.gamma <= 0.0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")


def eval_controls(w_left, w_right, z_left, z_right, params, t=0.0) -> ControlSample:
    """Neumann feedback values implied by the boundary traces.

    v0 =  (1/nu) [(c0+w_d) w(0) + 2/(9 c0) w(0)^3 - rho z(0)]
    v1 = -(1/nu) [(c1+w_d) w(1) + 2/(9 c1) w(1)^3 + rho z(1)]
    """
    v0 = (
        (params.c0 + params.w_d) * w_left
        + (2.0 / (9.0 * params.c0)) * w_left**3
        - params.rho * z_left
    ) / params.nu
    v1 = -(
        (params.c1 + params.w_d) * w_right
        + (2.0 / (9.0 * params.c1)) * w_right**3
        + params.rho * z_right
    ) / params.nu
    return ControlSample(t=t, v0=v0, v1=v1)


def adaptive_rhs(traces, params, eta: AdaptiveState) -> tuple[float, float]:
    """Update rates of the identifiers; a pure function of the traces."""
    w_left, w_right, z_left, z_right = traces
    d0 = eta.gamma * (
        (params.c0 + params.w_d) * w_left**2
        + (2.0 / (9.0 * params.c0)) * w_left**4
        - 2.0 * params.rho * z_left * w_left
    )
    d1 = eta.gamma * (
        (params.c1 + params.w_d) * w_right**2
        + (2.0 / (9.0 * params.c1)) * w_right**4
        + 2.0 * params.rho * z_right * w_right
    )
    return d0, d1


def adaptive_controls(traces, params, eta: AdaptiveState, t=0.0) -> ControlSample:
    """Identifier-scaled boundary feedback (note the 2 rho memory factor)."""
    w_left, w_right, z_left, z_right = traces
    v0 = eta.eta0 * (
        (params.c0 + params.w_d) * w_left
        + (2.0 / (9.0 * params.c0)) * w_left**3
        - 2.0 * params.rho * z_left
    )
    v1 = -eta.eta1 * (
        (params.c1 + params.w_d) * w_right
        + (2.0 / (9.0 * params.c1)) * w_right**3
        + 2.0 * params.rho * z_right
    )
    return ControlSample(t=t, v0=v0, v1=v1)


def adaptive_step(eta: AdaptiveState, traces, params, dt: float) -> AdaptiveState:
    """Explicit Euler update of the identifiers."""
    if dt <= 0.0:
        raise ValueError("dt must be positive")
    d0, d1 = adaptive_rhs(traces, params, eta)
    return replace(eta, eta0=eta.eta0 + dt * d0, eta1=eta.eta1 + dt * d1)
