"""Electro-thermal equivalent circuit of the heater/thermopile element.

Thermal quantities are carried as circuit quantities: a node potential is a
temperature rise above the substrate (K) and a branch current is a heat flow
(W).  The heater dissipates ``u_in**2 / R_H`` into the driven node of a Cauer
ladder; the potential of that node is the hot-point rise ``U_H`` seen by the
thermopile, which turns it into ``N * S * U_H``.

All temperature dependencies are linear in the temperature argument
``theta = ambient_offset + U_H``:

* heater:       R_H = R_H0 * (1 + alpha_r * theta)
* conductivity: every ladder resistance is divided by (1 - alpha_lambda * theta)
* Seebeck:      S = S0 * (1 - alpha_s * theta)

plus a parasitic ``coupling * u_in`` feed-through added to the output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Callable

import numpy as np

from .cauer import CauerLadder
from .errors import (
    ConvergenceError,
    DivergenceError,
    InvalidInputError,
    ModelRangeError,
)
from .waveform import Waveform

DC_DAMPING = 0.5
DC_TOL = 1e-12
DC_MAX_ITER = 200
STEP_FRACTION = 20  # dt <= smallest ladder time constant / STEP_FRACTION


@dataclass(frozen=True)
class DeviceModel:
    r_heater0: float  # ohm
    n_couples: int
    seebeck0: float  # V/K per couple
    ladder: CauerLadder
    alpha_r: float = 0.0
    alpha_s: float = 0.0
    alpha_lambda: float = 0.0
    coupling: float = 0.0  # V/V
    t0: float = 25.0  # degC, reference temperature of the coefficients
    ambient_offset: float = 0.0  # K, T_amb - T0
    r_thermopile: float = 0.0  # ohm, informational / netlist only

    def __post_init__(self):
        if not self.r_heater0 > 0:
            raise InvalidInputError("r_heater0 must be > 0")
        if int(self.n_couples) != self.n_couples or self.n_couples < 1:
            raise InvalidInputError("n_couples must be a positive integer")
        if not self.seebeck0 > 0:
            raise InvalidInputError("seebeck0 must be > 0")
        if self.r_thermopile < 0:
            raise InvalidInputError("r_thermopile must be >= 0")
        for name in ("alpha_r", "alpha_s", "alpha_lambda", "coupling", "ambient_offset"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidInputError(f"{name} must be finite")

    @property
    def is_linear(self) -> bool:
        return self.alpha_r == 0 and self.alpha_s == 0 and self.alpha_lambda == 0

    def linearized(self) -> "DeviceModel":
        """Copy with every temperature coefficient and the coupling set to zero."""
        return replace(self, alpha_r=0.0, alpha_s=0.0, alpha_lambda=0.0, coupling=0.0)

    def at_ambient(self, offset: float) -> "DeviceModel":
        return replace(self, ambient_offset=float(offset))

    @property
    def conversion_constant(self) -> float:
        """Small-signal K = N S0 sum(R) / R_H0 of the linear model (1/V)."""
        return self.n_couples * self.seebeck0 * self.ladder.dc_resistance / self.r_heater0


@dataclass(frozen=True)
class ThermalState:
    node_temps: tuple[float, ...]

    @property
    def u_h(self) -> float:
        return self.node_temps[0]


@dataclass(frozen=True)
class DriveSpec:
    kind: str  # "dc" or "sine"
    amplitude: float
    frequency: float = 0.0
    offset: float = 0.0

    def __post_init__(self):
        if self.kind not in ("dc", "sine"):
            raise InvalidInputError(f"unknown drive kind {self.kind!r}")
        if self.kind == "sine" and not self.frequency > 0:
            raise InvalidInputError("sine drive needs frequency > 0")

    def __call__(self, t: float) -> float:
        if self.kind == "dc":
            return self.offset + self.amplitude
        return self.offset + self.amplitude * math.sin(2 * math.pi * self.frequency * t)


@dataclass(frozen=True, eq=False)
class TransientResult:
    hot_point: Waveform  # U_H, K
    output: Waveform  # u_out, V
    drive: Waveform  # u_in, V
    final_state: ThermalState = field(repr=False)


def _theta(model: DeviceModel, u_h: float) -> float:
    return model.ambient_offset + u_h


def conductance_scale(model: DeviceModel, u_h: float) -> float:
    """Factor (1 - alpha_lambda * theta) dividing every ladder resistance."""
    scale = 1.0 - model.alpha_lambda * _theta(model, u_h)
    if not scale > 0:
        raise ModelRangeError(
            f"1 - alpha_lambda * theta = {scale:g} <= 0 at U_H = {u_h:g} K"
        )
    return scale


def heater_resistance(model: DeviceModel, u_h: float) -> float:
    r = model.r_heater0 * (1.0 + model.alpha_r * _theta(model, u_h))
    if not r > 0:
        raise ModelRangeError(f"heater resistance {r:g} ohm <= 0 at U_H = {u_h:g} K")
    return r


def input_power(model: DeviceModel, u_in: float, u_h: float) -> float:
    return u_in * u_in / heater_resistance(model, u_h)


def output_voltage(model: DeviceModel, u_h: float, u_in: float) -> float:
    seebeck = model.seebeck0 * (1.0 - model.alpha_s * _theta(model, u_h))
    return model.n_couples * seebeck * u_h + model.coupling * u_in


def dc_operating_point(model: DeviceModel, u_in: float) -> tuple[float, float]:
    """Steady hot-point rise and output voltage for a constant input `u_in`.

    Solves ``U_H = P(U_H) * sum(R) / (1 - alpha_lambda * theta)`` by damped
    fixed-point iteration; closed form when the thermal path is linear.
    """
    r_sum = model.ladder.dc_resistance
    if model.alpha_r == 0 and model.alpha_lambda == 0:
        u_h = u_in * u_in / model.r_heater0 * r_sum
        return u_h, output_voltage(model, u_h, u_in)

    u_h = 0.0
    for _ in range(DC_MAX_ITER):
        target = input_power(model, u_in, u_h) * r_sum / conductance_scale(model, u_h)
        step = DC_DAMPING * (target - u_h)
        u_h += step
        if abs(step) <= DC_TOL:
            break
    else:
        raise ConvergenceError(
            f"DC operating point did not converge in {DC_MAX_ITER} iterations (u_in={u_in:g} V)"
        )
    conductance_scale(model, u_h)
    return u_h, output_voltage(model, u_h, u_in)


def max_time_step(model: DeviceModel) -> float:
    return float(model.ladder.time_constants()[-1]) / STEP_FRACTION


def _ladder_rhs(model: DeviceModel):
    inv_c = [1.0 / c for c in model.ladder.capacitances]
    g = [1.0 / r for r in model.ladder.resistances]
    n = len(g)

    def rhs(u: list[float], power: float) -> list[float]:
        scale = conductance_scale(model, u[0])
        flows = [(u[k] - (u[k + 1] if k + 1 < n else 0.0)) * g[k] * scale for k in range(n)]
        inflow = power
        du = []
        for k in range(n):
            du.append((inflow - flows[k]) * inv_c[k])
            inflow = flows[k]
        return du

    return rhs


def _integrate(model: DeviceModel, power_at: Callable[[float, float], float],
               dt: float, duration: float) -> np.ndarray:
    """Classical RK4 on the ladder node temperatures; returns (steps+1, n) states."""
    if not dt > 0:
        raise InvalidInputError("dt must be > 0")
    dt_max = max_time_step(model)
    if dt > dt_max * (1 + 1e-12):
        raise InvalidInputError(
            f"dt = {dt:.4g} s exceeds the stability bound {dt_max:.4g} s "
            f"(smallest ladder time constant / {STEP_FRACTION})"
        )
    n_steps = int(round(duration / dt))
    if n_steps < 1:
        raise InvalidInputError("duration must cover at least one step")

    rhs = _ladder_rhs(model)
    n = len(model.ladder)
    states = np.empty((n_steps + 1, n))
    u = [0.0] * n
    states[0] = u
    h = dt
    for i in range(n_steps):
        t = i * h
        k1 = rhs(u, power_at(t, u[0]))
        y = [a + 0.5 * h * b for a, b in zip(u, k1)]
        k2 = rhs(y, power_at(t + 0.5 * h, y[0]))
        y = [a + 0.5 * h * b for a, b in zip(u, k2)]
        k3 = rhs(y, power_at(t + 0.5 * h, y[0]))
        y = [a + h * b for a, b in zip(u, k3)]
        k4 = rhs(y, power_at(t + h, y[0]))
        u = [a + h / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
             for a, b1, b2, b3, b4 in zip(u, k1, k2, k3, k4)]
        if not math.isfinite(u[0]):
            raise DivergenceError(f"state became non-finite at t = {(i + 1) * h:.6g} s")
        states[i + 1] = u
    return states


def transient(model: DeviceModel, drive: DriveSpec, dt: float, duration: float) -> TransientResult:
    """Fixed-step RK4 simulation from the all-zero thermal state."""

    def power_at(t, u_h):
        return input_power(model, drive(t), u_h)

    states = _integrate(model, power_at, dt, duration)
    u_h = states[:, 0]
    times = np.arange(states.shape[0]) * dt
    u_in = np.array([drive(t) for t in times])
    theta = model.ambient_offset + u_h
    u_out = model.n_couples * model.seebeck0 * (1 - model.alpha_s * theta) * u_h + model.coupling * u_in
    return TransientResult(
        hot_point=Waveform(dt, u_h),
        output=Waveform(dt, u_out),
        drive=Waveform(dt, u_in),
        final_state=ThermalState(tuple(states[-1])),
    )


def step_response(model: DeviceModel, power: float, dt: float, duration: float) -> Waveform:
    """Hot-point rise after a constant heat flow `power` (W) is switched on at t=0."""
    states = _integrate(model, lambda t, u_h: power, dt, duration)
    return Waveform(dt, states[:, 0])


def steady_heat_outflow(model: DeviceModel, state: ThermalState) -> float:
    """Heat flow (W) from the last ladder node into the substrate."""
    r_last = model.ladder.resistances[-1]
    return state.node_temps[-1] / r_last * conductance_scale(model, state.u_h)
