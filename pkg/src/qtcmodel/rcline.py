"""Distributed RC line of the cantilever and its truncated Foster expansion.

The cantilever is a uniform RC line, heated at one end and clamped to the
substrate temperature at the other.  Its transfer impedance to a point at
relative position ``x/L`` (measured from the clamped end) is

    Z(s) = R / u * sinh(u * x/L) / cosh(u),    u = sqrt(s R C)

whose poles lie on the negative real axis at ``-(pi^2/4)(2n-1)^2 / (R C)``.
Expanding in partial fractions gives a Foster network, one parallel RC
stage per pole.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError, PoleEvaluationError

_SERIES_LIMIT = 1e-4


@dataclass(frozen=True)
class DistributedLine:
    r_total: float  # K/W
    c_total: float  # J/K
    x_over_L: float = 1.0

    def __post_init__(self):
        if not self.r_total > 0:
            raise InvalidInputError("r_total must be > 0")
        if not self.c_total > 0:
            raise InvalidInputError("c_total must be > 0")
        if not 0 < self.x_over_L <= 1:
            raise InvalidInputError("x_over_L must lie in (0, 1]")

    @property
    def rc(self) -> float:
        return self.r_total * self.c_total


@dataclass(frozen=True)
class FosterStage:
    """Parallel RC stage; ``resistance`` keeps the sign of the series term."""

    resistance: float  # K/W
    time_constant: float  # s

    def __post_init__(self):
        if not self.time_constant > 0:
            raise InvalidInputError("time_constant must be > 0")

    @property
    def capacitance(self) -> float:
        return self.time_constant / self.resistance


@dataclass(frozen=True)
class FosterNetwork:
    stages: tuple[FosterStage, ...]

    def __init__(self, stages: Sequence[FosterStage]):
        object.__setattr__(self, "stages", tuple(stages))

    def __len__(self):
        return len(self.stages)

    @property
    def dc_resistance(self) -> float:
        return math.fsum(st.resistance for st in self.stages)


def _sinh_over_cosh(u: complex, a: float) -> complex:
    # sinh(u a) / cosh(u) without overflow for large Re(u)
    if u.real > 1.0:
        num = cmath.exp(u * (a - 1.0)) - cmath.exp(-u * (a + 1.0))
        return num / (1.0 + cmath.exp(-2.0 * u))
    return cmath.sinh(u * a) / cmath.cosh(u)


def impedance(line: DistributedLine, s: complex) -> complex:
    """Transfer impedance of the distributed line at complex frequency `s` (K/W)."""
    a = line.x_over_L
    z = complex(s) * line.rc
    u = cmath.sqrt(z)
    if abs(u) < _SERIES_LIMIT:
        # even series of sinh(u a) / (u cosh u)
        ratio = a * (1 + z * (a * a / 6 - 0.5) + z * z * (a**4 / 120 - a * a / 12 + 5 / 24))
    else:
        ratio = _sinh_over_cosh(u, a) / u
    return line.r_total * ratio


def pole(line: DistributedLine, n: int) -> tuple[float, float]:
    """Magnitude of the n-th pole (1/s) and its time constant (s).

    The pole itself sits at ``-p_n`` on the real axis.
    """
    if n < 1:
        raise InvalidInputError(f"pole index must be >= 1, got {n}")
    p = (math.pi**2 / 4) * (2 * n - 1) ** 2 / line.rc
    return p, 1.0 / p


def foster_stage(line: DistributedLine, n: int) -> FosterStage:
    if n < 1:
        raise InvalidInputError(f"stage index must be >= 1, got {n}")
    k = 2 * n - 1
    sign = 1.0 if n % 2 else -1.0
    r = line.r_total * 8 * sign / (math.pi**2 * k * k) * math.sin(math.pi / 2 * k * line.x_over_L)
    _, tau = pole(line, n)
    return FosterStage(r, tau)


def foster_network(line: DistributedLine, n_stages: int) -> FosterNetwork:
    if n_stages < 1:
        raise InvalidInputError("n_stages must be >= 1")
    return FosterNetwork([foster_stage(line, n) for n in range(1, n_stages + 1)])


def foster_impedance(network: FosterNetwork, s: complex) -> complex:
    """Sum of R_n / (1 + s tau_n) over the stages."""
    total = 0j
    for st in network.stages:
        den = 1 + complex(s) * st.time_constant
        if den == 0:
            raise PoleEvaluationError(f"s = {s} is a pole of the network")
        total += st.resistance / den
    return total
