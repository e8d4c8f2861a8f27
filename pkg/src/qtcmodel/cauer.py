"""Foster to Cauer transformation of RC one-ports.

The ladder is obtained by a continued-fraction expansion about s -> infinity,
starting with a shunt capacitor at the driven node:

    Z(s) = 1 / (s C1 + 1 / (R1 + 1 / (s C2 + 1 / (R2 + ...))))

The expansion runs in exact rational arithmetic (`fractions.Fraction`), which
removes the cancellation problems of the floating-point version; the result
is still checked against the source impedance before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import ConditioningError, InvalidInputError, SynthesisError
from .rcline import FosterNetwork, foster_impedance

MAX_STAGES = 6
_EXHAUSTED_RTOL = 1e-12
_CHECK_RTOL = 1e-9


@dataclass(frozen=True)
class RationalImpedance:
    """Z(s) = numerator(s) / denominator(s), coefficients in ascending powers."""

    numerator: tuple[float, ...]
    denominator: tuple[float, ...]

    def __call__(self, s: complex) -> complex:
        num = np.polynomial.polynomial.polyval(s, self.numerator)
        den = np.polynomial.polynomial.polyval(s, self.denominator)
        return complex(num / den)


@dataclass(frozen=True)
class CauerStage:
    shunt_capacitance: float  # J/K, node k to ground
    series_resistance: float  # K/W, node k to node k+1 (ground after the last)


@dataclass(frozen=True)
class CauerLadder:
    stages: tuple[CauerStage, ...]

    def __init__(self, stages: Sequence[CauerStage]):
        stages = tuple(stages)
        if not stages:
            raise InvalidInputError("ladder needs at least one stage")
        for k, st in enumerate(stages, 1):
            if not (st.shunt_capacitance > 0 and st.series_resistance > 0):
                raise InvalidInputError(f"ladder stage {k} has a non-positive element")
        object.__setattr__(self, "stages", stages)

    @classmethod
    def from_values(cls, capacitances, resistances) -> "CauerLadder":
        if len(capacitances) != len(resistances):
            raise InvalidInputError("capacitance and resistance lists differ in length")
        return cls([CauerStage(float(c), float(r)) for c, r in zip(capacitances, resistances)])

    def __len__(self):
        return len(self.stages)

    @property
    def capacitances(self) -> np.ndarray:
        return np.array([st.shunt_capacitance for st in self.stages])

    @property
    def resistances(self) -> np.ndarray:
        return np.array([st.series_resistance for st in self.stages])

    @property
    def dc_resistance(self) -> float:
        return math.fsum(st.series_resistance for st in self.stages)

    def time_constants(self) -> np.ndarray:
        """Natural time constants of the ladder, largest first."""
        c = self.capacitances
        r = self.resistances
        n = len(c)
        g = np.zeros((n, n))
        for k in range(n):
            gk = 1.0 / r[k]
            g[k, k] += gk
            if k + 1 < n:
                g[k + 1, k + 1] += gk
                g[k, k + 1] -= gk
                g[k + 1, k] -= gk
        rates = np.linalg.eigvals(g / c[:, None]).real
        return np.sort(1.0 / rates)[::-1]


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _mul(p, q):
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def _exact_rational(network: FosterNetwork) -> tuple[list[Fraction], list[Fraction]]:
    if len(network) == 0:
        raise InvalidInputError("Foster network has no stages")
    taus = [st.time_constant for st in network.stages]
    if len(set(taus)) != len(taus):
        raise InvalidInputError("duplicate time constants; merge those stages first")
    num = [Fraction(0)]
    den = [Fraction(1)]
    for st in network.stages:
        r = Fraction(st.resistance)
        factor = [Fraction(1), Fraction(st.time_constant)]
        # num/den + r/factor
        num = _mul(num, factor)
        extra = [r * c for c in den]
        num = [a + b for a, b in zip(num, extra + [Fraction(0)] * (len(num) - len(extra)))]
        den = _mul(den, factor)
    return num, den


def rational_from_foster(network: FosterNetwork) -> RationalImpedance:
    num, den = _exact_rational(network)
    num = _trim(num) or [Fraction(0)]
    return RationalImpedance(tuple(float(c) for c in num), tuple(float(c) for c in den))


def _leading_ok(p: list[Fraction], what: str, k: int, tau_ref: Fraction):
    # compare in normalised frequency s * tau_ref so every coefficient is dimensionless
    scaled = [abs(c) / tau_ref**i for i, c in enumerate(p)]
    if not p or max(scaled) == 0 or scaled[-1] < _EXHAUSTED_RTOL * max(scaled):
        raise ConditioningError(f"stage {k}: leading coefficient of {what} cancelled")


def foster_to_cauer(network: FosterNetwork) -> CauerLadder:
    """Cauer ladder with the same driving-point impedance as `network`."""
    for k, st in enumerate(network.stages, 1):
        if not st.resistance > 0:
            raise SynthesisError(
                f"Foster stage {k} has resistance {st.resistance:g} <= 0; "
                "not a positive-real RC impedance"
            )
    if len(network) > MAX_STAGES:
        raise InvalidInputError(f"at most {MAX_STAGES} stages supported, got {len(network)}")

    num, den = _exact_rational(network)
    num, den = _trim(num), _trim(den)
    taus = [st.time_constant for st in network.stages]
    tau_ref = Fraction(math.exp(sum(math.log(t) for t in taus) / len(taus)))
    stages = []
    for k in range(1, len(network) + 1):
        _leading_ok(num, "impedance numerator", k, tau_ref)
        # Y = den/num ~ s C as s -> inf
        c = den[-1] / num[-1]
        shifted = [Fraction(0)] + [c * a for a in num]
        rem = _trim([a - b for a, b in zip(den, shifted)])
        _leading_ok(rem, "admittance remainder", k, tau_ref)
        # Z = num/rem -> R as s -> inf
        r = num[-1] / rem[-1]
        scaled = [r * a for a in rem] + [Fraction(0)] * (len(num) - len(rem))
        new_num = _trim([a - b for a, b in zip(num, scaled)])
        if c <= 0 or r <= 0:
            raise SynthesisError(f"stage {k}: expansion produced a non-positive element")
        stages.append(CauerStage(float(c), float(r)))
        num, den = new_num, rem
        if not num:
            break
    if num:
        raise ConditioningError("continued fraction did not terminate")
    ladder = CauerLadder(stages)
    _verify(network, ladder)
    return ladder


def _verify(network: FosterNetwork, ladder: CauerLadder):
    taus = [st.time_constant for st in network.stages]
    omegas = np.logspace(np.log10(0.01 / max(taus)), np.log10(100 / min(taus)), 25)
    for s in np.concatenate([[0.0], 1j * omegas]):
        ref = foster_impedance(network, s)
        err = abs(cauer_impedance(ladder, s) - ref) / abs(ref)
        if not err < _CHECK_RTOL:
            raise ConditioningError(
                f"ladder impedance deviates by {err:.2e} (relative) at s = {s}"
            )


def cauer_impedance(ladder: CauerLadder, s: complex) -> complex:
    """Driving-point impedance of the ladder, evaluated from the grounded end."""
    s = complex(s)
    z = 0j
    for st in reversed(ladder.stages):
        branch = st.series_resistance + z
        z = branch / (1 + s * st.shunt_capacitance * branch)
    return z
