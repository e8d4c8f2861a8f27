"""Effective thermal parameters of a layered cantilever.

Every quantity is a thickness-weighted average over the stack, so the
cantilever is treated as a single homogeneous 1D bar of length ``L`` and
cross-section ``A = width * total_thickness``.  With that reading the heat
capacity reduces to ``L * width * sum(C_i * d_i)``.

All values are SI (m, W, J, K).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .errors import InvalidInputError


@dataclass(frozen=True)
class Layer:
    """One film of the cantilever.

    Attributes:
        name: label used in configs and reports
        thickness: film thickness d_i (m)
        conductivity: thermal conductivity lambda_i (W/(m K))
        vol_heat_capacity: volumetric heat capacity C_i (J/(K m^3))
        conductivity_tcc: relative temperature coefficient of lambda_i (1/K),
            positive when conductivity falls with temperature
    """

    name: str
    thickness: float
    conductivity: float
    vol_heat_capacity: float
    conductivity_tcc: float = 0.0

    def __post_init__(self):
        if not self.thickness > 0:
            raise InvalidInputError(f"layer {self.name!r}: thickness must be > 0")
        if not self.conductivity > 0:
            raise InvalidInputError(f"layer {self.name!r}: conductivity must be > 0")
        if not self.vol_heat_capacity > 0:
            raise InvalidInputError(f"layer {self.name!r}: vol_heat_capacity must be > 0")
        if not math.isfinite(self.conductivity_tcc):
            raise InvalidInputError(f"layer {self.name!r}: conductivity_tcc must be finite")


@dataclass(frozen=True)
class LayerStack:
    layers: tuple[Layer, ...]
    length: float  # m
    width: float  # m

    def __init__(self, layers: Sequence[Layer], length: float, width: float):
        object.__setattr__(self, "layers", tuple(layers))
        object.__setattr__(self, "length", float(length))
        object.__setattr__(self, "width", float(width))
        if not self.layers:
            raise InvalidInputError("layer stack is empty")
        if not self.length > 0:
            raise InvalidInputError("length must be > 0")
        if not self.width > 0:
            raise InvalidInputError("width must be > 0")

    @property
    def total_thickness(self) -> float:
        return math.fsum(layer.thickness for layer in self.layers)

    @property
    def area(self) -> float:
        """Cross-section normal to the heat flow (m^2)."""
        return self.width * self.total_thickness


def _check(stack: LayerStack):
    if not stack.layers:
        raise InvalidInputError("layer stack is empty")
    if not stack.area > 0:
        raise InvalidInputError("cross-sectional area is zero")


def _weighted_mean(stack: LayerStack, attr: str) -> float:
    _check(stack)
    num = math.fsum(getattr(layer, attr) * layer.thickness for layer in stack.layers)
    return num / stack.total_thickness


def effective_conductivity(stack: LayerStack) -> float:
    """Thickness-weighted mean conductivity, sum(lambda_i d_i) / sum(d_i)."""
    return _weighted_mean(stack, "conductivity")


def thermal_resistance(stack: LayerStack) -> float:
    """Longitudinal thermal resistance ``L / (lambda_eff * A)`` in K/W."""
    return stack.length / (effective_conductivity(stack) * stack.area)


def thermal_capacitance(stack: LayerStack) -> float:
    """Total heat capacity ``C_eff * L * A`` in J/K."""
    return _weighted_mean(stack, "vol_heat_capacity") * stack.length * stack.area


def effective_lambda_tcc(stack: LayerStack) -> float:
    """Thickness-weighted mean of the layers' conductivity coefficients (1/K)."""
    return _weighted_mean(stack, "conductivity_tcc")
