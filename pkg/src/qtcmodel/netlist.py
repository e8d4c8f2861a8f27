"""SPICE subcircuit emission for a `DeviceModel`.

The emitted text uses B-source (arbitrary behavioural source) syntax as
understood by ngspice and LTspice.  Layout contract:

* terminals, in order: ``inp inn outp outn``
* thermal nodes ``th1 .. thN`` (``th1`` is the hot point), ground ``0`` is the
  substrate at T0
* node potentials are temperature rises in K, currents are heat flows in W
* every literal except the couple count is printed as ``%.5e``

Temperature-dependent elements become B current sources; when all
coefficients are zero only plain R/C elements and the two unavoidable
behavioural sources (heater power and thermopile output) remain.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .circuit import DeviceModel
from .errors import InvalidInputError

TOOL = "qtcmodel"


def fmt(value: float) -> str:
    return f"{value:.5e}"


@dataclass(frozen=True)
class NetlistDocument:
    header: tuple[str, ...]
    name: str
    nodes: tuple[str, ...]
    elements: tuple[str, ...]

    @property
    def text(self) -> str:
        lines = [*self.header, f".SUBCKT {self.name} {' '.join(self.nodes)}",
                 *self.elements, f".ENDS {self.name}"]
        return "\n".join(lines) + "\n"

    def internal_nodes(self) -> list[str]:
        seen = []
        for line in self.elements:
            if line.startswith("*"):
                continue
            for tok in line.split()[1:3]:
                if tok != "0" and tok not in self.nodes and tok not in seen:
                    seen.append(tok)
        return seen

    def write(self, path) -> None:
        Path(path).write_bytes(self.text.encode("ascii"))


def _theta(model: DeviceModel) -> str:
    if model.ambient_offset == 0:
        return "V(th1)"
    return f"({fmt(model.ambient_offset)}+V(th1))"


def _heater_expr(model: DeviceModel) -> str:
    if model.alpha_r == 0:
        return fmt(model.r_heater0)
    return f"({fmt(model.r_heater0)}*(1+{fmt(model.alpha_r)}*{_theta(model)}))"


def emit_subcircuit(model: DeviceModel, name: str, source: str | None = None) -> NetlistDocument:
    """Build the subcircuit text for `model`; `source` names its origin in the header."""
    if not name or not name.replace("_", "").isalnum() or not name.isascii():
        raise InvalidInputError(f"invalid subcircuit name {name!r}")
    n = len(model.ladder)
    header = [
        f"* {name}: electro-thermal compact model of a heater/thermopile element",
        f"* generated by {TOOL} {__version__}" + (f" from {source}" if source else ""),
        "* thermal analogy: V = temperature rise above substrate [K], I = heat flow [W]",
        f"* ground 0 = substrate at T0 = {fmt(model.t0)} degC; hot point = th1; "
        f"thermal nodes th1..th{n}",
        "* terminals: inp inn (heater), outp outn (thermopile, open-circuit voltage)",
    ]
    theta = _theta(model)
    vin = "V(inp,inn)"
    rh = _heater_expr(model)
    el = ["* heater"]
    if model.alpha_r == 0:
        el.append(f"RH inp inn {rh}")
    else:
        el.append(f"BRH inp inn I={vin}/{rh}")
    el.append("* dissipated heater power injected into th1")
    el.append(f"BPH 0 th1 I={vin}*{vin}/{rh}")

    el.append("* Cauer thermal ladder")
    scale = "" if model.alpha_lambda == 0 else f"*(1-{fmt(model.alpha_lambda)}*{theta})"
    for k, st in enumerate(model.ladder.stages, 1):
        node = f"th{k}"
        nxt = f"th{k + 1}" if k < n else "0"
        el.append(f"C{k} {node} 0 {fmt(st.shunt_capacitance)}")
        if scale:
            drop = f"V({node},{nxt})" if nxt != "0" else f"V({node})"
            el.append(f"BR{k} {node} {nxt} I={drop}{scale}/{fmt(st.series_resistance)}")
        else:
            el.append(f"R{k} {node} {nxt} {fmt(st.series_resistance)}")

    el.append("* thermopile output stage")
    src = f"{model.n_couples}*{fmt(model.seebeck0)}*V(th1)"
    if model.alpha_s != 0:
        src += f"*(1-{fmt(model.alpha_s)}*{theta})"
    if model.coupling != 0:
        src += f"+{fmt(model.coupling)}*{vin}"
    if model.r_thermopile > 0:
        rtp = fmt(model.r_thermopile)
        el.append(f"BS outn outp I=({src})/{rtp}")
        el.append(f"RTP outp outn {rtp}")
    else:
        el.append(f"BS outp outn V={src}")
    return NetlistDocument(tuple(header), name, ("inp", "inn", "outp", "outn"), tuple(el))
