"""INI-style project configuration.

Sections
--------
``[geometry]``        length_um, width_um, x_over_l, n_stages (optional, default 2)
``[layer <name>]``    thickness_um, conductivity_w_mk, vol_heat_capacity_j_m3k,
                      tcc_per_k (optional, default 0); one section per film
``[ladder]``          optional explicit Cauer ladder: capacitance_j_per_k and
                      resistance_k_per_w as comma lists, alpha_lambda (optional)
``[device]``          r_heater_ohm, alpha_r, n_thermocouples, seebeck_v_per_k,
                      alpha_s, coupling_kappa, t0_celsius, r_thermopile_ohm,
                      ambient_offset_k (optional)
``[sim]``             dt_s, duration_s, drive, amplitude_v, frequency_hz,
                      window, harmonics, offset_v / n_fft (optional)

Unknown sections or keys are rejected.  Lengths are given in micrometres and
converted to metres on load.
"""

from __future__ import annotations

import configparser
import warnings
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .analysis import DEFAULT_HARMONICS, WINDOWS
from .cauer import CauerLadder, foster_to_cauer
from .circuit import DeviceModel, DriveSpec
from .errors import ConfigError, QTCModelError
from .layerstack import Layer, LayerStack, effective_lambda_tcc, thermal_capacitance, thermal_resistance
from .rcline import DistributedLine, FosterNetwork, foster_network

UM = 1e-6

_GEOMETRY = {"length_um": True, "width_um": True, "x_over_l": True, "n_stages": False}
_LAYER = {"thickness_um": True, "conductivity_w_mk": True, "vol_heat_capacity_j_m3k": True,
          "tcc_per_k": False}
_LADDER = {"capacitance_j_per_k": True, "resistance_k_per_w": True, "alpha_lambda": False}
_DEVICE = {"r_heater_ohm": True, "alpha_r": True, "n_thermocouples": True, "seebeck_v_per_k": True,
           "alpha_s": True, "coupling_kappa": True, "t0_celsius": True, "r_thermopile_ohm": True,
           "ambient_offset_k": False}
_SIM = {"dt_s": True, "duration_s": True, "drive": True, "amplitude_v": True, "frequency_hz": True,
        "window": True, "harmonics": True, "offset_v": False, "n_fft": False}


@dataclass(frozen=True)
class SimSettings:
    dt: float
    duration: float
    drive: str
    amplitude: float
    frequency: float
    window: str
    harmonics: tuple[int, ...] = DEFAULT_HARMONICS
    offset: float = 0.0
    n_fft: int = 8192

    def drive_spec(self) -> DriveSpec:
        return DriveSpec(self.drive, self.amplitude, self.frequency, self.offset)


@dataclass(frozen=True)
class ProjectConfig:
    device: dict
    sim: SimSettings
    stack: LayerStack | None = None
    x_over_l: float = 1.0
    n_stages: int = 2
    ladder_override: CauerLadder | None = None
    alpha_lambda_override: float | None = None
    source: str | None = None

    def line(self) -> DistributedLine:
        if self.stack is None:
            raise ConfigError("no [geometry]/[layer] data: the distributed line is undefined")
        return DistributedLine(thermal_resistance(self.stack), thermal_capacitance(self.stack),
                               self.x_over_l)

    def foster(self, n_stages: int | None = None) -> FosterNetwork:
        return foster_network(self.line(), n_stages or self.n_stages)

    def ladder(self) -> CauerLadder:
        if self.ladder_override is not None:
            return self.ladder_override
        return foster_to_cauer(self.foster())

    def alpha_lambda(self) -> float:
        if self.ladder_override is not None:
            return self.alpha_lambda_override or 0.0
        return effective_lambda_tcc(self.stack)

    def device_model(self) -> DeviceModel:
        d = self.device
        return DeviceModel(
            r_heater0=d["r_heater_ohm"],
            n_couples=d["n_thermocouples"],
            seebeck0=d["seebeck_v_per_k"],
            ladder=self.ladder(),
            alpha_r=d["alpha_r"],
            alpha_s=d["alpha_s"],
            alpha_lambda=self.alpha_lambda(),
            coupling=d["coupling_kappa"],
            t0=d["t0_celsius"],
            ambient_offset=d.get("ambient_offset_k", 0.0),
            r_thermopile=d["r_thermopile_ohm"],
        )


def _float(section, key, raw):
    try:
        return float(raw)
    except ValueError:
        raise ConfigError(f"[{section}] {key}: expected a number, got {raw!r}") from None


def _float_list(section, key, raw):
    return [_float(section, key, item) for item in raw.split(",") if item.strip()]


def _fields(parser, section, spec):
    items = dict(parser.items(section))
    for key in items:
        if key not in spec:
            raise ConfigError(f"[{section}] unknown key {key!r}")
    for key, required in spec.items():
        if required and key not in items:
            raise ConfigError(f"[{section}] missing required key {key!r}")
    return items


def _require(parser, section):
    if not parser.has_section(section):
        raise ConfigError(f"missing section [{section}]")


def parse_config(text: str, source: str | None = None) -> ProjectConfig:
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    try:
        parser.read_string(text, source=source or "<config>")
    except configparser.MissingSectionHeaderError as exc:
        raise ConfigError(f"parse error at line {exc.lineno}: "
                          f"expected a [section] header before {exc.line.strip()!r}") from None
    except (configparser.DuplicateOptionError, configparser.DuplicateSectionError) as exc:
        detail = str(exc).split("]: ", 1)[-1]
        raise ConfigError(f"parse error at line {exc.lineno}: {detail}") from None
    except configparser.ParsingError as exc:
        lineno, line = exc.errors[0]
        raise ConfigError(f"parse error at line {lineno}: cannot parse {line}") from None
    except configparser.Error as exc:
        raise ConfigError(f"parse error: {exc}".replace("\n", " ")) from None

    layer_sections = []
    for section in parser.sections():
        if section.startswith("layer "):
            layer_sections.append(section)
        elif section not in ("geometry", "ladder", "device", "sim"):
            raise ConfigError(f"unknown section [{section}]")

    _require(parser, "device")
    _require(parser, "sim")
    try:
        dev = _fields(parser, "device", _DEVICE)
        device = {k: _float("device", k, v) for k, v in dev.items()}
        n_tc = device["n_thermocouples"]
        if n_tc != int(n_tc):
            raise ConfigError("[device] n_thermocouples must be an integer")
        device["n_thermocouples"] = int(n_tc)

        s = _fields(parser, "sim", _SIM)
        window = s["window"].strip().lower()
        if window not in WINDOWS:
            raise ConfigError(f"[sim] window: expected one of {', '.join(WINDOWS)}")
        try:
            harmonics = tuple(int(h) for h in s["harmonics"].split(",") if h.strip())
        except ValueError:
            raise ConfigError("[sim] harmonics: expected a comma list of integers") from None
        sim = SimSettings(
            dt=_float("sim", "dt_s", s["dt_s"]),
            duration=_float("sim", "duration_s", s["duration_s"]),
            drive=s["drive"].strip().lower(),
            amplitude=_float("sim", "amplitude_v", s["amplitude_v"]),
            frequency=_float("sim", "frequency_hz", s["frequency_hz"]),
            window=window,
            harmonics=harmonics,
            offset=_float("sim", "offset_v", s.get("offset_v", "0")),
            n_fft=int(_float("sim", "n_fft", s.get("n_fft", "8192"))),
        )
        sim.drive_spec()

        ladder = None
        alpha_lambda = None
        if parser.has_section("ladder"):
            lad = _fields(parser, "ladder", _LADDER)
            ladder = CauerLadder.from_values(
                _float_list("ladder", "capacitance_j_per_k", lad["capacitance_j_per_k"]),
                _float_list("ladder", "resistance_k_per_w", lad["resistance_k_per_w"]),
            )
            alpha_lambda = _float("ladder", "alpha_lambda", lad.get("alpha_lambda", "0"))
            if layer_sections or parser.has_section("geometry"):
                warnings.warn("explicit [ladder] given: [geometry]/[layer] data ignored for the "
                              "thermal network", stacklevel=2)

        stack = None
        x_over_l = 1.0
        n_stages = 2
        if parser.has_section("geometry") or layer_sections:
            _require(parser, "geometry")
            if not layer_sections:
                raise ConfigError("missing section [layer <name>] (at least one layer)")
            geo = _fields(parser, "geometry", _GEOMETRY)
            layers = []
            for section in layer_sections:
                f = _fields(parser, section, _LAYER)
                layers.append(Layer(
                    name=section.split(None, 1)[1].strip(),
                    thickness=_float(section, "thickness_um", f["thickness_um"]) * UM,
                    conductivity=_float(section, "conductivity_w_mk", f["conductivity_w_mk"]),
                    vol_heat_capacity=_float(section, "vol_heat_capacity_j_m3k",
                                             f["vol_heat_capacity_j_m3k"]),
                    conductivity_tcc=_float(section, "tcc_per_k", f.get("tcc_per_k", "0")),
                ))
            stack = LayerStack(layers, _float("geometry", "length_um", geo["length_um"]) * UM,
                               _float("geometry", "width_um", geo["width_um"]) * UM)
            x_over_l = _float("geometry", "x_over_l", geo["x_over_l"])
            n_stages = int(_float("geometry", "n_stages", geo.get("n_stages", "2")))
        elif ladder is None:
            raise ConfigError("missing section [geometry] (or an explicit [ladder])")

        cfg = ProjectConfig(device=device, sim=sim, stack=stack, x_over_l=x_over_l,
                            n_stages=n_stages, ladder_override=ladder,
                            alpha_lambda_override=alpha_lambda, source=source)
        cfg.device_model()
    except ConfigError:
        raise
    except QTCModelError as exc:
        raise ConfigError(f"invalid configuration: {exc}") from None
    return cfg


def load_config(path) -> ProjectConfig:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc.strerror}") from None
    return parse_config(text, source=path.name)


def paper_config_path(variant: str = "paper_device") -> Path:
    """Path of a configuration shipped with the package."""
    ref = resources.files("qtcmodel") / "data" / f"{variant}.ini"
    if not ref.is_file():
        raise ConfigError(f"no bundled config named {variant!r}")
    return Path(str(ref))
