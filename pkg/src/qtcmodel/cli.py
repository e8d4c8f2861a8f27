"""Command-line front end.

    qtcmodel COMMAND CONFIG [options]

CONFIG is a path to an INI file or ``builtin:NAME`` for a bundled config
(``builtin:paper_device``).  Tabular results are CSV (header row, comma,
LF, 9 significant digits) on stdout or to ``--out``.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import warnings

import numpy as np

from . import __version__
from .analysis import dc_sweep, harmonic_report, simulate_spectrum, temperature_sweep
from .circuit import transient
from .config import load_config, paper_config_path
from .errors import QTCModelError
from .layerstack import effective_conductivity, effective_lambda_tcc, thermal_capacitance, thermal_resistance
from .netlist import emit_subcircuit
from .rcline import pole


def _num(x) -> str:
    return f"{float(x):.9g}"


def _write_csv(args, header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([v if isinstance(v, str) else _num(v) for v in row])
    text = buf.getvalue()
    if args.out:
        with open(args.out, "w", encoding="ascii", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _linspace(args):
    if args.steps < 1:
        raise QTCModelError("--steps must be >= 1")
    if args.steps == 1:
        return [args.start]
    return list(np.linspace(args.start, args.stop, args.steps))


def _harmonics(text):
    try:
        return [int(h) for h in text.split(",") if h.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma list of integers, got {text!r}")


def cmd_params(cfg, args):
    stack = cfg.stack
    if stack is None:
        raise QTCModelError("config has no layer data ([ladder] override only)")
    _write_csv(args, ["quantity", "value", "unit"], [
        ["r_th", thermal_resistance(stack), "K/W"],
        ["c_th", thermal_capacitance(stack), "J/K"],
        ["alpha_lambda", effective_lambda_tcc(stack), "1/K"],
        ["conductivity_eff", effective_conductivity(stack), "W/(m K)"],
    ])


def cmd_poles(cfg, args):
    line = cfg.line()
    rows = [[n, *pole(line, n)] for n in range(1, args.n + 1)]
    _write_csv(args, ["n", "pole_per_s", "time_constant_s"], rows)


def cmd_foster(cfg, args):
    net = cfg.foster(args.n)
    rows = [[n, st.resistance, st.capacitance, st.time_constant]
            for n, st in enumerate(net.stages, 1)]
    _write_csv(args, ["n", "resistance_k_per_w", "capacitance_j_per_k", "time_constant_s"], rows)


def cmd_cauer(cfg, args):
    ladder = cfg.ladder()
    rows = [[k, st.shunt_capacitance, st.series_resistance]
            for k, st in enumerate(ladder.stages, 1)]
    _write_csv(args, ["stage", "capacitance_j_per_k", "resistance_k_per_w"], rows)


def cmd_dc_sweep(cfg, args):
    rows = []
    for u_in, u_h, u_out in dc_sweep(cfg.device_model(), _linspace(args)):
        rows.append([u_in, u_h, u_out, u_out / u_in**2 if u_in else float("nan")])
    _write_csv(args, ["u_in_v", "u_h_k", "u_out_v", "k_per_v"], rows)


def cmd_transient(cfg, args):
    sim = cfg.sim
    res = transient(cfg.device_model(), sim.drive_spec(), sim.dt, sim.duration)
    rows = zip(res.output.time, res.drive.samples, res.hot_point.samples, res.output.samples)
    _write_csv(args, ["time_s", "u_in_v", "u_h_k", "u_out_v"], rows)


def cmd_spectrum(cfg, args):
    sim = cfg.sim
    harmonics = args.harmonics or list(sim.harmonics)
    window = args.window or sim.window
    amplitude = sim.amplitude if args.amplitude is None else args.amplitude
    spec = simulate_spectrum(cfg.device_model(), amplitude, sim.frequency, window,
                             n_fft=sim.n_fft, dt_max=sim.dt)
    report = harmonic_report(spec, sim.frequency, harmonics)
    rows = [[r.k, r.frequency, r.level_db, r.magnitude] for r in report.rows]
    _write_csv(args, ["k", "frequency_hz", "level_db", "magnitude"], rows)


def cmd_temp_sweep(cfg, args):
    rows = temperature_sweep(cfg.device_model(), _linspace(args), args.u_in)
    _write_csv(args, ["ambient_offset_k", "k_per_v"], rows)


def cmd_emit_netlist(cfg, args):
    doc = emit_subcircuit(cfg.device_model(), args.name, source=cfg.source)
    doc.write(args.out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qtcmodel", description="Compact electro-thermal model generator and simulator.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, func, help_text, csv_out=True):
        p = sub.add_parser(name, help=help_text, description=help_text)
        p.add_argument("config", help="INI config path or builtin:NAME")
        if csv_out:
            p.add_argument("--out", help="write CSV here instead of stdout")
        p.set_defaults(func=func)
        return p

    def add_range(p, start, stop, steps, unit):
        p.add_argument("--from", dest="start", type=float, default=start, help=f"first value ({unit})")
        p.add_argument("--to", dest="stop", type=float, default=stop, help=f"last value ({unit})")
        p.add_argument("--steps", type=int, default=steps, help="number of points")

    add("params", cmd_params, "effective R_th, C_th and conductivity coefficient of the layer stack")
    p = add("poles", cmd_poles, "poles and time constants of the distributed line")
    p.add_argument("--n", type=int, default=2, help="number of poles")
    p = add("foster", cmd_foster, "truncated Foster network")
    p.add_argument("--n", type=int, default=None, help="number of stages (default: config)")
    add("cauer", cmd_cauer, "Cauer ladder used by the simulator")
    p = add("dc-sweep", cmd_dc_sweep, "DC transfer characteristic")
    add_range(p, 0.0, 0.6, 7, "V")
    add("transient", cmd_transient, "time-domain simulation with the [sim] drive")
    p = add("spectrum", cmd_spectrum, "steady-state harmonic levels (dB re DC) for a sine drive")
    p.add_argument("--harmonics", type=_harmonics, default=None, help="e.g. 1,2,4,6")
    p.add_argument("--window", choices=["rect", "hamming", "hann", "bartlett"], default=None)
    p.add_argument("--amplitude", type=float, default=None, help="drive amplitude (V)")
    p = add("temp-sweep", cmd_temp_sweep, "conversion constant versus substrate temperature offset")
    add_range(p, -20.0, 60.0, 9, "K")
    p.add_argument("--u-in", dest="u_in", type=float, default=0.1, help="DC input (V), default 0.1")
    p = add("emit-netlist", cmd_emit_netlist, "write a SPICE subcircuit", csv_out=False)
    p.add_argument("--out", required=True, help="netlist file")
    p.add_argument("--name", default="QTC", help="subcircuit name")
    return parser


def _resolve(config: str) -> str:
    if config.startswith("builtin:"):
        return str(paper_config_path(config.split(":", 1)[1]))
    return config


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            cfg = load_config(_resolve(args.config))
        for w in caught:
            print(f"warning: {w.message}", file=sys.stderr)
        args.func(cfg, args)
    except (QTCModelError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
