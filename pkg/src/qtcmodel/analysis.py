"""Characterisation of a device model: conversion constant, temperature
coefficients, windowed spectra and harmonic tables.

Spectra are amplitude-normalised one-sided magnitudes: bin 0 holds the mean
of the (windowed) record and a bin-aligned sinusoid of amplitude ``a`` shows
up as ``a`` in its bin, whatever the window.  Harmonic levels are reported
in dB relative to the DC bin by default.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

import numpy as np

from .circuit import DeviceModel, DriveSpec, dc_operating_point, max_time_step, transient
from .errors import AlignmentError, InvalidInputError
from .waveform import Waveform

WINDOWS = ("rect", "hamming", "hann", "bartlett")
DEFAULT_HARMONICS = (1, 2, 4, 6)
QUADRATIC_TOL = 0.05  # exponent band accepted as "square law"
ALIGN_TOL = 1e-6  # bins


@dataclass(frozen=True)
class ConversionFit:
    k: float  # 1/V when quadratic
    exponent: float
    quadratic: bool


@dataclass(frozen=True, eq=False)
class Spectrum:
    df: float
    magnitudes: np.ndarray
    window_kind: str

    @property
    def frequencies(self) -> np.ndarray:
        return np.arange(self.magnitudes.size) * self.df


@dataclass(frozen=True)
class HarmonicRow:
    k: int
    frequency: float
    level_db: float
    magnitude: float


@dataclass(frozen=True)
class HarmonicReport:
    f1: float
    rows: tuple[HarmonicRow, ...]
    reference: str = "dc"

    def level(self, k: int) -> float:
        for row in self.rows:
            if row.k == k:
                return row.level_db
        raise KeyError(k)

    def magnitude(self, k: int) -> float:
        for row in self.rows:
            if row.k == k:
                return row.magnitude
        raise KeyError(k)


def fit_conversion_constant(pairs: Iterable[tuple[float, float]]) -> ConversionFit:
    """Fit ``u_out = K * u_in**e`` in log-log space.

    When the fitted exponent is within ``QUADRATIC_TOL`` of 2 the returned K is
    the mean of ``u_out / u_in**2``; otherwise it is the power-law prefactor
    and ``quadratic`` is False.
    """
    data = np.asarray(list(pairs), dtype=float)
    if data.ndim != 2 or data.shape[0] < 3 or data.shape[1] != 2:
        raise InvalidInputError("need at least three (u_in, u_out) pairs")
    u_in, u_out = data.T
    if np.any(u_in <= 0) or np.any(u_out <= 0):
        raise InvalidInputError("log-log fit needs strictly positive u_in and u_out")
    if np.unique(u_in).size != u_in.size:
        raise InvalidInputError("u_in values must be distinct")
    exponent, log_k = np.polyfit(np.log(u_in), np.log(u_out), 1)
    quadratic = abs(exponent - 2) <= QUADRATIC_TOL
    k = float(np.mean(u_out / u_in**2)) if quadratic else float(np.exp(log_k))
    return ConversionFit(k, float(exponent), bool(quadratic))


def dc_sweep(model: DeviceModel, u_values: Sequence[float]) -> list[tuple[float, float, float]]:
    """(u_in, U_H, u_out) at the DC operating point of each input."""
    rows = []
    for u in u_values:
        u_h, u_out = dc_operating_point(model, u)
        rows.append((float(u), u_h, u_out))
    return rows


def heater_tcc_two_point(r_low: float, t_low: float, r_high: float, t_high: float) -> float:
    """Linear temperature coefficient from two resistance readings (1/K)."""
    if t_high == t_low:
        raise InvalidInputError("the two temperatures must differ")
    if not r_low > 0:
        raise InvalidInputError("r_low must be > 0")
    return (r_high / r_low - 1) / (t_high - t_low)


def seebeck_tcc_from_balance(alpha_k: float, alpha_lambda: float, alpha_r: float) -> float:
    """Seebeck coefficient drift implied by alpha_K = alpha_lambda - alpha_R - alpha_S."""
    return alpha_lambda - alpha_r - alpha_k


def temperature_sweep(model: DeviceModel, ambient_offsets: Sequence[float],
                      u_in: float) -> list[tuple[float, float]]:
    """(ambient offset, K) with K = u_out / u_in**2 at each substrate temperature."""
    if u_in == 0:
        raise InvalidInputError("u_in must be non-zero")
    out = []
    for offset in ambient_offsets:
        _, u_out = dc_operating_point(model.at_ambient(offset), u_in)
        out.append((float(offset), u_out / u_in**2))
    return out


def window_coefficients(kind: str, n: int) -> np.ndarray:
    if kind not in WINDOWS:
        raise InvalidInputError(f"unknown window {kind!r}; choose from {', '.join(WINDOWS)}")
    if kind == "rect":
        return np.ones(n)
    return {"hamming": np.hamming, "hann": np.hanning, "bartlett": np.bartlett}[kind](n)


def apply_window(w: Waveform, kind: str) -> Waveform:
    return Waveform(w.dt, w.samples * window_coefficients(kind, len(w)))


def spectrum(w: Waveform, kind: str = "hamming") -> Spectrum:
    n = len(w)
    if n < 8:
        raise InvalidInputError("spectrum needs at least 8 samples")
    win = window_coefficients(kind, n)
    mags = np.abs(np.fft.rfft(w.samples * win)) / win.sum()
    mags[1:] *= 2
    if n % 2 == 0:
        mags[-1] /= 2
    return Spectrum(1.0 / (n * w.dt), mags, kind)


def harmonic_report(spec: Spectrum, f1: float, harmonics: Sequence[int] = DEFAULT_HARMONICS,
                    reference: float | str = "dc") -> HarmonicReport:
    """Level of each harmonic ``k * f1`` in dB.

    `reference` is ``"dc"`` (relative to the DC bin, so DC reads 0 dB) or an
    absolute magnitude such as 1.0 for dB re 1 V.
    """
    if not f1 > 0:
        raise InvalidInputError("f1 must be > 0")
    nyquist_bin = spec.magnitudes.size - 1

    def bin_of(k):
        pos = k * f1 / spec.df
        idx = int(round(pos))
        if abs(pos - idx) > ALIGN_TOL:
            raise AlignmentError(
                f"harmonic {k} at {k * f1:g} Hz is {pos - idx:+.3f} bins off the grid "
                f"(df = {spec.df:g} Hz)"
            )
        if idx > nyquist_bin:
            raise InvalidInputError(f"harmonic {k} at {k * f1:g} Hz is above Nyquist")
        return idx

    ks = [0] + [int(k) for k in harmonics if int(k) != 0]
    if reference == "dc":
        ref = spec.magnitudes[0]
        label = "dc"
    else:
        ref = float(reference)
        label = f"{ref:g}"
    rows = []
    with np.errstate(divide="ignore"):
        for k in ks:
            mag = float(spec.magnitudes[bin_of(k)])
            level = 20 * math.log10(mag / ref) if mag > 0 else -math.inf
            if k == 0 and reference == "dc":
                level = 0.0
            rows.append(HarmonicRow(k, k * f1, level, mag))
    return HarmonicReport(f1, tuple(rows), label)


@dataclass(frozen=True)
class SpectrumPlan:
    """Bin-aligned sampling for a periodic steady-state record."""

    dt: float
    n_fft: int
    periods: int
    warmup_steps: int

    @property
    def record_length(self) -> float:
        return self.n_fft * self.dt


def plan_spectrum_run(model: DeviceModel, f1: float, n_fft: int = 8192,
                      dt_max: float | None = None, warmup: float | None = None) -> SpectrumPlan:
    """Choose dt so that ``n_fft * dt`` spans an integer number of drive periods.

    The warm-up is at least 10 dominant time constants (default 40) and is
    itself rounded up to whole periods.
    """
    if n_fft < 8 or n_fft & (n_fft - 1):
        raise InvalidInputError("n_fft must be a power of two >= 8")
    limit = max_time_step(model)
    if dt_max is not None:
        limit = min(limit, dt_max)
    periods = math.floor(limit * f1 * n_fft * (1 + 1e-12))
    if periods < 1:
        raise InvalidInputError("n_fft too small to cover one period at the allowed step size")
    dt = periods / (f1 * n_fft)
    t_dominant = float(model.ladder.time_constants()[0])
    if warmup is None:
        warmup = 40 * t_dominant
    warmup = max(warmup, 10 * t_dominant)
    steps_per_period = n_fft // math.gcd(n_fft, periods)  # steps spanning whole periods
    block = steps_per_period
    warmup_steps = block * math.ceil(warmup / (block * dt))
    return SpectrumPlan(dt, n_fft, periods, warmup_steps)


def simulate_spectrum(model: DeviceModel, amplitude: float, f1: float, window: str = "hamming",
                      n_fft: int = 8192, signal: str = "output",
                      dt_max: float | None = None) -> Spectrum:
    """Steady-state spectrum of a sine-driven transient run."""
    plan = plan_spectrum_run(model, f1, n_fft, dt_max)
    drive = DriveSpec("sine", amplitude, f1)
    duration = (plan.warmup_steps + plan.n_fft) * plan.dt
    result = transient(model, drive, plan.dt, duration)
    wave = {"output": result.output, "hot_point": result.hot_point}[signal]
    return spectrum(wave.window(plan.warmup_steps, plan.n_fft), window)


def calibrate_coupling(model: DeviceModel, amplitude: float, f1: float,
                       below_second_db: float = 28.0, **kwargs) -> float:
    """Coupling factor placing the fundamental `below_second_db` under the 2f line.

    The feed-through adds ``coupling * u_in`` to the output and no power, so it
    only contributes at f1 and the required value follows in one run.
    """
    base = replace(model, coupling=0.0)
    spec = simulate_spectrum(base, amplitude, f1, **kwargs)
    second = harmonic_report(spec, f1, [2]).magnitude(2)
    return second * 10 ** (-below_second_db / 20) / amplitude
