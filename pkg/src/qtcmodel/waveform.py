from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InvalidInputError


@dataclass(frozen=True, eq=False)
class Waveform:
    """Uniformly sampled real signal; ``samples[i]`` is taken at ``i * dt``."""

    dt: float
    samples: np.ndarray

    def __post_init__(self):
        samples = np.asarray(self.samples, dtype=float)
        object.__setattr__(self, "samples", samples)
        if not self.dt > 0:
            raise InvalidInputError("dt must be > 0")
        if samples.ndim != 1 or samples.size < 2:
            raise InvalidInputError("a waveform needs at least two samples")
        if not np.all(np.isfinite(samples)):
            raise InvalidInputError("waveform contains non-finite samples")

    def __len__(self):
        return self.samples.size

    @property
    def time(self) -> np.ndarray:
        return np.arange(self.samples.size) * self.dt

    @property
    def duration(self) -> float:
        return self.samples.size * self.dt

    def window(self, start: int, count: int) -> "Waveform":
        """Sub-record of `count` samples beginning at index `start`."""
        if start < 0 or start + count > self.samples.size:
            raise InvalidInputError("requested slice exceeds the record")
        return Waveform(self.dt, self.samples[start:start + count])
