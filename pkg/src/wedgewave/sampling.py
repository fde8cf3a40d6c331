"""Sampled 1D functions with declared grids, decay hints and file I/O.

A SampledFunction is the carrier for cone traces, Cauchy data columns
and transform outputs.  Between samples it evaluates through a cubic
spline; beyond the last sample it follows the declared decay model, and
below the first sample the end cubic is extrapolated (the grids in use
start close enough to zero that this is a sub-cell extrapolation).

CSV files are two columns with header ``x,value``; JSON mirrors the
full structure including grid kind and decay hint.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field, replace

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import DomainError
from .quadrature import DecayHint, integrate

__all__ = [
    "SampledFunction",
    "CriticalLineSamples",
    "log_grid",
    "uniform_grid",
    "l2_norm",
    "l2_distance",
    "read_sampled_csv",
    "write_sampled_csv",
    "read_sampled_json",
    "write_sampled_json",
]


def log_grid(lo: float, hi: float, n: int) -> np.ndarray:
    if lo <= 0 or hi <= lo:
        raise DomainError("log grid needs 0 < lo < hi")
    return np.geomspace(lo, hi, n)


def uniform_grid(lo: float, hi: float, n: int) -> np.ndarray:
    if hi <= lo:
        raise DomainError("uniform grid needs lo < hi")
    return np.linspace(lo, hi, n)


@dataclass
class SampledFunction:
    grid: np.ndarray
    values: np.ndarray
    grid_kind: str = "uniform"
    decay: DecayHint | None = None
    _spline: CubicSpline | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.grid = np.asarray(self.grid, dtype=float)
        self.values = np.asarray(self.values)
        if self.values.dtype.kind not in "fc":
            self.values = self.values.astype(float)
        if self.grid.ndim != 1 or self.grid.size < 2:
            raise DomainError("grid must be a 1D array with at least 2 points")
        if np.any(np.diff(self.grid) <= 0):
            raise DomainError("grid must be strictly increasing")
        if self.values.shape != self.grid.shape:
            raise DomainError("values must match the grid shape")
        if not np.all(np.isfinite(self.values.view(float))):
            raise DomainError("values must be finite")
        if self.grid_kind not in ("uniform", "log_uniform"):
            raise DomainError(f"unknown grid kind {self.grid_kind!r}")

    @property
    def is_complex(self) -> bool:
        return self.values.dtype.kind == "c"

    def spline(self) -> CubicSpline:
        if self._spline is None:
            self._spline = CubicSpline(self.grid, self.values)
        return self._spline

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        out = np.asarray(self.spline()(x),
                         dtype=complex if self.is_complex else float)
        hi = self.grid[-1]
        beyond = x > hi
        if np.any(beyond):
            out[beyond] = self._tail(x[beyond])
        return (out[0] if scalar else out)

    def _tail(self, x):
        v_end = self.values[-1]
        hi = self.grid[-1]
        if self.decay is None or self.decay.kind == "compact":
            return np.zeros_like(x, dtype=self.values.dtype)
        if self.decay.kind == "exponential":
            return v_end * np.exp(-self.decay.rate * (x - hi))
        return v_end * (x / hi) ** (-self.decay.power)

    def with_decay(self, decay: DecayHint | None) -> "SampledFunction":
        return replace(self, decay=decay, _spline=None)

    def fitted_exponential_decay(self, fallback_rate: float = 1.0) -> DecayHint:
        """Exponential hint with the rate fitted on the trailing samples."""
        n = max(4, self.grid.size // 5)
        xs = self.grid[-n:]
        vs = np.abs(self.values[-n:])
        good = vs > 1e-290
        if good.sum() < 3:
            return DecayHint.exponential(fallback_rate)
        slope = np.polyfit(xs[good], np.log(vs[good]), 1)[0]
        rate = -float(slope)
        if not math.isfinite(rate) or rate <= 0:
            rate = fallback_rate
        return DecayHint.exponential(rate)


@dataclass
class CriticalLineSamples:
    """Complex samples of a function of s = 1/2 + i*tau."""

    tau_grid: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.tau_grid = np.asarray(self.tau_grid, dtype=float)
        self.values = np.asarray(self.values, dtype=complex)
        if self.tau_grid.ndim != 1 or self.values.shape != self.tau_grid.shape:
            raise DomainError("tau grid and values must be matching 1D arrays")
        d = np.diff(self.tau_grid)
        if np.any(d <= 0) or np.ptp(d) > 1e-9 * max(abs(d[0]), 1e-30):
            raise DomainError("tau grid must be uniform and increasing")
        if abs(self.tau_grid[0] + self.tau_grid[-1]) > 1e-9 * (abs(self.tau_grid[-1]) + 1):
            raise DomainError("tau grid must be symmetric about 0")

    def conjugate_symmetry_defect(self) -> float:
        return float(np.max(np.abs(self.values - np.conj(self.values[::-1]))))


def interval_l2_norm_sq(fn, lo: float, hi: float, tol: float = 1e-11) -> float:
    res = integrate(lambda x: np.abs(fn(x)) ** 2, lo, hi, tol)
    return float(np.real(res.value))


def l2_norm(sf: SampledFunction, lower: float = 0.0, tol: float = 1e-11) -> float:
    """L2 norm on (lower, infinity): grid range plus the modelled tail.

    Evaluation below grid[0] extrapolates the end cubic, so `lower` is
    expected within one cell of the grid start (or inside the grid).
    """
    total = interval_l2_norm_sq(sf, lower, float(sf.grid[-1]), tol)
    if sf.decay is not None:
        v_end = abs(sf.values[-1])
        if sf.decay.kind == "exponential" and v_end > 0:
            total += v_end**2 / (2.0 * sf.decay.rate)
        elif sf.decay.kind == "algebraic" and v_end > 0:
            p = sf.decay.power
            total += v_end**2 * sf.grid[-1] / (2.0 * p - 1.0)
    return math.sqrt(max(total, 0.0))


def l2_distance(f, g, lo: float, hi: float, tol: float = 1e-11) -> float:
    res = integrate(lambda x: np.abs(f(x) - g(x)) ** 2, lo, hi, tol)
    return math.sqrt(max(float(np.real(res.value)), 0.0))


# ---------------------------------------------------------------------------
# File formats.  CSV: header "x,value", '.' decimal, no locale.


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def write_sampled_csv(sf: SampledFunction, path) -> None:
    if sf.is_complex:
        raise DomainError("CSV holds real-valued samples; use JSON for complex")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["x", "value"])
        for x, v in zip(sf.grid, sf.values):
            writer.writerow([_fmt(x), _fmt(v)])


def _infer_grid_kind(grid: np.ndarray) -> str:
    d = np.diff(grid)
    if np.ptp(d) <= 1e-9 * abs(d[0]):
        return "uniform"
    if np.all(grid > 0):
        r = np.diff(np.log(grid))
        if np.ptp(r) <= 1e-9 * abs(r[0]):
            return "log_uniform"
    return "uniform"


def read_sampled_csv(path, decay: DecayHint | None = None) -> SampledFunction:
    xs, vs = [], []
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise DomainError(f"{path}: empty file")
        for row in reader:
            if not row:
                continue
            xs.append(float(row[0]))
            vs.append(float(row[1]))
    if len(xs) < 2:
        raise DomainError(f"{path}: need at least two samples")
    grid = np.array(xs)
    return SampledFunction(grid, np.array(vs), _infer_grid_kind(grid), decay)


def _decay_to_json(decay: DecayHint | None):
    if decay is None:
        return None
    out = {"kind": decay.kind}
    if decay.rate is not None:
        out["rate"] = decay.rate
    if decay.power is not None:
        out["power"] = decay.power
    if decay.support_end is not None:
        out["support_end"] = decay.support_end
    return out


def _decay_from_json(obj) -> DecayHint | None:
    if obj is None:
        return None
    return DecayHint(obj["kind"], rate=obj.get("rate"),
                     power=obj.get("power"), support_end=obj.get("support_end"))


def write_sampled_json(sf: SampledFunction, path) -> None:
    doc = {
        "grid": [float(x) for x in sf.grid],
        "grid_kind": sf.grid_kind,
        "decay": _decay_to_json(sf.decay),
    }
    if sf.is_complex:
        doc["values_re"] = [float(v.real) for v in sf.values]
        doc["values_im"] = [float(v.imag) for v in sf.values]
    else:
        doc["values"] = [float(v) for v in sf.values]
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_sampled_json(path) -> SampledFunction:
    with open(path) as fh:
        doc = json.load(fh)
    grid = np.array(doc["grid"], dtype=float)
    if "values" in doc:
        values = np.array(doc["values"], dtype=float)
    else:
        values = np.array(doc["values_re"]) + 1j * np.array(doc["values_im"])
    return SampledFunction(grid, values, doc.get("grid_kind", "uniform"),
                           _decay_from_json(doc.get("decay")))
