"""The J0-kernel transform on (0, infinity), three ways.

The operator is T(f)(x) = int_0^inf J0(2 sqrt(xy)) f(y) dy.  It is
unitary and self-reciprocal on L2(0, inf), keeps exp(-x) fixed, and is
scale-reversing: T(f(c y))(x) = T(f)(x/c)/c.  This module computes it

* by direct quadrature with interval splitting at the kernel zeros,
* through the Mellin domain, where it acts as multiplication by
  Gamma(1-s)/Gamma(s) composed with s -> 1-s on the critical line, and
* as the Hankel transform of order zero after the substitution
  x -> x^2/2 (weight sqrt(x)).

Default working grids: log-uniform on [1e-3, 40] with 2048 points for
sampled data, Mellin contour Re s = 1/2 with tau in [-40, 40] and 4096
samples.  The Mellin path computes the Fourier integral of
exp(t/2) g(exp(t)) by trapezoid on a deep uniform log grid and
evaluates it at arbitrary tau by direct summation, so no interpolation
between FFT bins is involved.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError, RangeError
from .quadrature import DecayHint, integrate_bessel_kernel
from .sampling import CriticalLineSamples, SampledFunction, log_grid
from .specfun import chi_multiplier

__all__ = [
    "h_transform_point",
    "h_transform",
    "hankel0_transform",
    "mellin_transform",
    "h_via_mellin",
    "DEFAULT_GRID",
]

DEFAULT_GRID = dict(lo=1e-3, hi=40.0, n=2048)
_MELLIN_TAU_MAX = 40.0
_MELLIN_N_TAU = 4096
_MELLIN_N_T = 4096


def _as_evaluator(f, hint: DecayHint | None):
    """Accept a SampledFunction or a callable-with-hint."""
    if isinstance(f, SampledFunction):
        return f, (hint or f.decay)
    if hint is None:
        raise DomainError("callable input needs an explicit DecayHint")
    return f, hint


def h_transform_point(f, x: float, tol: float = 1e-9,
                      hint: DecayHint | None = None) -> float:
    """T(f)(x) = int_0^inf J0(2 sqrt(xy)) f(y) dy at a single x > 0."""
    fn, hint = _as_evaluator(f, hint)
    if x < 0:
        raise DomainError("transform argument must be >= 0")
    if x == 0.0:
        from .quadrature import integrate_semi_infinite
        return integrate_semi_infinite(fn, 0.0, tol, hint).value
    return integrate_bessel_kernel(
        fn, "j0",
        phase_arg=lambda y: 2.0 * np.sqrt(x * y),
        a=0.0, tol=tol, hint=hint,
        phase_inverse=lambda w: w * w / (4.0 * x),
    ).value


def _fit_output_hint(grid, values, fallback: DecayHint) -> DecayHint:
    out = SampledFunction(grid, values, "uniform", None)
    try:
        return out.fitted_exponential_decay(
            fallback_rate=fallback.rate if fallback.kind == "exponential" else 1.0)
    except Exception:
        return fallback


def h_transform(f, x_grid, tol: float = 1e-9,
                hint: DecayHint | None = None) -> SampledFunction:
    """Pointwise transform onto x_grid, with a refitted decay hint."""
    fn, hint = _as_evaluator(f, hint)
    x_grid = np.asarray(x_grid, dtype=float)
    values = np.array([h_transform_point(fn, float(x), tol, hint) for x in x_grid])
    kind = "log_uniform" if _looks_log(x_grid) else "uniform"
    return SampledFunction(x_grid, values, kind, _fit_output_hint(x_grid, values, hint))


def _looks_log(grid) -> bool:
    if np.any(grid <= 0) or grid.size < 3:
        return False
    r = np.diff(np.log(grid))
    return np.ptp(r) <= 1e-9 * abs(r[0])


def hankel0_transform(B, r_grid, tol: float = 1e-9,
                      hint: DecayHint | None = None) -> SampledFunction:
    """A(r) = int_0^inf sqrt(rs) J0(rs) B(s) ds on r_grid."""
    fn, hint = _as_evaluator(B, hint)
    r_grid = np.asarray(r_grid, dtype=float)

    def weighted(s):
        return np.sqrt(s) * fn(s)

    values = np.empty_like(r_grid)
    for i, r in enumerate(r_grid):
        if r <= 0:
            raise DomainError("Hankel transform needs r > 0")
        res = integrate_bessel_kernel(
            weighted, "j0",
            phase_arg=lambda s, r=r: r * s,
            a=0.0, tol=tol, hint=hint,
            phase_inverse=lambda w, r=r: w / r,
        )
        values[i] = math.sqrt(r) * res.value
    kind = "log_uniform" if _looks_log(r_grid) else "uniform"
    return SampledFunction(r_grid, values, kind, _fit_output_hint(r_grid, values, hint))


# ---------------------------------------------------------------------------
# Mellin path.


def _mellin_t_grid(fn, hint: DecayHint, tol: float):
    """Uniform grid in t = log u covering all but < tol of the mass."""
    probes = np.array([1e-8, 1e-6, 1e-4, 1e-3])
    g0 = float(np.max(np.abs(fn(probes)))) + 1e-300
    # mass of u^(-1/2) g below u_min is ~ 2 sqrt(u_min) g(0)
    t_min = max(2.0 * math.log(max(tol / (4.0 * g0), 1e-300)), -60.0)
    if 2.0 * math.exp(t_min / 2.0) * g0 > tol:
        raise RangeError("lower endpoint of the log grid truncates more "
                         f"than tol={tol} of mass")
    refs = (np.asarray(fn.grid[:: max(1, fn.grid.size // 32)])
            if isinstance(fn, SampledFunction) else np.geomspace(1e-2, 64.0, 25))
    if hint.kind == "compact":
        t_max = math.log(hint.support_end)
    elif hint.kind == "exponential":
        r = hint.rate
        amp = float(np.max(np.abs(fn(refs))
                           * np.exp(np.minimum(r * refs, 690.0)))) + 1e-300
        u_max = (math.log(max(amp / tol, 2.0)) + 5.0) / r
        t_max = math.log(max(u_max, float(np.max(refs)), 2.0))
    else:
        p = hint.power
        amp = float(np.max(np.abs(fn(refs)) * refs**p)) + 1e-300
        u_max = (max(amp, tol) / (tol * (p - 0.5))) ** (1.0 / (p - 0.5))
        t_max = math.log(max(u_max, float(np.max(refs)), 4.0))
    return np.linspace(t_min, t_max, _MELLIN_N_T)


def mellin_transform(g, tau_grid, tol: float = 1e-9,
                     hint: DecayHint | None = None) -> CriticalLineSamples:
    """g_hat(1/2 + i tau) = int_0^inf g(u) u^(-1/2-i tau) du.

    Computed as the Fourier integral of w(t) = exp(t/2) g(exp(t)).
    """
    fn, hint = _as_evaluator(g, hint)
    tau_grid = np.asarray(tau_grid, dtype=float)
    ts = _mellin_t_grid(fn, hint, tol)
    dt = ts[1] - ts[0]
    w = np.exp(0.5 * ts) * np.asarray(fn(np.exp(ts)))
    trap = np.full(ts.size, dt)
    trap[0] *= 0.5
    trap[-1] *= 0.5
    wt = w * trap
    values = np.empty(tau_grid.size, dtype=complex)
    chunk = 256
    for i in range(0, tau_grid.size, chunk):
        taus = tau_grid[i:i + chunk]
        values[i:i + chunk] = np.exp(-1j * np.outer(taus, ts)) @ wt
    return CriticalLineSamples(tau_grid, values)


def h_via_mellin(g, x_grid=None, tol: float = 1e-9,
                 hint: DecayHint | None = None,
                 tau_max: float = _MELLIN_TAU_MAX,
                 n_tau: int = _MELLIN_N_TAU) -> SampledFunction:
    """Transform through the Mellin multiplier Gamma(1-s)/Gamma(s).

    (T g)^hat(s) = chi(s) g_hat(1-s) on Re s = 1/2, inverted by the
    contour integral at Re s = 1/2.
    """
    fn, hint = _as_evaluator(g, hint)
    if x_grid is None:
        if not isinstance(g, SampledFunction):
            raise DomainError("x_grid required for callable input")
        x_grid = g.grid
    x_grid = np.asarray(x_grid, dtype=float)
    if np.any(x_grid <= 0):
        raise DomainError("output grid must be positive")
    taus = np.linspace(-tau_max, tau_max, n_tau)
    ghat = mellin_transform(fn, taus, tol, hint)
    # g_hat(1 - s) on the contour is g_hat at -tau; the grid is symmetric
    transformed = chi_multiplier(taus) * ghat.values[::-1]
    dtau = taus[1] - taus[0]
    trap = np.full(taus.size, dtau)
    trap[0] *= 0.5
    trap[-1] *= 0.5
    ft = transformed * trap
    lx = np.log(x_grid)
    vals = np.empty(x_grid.size, dtype=complex)
    chunk = 256
    for i in range(0, x_grid.size, chunk):
        block = lx[i:i + chunk]
        vals[i:i + chunk] = np.exp(1j * np.outer(block, taus)) @ ft
    vals = vals / (2.0 * math.pi * np.sqrt(x_grid))
    real_input = not (isinstance(g, SampledFunction) and g.is_complex)
    values = vals.real if real_input else vals
    kind = "log_uniform" if _looks_log(x_grid) else "uniform"
    return SampledFunction(x_grid, values, kind, _fit_output_hint(x_grid, values, hint))
