"""Finite-energy Klein-Gordon waves in 1+1d as spectral packets.

A solution is synthesised as
    phi(t, x) = int exp(i(lambda*u - v/lambda)) alpha(lambda) dlambda
in light-cone coordinates u = (x-t)/2, v = (x+t)/2, with the spectral
amplitude alpha supported away from lambda = 0.  Frequencies are
omega = (lambda + 1/lambda)/2, momenta mu = (lambda - 1/lambda)/2, and

    E = int (1 + lambda^2) |alpha|^2,   P = int (lambda^2 - 1) |alpha|^2.

The module also provides the boundary traces on the Rindler wedge
(g on the past cone, p and k = -p' on the future cone), the closed-form
propagator from Cauchy data (Riemann function J0(sqrt(t^2 - x^2))),
Lorentz boosts on packets and on (E, P), and the first-order partner
field psi with beta(lambda) = alpha(lambda)/(-i lambda).

Oscillatory spectral integrals use panels equidistributed in the phase
budget |u| dlambda + |v| d(1/lambda), Gauss-15 per panel, doubled until
the whole evaluation batch is converged.  Everything is pure.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import CoverageError, DomainError
from .quadrature import DecayHint, integrate
from .sampling import SampledFunction, interval_l2_norm_sq, l2_norm
from .specfun import bessel_j0, bessel_j1_over_x

__all__ = [
    "WavePacket",
    "CauchyData",
    "ConeTraces",
    "EnergyMomentum",
    "gaussian_packet",
    "synthesize_phi",
    "synthesize_fields",
    "packet_energy",
    "packet_momentum",
    "cauchy_energy",
    "riemann_propagate",
    "trace_g",
    "trace_p",
    "trace_k",
    "packet_traces",
    "cone_energy_momentum",
    "tail_energy",
    "lorentz_boost",
    "boost_energy_momentum",
    "dirac_partner",
    "subtract_exponential_mode",
    "fd4_derivative",
]

DEFAULT_LAMBDA_MIN = 0.05


# ---------------------------------------------------------------------------
# Data types.


@dataclass
class WavePacket:
    """Spectral amplitude on a lambda grid excluding a gap around 0.

    parity "even"/"odd" stores the positive branch only and mirrors it
    implicitly (alpha(-l) = +/- alpha(l)); "none" takes the grid as is,
    which may span both signs with a gap at 0 (branches are split at
    the sign change and never interpolated across it).
    """

    lambda_grid: np.ndarray
    alpha: np.ndarray
    parity: str = "none"

    def __post_init__(self):
        self.lambda_grid = np.asarray(self.lambda_grid, dtype=float)
        self.alpha = np.asarray(self.alpha, dtype=complex)
        if self.lambda_grid.ndim != 1 or self.lambda_grid.size < 2:
            raise DomainError("lambda grid must be 1D with >= 2 points")
        if np.any(np.diff(self.lambda_grid) <= 0):
            raise DomainError("lambda grid must be strictly increasing")
        if self.alpha.shape != self.lambda_grid.shape:
            raise DomainError("alpha must match the lambda grid")
        if not np.all(np.isfinite(self.alpha)):
            raise DomainError("alpha must be finite")
        if np.min(np.abs(self.lambda_grid)) < 1e-12:
            raise DomainError("lambda grid must exclude a neighbourhood of 0")
        if self.parity not in ("none", "even", "odd"):
            raise DomainError(f"unknown parity {self.parity!r}")
        if self.parity != "none" and self.lambda_grid[0] <= 0:
            raise DomainError("parity packets store the positive branch only")

    def branches(self):
        """Contiguous same-sign segments of the grid."""
        lam = self.lambda_grid
        cuts = np.nonzero(np.sign(lam[:-1]) != np.sign(lam[1:]))[0]
        out = []
        start = 0
        for c in cuts:
            out.append((lam[start:c + 1], self.alpha[start:c + 1]))
            start = c + 1
        out.append((lam[start:], self.alpha[start:]))
        return [(g, a) for g, a in out if g.size >= 2]


@dataclass
class CauchyData:
    """Pair (F, G) = (phi(0, .), psi(0, .)) on x > 0 with a parity flag."""

    x_grid: np.ndarray
    F: np.ndarray
    G: np.ndarray
    extension: str = "F_even_G_odd"

    def __post_init__(self):
        self.x_grid = np.asarray(self.x_grid, dtype=float)
        self.F = np.asarray(self.F)
        self.G = np.asarray(self.G)
        if np.any(self.x_grid <= 0) or np.any(np.diff(self.x_grid) <= 0):
            raise DomainError("x grid must be positive and increasing")
        if self.F.shape != self.x_grid.shape or self.G.shape != self.x_grid.shape:
            raise DomainError("F, G must match the x grid")
        if self.extension not in ("F_even_G_odd", "F_odd_G_even",
                                  "both_finite_energy"):
            raise DomainError(f"unknown extension {self.extension!r}")

    def swapped(self) -> "CauchyData":
        ext = {"F_even_G_odd": "F_odd_G_even",
               "F_odd_G_even": "F_even_G_odd"}.get(self.extension,
                                                   self.extension)
        return CauchyData(self.x_grid, self.G, self.F, ext)

    def f_sampled(self, decay=None) -> SampledFunction:
        return SampledFunction(self.x_grid, self.F, "uniform", decay)

    def g_sampled(self, decay=None) -> SampledFunction:
        return SampledFunction(self.x_grid, self.G, "uniform", decay)


@dataclass
class ConeTraces:
    """Past/future light-cone boundary values g(u), k(v), optional p(v)."""

    g: SampledFunction
    k: SampledFunction
    p: SampledFunction | None = None

    def __post_init__(self):
        for sf in (self.g, self.k) + ((self.p,) if self.p is not None else ()):
            if np.any(sf.grid <= 0):
                raise DomainError("trace grids live on the open half line")


@dataclass(frozen=True)
class EnergyMomentum:
    E: float
    P: float

    def __post_init__(self):
        if self.E < -1e-12 or abs(self.P) > self.E * (1 + 1e-9) + 1e-12:
            raise DomainError("need E >= |P| >= 0")

    @property
    def e_minus_p(self) -> float:
        return self.E - self.P

    @property
    def e_plus_p(self) -> float:
        return self.E + self.P

    @property
    def rest_mass_sq(self) -> float:
        return self.E * self.E - self.P * self.P


def gaussian_packet(center: float = 2.0, width: float = 0.5,
                    lam_min: float = DEFAULT_LAMBDA_MIN,
                    n: int = 801, parity: str = "even",
                    coeffs=(1.0,)) -> WavePacket:
    """Polynomial-times-gaussian bump alpha on the positive branch."""
    lo = max(lam_min, center - 8.0 * width)
    hi = center + 8.0 * width
    lam = np.linspace(lo, hi, n)
    poly = np.zeros_like(lam)
    for k, c in enumerate(coeffs):
        poly += c * lam**k
    alpha = poly * np.exp(-((lam - center) / width) ** 2)
    return WavePacket(lam, alpha, parity)


# ---------------------------------------------------------------------------
# Oscillatory spectral integrals, batched over evaluation points.

_G_NODES, _G_WEIGHTS = np.polynomial.legendre.leggauss(15)
_NODE_BLOCK = 8192


def _phase_panels(lam_a: float, lam_b: float, u_max: float, v_max: float,
                  n_panels: int) -> np.ndarray:
    """Panel boundaries equidistributing u_max*dlam + v_max*d(1/lam).

    A uniform component is blended in so the measure stays strictly
    monotone (and the amplitude itself stays resolved) even when the
    phase budget vanishes, e.g. at u = v = 0.
    """
    a, b = abs(lam_a), abs(lam_b)
    lo, hi = min(a, b), max(a, b)
    span = hi - lo
    phase_total = u_max * span + v_max * (1.0 / lo - 1.0 / hi)
    uniform_weight = phase_total + 1.0

    def psi(lam):
        return (u_max * (lam - lo) + v_max * (1.0 / lo - 1.0 / lam)
                + uniform_weight * (lam - lo) / span)

    ref = np.geomspace(lo, hi, 4 * n_panels + 9)
    targets = np.linspace(0.0, psi(hi), n_panels + 1)
    bounds = np.interp(targets, psi(ref), ref)
    bounds[0], bounds[-1] = lo, hi
    if lam_a < 0:  # negative branch: mirror back preserving orientation
        bounds = -bounds[::-1]
    return bounds


def _branch_sum(lam_nodes, coeff, u, v):
    """sum_j coeff_j exp(i(lam_j u_p - v_p/lam_j)) for each point p."""
    total = np.zeros(u.shape, dtype=complex)
    for s in range(0, lam_nodes.size, _NODE_BLOCK):
        lam = lam_nodes[s:s + _NODE_BLOCK]
        phase = np.outer(lam, u) - np.outer(1.0 / lam, v)
        total += coeff[s:s + _NODE_BLOCK] @ np.exp(1j * phase)
    return total


def _packet_integrals(packet: WavePacket, u, v, weights, tol: float = 1e-9,
                      max_doublings: int = 7):
    """Integrals int W(lambda) e^{i(lambda u - v/lambda)} alpha dlambda.

    u, v are matching arrays of light-cone coordinates; weights is a
    sequence of callables W(lambda).  Returns one complex array per
    weight.  Panels double until the whole batch moves < tol.
    """
    u = np.atleast_1d(np.asarray(u, dtype=float))
    v = np.atleast_1d(np.asarray(v, dtype=float))
    u_max = float(np.max(np.abs(u)))
    v_max = float(np.max(np.abs(v)))
    results = [np.zeros(u.shape, dtype=complex) for _ in weights]
    for lam_grid, alpha_vals in packet.branches():
        spline = CubicSpline(lam_grid, alpha_vals)
        lo, hi = float(lam_grid[0]), float(lam_grid[-1])
        budget = (u_max * (hi - lo)
                  + v_max * abs(1.0 / min(abs(lo), abs(hi))
                                - 1.0 / max(abs(lo), abs(hi))))
        n0 = max(8, lam_grid.size // 6, int(budget / 2.5) + 1)
        prev = None
        n = n0
        for _ in range(max_doublings + 1):
            bounds = _phase_panels(lo, hi, u_max, v_max, n)
            half = 0.5 * np.diff(bounds)
            mid = 0.5 * (bounds[:-1] + bounds[1:])
            lam_nodes = (mid[:, None] + half[:, None] * _G_NODES).ravel()
            base = (half[:, None] * _G_WEIGHTS).ravel() * spline(lam_nodes)
            cur = []
            for w_fn in weights:
                coeff = base * w_fn(lam_nodes)
                val = _branch_sum(lam_nodes, coeff, u, v)
                if packet.parity != "none":
                    sign = 1.0 if packet.parity == "even" else -1.0
                    cm = base * w_fn(-lam_nodes) * sign
                    val = val + _branch_sum(-lam_nodes[::-1], cm[::-1], u, v)
                cur.append(val)
            if prev is not None:
                drift = max(float(np.max(np.abs(c - p)))
                            for c, p in zip(cur, prev))
                scale = max(1.0, max(float(np.max(np.abs(c))) for c in cur))
                if drift <= tol * scale:
                    break
            prev = cur
            n *= 2
        for r, c in zip(results, cur):
            r += c
    return results


def synthesize_phi(packet: WavePacket, t: float, x: float,
                   tol: float = 1e-9) -> complex:
    """phi(t, x) for the packet."""
    u, v = 0.5 * (x - t), 0.5 * (x + t)
    (val,) = _packet_integrals(packet, [u], [v], [lambda lam: 1.0 + 0.0 * lam],
                               tol)
    return complex(val[0])


def synthesize_fields(packet: WavePacket, t: float, xs, tol: float = 1e-9):
    """(phi, phi_x, phi_t) on an array of x at fixed t."""
    xs = np.atleast_1d(np.asarray(xs, dtype=float))
    u, v = 0.5 * (xs - t), 0.5 * (xs + t)
    weights = [
        lambda lam: np.ones_like(lam, dtype=complex),
        lambda lam: 0.5j * (lam - 1.0 / lam),      # d(phase)/dx
        lambda lam: -0.5j * (lam + 1.0 / lam),     # d(phase)/dt
    ]
    return _packet_integrals(packet, u, v, weights, tol)


# ---------------------------------------------------------------------------
# Energy and momentum functionals.


def _density_integral(packet: WavePacket, weight) -> float:
    total = 0.0
    for lam_grid, alpha_vals in packet.branches():
        spline = CubicSpline(lam_grid, alpha_vals)

        def f(lam):
            return np.abs(spline(lam)) ** 2 * weight(lam)

        total += integrate(f, float(lam_grid[0]), float(lam_grid[-1]),
                           1e-12).value
        if packet.parity != "none":
            # |alpha(-l)|^2 = |alpha(l)|^2 and the weights are even in l
            total += integrate(lambda lam: np.abs(spline(lam)) ** 2
                               * weight(-lam),
                               float(lam_grid[0]), float(lam_grid[-1]),
                               1e-12).value
    return float(total)


def packet_energy(packet: WavePacket) -> float:
    """E = int (1 + lambda^2) |alpha|^2 dlambda."""
    return _density_integral(packet, lambda lam: 1.0 + lam * lam)


def packet_momentum(packet: WavePacket) -> float:
    """P = int (lambda^2 - 1) |alpha|^2 dlambda."""
    return _density_integral(packet, lambda lam: lam * lam - 1.0)


def fd4_derivative(values: np.ndarray, h: float) -> np.ndarray:
    """Fourth-order finite-difference derivative on a uniform grid."""
    v = np.asarray(values)
    if v.size < 5:
        raise DomainError("need at least 5 samples for the 4th-order stencil")
    d = np.empty_like(v)
    d[2:-2] = (-v[4:] + 8 * v[3:-1] - 8 * v[1:-3] + v[:-4]) / (12 * h)
    d[0] = (-25 * v[0] + 48 * v[1] - 36 * v[2] + 16 * v[3] - 3 * v[4]) / (12 * h)
    d[1] = (-3 * v[0] - 10 * v[1] + 18 * v[2] - 6 * v[3] + v[4]) / (12 * h)
    d[-2] = (3 * v[-1] + 10 * v[-2] - 18 * v[-3] + 6 * v[-4] - v[-5]) / (12 * h)
    d[-1] = (25 * v[-1] - 48 * v[-2] + 36 * v[-3] - 16 * v[-4] + 3 * v[-5]) / (12 * h)
    return d


def _derivative_samples(sf: SampledFunction, method: str) -> np.ndarray:
    """Spectral derivative where the data is periodic-safe, else FD4.

    "auto" picks the spectral route only on a uniform grid whose end
    values have decayed (plain FFT assumes periodicity; applying it to
    data with a nonzero boundary value rings).
    """
    grid = sf.grid
    d = np.diff(grid)
    uniform = np.ptp(d) <= 1e-9 * d[0]
    scale = float(np.max(np.abs(sf.values))) + 1e-300
    ends_decayed = max(abs(sf.values[0]), abs(sf.values[-1])) < 1e-6 * scale
    if method == "spectral" or (method == "auto" and uniform and ends_decayed):
        if not uniform:
            raise DomainError("spectral differentiation needs a uniform grid")
        n = grid.size
        k = 2.0 * math.pi * np.fft.fftfreq(n, d[0])
        der = np.fft.ifft(1j * k * np.fft.fft(sf.values))
        return der.real if not sf.is_complex else der
    return fd4_derivative(sf.values, d[0]) if uniform else \
        np.asarray(sf.spline().derivative()(grid))


def cauchy_energy(phi0: SampledFunction, dphi_dt0: SampledFunction,
                  derivative: str = "auto") -> float:
    """(1/2pi) int (|phi|^2 + |phi_x|^2 + |phi_t|^2) dx over the grid line."""
    if phi0.grid.shape != dphi_dt0.grid.shape or \
            np.max(np.abs(phi0.grid - dphi_dt0.grid)) > 1e-12:
        raise DomainError("phi and phi_t must share a grid")
    phi_x = _derivative_samples(phi0, derivative)
    dens = (np.abs(phi0.values) ** 2 + np.abs(phi_x) ** 2
            + np.abs(dphi_dt0.values) ** 2)
    return float(np.trapezoid(dens, phi0.grid)) / (2.0 * math.pi)


# ---------------------------------------------------------------------------
# Riemann-method propagator from Cauchy data.


def riemann_propagate(phi0: SampledFunction, dphi_dt0: SampledFunction,
                      t: float, x: float, tol: float = 1e-10):
    """Closed-form solution at (t, x) from data on the line t = 0.

    phi = average of the endpoint values, minus the J1-ratio convolution
    of phi(0,.), plus the J0 convolution of phi_t(0,.), over the domain
    of dependence [x-|t|, x+|t|].  Negative t goes through time reversal.
    """
    if t < 0:
        flipped = SampledFunction(dphi_dt0.grid, -dphi_dt0.values,
                                  dphi_dt0.grid_kind, dphi_dt0.decay)
        return riemann_propagate(phi0, flipped, -t, x, tol)
    lo, hi = x - t, x + t
    for sf in (phi0, dphi_dt0):
        if lo < sf.grid[0] - 1e-12 or hi > sf.grid[-1] + 1e-12:
            raise CoverageError(
                f"domain of dependence [{lo:.6g}, {hi:.6g}] exceeds the "
                f"data grid [{sf.grid[0]:.6g}, {sf.grid[-1]:.6g}]")
    if t == 0.0:
        return phi0(x)
    end_avg = 0.5 * (phi0(lo) + phi0(hi))

    def kernel_arg(xp):
        return np.sqrt(np.maximum((t - (x - xp)) * (t + (x - xp)), 0.0))

    def f1(xp):
        w = kernel_arg(xp)
        return t * bessel_j1_over_x(w) * phi0(xp)

    def f0(xp):
        return bessel_j0(kernel_arg(xp)) * dphi_dt0(xp)

    conv1 = integrate(f1, lo, hi, tol).value
    conv0 = integrate(f0, lo, hi, tol).value
    return end_avg - 0.5 * conv1 + 0.5 * conv0


# ---------------------------------------------------------------------------
# Light-cone traces.


def _trace(packet: WavePacket, grid, weight, on_past_cone: bool,
           tol: float) -> SampledFunction:
    grid = np.asarray(grid, dtype=float)
    if on_past_cone:
        u, v = grid, np.zeros_like(grid)
    else:
        u, v = np.zeros_like(grid), grid
    (vals,) = _packet_integrals(packet, u, v, [weight], tol)
    if float(np.max(np.abs(vals.imag))) <= 1e-10 * max(1e-30, float(np.max(np.abs(vals)))):
        vals = vals.real
    sf = SampledFunction(grid, vals, "uniform", None)
    return sf.with_decay(sf.fitted_exponential_decay())


def trace_g(packet: WavePacket, u_grid, tol: float = 1e-9) -> SampledFunction:
    """g(u) = phi(-u, u) = int e^{i lambda u} alpha dlambda."""
    return _trace(packet, u_grid, lambda lam: np.ones_like(lam, dtype=complex),
                  True, tol)


def trace_p(packet: WavePacket, v_grid, tol: float = 1e-9) -> SampledFunction:
    """p(v) = phi(v, v) = int e^{-i v/lambda} alpha dlambda."""
    return _trace(packet, v_grid, lambda lam: np.ones_like(lam, dtype=complex),
                  False, tol)


def trace_k(packet: WavePacket, v_grid, tol: float = 1e-9) -> SampledFunction:
    """k(v) = -p'(v) = i int e^{-i v/lambda} alpha(lambda)/lambda dlambda."""
    return _trace(packet, v_grid, lambda lam: 1j / lam, False, tol)


def packet_traces(packet: WavePacket, u_grid, v_grid,
                  tol: float = 1e-9) -> ConeTraces:
    return ConeTraces(g=trace_g(packet, u_grid, tol),
                      k=trace_k(packet, v_grid, tol),
                      p=trace_p(packet, v_grid, tol))


def _half_line_norm_sq(sf: SampledFunction) -> float:
    return l2_norm(sf, lower=0.0) ** 2


def cone_energy_momentum(traces: ConeTraces) -> EnergyMomentum:
    """E and P from the light-cone trace integrals (PT-even convention).

    E = (1/2pi) [ int (|g|^2 + |g'|^2) du + int (|p|^2 + |p'|^2) dv ],
    P = (1/2pi) [ int (|g'|^2 - |g|^2) du + int (|p|^2 - |p'|^2) dv ],
    both over the positive half line, using the evenness of g and p.
    """
    if traces.p is None:
        raise DomainError("cone energy needs the p trace (k = -p')")
    g, p = traces.g, traces.p
    dg = SampledFunction(g.grid, _derivative_samples(g, "auto"), g.grid_kind,
                         g.decay)
    dp = SampledFunction(p.grid, _derivative_samples(p, "auto"), p.grid_kind,
                         p.decay)
    g2, dg2 = _half_line_norm_sq(g), _half_line_norm_sq(dg)
    p2, dp2 = _half_line_norm_sq(p), _half_line_norm_sq(dp)
    two_pi = 2.0 * math.pi
    return EnergyMomentum(E=(g2 + dg2 + p2 + dp2) / two_pi,
                          P=(dg2 - g2 + p2 - dp2) / two_pi)


def tail_energy(packet: WavePacket, t: float, tol: float = 1e-7,
                block: float = 4.0, max_span: float = 120.0) -> float:
    """(1/2pi) int_{|x|>t} of the energy density at time t."""
    if t < 0:
        raise DomainError("tail energy is defined for t >= 0")

    def density(xs, sign):
        phi, phi_x, phi_t = synthesize_fields(packet, t, sign * xs, tol)
        return (np.abs(phi) ** 2 + np.abs(phi_x) ** 2 + np.abs(phi_t) ** 2)

    total = 0.0
    for sign in (+1.0, -1.0):
        a = t
        quiet = 0
        while a < t + max_span:
            b = a + block
            piece = integrate(lambda xs: density(xs, sign), a, b, tol).value
            total += piece
            quiet = quiet + 1 if abs(piece) < tol else 0
            if quiet >= 2:
                break
            a = b
    return total / (2.0 * math.pi)


# ---------------------------------------------------------------------------
# Lorentz boosts and the first-order partner.


def lorentz_boost(packet: WavePacket, xi: float) -> WavePacket:
    """alpha -> Lambda alpha(Lambda lambda) with Lambda = e^xi."""
    lam = math.exp(xi)
    return WavePacket(packet.lambda_grid / lam, lam * packet.alpha,
                      packet.parity)


def boost_energy_momentum(em: EnergyMomentum, xi: float) -> EnergyMomentum:
    ch, sh = math.cosh(xi), math.sinh(xi)
    return EnergyMomentum(E=ch * em.E - sh * em.P,
                          P=-sh * em.E + ch * em.P)


def dirac_partner(packet: WavePacket) -> WavePacket:
    """Packet of psi: beta(lambda) = alpha(lambda)/(-i lambda)."""
    beta = 1j * packet.alpha / packet.lambda_grid
    parity = {"even": "odd", "odd": "even"}.get(packet.parity, "none")
    return WavePacket(packet.lambda_grid, beta, parity)


def subtract_exponential_mode(traces: ConeTraces):
    """Split off k(0+) e^{-.} so the remainder has k(0+) = 0.

    Returns (c, traces1) with k1 = k - c e^{-v}, g1 = g - c e^{-u} and,
    when present, p1 = p - c e^{-v}.  This is the preprocessing that
    makes a trace pair with nonzero k(0+) correspond to a finite-energy
    partner field.
    """
    c = float(np.real(traces.k(0.0)))

    def shifted(sf: SampledFunction) -> SampledFunction:
        vals = sf.values - c * np.exp(-sf.grid)
        return SampledFunction(sf.grid, vals, sf.grid_kind, sf.decay)

    return c, ConeTraces(g=shifted(traces.g), k=shifted(traces.k),
                         p=None if traces.p is None else shifted(traces.p))


# ---------------------------------------------------------------------------
# Packet and trace file formats.


def write_packet_json(packet: WavePacket, path) -> None:
    doc = {
        "lambda_grid": [float(x) for x in packet.lambda_grid],
        "alpha_re": [float(a.real) for a in packet.alpha],
        "alpha_im": [float(a.imag) for a in packet.alpha],
        "parity": packet.parity,
    }
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=1)
        fh.write("\n")


def read_packet_json(path) -> WavePacket:
    with open(path) as fh:
        doc = json.load(fh)
    alpha = np.array(doc["alpha_re"]) + 1j * np.array(doc["alpha_im"])
    return WavePacket(np.array(doc["lambda_grid"], dtype=float), alpha,
                      doc.get("parity", "none"))


def write_cauchy_csv(data: CauchyData, path) -> None:
    import csv as _csv
    with open(path, "w", newline="") as fh:
        writer = _csv.writer(fh)
        writer.writerow(["x", "F", "G"])
        for x, f, g in zip(data.x_grid, data.F, data.G):
            writer.writerow([format(float(x), ".17g"),
                             format(float(f), ".17g"),
                             format(float(g), ".17g")])


def read_cauchy_csv(path, extension: str = "F_even_G_odd") -> CauchyData:
    import csv as _csv
    xs, fs, gs = [], [], []
    with open(path, newline="") as fh:
        reader = _csv.reader(fh)
        header = next(reader, None)
        if header is None:
            raise DomainError(f"{path}: empty file")
        for row in reader:
            if not row:
                continue
            xs.append(float(row[0]))
            fs.append(float(row[1]))
            gs.append(float(row[2]))
    if len(xs) < 2:
        raise DomainError(f"{path}: need at least two samples")
    return CauchyData(np.array(xs), np.array(fs), np.array(gs), extension)
