"""Acceptance suite: every shipping criterion with its pinned tolerance.

Each criterion function returns CriterionResult rows (name, measured,
threshold, pass/fail).  run_all() executes the whole ladder; the CLI
`verify` command prints one line per row and exits nonzero when any row
fails.  Seeded randomness only, so reruns are bit-identical.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import debranges, htransform, kleingordon, scattering
from .kleingordon import (CauchyData, cauchy_energy, cone_energy_momentum,
                          dirac_partner, gaussian_packet, lorentz_boost,
                          packet_energy, packet_momentum, packet_traces,
                          riemann_propagate, synthesize_fields, tail_energy,
                          trace_g, trace_k)
from .quadrature import DecayHint, integrate, integrate_semi_infinite
from .sampling import (SampledFunction, interval_l2_norm_sq, l2_norm,
                       log_grid, uniform_grid)
from .scattering import phase_shift_sweep, reference_solution_K, potential
from .specfun import loggamma_complex

__all__ = ["CriterionResult", "run_all", "CRITERIA", "format_result",
           "gaussian_poly_family", "seeded_packets", "bump_pair"]


@dataclass(frozen=True)
class CriterionResult:
    name: str
    measured: float
    threshold: float
    passed: bool


def _res(name: str, measured: float, threshold: float) -> CriterionResult:
    return CriterionResult(name, float(measured), threshold,
                           float(measured) < threshold)


def format_result(r: CriterionResult) -> str:
    flag = "PASS" if r.passed else "FAIL"
    return f"{r.name:32s} measured={r.measured:13.6e} threshold={r.threshold:9.2e} {flag}"


# ---------------------------------------------------------------------------
# Seeded test families.


def gaussian_poly_family(seed: int, count: int):
    """Gaussian-times-polynomial test functions with mild dilations."""
    rng = np.random.default_rng(seed)
    fns = []
    for i in range(count):
        c = rng.uniform(-1.0, 1.0, size=3)
        m = rng.uniform(0.6, 3.0)
        s = rng.uniform(0.55, 1.4)
        dil = (0.5, 1.0, 2.0)[i % 3]

        def f(y, c=c, m=m, s=s, dil=dil):
            y = np.asarray(y, dtype=float) * dil
            return (c[0] + c[1] * y + c[2] * y * y) * np.exp(-(((y - m) / s) ** 2))

        fns.append(f)
    return fns


def seeded_packets(seed: int, count: int):
    rng = np.random.default_rng(seed)
    packets = []
    for _ in range(count):
        center = rng.uniform(1.5, 2.5)
        width = rng.uniform(0.35, 0.6)
        c1 = rng.uniform(-0.3, 0.3)
        packets.append(gaussian_packet(center, width, parity="even",
                                       coeffs=(1.0, c1)))
    return packets


def bump_pair(lo: float = 2.0, hi: float = 4.0, n: int = 2401,
              edge_order: int = 6) -> CauchyData:
    """Compactly supported (F, G) bumps on (lo, hi), exactly zero outside.

    Polynomial bumps ((x-lo)(hi-x))^m rather than exp(-1/((x-lo)(hi-x))):
    the Gevrey edges of the classical bump make the cone traces decay
    only like exp(-c v^(1/4)), which would push the reconstruction range
    to v ~ 1e5 before re-expansion tolerances are reachable.
    """
    xs = np.linspace(1e-3, hi + 1.0, n)
    inside = (xs > lo) & (xs < hi)
    F = np.zeros_like(xs)
    G = np.zeros_like(xs)
    t = xs[inside]
    core = ((t - lo) * (hi - t)) ** edge_order
    F[inside] = core
    G[inside] = core * (t - 0.5 * (lo + hi)) * 1.5
    return CauchyData(xs, F, G)


# ---------------------------------------------------------------------------
# Criterion 1: the exponential fixed point of the transform.


def criterion_fixed_point() -> list[CriterionResult]:
    xs = np.geomspace(0.01, 20.0, 64)
    hint = DecayHint.exponential(1.0)
    f = lambda y: np.exp(-np.asarray(y, dtype=float))
    err = max(abs(htransform.h_transform_point(f, float(x), 1e-10, hint)
                  - math.exp(-x)) for x in xs)
    return [_res("1-fixed-point", err, 1e-7)]


# Criterion 2: unitarity and involution on the seeded family.


def criterion_unitarity_involution(seed: int = 20251) -> list[CriterionResult]:
    grid = log_grid(1e-3, 40.0, 1024)
    hint = DecayHint.exponential(1.0)
    worst_ratio = 0.0
    worst_invol = 0.0
    for f in gaussian_poly_family(seed, 10):
        norm_in = math.sqrt(integrate_semi_infinite(
            lambda y: np.abs(f(y)) ** 2, 0.0, 1e-13,
            DecayHint.exponential(2.0)).value)
        out = htransform.h_transform(f, grid, 1e-10, hint)
        norm_out = l2_norm(out, lower=0.0)
        worst_ratio = max(worst_ratio, abs(norm_out / norm_in - 1.0))
        back = htransform.h_transform(out, grid, 1e-10)
        dist = math.sqrt(integrate(
            lambda y: np.abs(back(y) - f(y)) ** 2, 0.0, 40.0, 1e-14).value)
        worst_invol = max(worst_invol, dist / norm_in)
    return [_res("2a-unitarity", worst_ratio, 1e-6),
            _res("2b-involution", worst_invol, 1e-6)]


# Criterion 3: direct quadrature vs Mellin multiplier vs packet traces.


def criterion_three_path(seed: int = 31415) -> list[CriterionResult]:
    v_grid = uniform_grid(0.01, 24.0, 900)
    worst = 0.0
    for packet in seeded_packets(seed, 5):
        g = trace_g(packet, uniform_grid(0.005, 24.0, 1600))
        k_tr = trace_k(packet, v_grid)
        direct = htransform.h_transform(g, v_grid, 1e-9)
        mellin = htransform.h_via_mellin(g, v_grid, 1e-9)
        scale = l2_norm(k_tr, lower=0.0)
        for a, b in ((k_tr, direct), (k_tr, mellin), (direct, mellin)):
            d = math.sqrt(integrate(
                lambda v: np.abs(a(v) - b(v)) ** 2, 0.01, 24.0, 1e-14).value)
            worst = max(worst, d / scale)
    return [_res("3-three-path", worst, 1e-4)]


# Criterion 4: the isometric expansion.


def criterion_isometric_expansion() -> list[CriterionResult]:
    hint = DecayHint.exponential(1.0)
    xs = np.geomspace(0.05, 14.0, 36)
    k_exp = lambda v: np.exp(-np.asarray(v, dtype=float))
    err_fp = 0.0
    for x in xs:
        err_fp = max(err_fp,
                     abs(debranges.expand_F_from_k(k_exp, float(x), 1e-9, hint)
                         - math.exp(-x)),
                     abs(debranges.expand_G_from_k(k_exp, float(x), 1e-9, hint)
                         - math.exp(-x)))

    k_fn = lambda v: np.exp(-((np.asarray(v, dtype=float) - 2.0) ** 2))
    k_hint = DecayHint.exponential(4.0)
    x_grid = uniform_grid(0.01, 24.0, 1200)
    F = np.array([debranges.expand_F_from_k(k_fn, float(x), 1e-9, k_hint)
                  for x in x_grid])
    G = np.array([debranges.expand_G_from_k(k_fn, float(x), 1e-9, k_hint)
                  for x in x_grid])
    fg = CauchyData(x_grid, F, G)
    probes = uniform_grid(0.05, 8.0, 160)
    k_back = np.array([debranges.reconstruct_k(fg, float(v)) for v in probes])
    diff2 = np.trapezoid((k_back - k_fn(probes)) ** 2, probes)
    ref2 = integrate_semi_infinite(lambda v: k_fn(v) ** 2, 0.0, 1e-13,
                                   DecayHint.exponential(8.0)).value
    roundtrip = math.sqrt(diff2 / ref2)

    k_sf = SampledFunction(uniform_grid(1e-3, 10.0, 1200),
                           k_fn(uniform_grid(1e-3, 10.0, 1200)),
                           "uniform", k_hint)
    defect = debranges.isometry_defect(k_sf, fg)
    return [_res("4a-expansion-fixed-point", err_fp, 1e-7),
            _res("4b-roundtrip", roundtrip, 1e-6),
            _res("4c-isometry-defect", defect, 1e-5)]


# Criterion 5: causal support equivalence for bumps on (2, 4), a = 1.


def criterion_causal_support() -> list[CriterionResult]:
    fg = bump_pair()
    report = debranges.support_equivalence_check(fg, a=1.0)
    reexp = max(report.max_F_reexpanded_below_2a,
                report.max_G_reexpanded_below_2a)
    return [_res("5a-trace-support", report.max_trace_below_a, 1e-8),
            _res("5b-reexpansion-support", reexp, 1e-6)]


# Criterion 6: energy settles onto the light cone, at desk scale.


def criterion_theorem1() -> list[CriterionResult]:
    packet = gaussian_packet(2.0, 0.5, parity="even")
    e_packet = packet_energy(packet)
    ts = [0.0, 1.0, 2.0, 5.0, 10.0, 20.0]
    tails = [tail_energy(packet, t) for t in ts]
    worst_rise = max(0.0, max(tails[i + 1] - tails[i]
                              for i in range(len(ts) - 1)))
    # k and p live on the reciprocal-frequency side and decay on the
    # scale 2*center^2/width, so the v grid reaches much further out
    u_grid = uniform_grid(0.004, 26.0, 2048)
    v_grid = uniform_grid(0.004, 140.0, 4096)
    traces = packet_traces(packet, u_grid, v_grid)
    cone = cone_energy_momentum(traces)
    return [_res("6a-tail-monotone", worst_rise, 1e-6),
            _res("6b-cone-vs-packet-energy",
                 abs(cone.E / e_packet - 1.0), 1e-3),
            _res("6c-tail0-vs-packet", abs(tails[0] / e_packet - 1.0), 1e-3)]


# Criterion 7: conserved quantities and the boost algebra.


def criterion_conserved() -> list[CriterionResult]:
    packet = gaussian_packet(2.0, 0.5, parity="even")
    xs = uniform_grid(-32.0, 32.0, 4096)
    energies = []
    for t in (0.0, 1.0):
        phi, _, phi_t = synthesize_fields(packet, t, xs, 1e-9)
        phi_sf = SampledFunction(xs, phi.real, "uniform", None)
        phit_sf = SampledFunction(xs, phi_t, "uniform", None)
        energies.append(cauchy_energy(phi_sf, phit_sf))
    drift = abs(energies[1] / energies[0] - 1.0)

    e0, p0 = packet_energy(packet), packet_momentum(packet)
    boosted = lorentz_boost(packet, 0.7)
    e1, p1 = packet_energy(boosted), packet_momentum(boosted)
    mass_drift = abs((e1 * e1 - p1 * p1) / (e0 * e0 - p0 * p0) - 1.0)

    psi_packet = dirac_partner(packet)
    grid = uniform_grid(0.004, 26.0, 2048)
    phi0, _, _ = synthesize_fields(packet, 0.0, grid, 1e-9)
    psi0, _, _ = synthesize_fields(psi_packet, 0.0, grid, 1e-9)
    phi_sf = SampledFunction(grid, phi0.real, "uniform", None)
    psi_sf = SampledFunction(grid, psi0.real, "uniform", None)
    lhs = (interval_l2_norm_sq(phi_sf, 0.0, grid[-1])
           + interval_l2_norm_sq(psi_sf, 0.0, grid[-1]))
    g_n = 2.0 * l2_norm(trace_g(packet, grid), lower=0.0) ** 2
    k_n = 2.0 * l2_norm(trace_k(packet, uniform_grid(0.004, 140.0, 4096)),
                        lower=0.0) ** 2
    ident = max(abs(g_n / lhs - 1.0), abs(k_n / lhs - 1.0))
    return [_res("7a-energy-constant", drift, 1e-3),
            _res("7b-rest-mass-invariant", mass_drift, 1e-6),
            _res("7c-k-identities", ident, 1e-3)]


# Criterion 8: the closed-form propagator.


def criterion_riemann() -> list[CriterionResult]:
    xs = uniform_grid(-12.0, 12.0, 24001)
    phi0 = SampledFunction(xs, np.exp(-np.abs(xs)), "uniform", None)
    zero = SampledFunction(xs, np.zeros_like(xs), "uniform", None)
    pts = [(0.5, 2.0), (0.3, 1.1), (1.0, 4.0), (0.25, 0.8), (2.0, 5.5)]
    err_static = max(abs(riemann_propagate(phi0, zero, t, x) - math.exp(-x))
                     for t, x in pts)

    cos0 = SampledFunction(xs, np.cos(xs), "uniform", None)
    val = riemann_propagate(cos0, zero, 0.7, 1.3, 1e-12)
    err_cos = abs(val - math.cos(1.3) * math.cos(math.sqrt(2.0) * 0.7))
    return [_res("8a-riemann-static", err_static, 1e-6),
            _res("8b-riemann-cosine", err_cos, 1e-8)]


# Criterion 9: Jost phase shifts on both branches.


def criterion_scattering() -> list[CriterionResult]:
    gammas = (0.5, 1.0, 2.0, 4.0)
    err_a = max(r.abs_error for r in phase_shift_sweep(gammas, "a_minus"))
    err_b = max(r.abs_error for r in phase_shift_sweep(gammas, "b_plus"))
    return [_res("9a-phase-a-branch", err_a, 1e-3),
            _res("9b-phase-b-branch", err_b, 1e-3)]


# Criterion 10: special-function identities and the reference ODE.


def reference_ode_residual(gamma: float, zetas, h: float = 0.01) -> float:
    worst = 0.0
    for z in np.asarray(zetas, dtype=float):
        stencil = z + h * np.array([-2.0, -1.0, 0.0, 1.0, 2.0])
        vals = reference_solution_K(gamma, stencil, "A").values
        second = (-vals[0] + 16 * vals[1] - 30 * vals[2] + 16 * vals[3]
                  - vals[4]) / (12.0 * h * h)
        v = float(potential("a_minus", z))
        worst = max(worst, abs(-second + (v - gamma * gamma) * vals[2]))
    return worst


def criterion_specfun() -> list[CriterionResult]:
    taus = np.arange(-20.0, 20.0 + 1e-9, 0.25)
    lg = loggamma_complex(0.5 + 1j * taus)
    log_mod_sq = 2.0 * np.real(lg)
    log_cosh = np.abs(math.pi * taus) + np.log1p(np.exp(-2.0 * np.abs(math.pi * taus))) - math.log(2.0)
    ident = np.exp(log_mod_sq + log_cosh - math.log(math.pi))
    err_gamma = float(np.max(np.abs(ident - 1.0)))

    zetas = np.linspace(-8.0, 2.0, 26)
    err_ode = reference_ode_residual(1.0, zetas)
    return [_res("10a-gamma-reflection", err_gamma, 1e-10),
            _res("10b-reference-ode-residual", err_ode, 1e-6)]


CRITERIA = {
    "fixed_point": criterion_fixed_point,
    "unitarity_involution": criterion_unitarity_involution,
    "three_path": criterion_three_path,
    "isometric_expansion": criterion_isometric_expansion,
    "causal_support": criterion_causal_support,
    "theorem1": criterion_theorem1,
    "conserved": criterion_conserved,
    "riemann": criterion_riemann,
    "scattering": criterion_scattering,
    "specfun": criterion_specfun,
}


def run_all(names=None) -> list[CriterionResult]:
    chosen = list(CRITERIA) if names is None else list(names)
    results: list[CriterionResult] = []
    for name in chosen:
        if name not in CRITERIA:
            raise KeyError(f"unknown criterion {name!r}")
        results.extend(CRITERIA[name]())
    return results
