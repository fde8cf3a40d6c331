"""Boost-flow scattering in conformal coordinates.

In xi = (1/2) log((x+t)/(x-t)), zeta = (1/2) log(x^2 - t^2) - log 2,
the wedge problem separates.  Harmonic components e^{-i gamma xi} of
the field obey Schrodinger equations on the zeta line:

    KG:       -Phi'' + 4 e^{2 zeta} Phi               = gamma^2 Phi
    A branch: -Phi'' + (4 e^{2 zeta} - 2 e^zeta) Phi  = gamma^2 Phi
    B branch: -Phi'' + (4 e^{2 zeta} + 2 e^zeta) Phi  = gamma^2 Phi

The A/B combinations mix the spinor pair with e^{+-xi/2} factors so
they look like phi in the far past and psi in the far future.  The
solution square-integrable at +infinity is built from modified Bessel
functions of order 1/2 +- i gamma in the variable 2 e^zeta; towards
-infinity it oscillates freely as cos(gamma zeta - theta), and the
extracted theta equals arg Gamma(1/2 + i gamma), so the reflection
phase is -2 theta = arg S(gamma) with
S(gamma) = Gamma(1/2 - i gamma)/Gamma(1/2 + i gamma) (offset by pi on
the B branch).

Integration towards -infinity is a fixed-step RK4 seeded from the
K-Bessel reference at zeta = 2, which runs against the direction in
which the unwanted companion solution grows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ContaminationError, DomainError, ResolutionError
from .kleingordon import ConeTraces
from .quadrature import DecayHint
from .sampling import SampledFunction
from .specfun import (bessel_k_half_order, bessel_k_half_order_dx,
                      loggamma_complex)

__all__ = [
    "potential",
    "boost_flow",
    "ab_from_phi_psi",
    "OdeSolution",
    "reference_solution_K",
    "integrate_schrodinger",
    "extract_phase_shift",
    "PhaseShiftRow",
    "phase_shift_sweep",
    "wrap_angle",
]

_POTENTIALS = {
    "kg": lambda z: 4.0 * np.exp(2.0 * z),
    "a_minus": lambda z: 4.0 * np.exp(2.0 * z) - 2.0 * np.exp(z),
    "b_plus": lambda z: 4.0 * np.exp(2.0 * z) + 2.0 * np.exp(z),
}


def potential(kind: str, zeta):
    """Exponential-barrier potential of the selected branch."""
    try:
        return _POTENTIALS[kind](np.asarray(zeta, dtype=float))
    except KeyError:
        raise DomainError(f"unknown potential kind {kind!r}") from None


def _scaled_hint(hint, factor: float):
    if hint is None:
        return None
    if hint.kind == "exponential":
        return DecayHint.exponential(hint.rate * factor)
    if hint.kind == "compact":
        return DecayHint.compact(hint.support_end / factor)
    return hint


def boost_flow(traces: ConeTraces, xi: float) -> ConeTraces:
    """g_xi(u) = e^{xi/2} g(e^xi u), k_xi(v) = e^{-xi/2} k(e^{-xi} v).

    Norm-preserving on both traces; p, when present, follows k with the
    opposite amplitude factor so k = -p' is maintained.
    """
    s = math.exp(xi)

    def rescale(sf: SampledFunction, grid_factor: float,
                value_factor: float) -> SampledFunction:
        return SampledFunction(sf.grid * grid_factor,
                               sf.values * value_factor, sf.grid_kind,
                               _scaled_hint(sf.decay, 1.0 / grid_factor))

    return ConeTraces(
        g=rescale(traces.g, 1.0 / s, math.sqrt(s)),
        k=rescale(traces.k, s, 1.0 / math.sqrt(s)),
        p=None if traces.p is None else rescale(traces.p, s, math.sqrt(s)),
    )


def ab_from_phi_psi(phi: complex, psi: complex, xi: float, zeta: float):
    """The linear combinations that scatter cleanly.

    A = (1/2) e^{zeta/2} ( e^{-xi/2} phi + e^{xi/2} psi)
    B = (i/2) e^{zeta/2} (-e^{-xi/2} phi + e^{xi/2} psi)
    """
    ez = math.exp(0.5 * zeta)
    em, ep = math.exp(-0.5 * xi), math.exp(0.5 * xi)
    a = 0.5 * ez * (em * phi + ep * psi)
    b = 0.5j * ez * (-em * phi + ep * psi)
    return a, b


@dataclass
class OdeSolution:
    zeta_grid: np.ndarray
    values: np.ndarray
    derivs: np.ndarray
    gamma: float
    kind: str

    def at(self, zeta: float):
        i = int(np.argmin(np.abs(self.zeta_grid - zeta)))
        return float(self.zeta_grid[i]), float(self.values[i]), float(self.derivs[i])


def reference_solution_K(gamma: float, zeta_grid,
                         component: str = "A") -> OdeSolution:
    """Solution decaying at +infinity, from K_{1/2 +- i gamma}(2 e^zeta).

    A(zeta) = e^{zeta/2} (K_s + K_{1-s})(2 e^zeta) = 2 e^{zeta/2} Re K_s,
    B(zeta) = i e^{zeta/2} (K_s - K_{1-s})       = -2 e^{zeta/2} Im K_s,
    with s = 1/2 + i gamma; K_{1-s} is the conjugate of K_s, so only the
    real integral representations are needed.  A solves the a_minus
    equation, B the b_plus one.
    """
    zeta_grid = np.asarray(zeta_grid, dtype=float)
    values = np.empty_like(zeta_grid)
    derivs = np.empty_like(zeta_grid)
    pick = (lambda z: 2.0 * z.real) if component == "A" else (lambda z: -2.0 * z.imag)
    if component not in ("A", "B"):
        raise DomainError("component must be 'A' or 'B'")
    for i, z in enumerate(zeta_grid):
        x = 2.0 * math.exp(z)
        half = math.exp(0.5 * z)
        kv = bessel_k_half_order(gamma, x, tol=1e-13)
        kd = bessel_k_half_order_dx(gamma, x, tol=1e-13)
        values[i] = half * pick(kv)
        derivs[i] = 0.5 * values[i] + half * pick(kd) * x
    kind = "a_minus" if component == "A" else "b_plus"
    return OdeSolution(zeta_grid, values, derivs, gamma, kind)


def integrate_schrodinger(gamma: float, kind: str, zeta_start: float,
                          phi0: float, dphi0: float, zeta_end: float,
                          h: float | None = None) -> OdeSolution:
    """Fixed-step RK4 for -Phi'' + V Phi = gamma^2 Phi.

    The step must resolve the free oscillation: |h| <= 0.1/max(1, |gamma|).
    """
    v_of = _POTENTIALS.get(kind)
    if v_of is None:
        raise DomainError(f"unknown potential kind {kind!r}")
    h_max = 0.1 / max(1.0, abs(gamma))
    if h is None:
        h = 0.08 * h_max
    if abs(h) > h_max:
        raise ResolutionError(
            f"step {h} too large; need |h| <= {h_max:.4g} at gamma={gamma}")
    span = zeta_end - zeta_start
    n = max(1, int(math.ceil(abs(span) / abs(h))))
    step = span / n
    g2 = gamma * gamma

    def rhs(z, y):
        return np.array([y[1], (v_of(z) - g2) * y[0]])

    zs = np.empty(n + 1)
    ys = np.empty((n + 1, 2))
    zs[0] = zeta_start
    ys[0] = (phi0, dphi0)
    y = ys[0].copy()
    z = zeta_start
    for i in range(1, n + 1):
        k1 = rhs(z, y)
        k2 = rhs(z + 0.5 * step, y + 0.5 * step * k1)
        k3 = rhs(z + 0.5 * step, y + 0.5 * step * k2)
        k4 = rhs(z + step, y + step * k3)
        y = y + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
        z = zeta_start + i * step
        zs[i] = z
        ys[i] = y
    return OdeSolution(zs, ys[:, 0], ys[:, 1], gamma, kind)


def wrap_angle(a: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    w = math.fmod(a, 2.0 * math.pi)
    if w <= -math.pi:
        w += 2.0 * math.pi
    elif w > math.pi:
        w -= 2.0 * math.pi
    return w


def extract_phase_shift(sol: OdeSolution, zeta0: float = -10.0,
                        v_limit: float = 1e-3) -> float:
    """Fit Phi ~ C cos(gamma zeta - theta) at the matching point.

    theta = gamma*zeta0 - atan2(-Phi'(zeta0)/gamma, Phi(zeta0)), wrapped
    to (-pi, pi].  Raises when the residual potential at the matching
    point would bias the fit beyond v_limit.
    """
    if sol.gamma == 0.0:
        raise DomainError("phase extraction needs gamma != 0")
    z0, phi, dphi = sol.at(zeta0)
    v0 = abs(float(potential(sol.kind, z0)))
    bias = v0 / (2.0 * abs(sol.gamma))
    if v0 > v_limit:
        raise ContaminationError(
            f"potential {v0:.3e} at zeta={z0:.3g} contaminates the fit",
            bias=bias)
    return wrap_angle(sol.gamma * z0 - math.atan2(-dphi / sol.gamma, phi))


@dataclass(frozen=True)
class PhaseShiftRow:
    gamma: float
    theta_extracted: float
    theta_reference: float
    abs_error: float


def phase_shift_sweep(gammas, kind: str = "a_minus", zeta_seed: float = 2.0,
                      zeta_match: float = -10.0) -> list[PhaseShiftRow]:
    """Extract the reflection phase for each gamma and compare.

    Reference: theta = arg Gamma(1/2 + i gamma) on the A branch, offset
    by pi/2 on the B branch; hence -2 theta = arg S(gamma), resp.
    arg(-S(gamma)).
    """
    component = "A" if kind == "a_minus" else "B"
    if kind not in ("a_minus", "b_plus"):
        raise DomainError(f"phase sweep needs the a_minus or b_plus branch")
    rows = []
    for gamma in gammas:
        ref = reference_solution_K(gamma, [zeta_seed], component)
        phi0, dphi0 = float(ref.values[0]), float(ref.derivs[0])
        scale = max(abs(phi0), abs(dphi0), 1e-290)
        sol = integrate_schrodinger(gamma, kind, zeta_seed, phi0 / scale,
                                    dphi0 / scale, zeta_match)
        theta = extract_phase_shift(sol, zeta_match)
        theta_ref = float(np.imag(loggamma_complex(0.5 + 1j * gamma)))
        if kind == "b_plus":
            theta_ref = wrap_angle(theta_ref + 0.5 * math.pi)
        err = abs(wrap_angle(theta - theta_ref))
        rows.append(PhaseShiftRow(float(gamma), theta, theta_ref, err))
    return rows
