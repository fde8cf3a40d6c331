"""The isometric expansion between Cauchy data and light-cone traces.

Forward maps (semi-infinite Bessel integrals):

    F(x) = int_{x/2}^inf J0(sqrt(x(2v-x))) k(v) dv
    G(x) = k(x/2) - int_{x/2}^inf x J1(w)/w k(v) dv,  w = sqrt(x(2v-x))

Inverse (Goursat) reconstructions over the finite interval (0, 2v):

    k(v) = G(2v) + 1/2 int_0^{2v} [J0(w) F(x) - x J1(w)/w G(x)] dx

with g obtained from the same formula after swapping F and G.  The pair
(F, G) -> (g, k) is isometric: 2 int |k|^2 = int (|F|^2 + |G|^2)
= 2 int |g|^2, and data vanishing on (0, 2a) corresponds exactly to
traces vanishing on (0, a).

The classic weighted form on h(x) = sqrt(x) k(x^2/2) with
f(x) = sqrt(x) F(x^2), g(x) = sqrt(x) G(x^2) is provided as a
change-of-variable wrapper.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoverageError, DomainError
from .htransform import h_transform_point
from .kleingordon import CauchyData
from .quadrature import DecayHint, integrate, integrate_bessel_kernel
from .sampling import SampledFunction, l2_norm
from .specfun import bessel_j0, bessel_j1_over_x

__all__ = [
    "expand_F_from_k",
    "expand_G_from_k",
    "reconstruct_k",
    "reconstruct_g",
    "isometry_defect",
    "original_debranges_forms",
    "original_debranges_inverse",
    "support_equivalence_check",
    "SupportReport",
]


def _tail_hint(f, hint: DecayHint | None) -> tuple:
    if isinstance(f, SampledFunction):
        hint = hint or f.decay
        if hint is None:
            hint = f.fitted_exponential_decay()
        return f, hint
    if hint is None:
        raise DomainError("callable input needs an explicit DecayHint")
    return f, hint


def _require_integrable_tail(hint: DecayHint):
    # pure-L2 (algebraic) tails are outside the validated class
    if hint.kind == "algebraic":
        raise DomainError("expansion integrals need exponential or compact decay")


def expand_F_from_k(k, x: float, tol: float = 1e-9,
                    hint: DecayHint | None = None) -> float:
    """F(x) from the future-cone trace k."""
    fn, hint = _tail_hint(k, hint)
    _require_integrable_tail(hint)
    if x <= 0:
        raise DomainError("expansion point must be positive")
    res = integrate_bessel_kernel(
        fn, "j0",
        phase_arg=lambda v: np.sqrt(np.maximum(x * (2.0 * v - x), 0.0)),
        a=x / 2.0, tol=tol, hint=hint,
        phase_inverse=lambda w: 0.5 * (w * w / x + x),
    )
    return float(np.real(res.value))


def expand_G_from_k(k, x: float, tol: float = 1e-9,
                    hint: DecayHint | None = None) -> float:
    """G(x) from the future-cone trace k."""
    fn, hint = _tail_hint(k, hint)
    _require_integrable_tail(hint)
    if x <= 0:
        raise DomainError("expansion point must be positive")

    def weighted(v):
        return x * fn(v)

    res = integrate_bessel_kernel(
        weighted, "j1_over_x",
        phase_arg=lambda v: np.sqrt(np.maximum(x * (2.0 * v - x), 0.0)),
        a=x / 2.0, tol=tol, hint=hint,
        phase_inverse=lambda w: 0.5 * (w * w / x + x),
    )
    return float(np.real(fn(x / 2.0) - res.value))


def _fg_evaluators(fg: CauchyData):
    """Evaluators for F and G; compact decay once the samples end in 0."""
    out = []
    for vals in (fg.F, fg.G):
        if abs(vals[-1]) == 0.0:
            decay = DecayHint.compact(float(fg.x_grid[-1]))
        else:
            decay = SampledFunction(fg.x_grid, vals).fitted_exponential_decay()
        out.append(SampledFunction(fg.x_grid, vals, "uniform", decay))
    return out


def _support_window(sf: SampledFunction):
    """Interval outside which the samples (and tail model) vanish."""
    nz = np.nonzero(np.abs(sf.values) > 0.0)[0]
    if nz.size == 0:
        return None
    lo = 0.0 if nz[0] == 0 else float(sf.grid[nz[0] - 1])
    if nz[-1] == sf.grid.size - 1:
        hi = math.inf  # tail model may still contribute
    else:
        hi = float(sf.grid[nz[-1] + 1])
    return lo, hi


def reconstruct_k(fg: CauchyData, v: float, tol: float = 1e-10) -> float:
    """k(v) by Riemann's method from Cauchy data on (0, 2v)."""
    if v <= 0:
        raise DomainError("trace point must be positive")
    f_eval, g_eval = _fg_evaluators(fg)
    hi = 2.0 * v
    grid_end = float(fg.x_grid[-1])
    if hi > grid_end and f_eval.decay is None:
        raise CoverageError(f"data grid ends at {grid_end} < 2v = {hi}")

    def window(sf):
        w = _support_window(sf)
        if w is None:
            return None
        lo, top = max(0.0, w[0]), min(hi, w[1])
        return (lo, top) if top > lo else None

    def kernel_term(sf, which):
        win = window(sf)
        if win is None:
            return 0.0

        def f(xs):
            w = np.sqrt(np.maximum(xs * (hi - xs), 0.0))
            if which == "j0":
                return bessel_j0(w) * sf(xs)
            return xs * bessel_j1_over_x(w) * sf(xs)

        return integrate(f, win[0], win[1], tol).value

    endpoint = g_eval(hi)
    return float(np.real(endpoint + 0.5 * kernel_term(f_eval, "j0")
                         - 0.5 * kernel_term(g_eval, "j1")))


def reconstruct_g(fg: CauchyData, u: float, tol: float = 1e-10) -> float:
    """g(u): the same Goursat formula with F and G exchanged."""
    return reconstruct_k(fg.swapped(), u, tol)


def isometry_defect(k, fg: CauchyData, tol: float = 1e-11,
                    hint: DecayHint | None = None) -> float:
    """| 2 int |k|^2 dv - int (|F|^2 + |G|^2) dx |."""
    fn, hint = _tail_hint(k, hint)
    if isinstance(fn, SampledFunction):
        k_sq = l2_norm(fn.with_decay(hint), lower=0.0, tol=tol) ** 2
    else:
        from .quadrature import integrate_semi_infinite
        k_sq = integrate_semi_infinite(lambda v: np.abs(fn(v)) ** 2, 0.0,
                                       tol, _squared_hint(hint)).value
    f_eval, g_eval = _fg_evaluators(fg)
    fg_sq = (l2_norm(f_eval, lower=0.0, tol=tol) ** 2
             + l2_norm(g_eval, lower=0.0, tol=tol) ** 2)
    return abs(2.0 * k_sq - fg_sq)


def _squared_hint(hint: DecayHint) -> DecayHint:
    if hint.kind == "exponential":
        return DecayHint.exponential(2.0 * hint.rate)
    if hint.kind == "algebraic":
        return DecayHint.algebraic(2.0 * hint.power)
    return hint


# ---------------------------------------------------------------------------
# The weighted (classical) form: h(x) = sqrt(x) k(x^2/2).


def original_debranges_forms(h: SampledFunction, tol: float = 1e-8):
    """Map h to the pair (f, g) in the weighted variables.

    h(x) = sqrt(x) k(x^2/2), f(x) = sqrt(x) F(x^2), g(x) = sqrt(x) G(x^2).
    """
    xs = h.grid
    v_grid = 0.5 * xs**2
    k_vals = h(np.sqrt(2.0 * v_grid)) / (2.0 * v_grid) ** 0.25
    k_sf = SampledFunction(v_grid, k_vals, "uniform", None)
    k_sf = k_sf.with_decay(k_sf.fitted_exponential_decay())
    f_vals = np.array([math.sqrt(x) * expand_F_from_k(k_sf, x * x, tol)
                       for x in xs])
    g_vals = np.array([math.sqrt(x) * expand_G_from_k(k_sf, x * x, tol)
                       for x in xs])
    mk = lambda vals: SampledFunction(xs, vals, h.grid_kind, None)
    return mk(f_vals), mk(g_vals)


def original_debranges_inverse(f: SampledFunction, g: SampledFunction,
                               tol: float = 1e-8) -> SampledFunction:
    """Recover h from (f, g) in the weighted variables."""
    if f.grid.shape != g.grid.shape or np.max(np.abs(f.grid - g.grid)) > 1e-12:
        raise DomainError("f and g must share a grid")
    xs = f.grid
    y_grid = xs**2
    F_vals = f(np.sqrt(y_grid)) / y_grid**0.25
    G_vals = g(np.sqrt(y_grid)) / y_grid**0.25
    fg = CauchyData(y_grid, np.real(F_vals), np.real(G_vals))
    h_vals = np.array([math.sqrt(x) * reconstruct_k(fg, 0.5 * x * x, tol)
                       for x in xs])
    return SampledFunction(xs, h_vals, f.grid_kind, None)


# ---------------------------------------------------------------------------
# Causal support equivalence.


@dataclass(frozen=True)
class SupportReport:
    a: float
    max_g_below_a: float
    max_k_below_a: float
    max_F_reexpanded_below_2a: float
    max_G_reexpanded_below_2a: float

    @property
    def max_trace_below_a(self) -> float:
        return max(self.max_g_below_a, self.max_k_below_a)


def _far_field_grid(lo: float, focus: float, v_max: float,
                    d_tau: float = 0.05):
    """Dense near the causal onset, then uniform in sqrt(v).

    The trace switches on at the support radius with high-order contact;
    an extra-fine segment there keeps the spline from ringing into the
    vanishing region.  Far out the traces oscillate like
    cos(sqrt(2 y v) + phase) with y inside the data support, so a grid
    uniform in sqrt(v) keeps a fixed number of samples per period.
    """
    onset_end = max(2.5 * focus, lo + 1e-3)
    onset = np.linspace(lo, onset_end, 600, endpoint=False)
    near_end = max(40.0, 2.0 * onset_end)
    near = np.linspace(onset_end, near_end, 650)
    tau = np.arange(math.sqrt(near_end) + d_tau, math.sqrt(v_max), d_tau)
    return np.concatenate([onset, near, tau**2])


def support_equivalence_check(fg: CauchyData, a: float, n_probe: int = 24,
                              v_max: float = 10000.0,
                              tol: float = 1e-10) -> SupportReport:
    """Check both directions of the support equivalence at radius a.

    Reports the trace maxima on (0, a) reconstructed from the data, and
    the sup norms on (0, 2a) of F and G re-expanded from the
    reconstructed future-cone trace.  The trace is reconstructed far
    enough out (default v_max = 1e4) that truncating it there is below
    the re-expansion tolerances for data with a few vanishing
    derivatives at the support edges.
    """
    if a <= 0:
        raise DomainError("support radius must be positive")
    probes = np.linspace(a / n_probe, a * (1.0 - 0.5 / n_probe), n_probe)
    g_vals = np.array([reconstruct_g(fg, float(u), tol) for u in probes])
    k_vals = np.array([reconstruct_k(fg, float(v), tol) for v in probes])

    rec_grid = _far_field_grid(a / 12.0, a, v_max)
    k_rec = np.array([reconstruct_k(fg, float(v), tol) for v in rec_grid])
    k_sf = SampledFunction(rec_grid, k_rec, "uniform",
                           DecayHint.compact(float(rec_grid[-1])))
    xp = np.linspace(2.0 * a / n_probe, 2.0 * a * (1.0 - 0.5 / n_probe), n_probe)
    F_re = np.array([expand_F_from_k(k_sf, float(x), 1e-8) for x in xp])
    G_re = np.array([expand_G_from_k(k_sf, float(x), 1e-8) for x in xp])
    return SupportReport(
        a=a,
        max_g_below_a=float(np.max(np.abs(g_vals))),
        max_k_below_a=float(np.max(np.abs(k_vals))),
        max_F_reexpanded_below_2a=float(np.max(np.abs(F_re))),
        max_G_reexpanded_below_2a=float(np.max(np.abs(G_re))),
    )


def h_of_trace(k, v: float, tol: float = 1e-9,
               hint: DecayHint | None = None) -> float:
    """Convenience: the J0-kernel transform of a trace at one point."""
    return h_transform_point(k, v, tol, hint)
