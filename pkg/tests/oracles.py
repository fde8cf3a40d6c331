"""Independent oracles for the test suite.

Everything here is deliberately separate from the library's evaluation
paths: plain power series, harmonic-sum K-Bessel series, bisection on
the series, and brute-force fine-grid quadrature.  Tests freeze values
computed by these rather than trusting the code under test.
"""

import math

import numpy as np

EULER_GAMMA = 0.5772156649015328606


def j0_series(x: float, terms: int = 60) -> float:
    """Ascending series for J0; adequate for x up to ~15."""
    z = x * x / 4.0
    term = 1.0
    total = 1.0
    for k in range(1, terms):
        term *= -z / (k * k)
        total += term
    return total


def j1_series(x: float, terms: int = 60) -> float:
    z = x * x / 4.0
    term = 0.5 * x
    total = term
    for k in range(1, terms):
        term *= -z / (k * (k + 1))
        total += term
    return total


def j0_first_zero(lo: float = 2.0, hi: float = 3.0) -> float:
    """Bisection on the series oracle."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if j0_series(lo) * j0_series(mid) <= 0.0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def i0_series(x: float, terms: int = 80) -> float:
    z = x * x / 4.0
    term = 1.0
    total = 1.0
    for k in range(1, terms):
        term *= z / (k * k)
        total += term
    return total


def k0_series(x: float, terms: int = 80) -> float:
    """K0 by the logarithmic series (DLMF 10.31.2 pattern), x <= ~8."""
    z = x * x / 4.0
    total = -(math.log(x / 2.0) + EULER_GAMMA) * i0_series(x, terms)
    term = 1.0
    harmonic = 0.0
    for k in range(1, terms):
        term *= z / (k * k)
        harmonic += 1.0 / k
        total += term * harmonic
    return total


def k_imag_quadrature(gamma: float, x: float, n: int = 400001) -> float:
    """High-resolution Simpson rule for the cosh-integral representation."""
    t_max = math.acosh(746.0 / x) if x < 746 else 0.0
    ts = np.linspace(0.0, t_max, n)
    vals = np.exp(-x * np.cosh(ts)) * np.cos(gamma * ts)
    from scipy.integrate import simpson
    return float(simpson(vals, x=ts))


def brute_bessel_transform(f, x: float, y_max: float, n: int = 800001) -> float:
    """Fine-uniform-grid path for int_0^inf J0(2 sqrt(xy)) f(y) dy."""
    from scipy.integrate import simpson
    ys = np.linspace(0.0, y_max, n)
    # separate series/asymptotic evaluation of J0, independent of specfun
    w = 2.0 * np.sqrt(x * ys)
    j0 = np.empty_like(w)
    small = w < 12.0
    j0[small] = [j0_series(float(t)) for t in w[small]]
    big = ~small
    if np.any(big):
        wb = w[big]
        # two-term Hankel asymptotics; fine at 1e-8 for w > 12
        chi = wb - 0.25 * math.pi
        j0[big] = np.sqrt(2.0 / (math.pi * wb)) * (
            np.cos(chi) * (1.0 - 4.5 / (64.0 * wb * wb))
            + np.sin(chi) * (1.0 / (8.0 * wb)) * (1.0 - 37.5 / (64 * wb * wb)))
    return float(simpson(j0 * f(ys), x=ys))


def fd_second(fn, x: float, h: float) -> float:
    """Five-point fourth-order second derivative."""
    return (-fn(x + 2 * h) + 16 * fn(x + h) - 30 * fn(x)
            + 16 * fn(x - h) - fn(x - 2 * h)) / (12.0 * h * h)


def fd_first(fn, x: float, h: float) -> float:
    """Five-point fourth-order first derivative."""
    return (-fn(x + 2 * h) + 8 * fn(x + h)
            - 8 * fn(x - h) + fn(x - 2 * h)) / (12.0 * h)
