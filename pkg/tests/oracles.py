"""Reference computations kept independent of the package code paths they check."""

import itertools
import math

import mpmath as mp
import numpy as np
from scipy import integrate


def mp_curse_constant(p, dps=50):
    """Decomposition constant at extended precision."""
    with mp.workdps(dps):
        p = mp.mpf(p)
        beta = p / (p + 1) / 2 + (1 + mp.power(2, p / (p + 1)) - mp.power(2, 1 / (p + 1))) / 4
        return (p / (p + 1)) / beta


def mp_spline_constant(p, dps=50):
    """Spline constant at extended precision via roots of the first-order conditions."""
    with mp.workdps(dps):
        p = mp.mpf(p)
        q = p / (p - 1)

        def dnorm(y):
            return p * p * y * (1 - y) ** (p - 1) - (1 - (1 - y) ** p)

        def dint(y):
            return p * (1 - y) ** (p - 1) * (1 - y / 2) - (1 - (1 - y) ** p) / 2

        ya = _bisect(dnorm, mp.mpf("1e-30"), 1 - mp.mpf("1e-30"))
        yb = _bisect(dint, mp.mpf("1e-30"), 1 - mp.mpf("1e-30"))
        alpha = (1 - (1 - ya) ** p) / ya ** (1 / p)
        beta = (1 - (1 - yb) ** p) * (1 - yb / 2)
        norm = p / (p + 1) ** (1 / q)
        return min(norm / alpha, (p / (p + 1)) / beta), ya, yb


def _bisect(f, lo, hi, steps=200):
    """Root of f with f(lo) > 0 > f(hi)."""
    assert f(lo) > 0 > f(hi)
    for _ in range(steps):
        mid = (lo + hi) / 2
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return (lo + hi) / 2


def brute_local(coords, weights, t):
    total = 0.0
    for x, w in zip(coords, weights):
        if all(xk < tk for xk, tk in zip(x, t)):
            total += w
    return total - math.prod(t)


def brute_star(coords, weights, d, delta=1e-13):
    """Sup of |local discrepancy| over corners from coordinates, 1 and their right-neighbours."""
    cands = []
    for k in range(d):
        vals = {1.0}
        for x in coords:
            vals.add(float(x[k]))
            vals.add(min(1.0, float(x[k]) + delta))
        cands.append(sorted(vals))
    best = 0.0
    for t in itertools.product(*cands):
        best = max(best, abs(brute_local(coords, weights, t)))
    return best


def quad_lp_1d(coords, weights, p):
    """L_p discrepancy in one dimension by adaptive quadrature with breakpoints."""
    xs = np.asarray(coords, dtype=float).reshape(-1)
    w = np.asarray(weights, dtype=float)

    def f(t):
        return abs(float(np.sum(w[xs < t])) - t) ** p

    pts = sorted(set(xs.tolist()) | {0.0, 1.0})
    total = 0.0
    for a, b in zip(pts[:-1], pts[1:]):
        if b > a:
            total += integrate.quad(f, a, b, epsabs=1e-14, epsrel=1e-13, limit=200)[0]
    return total ** (1.0 / p)
