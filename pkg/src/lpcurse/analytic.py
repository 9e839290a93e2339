"""Closed-form worst-case functions, fooling-function constants and curse constants.

Everything here works for a finite exponent ``p`` in the open interval
``(1, inf)`` and its Hölder conjugate ``q = p / (p - 1)``.  The worst-case
function of the anchored Sobolev space is ``h_1(x) = 1 - (1 - x)**p`` in one
variable and the product of such factors in ``d`` variables.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from .errors import ConvergenceError, DomainError

GRID_POINTS = 4096
MAXIMIZER_TOL = 1e-12
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class HolderPair:
    p: float
    q: float

    def __post_init__(self):
        if not (1.0 < self.p < math.inf and 1.0 < self.q < math.inf):
            raise DomainError(
                f"exponents must lie in (1, inf), got p={self.p}, q={self.q}; "
                "p=1 and p=inf are out of scope (open problems)"
            )
        if abs(1.0 / self.p + 1.0 / self.q - 1.0) > 1e-12:
            raise DomainError(f"p={self.p} and q={self.q} are not Hölder conjugates")


@dataclass(frozen=True)
class DecompositionConstants:
    a: float
    alpha: float
    beta: float
    gamma: float
    c_p: float


@dataclass(frozen=True)
class SplineConstants:
    alpha: float
    y_alpha: float
    beta: float
    y_beta: float
    c_tilde: float


def holder_conjugate(p: float) -> HolderPair:
    p = float(p)
    if math.isnan(p) or p <= 1.0 or math.isinf(p):
        raise DomainError(
            f"p must lie in the open interval (1, inf), got {p}; "
            "p=1 / p=inf out of scope, see the open problems"
        )
    return HolderPair(p, p / (p - 1.0))


def _as_pair(p) -> HolderPair:
    return p if isinstance(p, HolderPair) else holder_conjugate(p)


def _check_unit(x, name="x"):
    x = np.asarray(x, dtype=float)
    if np.any(~((x >= 0.0) & (x <= 1.0))):
        raise DomainError(f"{name} must lie in [0, 1]")
    return x


def h1(p: float, x):
    """Worst-case function ``1 - (1 - x)**p`` on [0, 1] (scalar or array)."""
    x = _check_unit(x)
    out = 1.0 - (1.0 - x) ** p
    return float(out) if out.ndim == 0 else out


def h_d(p: float, x: Sequence[float], d: Optional[int] = None) -> float:
    """Product of ``h1`` over the coordinates of ``x``."""
    x = np.asarray(x, dtype=float).reshape(-1)
    if d is not None and x.size != d:
        raise DomainError(f"expected a point of dimension {d}, got {x.size}")
    return float(np.prod(h1(p, x)))


def h1_stats(pair: HolderPair) -> Tuple[float, float]:
    """Return ``(integral, q-norm)`` of ``h1``: ``p/(p+1)`` and ``p/(p+1)**(1/q)``."""
    p, q = pair.p, pair.q
    return p / (p + 1.0), p / (p + 1.0) ** (1.0 / q)


def initial_error(pair: HolderPair, d: int) -> float:
    """Error of the zero algorithm, ``(p+1)**(-d/p)``; equals 1 for ``d=0``."""
    if d < 0:
        raise DomainError(f"dimension must be nonnegative, got {d}")
    return (pair.p + 1.0) ** (-d / pair.p)


def decomposition_point(p: float) -> float:
    return 1.0 - 2.0 ** (-1.0 / (p + 1.0))


def decomposition_parts(p: float, x) -> Tuple[float, float, float]:
    """Split ``h1`` at the knot ``a`` into a linear ramp and two remainders.

    Returns ``(h11, h12_0, h12_1)`` where ``h11`` is the secant ramp capped at
    ``a``, ``h12_0`` the concavity gap on ``[0, a]`` and ``h12_1`` the rise of
    ``h1`` past ``h1(a)`` on ``[a, 1]``.  Works elementwise on arrays.
    """
    x = _check_unit(x)
    a = decomposition_point(p)
    ha = 1.0 - (1.0 - a) ** p
    hx = 1.0 - (1.0 - x) ** p
    h11 = ha / a * np.minimum(x, a)
    # max(0, .) removes rounding noise; both remainders are nonnegative exactly
    h12_0 = np.where(x <= a, np.maximum(hx - x / a * ha, 0.0), 0.0)
    h12_1 = np.where(x >= a, np.maximum(hx - ha, 0.0), 0.0)
    if x.ndim == 0:
        return float(h11), float(h12_0), float(h12_1)
    return h11, h12_0, h12_1


def decomposition_constants(pair: HolderPair) -> DecompositionConstants:
    p, q = pair.p, pair.q
    a = decomposition_point(p)
    integral, norm = h1_stats(pair)
    alpha = 2.0 ** (-1.0 / q) * norm
    beta = 0.5 * integral + (1.0 + 2.0 ** (p / (p + 1.0)) - 2.0 ** (1.0 / (p + 1.0))) / 4.0
    gamma = integral / beta
    return DecompositionConstants(a=a, alpha=alpha, beta=beta, gamma=gamma,
                                  c_p=min(2.0 ** (1.0 / q), gamma))


def _check_knot(y):
    y = np.asarray(y, dtype=float)
    if np.any(~((y >= 0.0) & (y < 1.0))):
        raise DomainError("spline knot y must lie in [0, 1)")
    return y


def spline_eval(p: float, y, x):
    """Linear spline through the origin meeting ``h1`` at the knot ``y``.

    ``s_y(x) = x * h1(y) / y`` below the knot and ``h1(y)`` from the knot on.
    The degenerate knot ``y = 0`` gives the zero function.
    """
    y = _check_knot(y)
    x = _check_unit(x)
    hy = 1.0 - (1.0 - y) ** p
    safe_y = np.where(y > 0.0, y, 1.0)
    out = np.where(x < y, x * hy / safe_y, hy)
    out = np.where(y > 0.0, out, 0.0)
    return float(out) if out.ndim == 0 else out


def spline_point_stats(pair: HolderPair, y) -> Tuple[float, float]:
    """``(q-norm, integral)`` of the spline with knot ``y``; arrays allowed."""
    y = _check_knot(y)
    p = pair.p
    hy = 1.0 - (1.0 - y) ** p
    safe_y = np.where(y > 0.0, y, 1.0)
    norm = np.where(y > 0.0, hy / safe_y ** (1.0 / p), 0.0)
    integral = hy * (1.0 - 0.5 * y)
    if norm.ndim == 0:
        return float(norm), float(integral)
    return norm, integral


def _spline_norm_curve(p):
    def f(y):
        y = np.asarray(y, dtype=float)
        hy = 1.0 - (1.0 - y) ** p
        return np.where(y > 0.0, hy / np.where(y > 0.0, y, 1.0) ** (1.0 / p), 0.0)
    return f


def _spline_integral_curve(p):
    def f(y):
        y = np.asarray(y, dtype=float)
        return (1.0 - (1.0 - y) ** p) * (1.0 - 0.5 * y)
    return f


def maximize_scalar(f: Callable, lo: float, hi: float, tol: float = MAXIMIZER_TOL,
                    grid_points: int = GRID_POINTS, max_iter: int = 500) -> Tuple[float, float]:
    """Global maximum of ``f`` on ``[lo, hi]`` by grid scan plus golden section.

    ``f`` is first evaluated on a uniform grid (it may be called with a numpy
    array and must broadcast), then the best grid cell and its neighbours are
    refined by golden-section search until the bracket is narrower than
    ``tol``.  Returns ``(argmax, max)`` with ``max`` at least the grid maximum.
    """
    if not lo < hi:
        raise DomainError(f"need lo < hi, got [{lo}, {hi}]")
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol}")

    grid = np.linspace(lo, hi, grid_points)
    vals = np.broadcast_to(np.asarray(f(grid), dtype=float), grid.shape)
    if not np.all(np.isfinite(vals)):
        raise DomainError("objective is not finite on the scan grid")
    i = int(np.argmax(vals))
    best_x, best_f = float(grid[i]), float(vals[i])

    def g(x):
        v = float(f(x))
        if not math.isfinite(v):
            raise DomainError(f"objective is not finite at {x}")
        return v

    a = float(grid[max(i - 1, 0)])
    b = float(grid[min(i + 1, grid_points - 1)])
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = g(x1), g(x2)
    for _ in range(max_iter):
        if b - a <= tol:
            break
        if f1 >= f2:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = g(x1)
        else:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = g(x2)
    else:
        raise ConvergenceError(f"golden section did not reach tol={tol} in {max_iter} steps")

    for x, v in ((x1, f1), (x2, f2)):
        if v > best_f:
            best_x, best_f = x, v
    return best_x, best_f


def spline_constants(pair: HolderPair) -> SplineConstants:
    p = pair.p
    y_alpha, alpha = maximize_scalar(_spline_norm_curve(p), 0.0, 1.0)
    y_beta, beta = maximize_scalar(_spline_integral_curve(p), 0.0, 1.0)
    integral, norm = h1_stats(pair)
    c_tilde = min(norm / alpha, integral / beta)
    return SplineConstants(alpha=alpha, y_alpha=y_alpha, beta=beta, y_beta=y_beta,
                           c_tilde=c_tilde)


def curse_constant(pair: HolderPair, method: str = "cp") -> float:
    if method == "cp":
        return decomposition_constants(pair).c_p
    if method == "cptilde":
        return spline_constants(pair).c_tilde
    raise DomainError(f"unknown curse-constant method {method!r}")


def inverse_lower_bound(pair: HolderPair, d: int, eps: float, method: str = "cp") -> int:
    """Certified lower bound ``max(1, ceil(C**d * (1 - 2 eps)))`` on the inverse.

    Holds for positive quadrature in the Sobolev space and therefore for the
    inverse of the L_p-discrepancy.  Requires ``0 < eps < 1/2``.
    """
    if d < 1:
        raise DomainError(f"dimension must be at least 1, got {d}")
    if not 0.0 < eps < 0.5:
        raise DomainError(
            f"eps must lie in (0, 1/2), got {eps}; the curse bound requires eps < 1/2"
        )
    c = curse_constant(pair, method)
    log_bound = d * math.log(c) + math.log1p(-2.0 * eps)
    if log_bound > 700.0:
        raise OverflowError(f"bound C^{d}(1-2eps) exceeds the double-precision range")
    return max(1, math.ceil(math.exp(log_bound)))


def known_inverse_bounds(kind: str, d: int, eps: float) -> Tuple[Optional[float], float]:
    """Literature bounds on the inverse of the L_2 or star discrepancy.

    ``l2``: ``1.125**d (1 - eps**2) <= N <= 1.5**d / eps**2``.
    ``star``: only the upper bound ``6.23401 d / eps**2``; the matching lower
    bound has an unspecified constant, so ``None`` is returned for it.
    """
    if d < 1:
        raise DomainError(f"dimension must be at least 1, got {d}")
    if not 0.0 < eps < 1.0:
        raise DomainError(f"eps must lie in (0, 1), got {eps}")
    if kind == "l2":
        return 1.125 ** d * (1.0 - eps * eps), 1.5 ** d / (eps * eps)
    if kind == "star":
        return None, 6.23401 * d / (eps * eps)
    raise DomainError(f"unknown kind {kind!r}; expected 'l2' or 'star'")
