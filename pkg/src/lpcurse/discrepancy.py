"""Local, L_2, star and general L_p discrepancies of weighted point sets.

The discrepancy function of points ``x_i`` with weights ``a_i`` is

    D(t) = sum_i a_i 1[x_i in [0, t)] - t_1 * ... * t_d,

and with equal weights ``1/n`` it is the classical local discrepancy.  For a
positive quadrature rule, the L_p norm of ``D`` built on the *reflected* nodes
``1 - x_i`` is the rule's worst-case error in the anchored Sobolev space with
the conjugate exponent.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, ResourceError

DEFAULT_CAP = 2 ** 26
DEFAULT_NODES = 8
_CHUNK = 1 << 22


@dataclass(frozen=True, eq=False)
class PointSet:
    """``n`` points in ``[0, 1)^d`` stored as an ``(n, d)`` array."""

    d: int
    coords: np.ndarray = field(repr=False)

    def __post_init__(self):
        if int(self.d) < 1:
            raise DomainError(f"dimension must be at least 1, got {self.d}")
        c = np.asarray(self.coords, dtype=float)
        if c.size == 0:
            c = np.zeros((0, int(self.d)))
        if c.ndim == 1 and self.d == 1:
            c = c.reshape(-1, 1)
        if c.ndim != 2 or c.shape[1] != self.d:
            raise DomainError(f"coords must have shape (n, {self.d}), got {c.shape}")
        if not np.all((c >= 0.0) & (c < 1.0)):
            raise DomainError("coordinates must lie in [0, 1)")
        c = c.copy()
        c.setflags(write=False)
        object.__setattr__(self, "d", int(self.d))
        object.__setattr__(self, "coords", c)

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.d == other.d and np.array_equal(self.coords, other.coords)


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """Nodes plus nonnegative weights; ``QuadratureRule.qmc`` gives weights ``1/n``."""

    points: PointSet
    weights: np.ndarray = field(repr=False)

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float).reshape(-1)
        if w.shape[0] != self.points.n:
            raise DomainError(f"expected {self.points.n} weights, got {w.shape[0]}")
        if not np.all(np.isfinite(w)) or np.any(w < 0.0):
            raise DomainError("weights must be finite and nonnegative (positive quadrature)")
        w = w.copy()
        w.setflags(write=False)
        object.__setattr__(self, "weights", w)

    @classmethod
    def qmc(cls, points: PointSet) -> "QuadratureRule":
        n = points.n
        return cls(points, np.full(n, 1.0 / n) if n else np.zeros(0))

    @classmethod
    def from_arrays(cls, coords, weights=None, d: Optional[int] = None) -> "QuadratureRule":
        coords = np.asarray(coords, dtype=float)
        if d is None:
            d = coords.shape[1] if coords.ndim == 2 else 1
        ps = PointSet(d, coords)
        return cls.qmc(ps) if weights is None else cls(ps, weights)

    @property
    def d(self) -> int:
        return self.points.d

    @property
    def n(self) -> int:
        return self.points.n

    @property
    def coords(self) -> np.ndarray:
        return self.points.coords


@dataclass(frozen=True)
class DiscrepancyEstimate:
    value: float
    p: float
    method: str
    uncertainty: float = 0.0


def local_discrepancy(rule: QuadratureRule, t: Sequence[float]) -> float:
    t = np.asarray(t, dtype=float).reshape(-1)
    if t.size != rule.d:
        raise DomainError(f"t has dimension {t.size}, rule has dimension {rule.d}")
    if np.any((t < 0.0) | (t > 1.0)):
        raise DomainError("t must lie in the closed unit cube")
    inside = np.all(rule.coords < t, axis=1)
    return float(np.sum(rule.weights[inside]) - np.prod(t))


def l2_discrepancy_exact(rule: QuadratureRule) -> DiscrepancyEstimate:
    """Closed-form L_2 discrepancy via the pairwise (Warnock-type) expansion."""
    x, w, d = rule.coords, rule.weights, rule.d
    cross = 0.0
    for start in range(0, rule.n, 256):
        block = x[start:start + 256]
        prod = np.prod(1.0 - np.maximum(block[:, None, :], x[None, :, :]), axis=2)
        cross += float(w[start:start + 256] @ prod @ w)
    mixed = float(w @ np.prod((1.0 - x * x) / 2.0, axis=1)) if rule.n else 0.0
    sq = cross - 2.0 * mixed + 3.0 ** (-d)
    return DiscrepancyEstimate(math.sqrt(max(sq, 0.0)), 2.0, "exact-l2", 0.0)


def _cumulative_weights(rule: QuadratureRule, grids):
    """Weight sums over ``{x : x_k <= grids[k][j_k]}`` for every grid corner ``j``."""
    shape = tuple(len(g) for g in grids)
    hist = np.zeros(shape)
    if rule.n:
        idx = tuple(np.searchsorted(g, rule.coords[:, k]) for k, g in enumerate(grids))
        np.add.at(hist, idx, rule.weights)
    for k in range(rule.d):
        hist = np.cumsum(hist, axis=k)
    return hist


def _outer_product(vectors):
    out = np.ones(())
    for v in vectors:
        out = np.multiply.outer(out, v)
    return out


def _check_cap(size, cap, what):
    if size > cap:
        raise ResourceError(
            f"{what} needs {size} grid cells, above cap {cap}; use the mc method"
        )


def star_discrepancy_exact(rule: QuadratureRule, cap: int = DEFAULT_CAP) -> DiscrepancyEstimate:
    """Exact sup-norm of the discrepancy function by critical-grid enumeration.

    Per axis the candidate corners are the distinct node coordinates plus 1.
    At each corner the closed box bounds the excess of weight over volume and
    the open box bounds the deficit.
    """
    grids = [np.append(np.unique(rule.coords[:, k]), 1.0) for k in range(rule.d)]
    _check_cap(math.prod(len(g) for g in grids), cap, "star discrepancy")
    closed = _cumulative_weights(rule, grids)
    open_ = np.pad(closed, [(1, 0)] * rule.d)[tuple(slice(0, -1) for _ in range(rule.d))]
    vol = _outer_product(grids)
    value = max(float(np.max(closed - vol)), float(np.max(vol - open_)), 0.0)
    return DiscrepancyEstimate(value, math.inf, "exact-star", 0.0)


def _signed_power(u, e):
    return np.sign(u) * np.abs(u) ** e


def _cell_integral(counts, lows, highs, p, m):
    """Integral of ``|counts - prod(t)|**p`` over all grid cells.

    The last axis is integrated in closed form, which absorbs the kink of the
    integrand where ``prod(t)`` crosses the count; the remaining axes use
    tensor Gauss-Legendre with ``m`` nodes per cell.  Cells with zero weight
    are integrated exactly since the integrand is ``prod t_k**p``.
    """
    d = len(lows)
    zero = counts == 0
    exact = _outer_product([(hi ** (p + 1) - lo ** (p + 1)) / (p + 1) for lo, hi in zip(lows, highs)])
    total = float(np.sum(exact[zero]))

    xg, wg = np.polynomial.legendre.leggauss(m)
    nodes, wts = [], []
    for lo, hi in zip(lows[:-1], highs[:-1]):
        half = 0.5 * (hi - lo)
        nodes.append((lo + half)[:, None] + half[:, None] * xg[None, :])
        wts.append(half[:, None] * wg[None, :])
    lo_last, hi_last = lows[-1], highs[-1]

    if d == 1:
        prod, weight = np.ones(1), np.ones(1)
        c = counts[None, :]
        nonzero = ~zero[None, :]
        chunks = [(prod, weight, c, nonzero)]
    else:
        rest = math.prod(a.shape[0] for a in nodes[1:]) * m ** (d - 1) * len(lo_last)
        step = max(1, _CHUNK // max(rest, 1))
        chunks = []
        for s in range(0, nodes[0].shape[0], step):
            sl = slice(s, s + step)
            prod = _interleave([nodes[0][sl]] + nodes[1:]).reshape(-1)
            weight = _interleave([wts[0][sl]] + wts[1:]).reshape(-1)
            # counts per (cell, node) pair, last axis kept separate
            c = counts[sl]
            shape = []
            for k in range(d - 1):
                shape += [c.shape[k], 1]
            reps = [1] * (2 * (d - 1))
            for k in range(d - 1):
                reps[2 * k + 1] = m
            c = np.tile(c.reshape(shape + [c.shape[-1]]), reps + [1]).reshape(-1, c.shape[-1])
            nz = np.tile((~zero[sl]).reshape(shape + [c.shape[-1]]), reps + [1])
            chunks.append((prod, weight, c, nz.reshape(-1, c.shape[-1])))

    for prod, weight, c, nonzero in chunks:
        P = prod[:, None]
        upper = _signed_power(c - P * lo_last[None, :], p + 1.0)
        lower = _signed_power(c - P * hi_last[None, :], p + 1.0)
        inner = (upper - lower) / (P * (p + 1.0))
        total += float(np.sum(np.where(nonzero, inner, 0.0) * weight[:, None]))
    return total


def _interleave(arrs):
    """Outer product of ``(c_k, m)`` arrays laid out as ``(c_1, m, c_2, m, ...)``."""
    out = np.ones(())
    for a in arrs:
        out = np.multiply.outer(out, a)
    return out


def lp_discrepancy_cellwise(rule: QuadratureRule, p: float, nodes_per_axis: int = DEFAULT_NODES,
                            cap: int = DEFAULT_CAP) -> DiscrepancyEstimate:
    """L_p discrepancy by exact cell decomposition and per-cell Gauss-Legendre.

    The counting term is constant on each cell of the grid spanned by the node
    coordinates, so only ``prod(t)`` varies inside a cell.  The reported
    uncertainty is the change against ``nodes_per_axis - 1`` nodes.
    """
    p = float(p)
    if not 1.0 <= p < math.inf:
        raise DomainError(f"cellwise method needs finite p >= 1, got {p}")
    if nodes_per_axis < 1:
        raise DomainError(f"nodes_per_axis must be positive, got {nodes_per_axis}")
    breaks = [np.unique(np.concatenate(([0.0], rule.coords[:, k], [1.0]))) for k in range(rule.d)]
    ncells = math.prod(len(b) - 1 for b in breaks)
    _check_cap(ncells, cap, "cellwise L_p discrepancy")
    counts = _cumulative_weights(rule, [b[:-1] for b in breaks])
    lows = [b[:-1] for b in breaks]
    highs = [b[1:] for b in breaks]

    integral = _cell_integral(counts, lows, highs, p, nodes_per_axis)
    value = max(integral, 0.0) ** (1.0 / p)
    uncertainty = 0.0
    if nodes_per_axis > 1:
        coarse = _cell_integral(counts, lows, highs, p, nodes_per_axis - 1)
        uncertainty = abs(value - max(coarse, 0.0) ** (1.0 / p))
    return DiscrepancyEstimate(value, p, "cellwise", uncertainty)


def lp_discrepancy_mc(rule: QuadratureRule, p: float, samples: int = 100_000,
                      seed: int = 0) -> DiscrepancyEstimate:
    """Monte Carlo L_p discrepancy with a delta-method standard error."""
    p = float(p)
    if not 1.0 <= p < math.inf:
        raise DomainError(f"mc method needs finite p >= 1, got {p}")
    if samples < 2:
        raise DomainError(f"need at least 2 samples, got {samples}")
    rng = np.random.default_rng(seed)
    x, w = rule.coords, rule.weights
    vals = np.empty(samples)
    step = max(1, _CHUNK // max(rule.n, 1))
    for s in range(0, samples, step):
        u = rng.random((min(step, samples - s), rule.d))
        inside = np.ones((u.shape[0], rule.n), dtype=bool)
        for k in range(rule.d):
            inside &= x[None, :, k] < u[:, k, None]
        vals[s:s + u.shape[0]] = np.abs(inside.astype(float) @ w - np.prod(u, axis=1)) ** p
    mean = float(np.mean(vals))
    se_mean = float(np.std(vals, ddof=1)) / math.sqrt(samples)
    value = mean ** (1.0 / p)
    se = value / (p * mean) * se_mean if mean > 0 else 0.0
    return DiscrepancyEstimate(value, p, "mc", se)


def reflect(ps: PointSet) -> PointSet:
    """Map each coordinate ``x`` to ``1 - x``; results equal to 1 become the float just below 1."""
    out = 1.0 - ps.coords
    out = np.where(out >= 1.0, np.nextafter(1.0, 0.0), out)
    return PointSet(ps.d, out)


def reflect_rule(rule: QuadratureRule) -> QuadratureRule:
    return QuadratureRule(reflect(rule.points), rule.weights)


def estimate_discrepancy(rule: QuadratureRule, p: float, method: str = "exact", *, samples: int = 100_000,
                seed: int = 0, nodes: int = DEFAULT_NODES, cap: int = DEFAULT_CAP) -> DiscrepancyEstimate:
    """Dispatch on ``method``; ``exact`` means closed form for p=2 and enumeration for p=inf."""
    p = float(p)
    if method == "exact":
        if p == 2.0:
            return l2_discrepancy_exact(rule)
        if math.isinf(p):
            return star_discrepancy_exact(rule, cap=cap)
        return lp_discrepancy_cellwise(rule, p, nodes, cap=cap)
    if method == "cellwise":
        return lp_discrepancy_cellwise(rule, p, nodes, cap=cap)
    if method == "mc":
        return lp_discrepancy_mc(rule, p, samples, seed)
    raise DomainError(f"unknown method {method!r}")
