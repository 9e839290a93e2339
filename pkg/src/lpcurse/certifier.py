"""Certified lower bounds on the worst-case error of positive quadrature rules.

For each node ``x_i`` a nonnegative tensor-product function ``P_i`` is built
with ``P_i(x_i) = h_d(x_i)``; the fooling function ``f* = sum_i P_i`` then
satisfies ``A(h_d) <= A(f*)`` for any rule with nonnegative weights, and

    e(A) >= (int h_d - int f*)_+ / (2 max(||h_d||, ||f*||)).

``paper`` mode replaces the per-node integrals and norms by their uniform
maxima; ``sharp`` mode sums the exact per-node values.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Union

import numpy as np

from .analytic import (HolderPair, decomposition_constants, h1_stats, holder_conjugate,
                       spline_constants, spline_point_stats)
from .discrepancy import QuadratureRule
from .errors import DomainError

METHODS = ("decomposition", "spline")
MODES = ("paper", "sharp")


@dataclass(frozen=True)
class Certificate:
    method: str
    mode: str
    p: float
    q: float
    d: int
    n: int
    lower_bound: float
    integral_hd: float
    integral_fstar: float
    norm_hd: float
    norm_fstar_bound: float

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_text(self) -> str:
        lines = []
        for f in fields(self):
            v = getattr(self, f.name)
            lines.append(f"{f.name}: {v:.10g}" if isinstance(v, float) else f"{f.name}: {v}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        names = {f.name for f in fields(cls)}
        if set(data) != names:
            raise DomainError(f"certificate fields mismatch: {sorted(set(data) ^ names)}")
        kinds = {f.name: f.type for f in fields(cls)}
        conv = {"str": str, "int": int, "float": float}
        return cls(**{k: conv[kinds[k]](v) for k, v in data.items()})

    @classmethod
    def from_text(cls, text: str) -> "Certificate":
        data = {}
        for line in text.splitlines():
            if line.strip():
                key, _, value = line.partition(":")
                data[key.strip()] = value.strip()
        return cls.from_dict(data)


def _as_pair(p: Union[HolderPair, float]) -> HolderPair:
    return p if isinstance(p, HolderPair) else holder_conjugate(p)


def _check_rule(rule: QuadratureRule):
    if np.any(rule.weights < 0.0):
        raise DomainError("negative weight: only positive quadrature formulas are certified")


def _finish(method, mode, pair, rule, integral_fstar, norm_fstar_bound):
    integral, norm = h1_stats(pair)
    integral_hd = integral ** rule.d
    norm_hd = norm ** rule.d
    lower = max(0.0, integral_hd - integral_fstar) / (2.0 * max(norm_hd, norm_fstar_bound))
    return Certificate(method=method, mode=mode, p=pair.p, q=pair.q, d=rule.d, n=rule.n,
                       lower_bound=lower, integral_hd=integral_hd,
                       integral_fstar=float(integral_fstar), norm_hd=norm_hd,
                       norm_fstar_bound=float(norm_fstar_bound))


def _check_mode(mode):
    if mode not in MODES:
        raise DomainError(f"unknown mode {mode!r}; expected one of {MODES}")


def certify_decomposition(rule: QuadratureRule, pair, mode: str = "sharp") -> Certificate:
    """Bound from the split of ``h1`` at the knot ``a = 1 - 2**(-1/(p+1))``.

    Coordinates ``<= a`` use the left half (integral ``p/(2(p+1))``), the others
    the right half (integral ``beta``); both halves have q-norm ``alpha``.
    """
    pair = _as_pair(pair)
    _check_mode(mode)
    _check_rule(rule)
    c = decomposition_constants(pair)
    n, d = rule.n, rule.d
    if mode == "paper":
        return _finish("decomposition", mode, pair, rule, n * c.beta ** d, n * c.alpha ** d)
    half = 0.5 * pair.p / (pair.p + 1.0)
    per_coord = np.where(rule.coords <= c.a, half, c.beta)
    integral_fstar = float(np.sum(np.prod(per_coord, axis=1)))
    return _finish("decomposition", mode, pair, rule, integral_fstar, n * c.alpha ** d)


def certify_spline(rule: QuadratureRule, pair, mode: str = "sharp") -> Certificate:
    """Bound from products of linear splines knotted at each node coordinate."""
    pair = _as_pair(pair)
    _check_mode(mode)
    _check_rule(rule)
    n, d = rule.n, rule.d
    if mode == "paper":
        c = spline_constants(pair)
        return _finish("spline", mode, pair, rule, n * c.beta ** d, n * c.alpha ** d)
    norms, integrals = spline_point_stats(pair, rule.coords)
    integral_fstar = float(np.sum(np.prod(integrals, axis=1)))
    norm_fstar = float(np.sum(np.prod(norms, axis=1)))
    return _finish("spline", mode, pair, rule, integral_fstar, norm_fstar)


def certify_best(rule: QuadratureRule, pair, mode: str = "sharp") -> Certificate:
    """Larger of the two certificates in ``mode``; ties go to the spline one."""
    dec = certify_decomposition(rule, pair, mode)
    spl = certify_spline(rule, pair, mode)
    return spl if spl.lower_bound >= dec.lower_bound else dec


def certify(rule: QuadratureRule, pair, method: str = "best", mode: str = "sharp") -> Certificate:
    if method == "best":
        return certify_best(rule, pair, mode)
    if method == "decomposition":
        return certify_decomposition(rule, pair, mode)
    if method == "spline":
        return certify_spline(rule, pair, mode)
    raise DomainError(f"unknown method {method!r}")
