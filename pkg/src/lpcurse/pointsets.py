"""Point-set generators and the CSV rule format.

File format: UTF-8 CSV, ``#`` starts a comment line, the first other line is
the header ``x1,...,xd`` optionally followed by ``weight``, then one point per
row.  Without a weight column the rule is QMC with weights ``1/n``.
"""

from __future__ import annotations

import csv
import io
import math
import os
from typing import Optional, Tuple, Union

import numpy as np

from .discrepancy import PointSet, QuadratureRule
from .errors import DomainError, ParseError, ResourceError

PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
GRID_CAP = 2 ** 26

PathLike = Union[str, os.PathLike]


def gen_random(d: int, n: int, seed: int = 0) -> PointSet:
    """``n`` uniform points; each axis draws from its own spawned PCG64 stream."""
    if d < 1 or n < 0:
        raise DomainError(f"need d >= 1 and n >= 0, got d={d}, n={n}")
    streams = np.random.SeedSequence(seed).spawn(d)
    cols = [np.random.Generator(np.random.PCG64(s)).random(n) for s in streams]
    return PointSet(d, np.column_stack(cols) if n else np.zeros((0, d)))


def gen_grid(d: int, m: int, centered: bool = False, cap: int = GRID_CAP) -> PointSet:
    if d < 1 or m < 1:
        raise DomainError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    if m ** d > cap:
        raise ResourceError(f"grid with {m}^{d} points exceeds cap {cap}")
    axis = (2 * np.arange(1, m + 1) - 1) / (2 * m) if centered else np.arange(m) / m
    mesh = np.meshgrid(*([axis] * d), indexing="ij")
    return PointSet(d, np.column_stack([g.reshape(-1) for g in mesh]))


def radical_inverse(i: int, base: int) -> float:
    inv, f = 0.0, 1.0 / base
    while i > 0:
        i, digit = divmod(i, base)
        inv += digit * f
        f /= base
    return inv


def gen_halton(d: int, n: int) -> PointSet:
    """First ``n`` Halton points, indices ``1..n``, prime base ``PRIMES[k]`` on axis ``k``."""
    if not 1 <= d <= len(PRIMES):
        raise DomainError(f"Halton generator supports 1 <= d <= {len(PRIMES)}, got {d}")
    if n < 0:
        raise DomainError(f"n must be nonnegative, got {n}")
    coords = np.array([[radical_inverse(i, b) for b in PRIMES[:d]] for i in range(1, n + 1)])
    return PointSet(d, coords.reshape(n, d))


def _parse_float(text, lineno, column):
    try:
        v = float(text)
    except ValueError:
        raise ParseError(f"column {column!r}: cannot parse {text!r} as a number", lineno) from None
    if not math.isfinite(v):
        raise ParseError(f"column {column!r}: non-finite value {text!r}", lineno)
    return v


def parse_rule(text: str) -> Tuple[QuadratureRule, bool]:
    """Parse rule CSV text; returns ``(rule, weighted)``."""
    header, rows = None, []
    for lineno, line in enumerate(io.StringIO(text), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([stripped]))]
        if header is None:
            header = fields
            weighted = header[-1] == "weight"
            names = header[:-1] if weighted else header
            if not names or names != [f"x{k}" for k in range(1, len(names) + 1)]:
                raise ParseError(f"bad header {stripped!r}; expected x1,...,xd[,weight]", lineno)
            continue
        if len(fields) != len(header):
            raise ParseError(f"expected {len(header)} fields, got {len(fields)}", lineno)
        vals = [_parse_float(f, lineno, name) for f, name in zip(fields, header)]
        for name, v in zip(names, vals):
            if not 0.0 <= v < 1.0:
                raise ParseError(f"coordinate {name}={v!r} outside [0, 1)", lineno)
        if weighted and vals[-1] < 0.0:
            raise ParseError(f"negative weight {vals[-1]!r}", lineno)
        rows.append(vals)
    if header is None:
        raise ParseError("missing header line")
    d = len(names)
    data = np.array(rows, dtype=float).reshape(len(rows), len(header))
    points = PointSet(d, data[:, :d])
    if weighted:
        return QuadratureRule(points, data[:, d]), True
    return QuadratureRule.qmc(points), False


def read_rule(path: PathLike, with_flag: bool = False):
    with open(path, encoding="utf-8") as fh:
        rule, weighted = parse_rule(fh.read())
    return (rule, weighted) if with_flag else rule


def read_points(path: PathLike) -> PointSet:
    return read_rule(path).points


def format_rule(rule: Union[QuadratureRule, PointSet], weighted: Optional[bool] = None) -> str:
    """Serialize with shortest round-trip float literals.

    ``weighted=None`` drops the weight column when every weight is exactly ``1/n``.
    """
    if isinstance(rule, PointSet):
        rule = QuadratureRule.qmc(rule)
    if weighted is None:
        weighted = bool(rule.n) and not np.all(rule.weights == 1.0 / rule.n)
    header = [f"x{k}" for k in range(1, rule.d + 1)] + (["weight"] if weighted else [])
    lines = [",".join(header)]
    for i in range(rule.n):
        row = [repr(float(v)) for v in rule.coords[i]]
        if weighted:
            row.append(repr(float(rule.weights[i])))
        lines.append(",".join(row))
    return "\n".join(lines) + "\n"


def write_rule(rule: Union[QuadratureRule, PointSet], path: PathLike,
               weighted: Optional[bool] = None) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(format_rule(rule, weighted))
