"""Exit criteria for the package; each test appends one PASS/FAIL line to the summary."""

import math
import time

import mpmath as mp
import numpy as np
import pytest
from scipy import integrate

from lpcurse import (QuadratureRule, PointSet, certify_best, certify_decomposition,
                     certify_spline, decomposition_constants, decomposition_parts,
                     holder_conjugate, initial_error, inverse_lower_bound,
                     l2_discrepancy_exact, lp_discrepancy_cellwise, lp_discrepancy_mc,
                     reflect_rule, spline_constants, star_discrepancy_exact)

from conftest import ACCEPTANCE_LINES, random_rule
from oracles import brute_star

# printed table digits: (p, C_p, C~_p)
TABLE = [
    (2, "1.0022", "1.06066"),
    (3, "1.00248", "1.07231"),
    (4, "1.00238", "1.07276"),
    (5, "1.0022", "1.07005"),
    (10, "1.00148", "1.05327"),
    (20, "1.00086", "1.035"),
    (30, "1.0006", "1.02627"),
    (100, "1.00019", "1.0101"),
]


def report(num, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def truncated_interval(printed):
    """Values whose decimal truncation at the printed length equals ``printed``."""
    decimals = len(printed.split(".")[1])
    lo = float(printed)
    return lo, lo + 10.0 ** -decimals


def _constants_table():
    rows = []
    for p, _, _ in TABLE:
        pair = holder_conjugate(p)
        rows.append((decomposition_constants(pair).c_p, spline_constants(pair).c_tilde))
    return rows


def test_01_table_reproduction():
    start = time.perf_counter()
    rows = _constants_table()
    elapsed = time.perf_counter() - start
    misses = []
    for (p, cp_txt, ct_txt), (cp, ct) in zip(TABLE, rows):
        for name, txt, val in (("C", cp_txt, cp), ("C~", ct_txt, ct)):
            lo, hi = truncated_interval(txt)
            if not lo <= val < hi:
                misses.append(f"{name}_{p}={val:.8f} not in [{txt}, {hi:.{len(txt) - 2}f})")
    ok = not misses and elapsed < 1.0
    detail = f"16 table entries in truncated intervals, {elapsed:.3f}s"
    if misses:
        detail += "; misses: " + "; ".join(misses)
    report(1, ok, detail)


def test_01b_table_agrees_when_rounded():
    # companion to criterion 1: the printed digits are consistent with rounding
    rows = _constants_table()
    bad = []
    for (p, cp_txt, ct_txt), (cp, ct) in zip(TABLE, rows):
        for txt, val in ((cp_txt, cp), (ct_txt, ct)):
            decimals = len(txt.split(".")[1])
            if abs(val - float(txt)) > 0.5 * 10.0 ** -decimals:
                bad.append((p, txt, val))
    assert not bad


def test_02_figure_caption_checks():
    start = time.perf_counter()
    c = {p: decomposition_constants(holder_conjugate(p)).c_p for p in (1.0001, 2, 3, 4, 1e5)}
    elapsed = time.perf_counter() - start
    ok = (abs(c[1.0001] - 1) < 1e-3 and abs(c[1e5] - 1) < 1e-3
          and c[3] > c[2] and c[3] > c[4] and elapsed < 1.0)
    report(2, ok, f"|C-1| at p=1.0001: {abs(c[1.0001] - 1):.2e}, at p=1e5: {abs(c[1e5] - 1):.2e}; "
                  f"C_2={c[2]:.6f} < C_3={c[3]:.6f} > C_4={c[4]:.6f}; {elapsed:.3f}s")


def test_03_closed_form_vs_quadrature():
    start = time.perf_counter()
    worst = 0.0
    for p in np.geomspace(1.02, 100.0, 50):
        pair = holder_conjugate(p)
        q = pair.q
        c = decomposition_constants(pair)
        a = c.a

        def deriv_q(x):
            return abs(p * (1.0 - x) ** (p - 1.0)) ** q

        opts = dict(epsabs=1e-15, epsrel=1e-14, limit=200)
        left_norm = integrate.quad(deriv_q, 0.0, a, **opts)[0] ** (1.0 / q)
        right_norm = integrate.quad(deriv_q, a, 1.0, **opts)[0] ** (1.0 / q)

        def left(x):
            h11, h0, _ = decomposition_parts(p, x)
            return h11 + h0

        def right(x):
            h11, _, h1 = decomposition_parts(p, x)
            return h11 + h1

        left_int = integrate.quad(left, 0.0, 1.0, points=[a], **opts)[0]
        right_int = integrate.quad(right, 0.0, 1.0, points=[a], **opts)[0]
        errs = [
            abs(left_norm - c.alpha), abs(right_norm - c.alpha), abs(left_norm - right_norm),
            abs(left_int - 0.5 * p / (p + 1.0)), abs(right_int - c.beta),
            abs(max(left_int, right_int) - c.beta),
        ]
        worst = max(worst, *errs)
    elapsed = time.perf_counter() - start
    report(3, worst < 1e-9 and elapsed < 5.0,
           f"max |closed form - quadrature| = {worst:.2e} over 50 p in (1,100]; {elapsed:.2f}s")


def test_04_initial_value_identities():
    start = time.perf_counter()
    worst_cell, worst_z, star_err = 0.0, 0.0, 0.0
    for d in (1, 2, 3):
        empty = QuadratureRule.qmc(PointSet(d, np.zeros((0, d))))
        for p in (1.0, 1.5, 2.0, 3.0, 7.0):
            target = (p + 1.0) ** (-d / p)
            worst_cell = max(worst_cell, abs(lp_discrepancy_cellwise(empty, p).value - target))
            mc = lp_discrepancy_mc(empty, p, samples=100_000, seed=int(10 * p) + d)
            worst_z = max(worst_z, abs(mc.value - target) / mc.uncertainty)
        star_err = max(star_err, abs(star_discrepancy_exact(empty).value - 1.0))
    elapsed = time.perf_counter() - start
    ok = worst_cell < 1e-9 and worst_z < 3.0 and star_err == 0.0 and elapsed < 10.0
    report(4, ok, f"cellwise err {worst_cell:.1e}, worst MC z-score {worst_z:.2f}, "
                  f"star err {star_err}; {elapsed:.2f}s")


def test_05_method_triangulation():
    start = time.perf_counter()
    worst_cell, worst_z = 0.0, 0.0
    for seed in range(100):
        rule = random_rule(seed, max_d=3, max_n=32)
        exact = l2_discrepancy_exact(rule).value
        cell = lp_discrepancy_cellwise(rule, 2.0).value
        mc = lp_discrepancy_mc(rule, 2.0, samples=200_000, seed=seed)
        worst_cell = max(worst_cell, abs(exact - cell))
        worst_z = max(worst_z, abs(mc.value - exact) / mc.uncertainty)
    elapsed = time.perf_counter() - start
    ok = worst_cell < 1e-7 and worst_z < 3.0 and elapsed < 30.0
    report(5, ok, f"max |exact-cellwise| {worst_cell:.1e}, worst MC z-score {worst_z:.2f} "
                  f"on 100 rules; {elapsed:.2f}s")


def _qmc_rules():
    return [random_rule(1000 + s, max_d=3, max_n=16) for s in range(100)]


def test_06_certificate_validity():
    start = time.perf_counter()
    worst = -math.inf
    for rule in _qmc_rules():
        reflected = reflect_rule(rule)
        for p in (1.5, 2.0, 3.0):
            pair = holder_conjugate(p)
            gap = certify_best(rule, pair).lower_bound - lp_discrepancy_cellwise(reflected, p).value
            worst = max(worst, gap)
    elapsed = time.perf_counter() - start
    report(6, worst <= 1e-8 and elapsed < 30.0,
           f"max(certificate - worst-case error) = {worst:.3e} over 300 cases; {elapsed:.2f}s")


def test_07_analytic_fixed_point():
    worst = 0.0
    for d in (1, 2, 3, 5, 10):
        empty = QuadratureRule.qmc(PointSet(d, np.zeros((0, d))))
        for p in (1.1, 1.5, 2.0, 3.0, 7.0, 50.0):
            pair = holder_conjugate(p)
            half = initial_error(pair, d) / 2.0
            for cert in (certify_decomposition(empty, pair, "paper"),
                         certify_decomposition(empty, pair, "sharp"),
                         certify_spline(empty, pair, "paper"),
                         certify_spline(empty, pair, "sharp"),
                         certify_best(empty, pair)):
                worst = max(worst, abs(cert.lower_bound - half))
    report(7, worst < 1e-12, f"max |empty certificate - initial_error/2| = {worst:.1e}")


def test_08_mode_dominance():
    violations = 0
    for rule in _qmc_rules():
        for p in (1.5, 2.0, 3.0):
            pair = holder_conjugate(p)
            for fn in (certify_decomposition, certify_spline):
                sharp = fn(rule, pair, "sharp").lower_bound
                paper = fn(rule, pair, "paper").lower_bound
                if sharp < paper:
                    violations += 1
    report(8, violations == 0, f"{violations} sharp<paper violations over 600 comparisons")


def test_09_inverse_bound_growth():
    pair = holder_conjugate(2.0)
    tilde = inverse_lower_bound(pair, 200, 0.25, "cptilde")
    plain = inverse_lower_bound(pair, 200, 0.25, "cp")
    with mp.workdps(50):
        # C~_2 = 3 sqrt(2) / 4 in closed form
        oracle = int(mp.ceil((3 * mp.sqrt(2) / 4) ** 200 * mp.mpf("0.5")))
    ok = tilde > 6e4 and plain == 1 and tilde == oracle
    report(9, ok, f"cptilde bound {tilde} (oracle {oracle}), cp bound {plain}")


def test_10_one_dimensional_star_oracle():
    results = []
    for n in (1, 2, 4, 8):
        coords = ((2 * np.arange(1, n + 1) - 1) / (2 * n)).reshape(-1, 1)
        rule = QuadratureRule.qmc(PointSet(1, coords))
        fast = star_discrepancy_exact(rule).value
        brute = brute_star(coords.tolist(), [1.0 / n] * n, 1)
        results.append(abs(fast - 1 / (2 * n)) < 1e-15 and abs(brute - 1 / (2 * n)) < 1e-12)
    report(10, all(results), f"centered sets n=1,2,4,8 give 1/(2n): {results}")
