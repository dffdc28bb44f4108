"""Acceptance criteria, one test per criterion.

Every test records a single ``[PASS]``/``[FAIL]`` line. The lines are printed
as they are produced and repeated in the pytest terminal summary. Running this
file directly (``python3 tests/test_acceptance.py``) prints the same lines
without pytest.
"""

import csv
import io
import math
import subprocess
import sys
import time
from functools import lru_cache

import numpy as np

from conftest import ACCEPTANCE_LINES
from nicholson import (
    airy_ai,
    airy_ai_prime,
    bessel_j,
    bessel_j_prime,
    f1_bessel,
    f3_lommel,
    lommel_s0,
    lommel_s0_prime,
    olver_two_term_j,
    scorer_gi,
    scorer_gi_prime,
)
from nicholson.analysis import scaling_fit
from nicholson.lattice import LatticeParams, u_quasifront, v_quasifront
from nicholson.series import bessel_j_series
from nicholson.special import bessel_j_grid

EPS = float(np.finfo(float).eps)

TABLE1 = {
    "bessel": [4.7, 2.7, 2.1, 1.4],
    "bessel_prime": [7.4, 5.2, 4.1, 2.7],
}
TABLE2 = {
    "lommel": [9.7, 7.4, 5.0, 3.4],
    "lommel_prime": [6.2, 5.1, 3.6, 1.8],
}
ORDERS = {"delta12": [2, 6, 10, 20], "delta34": [6, 10, 20, 40]}


def record(number, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number:>2}: {title} | {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


@lru_cache(maxsize=None)
def run_table(which):
    """Run the table subcommand once; return (seconds, {family: [(n, delta_pct)]})."""
    start = time.perf_counter()
    proc = subprocess.run(
        [sys.executable, "-m", "nicholson", "table", "--which", which],
        capture_output=True,
        text=True,
        timeout=600,
    )
    elapsed = time.perf_counter() - start
    if proc.returncode != 0:
        raise AssertionError(f"table --which {which} exited {proc.returncode}: {proc.stderr}")
    out = {}
    for row in csv.DictReader(io.StringIO(proc.stdout)):
        out.setdefault(row["family"], []).append((int(row["n"]), float(row["delta_pct"])))
    return elapsed, out


def _compare_table(which, expected, limit_s):
    """Compare |delta_pct| with the tabulated percentages; the sign is printed as computed."""
    elapsed, got = run_table(which)
    ok = elapsed < limit_s
    parts = []
    for family, ref in expected.items():
        rows = got.get(family, [])
        ok &= [n for n, _ in rows] == ORDERS[which]
        cells = []
        for (n, d), r in zip(rows, ref):
            good = abs(abs(d) - r) <= 0.5
            ok &= good
            cells.append(f"n={n} {d:+.2f} vs {r}{'' if good else ' OUT'}")
        parts.append(f"{family}: " + ", ".join(cells))
    parts.append(f"runtime {elapsed:.1f}s (< {limit_s}s)")
    return ok, "; ".join(parts)


def test_criterion_01_table1():
    ok, detail = _compare_table("delta12", TABLE1, 10.0)
    record(1, "delta1/delta2 within 0.5 pp", ok, detail)


def test_criterion_02_table2():
    ok, detail = _compare_table("delta34", TABLE2, 30.0)
    record(2, "delta3/delta4 within 0.5 pp", ok, detail)


def test_criterion_03_big_order():
    value = f1_bessel(5000000.2, 5000000.1)
    approx_ref = 0.002614463961695188
    exact_ref = 0.002614463954691926
    rel_approx = abs(value - approx_ref) / approx_ref
    rel_exact = abs(value - exact_ref) / exact_ref
    # k agreeing significant figures <=> relative difference below 10**-k
    ok = rel_approx < 1e-12 and rel_exact < 1e-8
    record(
        3,
        "big-order F1 value",
        ok,
        f"F1={value!r}, rel diff to published approximant {rel_approx:.1e} (< 1e-12), "
        f"to reference exact value {rel_exact:.1e} (< 1e-8)",
    )


def test_criterion_04_monotone_decay():
    ok = True
    parts = []
    for which in ("delta12", "delta34"):
        _, got = run_table(which)
        for family, rows in got.items():
            mags = [abs(d) for _, d in rows]
            dec = all(a > b for a, b in zip(mags, mags[1:]))
            ok &= dec
            parts.append(f"{family} {'decreasing' if dec else 'NOT decreasing'} {[round(m, 2) for m in mags]}")
    record(4, "|delta| strictly decreases with n", ok, "; ".join(parts))


def test_criterion_05_scaling_exponents():
    orders = [10, 100, 1000, 10000]
    targets = {
        "bessel": -1 / 3,
        "lommel": -1 / 3,
        "bessel_prime": -2 / 3,
        "lommel_prime": -2 / 3,
    }
    ok = True
    parts = []
    for family, target in targets.items():
        amp = scaling_fit("amplitude", family, orders)
        width = scaling_fit("width", family, orders)
        a_ok = abs(amp.exponent - target) <= 0.02
        w_ok = abs(width.exponent - 1 / 3) <= 0.05
        ok &= a_ok and w_ok
        parts.append(
            f"{family}: amplitude {amp.exponent:.4f} (target {target:.4f}{'' if a_ok else ' OUT'}), "
            f"width {width.exponent:.4f}{'' if w_ok else ' OUT'}"
        )
    record(5, "log-log scaling exponents", ok, "; ".join(parts))


def test_criterion_06_dual_method():
    xs = np.arange(0, 201) * 0.5
    worst, where = 0.0, None
    for n in range(51):
        integral, _ = bessel_j_grid(n, xs)
        series = np.array([bessel_j_series(n, x) for x in xs])
        diff = np.abs(integral - series)
        i = int(np.argmax(diff))
        if diff[i] > worst:
            worst, where = float(diff[i]), (n, float(xs[i]))
    record(6, "integral vs recurrence J_n, n<=50, x<=100", worst <= 1e-9, f"max |diff| {worst:.2e} at (n, x)={where}")


def _second_difference(f, z, h):
    # fourth-order central stencil: the truncation error of the three-point
    # stencil at h = 1e-3 alone exceeds 1e-6 near z = -10
    return (-f(z + 2 * h) + 16 * f(z + h) - 30 * f(z) + 16 * f(z - h) - f(z - 2 * h)) / (12 * h * h)


def test_criterion_07_ode_residuals():
    h = 1e-3
    zs = np.round(np.arange(-100, 51) * 0.1, 10)
    ai = lambda z: airy_ai(z).value
    gi = lambda z: scorer_gi(z).value
    r_ai = max(abs(_second_difference(ai, z, h) - z * ai(z)) for z in zs)
    r_gi = max(abs(_second_difference(gi, z, h) - z * gi(z) + 1 / math.pi) for z in zs)
    # for reference: the three-point stencil at the same h
    r3 = max(abs((ai(z + h) - 2 * ai(z) + ai(z - h)) / h**2 - z * ai(z)) for z in zs)
    record(
        7,
        "Airy/Scorer ODE residuals, h=1e-3 on [-10, 5]",
        r_ai <= 1e-6 and r_gi <= 1e-6,
        f"Ai {r_ai:.2e}, Gi {r_gi:.2e} (five-point stencil); three-point stencil gives {r3:.2e} for Ai",
    )


def test_criterion_08_derivative_consistency():
    rng = np.random.default_rng(20240601)
    h = 1e-5

    def worst(base, deriv, points):
        errs = []
        for p in points:
            fd = (base(p + h) - base(p - h)) / (2 * h)
            d = deriv(p)
            errs.append(abs(fd - d) / abs(d))
        return max(errs)

    zs = rng.uniform(-10.0, 5.0, 20)
    xs = rng.uniform(1.0, 100.0, 20)
    # orders up to 50 but not beyond x, where the functions are exponentially small
    jn = [int(rng.integers(0, min(50, x) + 1)) for x in xs]
    sn = [2 * int(rng.integers(0, min(25, x / 2) + 1)) for x in xs]
    results = {
        "Ai'": worst(lambda z: airy_ai(z).value, lambda z: airy_ai_prime(z).value, zs),
        "Gi'": worst(lambda z: scorer_gi(z).value, lambda z: scorer_gi_prime(z).value, zs),
        "J'": max(
            worst(lambda x: bessel_j(n, x).value, lambda x: bessel_j_prime(n, x).value, [x]) for n, x in zip(jn, xs)
        ),
        "s'": max(
            worst(lambda x: lommel_s0(n, x).value, lambda x: lommel_s0_prime(n, x).value, [x]) for n, x in zip(sn, xs)
        ),
    }
    ok = all(v <= 1e-6 for v in results.values())
    detail = ", ".join(f"{k} {v:.1e}" for k, v in results.items())
    record(8, "derivatives vs central differences, 20 random points each", ok, f"max rel err {detail}")


def test_criterion_09_quasifront_identity():
    rng = np.random.default_rng(11)
    worst = 0.0
    for _ in range(20):
        k = int(rng.integers(0, 500))
        t = float(rng.uniform(0.5, 300.0))
        p = LatticeParams(1.0, k, t)
        for got, ref in ((u_quasifront(p), f1_bessel(2 * k, 2 * t)), (v_quasifront(p), f3_lommel(2 * k, 2 * t) / math.pi)):
            if got != ref:
                worst = max(worst, abs(got - ref) / abs(ref))
    record(9, "quasi-front forms equal F1 and F3/pi", worst <= 4 * EPS, f"max rel diff {worst:.1e} (<= 4 eps)")


def test_criterion_10_olver_consistency():
    gaps = [abs(olver_two_term_j(nu, 1.0) - f1_bessel(nu, nu + nu ** (1 / 3))) for nu in (1e2, 1e3, 1e4)]
    ok = gaps[0] > gaps[1] > gaps[2]
    record(10, "two-term expansion approaches F1", ok, "gaps " + ", ".join(f"{g:.3e}" for g in gaps))


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
