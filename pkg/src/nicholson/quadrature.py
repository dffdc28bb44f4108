"""
Composite Gauss-Legendre quadrature.

Two drivers are provided:

* :func:`adaptive_gl` bisects panels breadth-first until the 20-point rule on a
  panel agrees with the same rule applied to its two halves. It is used for the
  improper Airy-type integrals after they have been moved onto contours where
  the integrand decays like ``exp(-rho**3/3)``.
* :func:`doubling_gl` integrates a whole batch of smooth periodic-type
  integrands on a fixed interval. The caller picks the starting panel count
  from the fastest phase in the batch; the panel count is doubled until two
  successive estimates agree.

Nodes and weights come from :func:`numpy.polynomial.legendre.leggauss`.
"""

from __future__ import annotations

from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import ConvergenceError

GL_ORDER = 20
_X, _W = leggauss(GL_ORDER)
_EPS = np.finfo(float).eps


def panel_rule(a: float, b: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    """Nodes and weights of the composite rule with ``panels`` equal panels on [a, b]."""
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    nodes = (mid[:, None] + half[:, None] * _X).ravel()
    weights = (half[:, None] * _W).ravel()
    return nodes, weights


def _gl_on_panels(f, lo: np.ndarray, hi: np.ndarray):
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    y = f(mid[:, None] + half[:, None] * _X)
    return (y * _W).sum(axis=1) * half, (np.abs(y) * _W).sum(axis=1) * half


def adaptive_gl(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    tol: float = 1e-15,
    initial_panels: int = 4,
    max_rounds: int = 40,
    max_panels: int = 200_000,
):
    """Integrate ``f`` over [a, b] by adaptive bisection of Gauss-Legendre panels.

    ``f`` must accept an ndarray of any shape and may return real or complex
    values. The tolerance is absolute and is shared among panels in proportion
    to their length.

    Returns
    -------
    value, abs_err_est
        The integral and an estimate of its absolute error (sum of the
        per-panel disagreements plus a rounding floor).

    Raises
    ------
    ConvergenceError
        If the panel budget is exhausted before every panel converges.
    """
    if b == a:
        return 0.0 * f(np.array([a]))[0], 0.0
    length = b - a
    edges = np.linspace(a, b, initial_panels + 1)
    lo, hi = edges[:-1], edges[1:]
    coarse, _ = _gl_on_panels(f, lo, hi)
    total = 0.0
    err = 0.0
    abs_mass = 0.0
    for _ in range(max_rounds):
        mid = 0.5 * (lo + hi)
        left, lmass = _gl_on_panels(f, lo, mid)
        right, rmass = _gl_on_panels(f, mid, hi)
        fine = left + right
        diff = np.abs(fine - coarse)
        # rounding in a 20-term sum limits what any panel can achieve
        floor = 50.0 * _EPS * (lmass + rmass)
        done = diff <= np.maximum(tol * (hi - lo) / length, floor)
        total = total + fine[done].sum()
        err += diff[done].sum()
        abs_mass += (lmass + rmass)[done].sum()
        if done.all():
            return total, err + _EPS * abs_mass
        keep = ~done
        lo = np.concatenate([lo[keep], mid[keep]])
        hi = np.concatenate([mid[keep], hi[keep]])
        coarse = np.concatenate([left[keep], right[keep]])
        if lo.size > max_panels:
            break
    estimate = total + coarse.sum()
    raise ConvergenceError(
        f"adaptive quadrature on [{a}, {b}] did not converge",
        estimate=estimate,
        abs_err_est=float(err + np.abs(coarse).sum()),
    )


def doubling_gl(
    f: Callable[[np.ndarray], np.ndarray],
    a: float,
    b: float,
    panels: int,
    tol: float = 1e-12,
    max_doublings: int = 8,
) -> tuple[np.ndarray, np.ndarray]:
    """Integrate a batch of integrands on [a, b] with panel doubling.

    ``f(nodes)`` must return an array of shape ``(batch, len(nodes))``.
    Integration stops once every member of the batch changes by less than
    ``tol`` between two successive panel counts.

    Returns
    -------
    values, abs_err_est
        Arrays of shape ``(batch,)``. The error estimate is the last change.
    """
    nodes, weights = panel_rule(a, b, panels)
    prev = f(nodes) @ weights
    for _ in range(max_doublings):
        panels *= 2
        nodes, weights = panel_rule(a, b, panels)
        cur = f(nodes) @ weights
        diff = np.abs(cur - prev)
        if np.all(diff < tol):
            return cur, diff
        prev = cur
    bad = int(np.argmax(diff))
    raise ConvergenceError(
        f"panel doubling on [{a}, {b}] stalled at {panels} panels",
        estimate=float(cur[bad]),
        abs_err_est=float(diff[bad]),
    )
