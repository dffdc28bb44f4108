"""
Bessel functions of integer order from power series and Miller's algorithm.

This path shares no code with the integral representations in
:mod:`nicholson.special` and exists to cross-check them.

For small arguments the ascending series

    J_n(x) = sum_k (-1)**k (x/2)**(n+2k) / (k! (n+k)!)

is summed directly. Everywhere else the three-term recurrence

    J_{m-1}(x) = (2m/x) J_m(x) - J_{m+1}(x)

is run downwards from an order far beyond the turning point and the result is
normalised with ``J_0 + 2 * sum_k J_{2k} = 1``.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DomainError

SERIES_MAX_X = 2.0
_RESCALE = 1e250


def _start_order(nmax: int, x: float) -> int:
    # J_m(x) is below 1e-17 of its peak once (m - x)/(x/2)**(1/3) exceeds ~16
    m = max(nmax, int(x)) + 30 + int(16.0 * (x / 2.0) ** (1.0 / 3.0) + math.sqrt(40.0 * max(nmax, 1)))
    return m + (m % 2)


def bessel_j_sequence(nmax: int, x: float) -> np.ndarray:
    """Return ``[J_0(x), ..., J_nmax(x)]`` by backward recurrence."""
    if nmax < 0:
        raise DomainError("nmax must be non-negative")
    if not math.isfinite(x) or x < 0:
        raise DomainError(f"argument must be finite and non-negative, got {x}")
    out = np.zeros(nmax + 1)
    if x == 0.0:
        out[0] = 1.0
        return out
    top = _start_order(nmax, x)
    j_next, j_cur = 0.0, 1e-300
    norm = 0.0
    for m in range(top, 0, -1):
        j_prev = (2.0 * m / x) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        if m - 1 <= nmax:
            out[m - 1] = j_cur
        if (m - 1) % 2 == 0 and m - 1 > 0:
            norm += 2.0 * j_cur
        if abs(j_cur) > _RESCALE:
            j_cur /= _RESCALE
            j_next /= _RESCALE
            norm /= _RESCALE
            out /= _RESCALE
    norm += j_cur
    return out / norm


def _ascending(n: int, x: float) -> float:
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    term = math.exp(n * math.log(x / 2.0) - math.lgamma(n + 1.0))
    total = term
    q = -(x * x) / 4.0
    k = 0
    while abs(term) > 1e-18 * abs(total) or k < 2:
        k += 1
        term *= q / (k * (n + k))
        total += term
        if term == 0.0:
            break
    return total


def bessel_j_series(n: int, x: float) -> float:
    """J_n(x) for integer ``n >= 0`` and ``x >= 0`` without any quadrature."""
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    if x <= SERIES_MAX_X:
        if x < 0:
            raise DomainError(f"argument must be non-negative, got {x}")
        return _ascending(n, x)
    return float(bessel_j_sequence(n, x)[n])


def bessel_j_prime_series(n: int, x: float) -> float:
    """dJ_n/dx from ``J'_n = (J_{n-1} - J_{n+1})/2`` (``J'_0 = -J_1``)."""
    if n == 0:
        return -bessel_j_series(1, x)
    return 0.5 * (bessel_j_series(n - 1, x) - bessel_j_series(n + 1, x))
