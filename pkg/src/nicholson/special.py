"""
Airy, Scorer, Bessel and Lommel functions evaluated from integral representations.

Airy and Scorer
---------------
Both come from the single complex integral

    I_p(z) = int_0^inf y**p exp(i (z y + y**3/3)) dy ,   p = 0, 1

since ``pi Ai(z) = Re I_0``, ``pi Gi(z) = Im I_0``, ``pi Ai'(z) = Re(i I_1)`` and
``pi Gi'(z) = Im(i I_1)``. On the real axis the integral only converges
conditionally, so the path is deformed:

* ``z >= 0``: the ray ``y = rho exp(i pi/6)``, along which the cubic term
  becomes ``-rho**3/3``;
* ``z < 0``: the real segment ``[0, sqrt(-z)]`` up to the saddle point,
  followed by the steepest-descent ray ``y = sqrt(-z) + rho exp(i pi/4)``.

The integrand never exceeds one in modulus on either path, so there is no
cancellation even at ``z = -50``. Rays are cut where the decay envelope drops
below ``1e-18``.

Bessel and Lommel
-----------------
For integer ``n``

    J_n(x)     = (1/pi) int_0^pi cos(n t - x sin t) dt
    s_{0,n}(x) = int_0^{pi/2} cos(n t) sin(x sin t) dt      (n even)

and their x-derivatives are integrated the same way on a composite
Gauss-Legendre grid fine enough to resolve the fastest phase ``n + x``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from numbers import Integral

import numpy as np

from .errors import ConvergenceError, DomainError, ParityError
from .quadrature import GL_ORDER, adaptive_gl, doubling_gl

__all__ = [
    "EvalResult",
    "airy_ai",
    "airy_ai_prime",
    "scorer_gi",
    "scorer_gi_prime",
    "bessel_j",
    "bessel_j_prime",
    "lommel_s0",
    "lommel_s0_prime",
    "bessel_j_grid",
    "bessel_j_prime_grid",
    "lommel_s0_grid",
    "lommel_s0_prime_grid",
]

# exp(-_CUTOFF) == 1e-18
_CUTOFF = 18.0 * math.log(10.0)
_RAY_0 = complex(math.cos(math.pi / 6), math.sin(math.pi / 6))
_PHASE_ROUNDING = 0.5 * np.finfo(float).eps
_RAY_NEG = complex(math.cos(math.pi / 4), math.sin(math.pi / 4))

# wavelengths of the fastest phase covered by one 20-point panel
_WAVES_PER_PANEL = 3.0
_EXTRA_PANELS = 4
_FINITE_TOL = 1e-12
# upper bound on batch * nodes held in memory at once
_CHUNK_ELEMENTS = 1 << 22


@dataclass(frozen=True)
class EvalResult:
    """A function value together with an estimate of its absolute error."""

    value: float
    abs_err_est: float

    def __float__(self) -> float:
        return self.value


# --------------------------------------------------------------------------
# Airy and Scorer
# --------------------------------------------------------------------------

def _check_real(z) -> float:
    z = float(z)
    if not math.isfinite(z):
        raise DomainError(f"argument must be finite, got {z}")
    return z


def _cut_radius(quad: float, lin: float, cub: float) -> float:
    # smallest rho > 0 with cub*rho**3 + quad*rho**2 + lin*rho = _CUTOFF
    rho = (_CUTOFF / cub) ** (1.0 / 3.0)
    for _ in range(60):
        g = cub * rho**3 + quad * rho**2 + lin * rho - _CUTOFF
        dg = 3 * cub * rho**2 + 2 * quad * rho + lin
        step = g / dg
        rho -= step
        if abs(step) < 1e-12 * rho:
            break
    # margin for the polynomial prefactor of the derivative integrand
    return rho * 1.05 + 0.5


@lru_cache(maxsize=8192)
def _cubic_phase_integral(z: float, power: int) -> tuple[complex, float]:
    """``int_0^inf y**power exp(i(zy + y**3/3)) dy`` and its error estimate."""

    def on_ray(origin: complex, direction: complex):
        def integrand(rho):
            y = origin + rho * direction
            return y**power * np.exp(1j * (z * y + y**3 / 3.0)) * direction

        return integrand

    # for large |z| the phase itself carries a rounding error of order
    # eps * |z|**1.5 (times the prefactor y**power <= |z|**(power/2)), which
    # bounds what the quadrature can resolve
    tol = max(1e-15, _PHASE_ROUNDING * abs(z) ** (2.0 + 0.5 * power)) if z < 0.0 else 1e-15
    try:
        if z >= 0.0:
            rho_max = _cut_radius(0.0, 0.5 * z, 1.0 / 3.0)
            return adaptive_gl(on_ray(0.0, _RAY_0), 0.0, rho_max)
        s = math.sqrt(-z)
        segment, seg_err = adaptive_gl(
            lambda y: y**power * np.exp(1j * (z * y + y**3 / 3.0)), 0.0, s, tol=tol
        )
        rho_max = _cut_radius(s, 0.0, 1.0 / (3.0 * math.sqrt(2.0)))
        ray, ray_err = adaptive_gl(on_ray(complex(s), _RAY_NEG), 0.0, rho_max, tol=tol)
        return segment + ray, seg_err + ray_err
    except ConvergenceError as exc:
        raise ConvergenceError(
            f"cubic-phase integral did not converge at z={z}",
            estimate=exc.estimate,
            abs_err_est=exc.abs_err_est,
        ) from exc


def _airy_type(z, power: int, part: str) -> EvalResult:
    z = _check_real(z)
    try:
        val, err = _cubic_phase_integral(z, power)
    except ConvergenceError as exc:
        est = complex(exc.estimate) * (1j if power else 1)
        est = est.real if part == "re" else est.imag
        raise ConvergenceError(str(exc), estimate=est / math.pi, abs_err_est=exc.abs_err_est / math.pi) from exc
    if power:
        val = 1j * val
    out = val.real if part == "re" else val.imag
    return EvalResult(float(out) / math.pi, float(err) / math.pi)


def airy_ai(z: float) -> EvalResult:
    """Airy function ``Ai(z) = (1/pi) int_0^inf cos(zy + y**3/3) dy``.

    >>> round(airy_ai(0.0).value, 15)
    0.355028053887817
    """
    return _airy_type(z, 0, "re")


def airy_ai_prime(z: float) -> EvalResult:
    """Derivative ``Ai'(z)``."""
    return _airy_type(z, 1, "re")


def scorer_gi(z: float) -> EvalResult:
    """Scorer function ``Gi(z) = (1/pi) int_0^inf sin(zy + y**3/3) dy``."""
    return _airy_type(z, 0, "im")


def scorer_gi_prime(z: float) -> EvalResult:
    """Derivative ``Gi'(z) = (1/pi) int_0^inf y cos(zy + y**3/3) dy``."""
    return _airy_type(z, 1, "im")


# --------------------------------------------------------------------------
# Bessel and Lommel
# --------------------------------------------------------------------------

def _check_order(n, even: bool = False) -> int:
    if isinstance(n, Integral):
        order = int(n)
    else:
        n = float(n)
        if not (math.isfinite(n) and n.is_integer()):
            raise DomainError(f"order must be an integer, got {n}")
        order = int(n)
    if order < 0:
        raise DomainError(f"order must be non-negative, got {order}")
    if even and order % 2:
        raise ParityError(f"s_0,n is defined for even n only, got n={order}")
    return order


def _check_arguments(x) -> np.ndarray:
    xs = np.atleast_1d(np.asarray(x, dtype=float))
    if xs.ndim != 1:
        raise DomainError("arguments must be a scalar or a 1-d array")
    if not np.all(np.isfinite(xs)) or np.any(xs < 0):
        raise DomainError("arguments must be finite and non-negative")
    return xs


def _integrate_batch(integrand, n: int, xs: np.ndarray, upper: float):
    values = np.empty_like(xs)
    errors = np.empty_like(xs)
    if xs.size == 0:
        return values, errors

    def panel_count(x_max):
        waves = (n + x_max) * upper / (2.0 * math.pi)
        return int(waves / _WAVES_PER_PANEL) + _EXTRA_PANELS

    order = np.argsort(xs, kind="stable")
    # the doubled rule holds twice the nodes of the starting one
    size = max(1, _CHUNK_ELEMENTS // (2 * GL_ORDER * panel_count(xs[order[-1]])))
    for start in range(0, xs.size, size):
        idx = order[start:start + size]
        chunk = xs[idx]
        # panels are sized for the largest argument in the chunk
        panels = panel_count(chunk[-1])
        val, err = doubling_gl(lambda t: integrand(t, chunk[:, None]), 0.0, upper, panels, tol=_FINITE_TOL)
        values[idx] = val
        errors[idx] = err
    return values, errors


def _j_integrand(n):
    def f(t, x):
        return np.cos(n * t - x * np.sin(t)) / math.pi
    return f


def _jp_integrand(n):
    def f(t, x):
        st = np.sin(t)
        return st * np.sin(n * t - x * st) / math.pi
    return f


def _s_integrand(n):
    def f(t, x):
        return np.cos(n * t) * np.sin(x * np.sin(t))
    return f


def _sp_integrand(n):
    def f(t, x):
        st = np.sin(t)
        return np.cos(n * t) * st * np.cos(x * st)
    return f


def bessel_j_grid(n, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`bessel_j`: values and error estimates for an array of arguments."""
    n = _check_order(n)
    return _integrate_batch(_j_integrand(n), n, _check_arguments(x), math.pi)


def bessel_j_prime_grid(n, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`bessel_j_prime`."""
    n = _check_order(n)
    return _integrate_batch(_jp_integrand(n), n, _check_arguments(x), math.pi)


def lommel_s0_grid(n, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`lommel_s0`."""
    n = _check_order(n, even=True)
    return _integrate_batch(_s_integrand(n), n, _check_arguments(x), 0.5 * math.pi)


def lommel_s0_prime_grid(n, x) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised :func:`lommel_s0_prime`."""
    n = _check_order(n, even=True)
    return _integrate_batch(_sp_integrand(n), n, _check_arguments(x), 0.5 * math.pi)


def _scalar(grid_fn, n, x) -> EvalResult:
    if np.ndim(x) != 0:
        raise DomainError("scalar argument expected; use the *_grid variant for arrays")
    val, err = grid_fn(n, x)
    return EvalResult(float(val[0]), float(err[0]))


def bessel_j(n: int, x: float) -> EvalResult:
    """Bessel function of the first kind ``J_n(x)``, integer ``n >= 0``, ``x >= 0``."""
    return _scalar(bessel_j_grid, n, x)


def bessel_j_prime(n: int, x: float) -> EvalResult:
    """``dJ_n/dx = (1/pi) int_0^pi sin(t) sin(n t - x sin t) dt``."""
    return _scalar(bessel_j_prime_grid, n, x)


def lommel_s0(n: int, x: float) -> EvalResult:
    """Lommel function ``s_{0,n}(x)`` for even ``n``.

    Raises :class:`ParityError` for odd ``n``.
    """
    return _scalar(lommel_s0_grid, n, x)


def lommel_s0_prime(n: int, x: float) -> EvalResult:
    """``d/dx s_{0,n}(x) = int_0^{pi/2} cos(n t) sin(t) cos(x sin t) dt``."""
    return _scalar(lommel_s0_prime_grid, n, x)
