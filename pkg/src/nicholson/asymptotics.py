"""
Nicholson-type approximants near the turning point ``x = n``.

With the stretched coordinate

    z = (n - x) / (x/2)**(1/3)

the four approximants are

    F1 =  Ai(z)  / (x/2)**(1/3)            ~ J_n(x)
    F2 = -Ai'(z) / (x/2)**(2/3)            ~ J'_n(x)
    F3 = -(pi/2) Gi(z)  / (x/2)**(1/3)     ~ s_{0,n}(x)
    F4 =  (pi/2) Gi'(z) / (x/2)**(2/3)     ~ s'_{0,n}(x)

F4 keeps only the leading term of the t-derivative of F3; the term of relative
size ``(n - x)/(3x)`` is dropped, so F4 is not the exact derivative of F3.

The order may be any positive real. Only ``x`` enters, so for a wave with speed
``c`` at time ``t`` pass ``x = c*t``.

The uniform expansions in powers of the order are kept to their first two
terms, with the polynomial seeds ``P0 = 1``, ``Q0 = 3a^2/10``, ``R0 = 1`` and
``S0 = 3a^3/5 - 1/5``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import airy_ai, airy_ai_prime, scorer_gi, scorer_gi_prime

_CBRT2 = 2.0 ** (1.0 / 3.0)


@dataclass(frozen=True)
class TransitionCoord:
    """Stretched coordinate ``z`` and the scale ``(x/2)**(1/3)`` it was built with."""

    z: float
    scale: float


@dataclass(frozen=True)
class OlverCoord:
    """Parameterisation ``x = nu + a * nu**(1/3)``."""

    nu: float
    a: float

    @classmethod
    def from_argument(cls, nu: float, x: float) -> "OlverCoord":
        if nu <= 0:
            raise DomainError(f"order must be positive, got {nu}")
        return cls(nu, (x - nu) / nu ** (1.0 / 3.0))

    @property
    def x(self) -> float:
        return self.nu + self.a * self.nu ** (1.0 / 3.0)


def z_coord(n: float, x: float) -> TransitionCoord:
    """Transition coordinate for order ``n`` and argument ``x > 0``.

    >>> z_coord(10, 10).z
    0.0
    """
    n = float(n)
    x = float(x)
    if not (math.isfinite(n) and math.isfinite(x)) or x <= 0.0:
        raise DomainError(f"need finite n and x > 0, got n={n}, x={x}")
    scale = (x / 2.0) ** (1.0 / 3.0)
    return TransitionCoord((n - x) / scale, scale)


def f1_bessel(n: float, x: float) -> float:
    """Nicholson approximant of ``J_n(x)``."""
    c = z_coord(n, x)
    return airy_ai(c.z).value / c.scale


def f2_bessel_prime(n: float, x: float) -> float:
    """Approximant of ``J'_n(x)``."""
    c = z_coord(n, x)
    return -airy_ai_prime(c.z).value / c.scale**2


def f3_lommel(n: float, x: float) -> float:
    """Scorer-function approximant of the Lommel function ``s_{0,n}(x)``."""
    c = z_coord(n, x)
    return -0.5 * math.pi * scorer_gi(c.z).value / c.scale


def f4_lommel_prime(n: float, x: float) -> float:
    """Approximant of ``s'_{0,n}(x)``."""
    c = z_coord(n, x)
    return 0.5 * math.pi * scorer_gi_prime(c.z).value / c.scale**2


def _check_nu(nu: float) -> float:
    nu = float(nu)
    if not math.isfinite(nu) or nu <= 0.0:
        raise DomainError(f"order must be positive, got {nu}")
    return nu


def olver_two_term_j(nu: float, a: float) -> float:
    """``J_nu(nu + a nu**(1/3))`` from the expansion in powers of the order, first terms only."""
    nu = _check_nu(nu)
    arg = -_CBRT2 * a
    p0 = 1.0
    q0 = 0.3 * a * a
    return (
        _CBRT2 / nu ** (1.0 / 3.0) * airy_ai(arg).value * p0
        + _CBRT2**2 / nu * airy_ai_prime(arg).value * q0
    )


def olver_two_term_jprime(nu: float, a: float) -> float:
    """``J'_nu(nu + a nu**(1/3))`` from the expansion in powers of the order, first terms only."""
    nu = _check_nu(nu)
    arg = -_CBRT2 * a
    r0 = 1.0
    s0 = 0.6 * a**3 - 0.2
    return (
        -(_CBRT2**2) / nu ** (2.0 / 3.0) * airy_ai_prime(arg).value * r0
        + _CBRT2 / nu ** (4.0 / 3.0) * airy_ai(arg).value * s0
    )
