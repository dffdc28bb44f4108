"""
Displacement fields of a one-dimensional chain excited at node 0.

With disturbance speed ``c``, the Laplace-Fourier images

    u^LF(p, q) = p / (p^2 + 4 c^2 sin^2(q/2))
    v^LF(p, q) = sin(q/2) / (p^2 + 4 c^2 sin^2(q/2))

invert in closed form to

    u_k(t) = (2/pi) int_0^{pi/2} cos(2 k s) cos(2 c t sin s) ds = J_{2k}(2ct)
    v_k(t) = (1/(pi c)) int_0^{pi/2} cos(2 k s) sin(2 c t sin s) ds = s_{0,2k}(2ct) / (pi c)

Near the quasi-front ``k = ct`` both are well described by Airy/Scorer profiles
whose height falls like ``(ct)**(-1/3)``. Nothing here time-steps the lattice
or inverts a transform numerically.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .special import airy_ai, bessel_j, lommel_s0, scorer_gi


@dataclass(frozen=True)
class LatticeParams:
    c: float
    k: int
    t: float

    def __post_init__(self):
        if not (math.isfinite(self.c) and self.c > 0):
            raise DomainError(f"velocity c must be positive, got {self.c}")
        if int(self.k) != self.k or self.k < 0:
            raise DomainError(f"node index k must be a non-negative integer, got {self.k}")
        if not (math.isfinite(self.t) and self.t >= 0):
            raise DomainError(f"time t must be non-negative, got {self.t}")

    @property
    def ct(self) -> float:
        return self.c * self.t


def u_exact(p: LatticeParams) -> float:
    return bessel_j(2 * int(p.k), 2.0 * p.ct).value


def v_exact(p: LatticeParams) -> float:
    return lommel_s0(2 * int(p.k), 2.0 * p.ct).value / (math.pi * p.c)


def _front_coord(p: LatticeParams) -> tuple[float, float]:
    if p.t <= 0:
        raise DomainError("quasi-front forms need t > 0")
    root = p.ct ** (1.0 / 3.0)
    return 2.0 * (p.k - p.ct) / root, root


def u_quasifront(p: LatticeParams) -> float:
    """Airy profile of ``u_k(t)`` around ``k = ct``."""
    z, root = _front_coord(p)
    return airy_ai(z).value / root


def v_quasifront(p: LatticeParams) -> float:
    """Scorer profile of ``v_k(t)`` around ``k = ct``."""
    z, root = _front_coord(p)
    return -scorer_gi(z).value / (2.0 * p.c * root)
