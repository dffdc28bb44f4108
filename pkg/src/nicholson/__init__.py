"""Bessel, Lommel, Airy and Scorer functions near the turning point, with
Nicholson-type approximants and tools to measure how well they work."""

from .asymptotics import (
    OlverCoord,
    TransitionCoord,
    f1_bessel,
    f2_bessel_prime,
    f3_lommel,
    f4_lommel_prime,
    olver_two_term_j,
    olver_two_term_jprime,
    z_coord,
)
from .errors import (
    ConvergenceError,
    DomainError,
    FitError,
    NicholsonError,
    NoExtremumError,
    ParityError,
)
from .special import (
    EvalResult,
    airy_ai,
    airy_ai_prime,
    bessel_j,
    bessel_j_prime,
    lommel_s0,
    lommel_s0_prime,
    scorer_gi,
    scorer_gi_prime,
)

__version__ = "0.1.0"
