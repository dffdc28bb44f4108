"""
Quantitative comparison of the exact functions with their Nicholson-type approximants.

All comparisons use ``c = 1``, so the time axis ``t`` is the function argument.

Principal extremum
    The amplitude of a family at order ``n`` is read off a sampled curve inside
    the window ``[n - 4 (n/2)**(1/3), n + 8 (n/2)**(1/3)]``. For ``J_n`` and
    ``s_{0,n}`` it is the local extremum of largest modulus there. For the
    derivative families it is the first extremum of the derivative after the
    principal extremum of the underlying function, i.e. the steepest point on
    the falling flank of the main lobe. Largest modulus is a poor rule for the
    derivatives because the Airy/Scorer derivative lobes grow without bound
    as ``z -> -inf`` and neighbouring lobes can be within a fraction of a
    percent of each other.

Relative error
    ``delta = (1 - max|approx| / max|exact|) * 100`` (percent). For the
    derivative families the approximant slightly overshoots the exact
    amplitude, so delta comes out negative there.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

import numpy as np

from . import asymptotics as asy
from . import special
from .errors import DomainError, FitError, NicholsonError, NoExtremumError

log = logging.getLogger(__name__)

DEFAULT_STEP = 0.1
_EPS = float(np.finfo(float).eps)

# window half-widths in units of (n/2)**(1/3)
WINDOW_BEFORE = 4.0
WINDOW_AFTER = 8.0

BIGORDER_NU = 5000000.2
BIGORDER_X = 5000000.1
BIGORDER_REFERENCE = 0.002614463954691926
BIGORDER_PUBLISHED_APPROX = 0.002614463961695188


@dataclass(frozen=True)
class GridSpec:
    """Uniform grid ``t_min, t_min + step, ...`` not exceeding ``t_max``."""

    t_min: float
    t_max: float
    step: float = DEFAULT_STEP

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.t_min, self.t_max, self.step)):
            raise DomainError("grid bounds and step must be finite")
        if self.step <= 0:
            raise DomainError(f"grid step must be positive, got {self.step}")
        if self.t_min > self.t_max:
            raise DomainError(f"empty grid: t_min={self.t_min} > t_max={self.t_max}")

    @property
    def count(self) -> int:
        # tolerate representation error in (t_max - t_min)/step, which grows
        # with the magnitude of the endpoints
        slack = 1e-9 + 16.0 * _EPS * max(abs(self.t_min), abs(self.t_max)) / self.step
        return int(math.floor((self.t_max - self.t_min) / self.step + slack)) + 1

    def points(self) -> np.ndarray:
        # rounding keeps decimal grids such as 0.1, 0.2, ... free of 0.30000000000000004
        return np.round(self.t_min + self.step * np.arange(self.count), 12)


@dataclass(frozen=True)
class ExtremumRecord:
    t_at: float
    value: float
    kind: str  # "maximum" or "minimum"


@dataclass(frozen=True)
class DeltaRow:
    n: int
    max_exact: float
    max_approx: float
    delta_pct: float
    error: Optional[str] = None

    @classmethod
    def from_amplitudes(cls, n: int, max_exact: float, max_approx: float) -> "DeltaRow":
        return cls(n, max_exact, max_approx, (1.0 - max_approx / max_exact) * 100.0)

    @classmethod
    def failed(cls, n: int, reason: str) -> "DeltaRow":
        return cls(n, math.nan, math.nan, math.nan, reason)

    @property
    def ok(self) -> bool:
        return self.error is None


@dataclass(frozen=True)
class ScalingFit:
    exponent: float
    intercept: float
    max_residual: float
    orders: tuple = field(default=())
    measured: tuple = field(default=())
    t_at: tuple = field(default=())
    against: str = "n"


@dataclass(frozen=True)
class Family:
    name: str
    exact: Callable[[int, np.ndarray], np.ndarray]
    approx: Callable[[float, float], float]
    base: Optional[str] = None
    even_only: bool = False


def _grid_values(fn):
    def values(n, ts):
        return fn(n, ts)[0]
    return values


FAMILIES = {
    "bessel": Family("bessel", _grid_values(special.bessel_j_grid), asy.f1_bessel),
    "bessel_prime": Family(
        "bessel_prime", _grid_values(special.bessel_j_prime_grid), asy.f2_bessel_prime, base="bessel"
    ),
    "lommel": Family("lommel", _grid_values(special.lommel_s0_grid), asy.f3_lommel, even_only=True),
    "lommel_prime": Family(
        "lommel_prime",
        _grid_values(special.lommel_s0_prime_grid),
        asy.f4_lommel_prime,
        base="lommel",
        even_only=True,
    ),
}

FIGURE_FAMILIES = {1: "bessel", 2: "bessel_prime", 3: "lommel", 4: "lommel_prime"}


def get_family(name: str) -> Family:
    try:
        return FAMILIES[name]
    except KeyError:
        raise DomainError(f"unknown family {name!r}; choose from {sorted(FAMILIES)}") from None


def sample_approx(family: Family, n: float, ts: np.ndarray) -> np.ndarray:
    return np.array([family.approx(n, float(t)) for t in ts])


def principal_window(n: float) -> tuple[float, float]:
    s = (n / 2.0) ** (1.0 / 3.0)
    return n - WINDOW_BEFORE * s, n + WINDOW_AFTER * s


def _window_points(n: float, grid: GridSpec) -> np.ndarray:
    lo, hi = principal_window(n)
    ts = grid.points()
    slack = 1e-9 * max(1.0, abs(hi))
    if grid.t_max < hi - grid.step - slack or grid.t_min > max(lo, 0.0) + grid.step + slack:
        raise DomainError(f"grid [{grid.t_min}, {grid.t_max}] does not cover the window [{lo:.4g}, {hi:.4g}]")
    return ts[(ts >= lo - slack) & (ts <= hi + slack)]


def _local_extrema(ts: np.ndarray, ys: np.ndarray, refine: bool) -> list[ExtremumRecord]:
    d = np.diff(ys)
    out = []
    for i in range(1, len(ys) - 1):
        if d[i - 1] > 0 >= d[i]:
            kind = "maximum"
        elif d[i - 1] < 0 <= d[i]:
            kind = "minimum"
        else:
            continue
        y0, y1, y2 = ys[i - 1], ys[i], ys[i + 1]
        curv = y0 - 2.0 * y1 + y2
        shift = 0.5 * (y0 - y2) / curv if curv != 0 else 0.0
        t_at = ts[i] + shift * (ts[i + 1] - ts[i])
        value = y1 - 0.25 * (y0 - y2) * shift if refine else y1
        out.append(ExtremumRecord(float(t_at), float(value), kind))
    return out


def find_principal_extremum(
    f: Callable[[np.ndarray], np.ndarray],
    n: float,
    grid: GridSpec,
    *,
    after: Optional[float] = None,
    refine: bool = False,
) -> ExtremumRecord:
    """Locate the principal extremum of a sampled function near ``t = n``.

    Parameters
    ----------
    f
        Vectorised function of ``t``; only grid points inside the principal
        window are sampled.
    n
        Order that fixes the window.
    grid
        Sampling grid; must cover the window.
    after
        If given, return the first extremum located beyond this ``t`` instead
        of the one with the largest modulus.
    refine
        Report the vertex value of the three-point parabola instead of the raw
        sample. ``t_at`` is always the parabola vertex.

    Raises
    ------
    NoExtremumError
        If the discrete derivative never changes sign inside the window.
    """
    ts = _window_points(n, grid)
    ys = np.asarray(f(ts), dtype=float)
    extrema = _local_extrema(ts, ys, refine)
    if after is not None:
        extrema = [e for e in extrema if e.t_at > after]
        if extrema:
            return extrema[0]
    elif extrema:
        return max(extrema, key=lambda e: abs(e.value))
    where = "" if after is None else f" after t={after:.6g}"
    raise NoExtremumError(f"no local extremum{where} in the window around n={n}")


def _amplitude_pair(family: Family, n: float, grid: GridSpec, refine: bool, source: str = "both"):
    def exact(ts):
        return family.exact(n, ts)

    def approx(ts):
        return sample_approx(family, n, ts)

    def locate(fn, base_fn):
        after = None
        if base_fn is not None:
            after = find_principal_extremum(base_fn, n, grid, refine=refine).t_at
        return find_principal_extremum(fn, n, grid, after=after, refine=refine)

    base = FAMILIES[family.base] if family.base else None
    out = []
    if source in ("both", "exact"):
        base_exact = (lambda ts: base.exact(n, ts)) if base else None
        out.append(locate(exact, base_exact))
    if source in ("both", "approx"):
        base_approx = (lambda ts: sample_approx(base, n, ts)) if base else None
        out.append(locate(approx, base_approx))
    return out


def table_grid(n: float, step: float = DEFAULT_STEP) -> GridSpec:
    """The default grid for order ``n``: multiples of ``step`` past the window."""
    _, hi = principal_window(n)
    return GridSpec(step, step * math.ceil(hi / step + 1e-9), step)


def delta_row(family: str | Family, n: int, grid_step: float = DEFAULT_STEP, refine: bool = False) -> DeltaRow:
    fam = get_family(family) if isinstance(family, str) else family
    try:
        order = special._check_order(n, even=fam.even_only)
        ext_exact, ext_approx = _amplitude_pair(fam, order, table_grid(order, grid_step), refine)
    except NicholsonError as exc:
        return DeltaRow.failed(int(n) if float(n).is_integer() else n, f"{type(exc).__name__}: {exc}")
    row = DeltaRow.from_amplitudes(order, abs(ext_exact.value), abs(ext_approx.value))
    if row.delta_pct < 0:
        log.warning(
            "%s n=%d: approximant peak exceeds the exact peak (delta=%.3f%%)", fam.name, order, row.delta_pct
        )
    return row


def delta_table(
    family: str,
    orders: Sequence[int],
    grid_step: float = DEFAULT_STEP,
    refine: bool = False,
) -> list[DeltaRow]:
    """Relative peak-amplitude errors of one family, one row per order, sorted by ``n``.

    Failed rows are kept with ``error`` set and NaN amplitudes.
    """
    fam = get_family(family)
    rows = [delta_row(fam, n, grid_step, refine) for n in orders]
    return sorted(rows, key=lambda r: r.n)


@dataclass(frozen=True)
class FigureSeries:
    which: int
    n: float
    t: np.ndarray
    approx: np.ndarray
    exact: Optional[np.ndarray] = None
    axis: str = "t"

    def columns(self) -> list[str]:
        return [self.axis, "approx"] if self.exact is None else [self.axis, "exact", "approx"]

    def rows(self) -> np.ndarray:
        cols = [self.t] + ([] if self.exact is None else [self.exact]) + [self.approx]
        return np.column_stack(cols)


def _check_figure(which) -> int:
    if which not in (1, 2, 3, 4, 5):
        raise DomainError(f"figure must be one of 1-5, got {which!r}")
    return which


def figure_series(which: int, n: float, grid: GridSpec) -> FigureSeries:
    """Samples of an exact function and its approximant along ``t`` (figures 1-4),
    or of ``F1`` alone for a possibly non-integer order (figure 5)."""
    which = _check_figure(which)
    if grid.t_min <= 0:
        raise DomainError("figure grids must start at t > 0")
    ts = grid.points()
    if which == 5:
        return FigureSeries(5, n, ts, sample_approx(FAMILIES["bessel"], n, ts))
    fam = FAMILIES[FIGURE_FAMILIES[which]]
    order = special._check_order(n, even=fam.even_only)
    return FigureSeries(which, order, ts, sample_approx(fam, order, ts), fam.exact(order, ts))


def figure_series_fixed_t(which: int, t: float, n_min: int, n_max: int) -> FigureSeries:
    """Same comparison as :func:`figure_series` with ``t`` fixed and the order varying.

    Orders run over the integers in ``[n_min, n_max]`` (even ones only for the
    Lommel families). The ``n`` field of the result holds the fixed ``t``.
    """
    which = _check_figure(which)
    if which == 5:
        raise DomainError("figure 5 has no fixed-t variant")
    if t <= 0:
        raise DomainError("t must be positive")
    fam = FAMILIES[FIGURE_FAMILIES[which]]
    stride = 2 if fam.even_only else 1
    first = max(0, math.ceil(n_min))
    first += first % stride
    orders = np.arange(first, math.floor(n_max) + 1, stride)
    if orders.size == 0:
        raise DomainError(f"no admissible orders in [{n_min}, {n_max}]")
    exact = np.array([fam.exact(int(k), np.array([t]))[0] for k in orders])
    approx = np.array([fam.approx(float(k), t) for k in orders])
    return FigureSeries(which, t, orders.astype(float), approx, exact, axis="n")


def scaling_step(n: float) -> float:
    """Grid step for scaling fits: 0.1 up to n = 10, then growing like the lobe width."""
    return DEFAULT_STEP * max(1.0, (n / 10.0) ** (1.0 / 3.0))


def fit_power_law(orders: Sequence[float], measured: Sequence[float]) -> ScalingFit:
    """Least-squares line through ``(log10 n, log10 measured)``."""
    x = np.asarray(orders, dtype=float)
    y = np.asarray(measured, dtype=float)
    if x.size < 4 or np.unique(x).size < 4:
        raise FitError(f"a scaling fit needs at least 4 distinct orders, got {x.size}")
    if np.any(x <= 0) or np.any(y <= 0) or not np.all(np.isfinite(y)):
        raise FitError("orders and measured values must be positive and finite")
    lx, ly = np.log10(x), np.log10(y)
    if lx.max() - lx.min() < 2.0:
        log.warning("scaling fit spans only %.2f decades", lx.max() - lx.min())
    slope, intercept = np.polyfit(lx, ly, 1)
    resid = ly - (slope * lx + intercept)
    return ScalingFit(float(slope), float(intercept), float(np.abs(resid).max()), tuple(x), tuple(y))


def scaling_fit(
    quantity: str,
    family: str,
    orders: Sequence[int],
    source: str = "exact",
    grid_step: Optional[float] = None,
    against: Optional[str] = None,
) -> ScalingFit:
    """Fit ``quantity ~ abscissa**exponent`` over the given orders.

    ``amplitude`` is the modulus of the principal extremum and is fitted by
    default against ``t_at``, the time at which that extremum occurs.
    ``width`` is the distance from ``t = n`` to the extremum and is fitted
    against ``n``. Pass ``against="n"`` or ``against="t"`` to override.

    ``source`` selects the exact function or its approximant. By default
    each order is sampled on the grid from :func:`scaling_step` and the
    extremum value is parabola-refined.
    """
    if quantity not in ("amplitude", "width"):
        raise DomainError(f"quantity must be 'amplitude' or 'width', got {quantity!r}")
    if source not in ("exact", "approx"):
        raise DomainError(f"source must be 'exact' or 'approx', got {source!r}")
    if against is None:
        against = "t" if quantity == "amplitude" else "n"
    if against not in ("n", "t"):
        raise DomainError(f"against must be 'n' or 't', got {against!r}")
    fam = get_family(family)
    if len(orders) < 4:
        raise FitError(f"a scaling fit needs at least 4 orders, got {len(orders)}")
    xs, measured, locations = [], [], []
    for n in sorted(orders):
        order = special._check_order(n, even=fam.even_only)
        step = grid_step if grid_step is not None else scaling_step(order)
        (ext,) = _amplitude_pair(fam, order, table_grid(order, step), refine=True, source=source)
        measured.append(abs(ext.value) if quantity == "amplitude" else ext.t_at - order)
        locations.append(ext.t_at)
        xs.append(ext.t_at if against == "t" else order)
    fit = fit_power_law(xs, measured)
    return ScalingFit(
        fit.exponent,
        fit.intercept,
        fit.max_residual,
        tuple(sorted(orders)),
        fit.measured,
        tuple(locations),
        against,
    )


def agreeing_sig_figs(value: float, reference: float) -> int:
    """Number of leading significant figures shared by ``value`` and ``reference``."""
    if value == reference:
        return 17
    rel = abs(value - reference) / abs(reference)
    return max(0, min(17, int(math.floor(-math.log10(rel)))))


@dataclass(frozen=True)
class BigOrderReport:
    nu: float
    x: float
    f1_value: float
    reference_exact: float
    published_approx: float
    agreeing_sig_figs: int
    published_approx_sig_figs: int


def bigorder_check() -> BigOrderReport:
    """Evaluate F1 at ``nu = 5000000.2, x = 5000000.1`` and compare with the literature value."""
    value = asy.f1_bessel(BIGORDER_NU, BIGORDER_X)
    return BigOrderReport(
        BIGORDER_NU,
        BIGORDER_X,
        value,
        BIGORDER_REFERENCE,
        BIGORDER_PUBLISHED_APPROX,
        agreeing_sig_figs(value, BIGORDER_REFERENCE),
        agreeing_sig_figs(value, BIGORDER_PUBLISHED_APPROX),
    )
