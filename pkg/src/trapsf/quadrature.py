"""Trapezoidal rule on the real line for smooth, decaying integrands.

The sum ``h * sum(f(n*h))`` over all integers ``n`` approximates the integral
of ``f`` with an error that falls faster than any power of ``h`` when ``f`` is
analytic in a strip around the real axis.  The routines here sample ``f``
outward from the origin, cut each direction off once its terms are negligible,
and refine by halving ``h`` until two successive estimates agree.
"""

from __future__ import annotations

import enum
import math
import sys
from dataclasses import dataclass, field
from typing import Callable, NamedTuple

Integrand = Callable[[float], "complex | float"]

HARD_CAP = 100_000
_SCALE_FLOOR = sys.float_info.min


class QuadratureError(ArithmeticError):
    """Base class for failures of the trapezoidal engine."""


class NonFiniteIntegrandError(QuadratureError):
    def __init__(self, u: float, value, h: float | None = None):
        self.u = u
        self.value = value
        self.h = h
        where = f"u = {u!r}" if h is None else f"u = {u!r} (h = {h!r})"
        super().__init__(f"integrand is not finite at {where}: {value!r}")


class DivergenceError(QuadratureError):
    def __init__(self, direction: int, h: float | None = None):
        self.direction = direction
        self.h = h
        side = "+" if direction > 0 else "-"
        at = "" if h is None else f" at h = {h!r}"
        super().__init__(
            f"terms in the {side} direction did not drop below the cutoff "
            f"within {HARD_CAP} points{at}; integrand does not decay"
        )


class Domain(enum.Enum):
    FULL_LINE = "full"
    # n = 0, 1, 2, ... with the n = 0 sample weighted 1/2
    HALF_LINE = "half"


@dataclass(frozen=True)
class EngineConfig:
    h0: float = 2.0
    max_halvings: int = 10
    truncation_cutoff: float = 1e-20
    convergence_tol: float = 1e-15
    min_tail_hits: int = 2

    def __post_init__(self):
        if not self.h0 > 0 or not math.isfinite(self.h0):
            raise ValueError(f"h0 must be positive and finite, got {self.h0}")
        if self.max_halvings < 1:
            raise ValueError(f"max_halvings must be >= 1, got {self.max_halvings}")
        if self.min_tail_hits < 1:
            raise ValueError(f"min_tail_hits must be >= 1, got {self.min_tail_hits}")
        if not 0 < self.truncation_cutoff < 1:
            raise ValueError("truncation_cutoff must lie in (0, 1)")
        if not 0 <= self.convergence_tol < 1:
            raise ValueError("convergence_tol must lie in [0, 1)")


@dataclass(frozen=True)
class TableRow:
    inv_h: float
    mesh_points: int
    estimate: complex


@dataclass
class ConvergenceTable:
    """One row per mesh interval, in the order the intervals were tried."""

    rows: list[TableRow] = field(default_factory=list)

    def append(self, inv_h: float, mesh_points: int, estimate: complex) -> None:
        self.rows.append(TableRow(inv_h, mesh_points, complex(estimate)))

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)

    def __getitem__(self, i):
        return self.rows[i]

    def row_at(self, inv_h: float) -> TableRow:
        for row in self.rows:
            if row.inv_h == inv_h:
                return row
        raise KeyError(f"no row with 1/h = {inv_h}")

    def differences(self) -> list[float]:
        """Magnitudes of successive estimate differences."""
        est = [r.estimate for r in self.rows]
        return [abs(b - a) for a, b in zip(est, est[1:])]


@dataclass(frozen=True)
class QuadratureResult:
    value: complex
    est_error: float
    mesh_points: int
    halvings_used: int
    converged: bool


class _Sum(NamedTuple):
    value: complex
    mesh_points: int
    mass: float  # h * sum |f(nh)|, the scale of rounding error in value


def _sample(f: Integrand, u: float, h: float | None) -> complex:
    try:
        v = f(u)
    except OverflowError as exc:
        raise NonFiniteIntegrandError(u, "overflow", h) from exc
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise NonFiniteIntegrandError(u, v, h)
    return v


def _trapezoid(
    f: Integrand,
    h: float,
    domain: Domain,
    cutoff: float,
    min_tail_hits: int,
    extent: int | None = None,
    annotate_h: bool = False,
) -> _Sum:
    if not h > 0:
        raise ValueError(f"h must be positive, got {h}")
    tag = h if annotate_h else None

    f0 = _sample(f, 0.0, tag)
    w0 = 0.5 if domain is Domain.HALF_LINE else 1.0
    re = [w0 * f0.real]
    im = [w0 * f0.imag]
    partial = complex(w0 * f0)
    peak = abs(f0)
    count = 1

    directions = (1,) if domain is Domain.HALF_LINE else (1, -1)
    for sign in directions:
        hits = 0
        n = 0
        while True:
            n += 1
            if extent is not None:
                if n > extent:
                    break
            elif n > HARD_CAP:
                raise DivergenceError(sign, tag)
            term = _sample(f, sign * n * h, tag)
            count += 1
            re.append(term.real)
            im.append(term.imag)
            partial += term
            mag = abs(term)
            if mag > peak:
                peak = mag
            if extent is not None:
                continue
            scale = max(abs(partial), peak, _SCALE_FLOOR)
            if mag <= cutoff * scale:
                hits += 1
                if hits >= min_tail_hits:
                    break
            else:
                hits = 0

    value = h * complex(math.fsum(re), math.fsum(im))
    mass = h * math.fsum(math.hypot(a, b) for a, b in zip(re, im))
    return _Sum(value, count, mass)


def trapezoid_sum(
    f: Integrand,
    h: float,
    domain: Domain = Domain.FULL_LINE,
    cutoff: float = 1e-20,
    min_tail_hits: int = 2,
    extent: int | None = None,
) -> tuple[complex, int]:
    """Return ``(h * sum f(n*h), mesh_points)``.

    Each direction stops after ``min_tail_hits`` consecutive samples with
    ``|f| <= cutoff * scale``, where ``scale`` is the larger of the running
    partial sum and the largest sample so far.  Passing ``extent`` disables
    truncation and sums exactly ``|n| <= extent``.
    """
    s = _trapezoid(f, h, domain, cutoff, min_tail_hits, extent)
    return s.value, s.mesh_points


def refine(
    f: Integrand,
    domain: Domain = Domain.FULL_LINE,
    config: EngineConfig | None = None,
) -> tuple[QuadratureResult, ConvergenceTable]:
    """Halve ``h`` from ``config.h0`` until successive sums agree.

    Agreement means ``|delta| <= convergence_tol * max(|value|, mass)`` where
    ``mass = h * sum |f(nh)|``.  Rounding in the sum is proportional to
    ``mass``, which can exceed ``|value|`` by orders of magnitude when the
    integrand oscillates or cancels.
    When ``max_halvings`` runs out the last estimate is returned with
    ``converged=False``.  ``convergence_tol=0`` runs the whole schedule, which
    is how full tables are produced.
    """
    cfg = config or EngineConfig()
    table = ConvergenceTable()
    h = cfg.h0
    prev = None
    delta = math.inf
    converged = False
    halvings = 0
    mesh = 0
    value = 0j
    for k in range(cfg.max_halvings + 1):
        s = _trapezoid(
            f, h, domain, cfg.truncation_cutoff, cfg.min_tail_hits, annotate_h=True
        )
        table.append(1.0 / h, s.mesh_points, s.value)
        value, mesh, halvings = s.value, s.mesh_points, k
        if prev is not None:
            delta = abs(value - prev)
            converged = False
            if delta <= cfg.convergence_tol * max(abs(value), s.mass):
                converged = True
                if cfg.convergence_tol > 0:
                    break
        prev = value
        h /= 2

    est = delta if math.isfinite(delta) else abs(value)
    return QuadratureResult(value, est, mesh, halvings, converged), table


def periodic_trapezoid(f: Integrand, a: float, b: float, m: int) -> complex:
    """Equal-weight rule ``(b-a)/m * sum f(a + k(b-a)/m)`` for periodic ``f``."""
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"number of points must be a positive integer, got {m!r}")
    m = int(m)
    step = (b - a) / m
    vals = [complex(f(a + k * step)) for k in range(m)]
    mean = complex(math.fsum(v.real for v in vals), math.fsum(v.imag for v in vals)) / m
    return (b - a) * mean
