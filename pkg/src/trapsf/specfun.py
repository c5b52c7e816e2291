"""Bessel, Gamma and zeta functions by the trapezoidal rule.

Each function builds a real-line integrand from an integral representation
(on the real axis or along a complex path from :mod:`trapsf.contours`),
hands it to :func:`trapsf.quadrature.refine`, and returns an
:class:`EvalReport` holding the value together with the full convergence
history, expressed in the units of the function itself.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass, replace
from typing import Callable

from .contours import (
    accelerated,
    contour_hankel_gamma,
    contour_rotated_k,
    contour_saddle_i,
    map_tanh,
    stationary_c,
)
from .quadrature import (
    ConvergenceTable,
    Domain,
    EngineConfig,
    QuadratureResult,
    periodic_trapezoid,
    refine,
)

POLE_THRESHOLD = 1e-14
LOG_PATH_X = 500.0
_TWO_PI_I = 2j * math.pi


class DomainError(ValueError):
    """Argument outside the region where the chosen representation holds."""


class PoleError(DomainError):
    """Gamma requested at (or numerically on top of) one of its poles."""


class Route(enum.Enum):
    K_REAL = "k_real"
    HANKEL_ROTATED = "hankel_rotated"
    I_REAL = "i_real"
    I_CONTOUR = "i_contour"
    GAMMA_HANKEL = "gamma_hankel"
    ZETA = "zeta"
    J0_PERIODIC = "j0_periodic"


@dataclass(frozen=True)
class FunctionParams:
    nu: float = 0.0
    z: complex = 0j

    def check(self, route: Route) -> None:
        z = complex(self.z)
        if not (math.isfinite(self.nu) and cmath.isfinite(z)):
            raise DomainError("order and argument must be finite")
        if route in (Route.K_REAL, Route.HANKEL_ROTATED, Route.I_REAL, Route.I_CONTOUR):
            if z.imag != 0.0:
                raise DomainError("Bessel routes take a real argument only")
            if not z.real > 0:
                raise DomainError(f"argument must be positive, got {z.real!r}")
        if route in (Route.I_REAL, Route.I_CONTOUR) and not self.nu > -0.5:
            raise DomainError(f"order must exceed -1/2 for I, got {self.nu!r}")
        if route is Route.ZETA and not z.real > 1:
            raise DomainError(
                f"zeta integral needs Re(s) > 1 (no continuation), got Re(s) = {z.real!r}"
            )


@dataclass(frozen=True)
class EvalReport:
    value: complex | float
    result: QuadratureResult
    table: ConvergenceTable
    route: Route
    imag_residue: float = 0.0

    @property
    def converged(self) -> bool:
        return self.result.converged


def _in_units(
    result: QuadratureResult, table: ConvergenceTable, fn: Callable[[complex], complex]
) -> tuple[QuadratureResult, ConvergenceTable]:
    """Re-express a raw quadrature history through ``fn`` (prefactor, projection)."""
    out = ConvergenceTable()
    for row in table:
        out.append(row.inv_h, row.mesh_points, fn(row.estimate))
    value = out[-1].estimate
    if len(out) >= 2:
        err = abs(value - out[-2].estimate)
    else:
        err = abs(value)
    return replace(result, value=value, est_error=err), out


def _report(raw, fn, route, real=False, residue=False) -> EvalReport:
    result, table = _in_units(*raw, fn)
    value = result.value
    imag = abs(value.imag)
    if real:
        value = value.real
    return EvalReport(value, result, table, route, imag if residue else 0.0)


# ---------------------------------------------------------------- K


def _k_integrand(nu: float, z: float):
    def f(t: float) -> float:
        a = -z * math.cosh(t)
        return 0.5 * (math.exp(nu * t + a) + math.exp(-nu * t + a))

    return f


def bessel_k(nu: float, z: float, config: EngineConfig | None = None) -> EvalReport:
    """Modified Bessel function K_nu(z) for real nu and z > 0.

    Integrates cosh(nu t) exp(-z cosh t) over t >= 0 directly, in real
    arithmetic, with the origin sample carrying half weight.
    """
    FunctionParams(nu, z).check(Route.K_REAL)
    raw = refine(_k_integrand(nu, z), Domain.HALF_LINE, config)
    return _report(raw, lambda v: complex(v.real, 0.0), Route.K_REAL, real=True)


# ---------------------------------------------------------------- J, N, H1


def _hankel_integrand(nu: float, x: float):
    ix = 1j * x

    def f(u: float) -> complex:
        t, dt = contour_rotated_k(u)
        e = ix * cmath.cosh(t)
        return 0.5 * (cmath.exp(nu * t + e) + cmath.exp(-nu * t + e)) * dt

    return f


def _hankel_raw(nu: float, x: float, config: EngineConfig | None):
    FunctionParams(nu, x).check(Route.HANKEL_ROTATED)
    # the integrand is even in u, so the half line carries K_nu(-ix) in full
    raw = refine(_hankel_integrand(nu, x), Domain.HALF_LINE, config)
    phase = 2.0 / (1j * math.pi) * cmath.exp(-0.5j * nu * math.pi)
    return raw, phase


def hankel1(nu: float, x: float, config: EngineConfig | None = None) -> EvalReport:
    """H1_nu(x) = J_nu(x) + i N_nu(x) through K_nu(-ix) on a rotated path."""
    raw, phase = _hankel_raw(nu, x, config)
    return _report(raw, lambda v: phase * v, Route.HANKEL_ROTATED)


def bessel_j(nu: float, x: float, config: EngineConfig | None = None) -> EvalReport:
    raw, phase = _hankel_raw(nu, x, config)
    return _report(raw, lambda v: complex((phase * v).real, 0.0), Route.HANKEL_ROTATED, real=True)


def bessel_n(nu: float, x: float, config: EngineConfig | None = None) -> EvalReport:
    """Bessel function of the second kind (often written Y_nu)."""
    raw, phase = _hankel_raw(nu, x, config)
    return _report(raw, lambda v: complex((phase * v).imag, 0.0), Route.HANKEL_ROTATED, real=True)


# ---------------------------------------------------------------- I


def _log_cosh(u: float) -> float:
    a = abs(u)
    return a + math.log1p(math.exp(-2.0 * a)) - math.log(2.0)


def _i_integrand(nu: float, x: float, log_scale: float | None):
    power = 2.0 * nu + 1.0
    if log_scale is None:

        def f(u: float) -> float:
            t, _ = map_tanh(u)
            # sin(theta)**(2 nu) dtheta = sech(u)**(2 nu + 1) du
            return math.exp(-power * _log_cosh(u)) * math.cosh(x * t)

        return f

    def f_log(u: float) -> float:
        a = x * abs(math.tanh(u))
        log_cosh_xt = a + math.log1p(math.exp(-2.0 * a)) - math.log(2.0)
        return math.exp(log_scale - power * _log_cosh(u) + log_cosh_xt)

    return f_log


def bessel_i(
    nu: float, x: float, config: EngineConfig | None = None, accel: str = "none"
) -> EvalReport:
    """Modified Bessel function I_nu(x) from the real, non-oscillating integral.

    With cos(theta) = tanh(u) the integral of sin(theta)**(2 nu) cosh(x cos
    theta) over [0, pi] becomes an even integral over the whole u line.
    ``accel`` ("sinh" or "cubic") substitutes u = sinh(v) or u = v**3 to
    shorten the tails.  Above x = 500 the integrand and prefactor are
    combined in log space so cosh(x) never overflows on its own.
    """
    FunctionParams(nu, x).check(Route.I_REAL)
    rg = recip_gamma(nu + 0.5, config).value
    if x > LOG_PATH_X:
        log_pre = nu * math.log(0.5 * x) - 0.5 * math.log(math.pi) + math.log(abs(rg.real))
        f = _i_integrand(nu, x, log_pre)
        pre = 2.0
    else:
        f = _i_integrand(nu, x, None)
        pre = 2.0 * (0.5 * x) ** nu * rg.real / math.sqrt(math.pi)
    raw = refine(accelerated(f, accel), Domain.HALF_LINE, config)
    return _report(raw, lambda v: complex(pre * v.real, 0.0), Route.I_REAL, real=True)


def _i_contour_integrand(nu: float, x: float, c: float):
    def f(u: float) -> complex:
        t, dt = contour_saddle_i(u, c)
        return cmath.exp(x * cmath.cosh(t) - nu * t) * dt

    return f


def bessel_i_contour(
    nu: float, x: float, config: EngineConfig | None = None, c: float | None = None
) -> EvalReport:
    """I_nu(x) from the loop integral of exp(x cosh t - nu t) around Re t = +inf.

    The path is centred on the saddle point unless ``c`` is given.  The exact
    answer is real; the discarded imaginary part is kept on the report as
    ``imag_residue``.
    """
    FunctionParams(nu, x).check(Route.I_CONTOUR)
    if c is None:
        c = stationary_c(nu, x)
    raw = refine(_i_contour_integrand(nu, x, c), Domain.FULL_LINE, config)
    return _report(raw, lambda v: v / _TWO_PI_I, Route.I_CONTOUR, real=True, residue=True)


# ---------------------------------------------------------------- Gamma


def _recip_gamma_integrand(z: complex):
    def f(u: float) -> complex:
        t, dt = contour_hankel_gamma(u)
        return cmath.exp(t - z * cmath.log(t)) * dt

    return f


def recip_gamma(z: complex, config: EngineConfig | None = None) -> EvalReport:
    """1/Gamma(z) for any finite complex z, via the Hankel loop integral.

    Uses the principal branch of t**(-z); the path crosses the real axis
    only at t = 1 and so never meets the cut.
    """
    z = complex(z)
    if not cmath.isfinite(z):
        raise DomainError("argument must be finite")
    raw = refine(_recip_gamma_integrand(z), Domain.FULL_LINE, config)
    if z.imag == 0.0:
        # conjugate-symmetric integrand; any imaginary part is rounding
        return _report(raw, lambda v: complex((v / _TWO_PI_I).real, 0.0), Route.GAMMA_HANKEL)
    return _report(raw, lambda v: v / _TWO_PI_I, Route.GAMMA_HANKEL)


def gamma(z: complex, config: EngineConfig | None = None) -> EvalReport:
    """Gamma(z) as the reciprocal of :func:`recip_gamma`.

    Samples along the loop are of order one while 1/Gamma(z) shrinks fast
    as Re z grows, so about log10(Gamma(z)) digits are lost to cancellation:
    Gamma(12) is good to ~1e-9, and past Re z ~ 15 the result is noise.
    """
    z = complex(z)
    rep = recip_gamma(z, config)
    rg = rep.value
    # a tiny reciprocal only means a pole in the left half-plane; for
    # Re z >= 1 it is just a large Gamma
    if abs(rg) < POLE_THRESHOLD and z.real < 1.0:
        raise PoleError(f"Gamma has a pole at z = {z!r} (|1/Gamma| = {abs(rg):.3g})")
    result, table = _in_units(rep.result, rep.table, lambda v: 1.0 / v if v else complex("inf"))
    return EvalReport(result.value, result, table, Route.GAMMA_HANKEL)


# ---------------------------------------------------------------- zeta


def _log_expm1_exp(u: float) -> float:
    """log(exp(exp(u)) - 1) without overflow or underflow."""
    t = math.exp(u)
    if t < 1e-10:
        return u + 0.5 * t
    if t > 40.0:
        return t + math.log1p(-math.exp(-t))
    return math.log(math.expm1(t))


def _zeta_integrand(s: complex):
    def f(u: float) -> complex:
        if u > 700.0:
            return 0j  # exp(s u - e**u) underflows long before this
        # e**(-t/2) / sinh(t/2) = 2 / (e**t - 1)
        return 2.0 * cmath.exp(s * u - _log_expm1_exp(u))

    return f


def zeta(
    s: complex, config: EngineConfig | None = None, accel: str = "sinh"
) -> EvalReport:
    """Riemann zeta for Re(s) > 1.

    Integrates e**(s u) * 2/(e**t - 1) with t = e**u over the u line, after
    u = sinh(v) by default, then divides by 2 Gamma(s).
    """
    s = complex(s)
    FunctionParams(0.0, s).check(Route.ZETA)
    rg = recip_gamma(s, config).value
    raw = refine(accelerated(_zeta_integrand(s), accel), Domain.FULL_LINE, config)
    return _report(raw, lambda v: 0.5 * rg * v, Route.ZETA)


# ---------------------------------------------------------------- J0 on a period


def bessel_j0_periodic(x: float, m: int) -> float:
    """J_0(x) from the equal-weight rule on cos(x cos theta).

    cos(x cos theta) is even about 0 and about pi/2, so the quarter-period
    integral is half of one over a full period [0, pi]; that one is sampled
    with 2m points, i.e. spacing (pi/2)/m.
    """
    if isinstance(m, bool) or int(m) != m or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    x = float(x)
    if not math.isfinite(x):
        raise DomainError("argument must be finite")
    # theta = pi s maps one period onto [0, 1]
    v = periodic_trapezoid(lambda s: math.cos(x * math.cos(math.pi * s)), 0.0, 1.0, 2 * int(m))
    return v.real
