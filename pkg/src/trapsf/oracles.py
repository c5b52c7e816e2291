"""Independent checks for the quadrature results.

Nothing here goes through the trapezoidal engine except :func:`ode_residual_k`,
whose whole purpose is to test ``bessel_k`` against its differential
equation.  The power series are summed in exact rational arithmetic, so for
integer order the returned value is the correctly rounded truncated series.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .specfun import DomainError, bessel_k

SERIES_RATIO = Fraction(1, 10**17)
SERIES_MAX_ABS_X = 30.0


class SeriesConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class SeriesResult:
    value: float
    terms_used: int
    last_term_ratio: float


def _bessel_series(nu: float, x: float, max_terms: int, sign: int) -> SeriesResult:
    if not nu >= 0:
        raise DomainError(f"series oracle needs nu >= 0, got {nu!r}")
    if not abs(x) <= SERIES_MAX_ABS_X:
        raise DomainError(f"series oracle limited to |x| <= {SERIES_MAX_ABS_X}, got {x!r}")
    if x == 0:
        return SeriesResult(1.0 if nu == 0 else 0.0, 1, 0.0)

    half = Fraction(x) / 2
    q = sign * half * half
    fnu = Fraction(nu)
    term = Fraction(1)
    total = Fraction(1)
    k = 0
    ratio = Fraction(1)
    while True:
        k += 1
        if k > max_terms:
            raise SeriesConvergenceError(
                f"series for nu={nu}, x={x} not converged in {max_terms} terms"
            )
        term = term * q / (k * (k + fnu))
        total += term
        if total == 0:
            continue
        ratio = abs(term / total)
        if ratio <= SERIES_RATIO:
            break

    if float(nu).is_integer():
        n = int(nu)
        value = float(half**n / math.factorial(n) * total)
    else:
        value = math.pow(float(half), nu) / math.gamma(nu + 1.0) * float(total)
    return SeriesResult(value, k + 1, float(ratio))


def series_j(nu: float, x: float, max_terms: int = 500) -> SeriesResult:
    """Power series of J_nu(x), nu >= 0."""
    return _bessel_series(nu, x, max_terms, -1)


def series_i(nu: float, x: float, max_terms: int = 500) -> SeriesResult:
    return _bessel_series(nu, x, max_terms, +1)


def asymptotic_k(nu: float, z: float) -> float:
    """Leading large-z behaviour sqrt(pi/2z) exp(-z); nu only enters the correction."""
    if not z >= 10:
        raise DomainError(f"asymptotic form used only for z >= 10, got {z!r}")
    return math.sqrt(math.pi / (2.0 * z)) * math.exp(-z)


def ode_residual_k(
    nu: float, z: float, step: float = 1e-4, stencil: int = 3, config=None
) -> float:
    """Relative residual of the modified Bessel equation applied to bessel_k.

    Returns ``|z^2 K'' + z K' - (nu^2 + z^2) K| / (z^2 K)`` with the
    derivatives taken by central differences of spacing ``step``.
    ``stencil=5`` adds the points at ``z +- 2 step`` and cancels the
    ``step**2`` truncation term; at small z and larger nu the three-point
    truncation error alone is of order 1e-6.
    """
    if not 1e-5 <= step <= 1e-3:
        raise ValueError(f"step must lie in [1e-5, 1e-3], got {step!r}")
    if stencil not in (3, 5):
        raise ValueError(f"stencil must be 3 or 5, got {stencil!r}")
    reach = 2 if stencil == 5 else 1
    if not z > 2 * reach * step:
        raise DomainError(f"z = {z!r} too close to 0 for step {step!r}")
    return operator_residual(lambda w: bessel_k(nu, w, config).value, nu, z, step, stencil)


def operator_residual(func, nu: float, z: float, step: float, stencil: int = 3) -> float:
    """Finite-difference residual of the modified Bessel operator for any callable."""
    f0 = func(z)
    fm, fp = func(z - step), func(z + step)
    d1 = (fp - fm) / (2.0 * step)
    d2 = (fp - 2.0 * f0 + fm) / (step * step)
    if stencil == 5:
        fm2, fp2 = func(z - 2.0 * step), func(z + 2.0 * step)
        d1 = (8.0 * (fp - fm) - (fp2 - fm2)) / (12.0 * step)
        d2 = (16.0 * (fp + fm) - (fp2 + fm2) - 30.0 * f0) / (12.0 * step * step)
    r = z * z * d2 + z * d1 - (nu * nu + z * z) * f0
    return abs(r) / (z * z * abs(f0))


def zeta_direct(s: float, n_terms: int = 1_000_000, tail: bool = True) -> float:
    """Partial sum of n**-s plus the mean of the two integral bounds on the rest."""
    if not s > 1:
        raise DomainError(f"direct zeta sum needs s > 1, got {s!r}")
    n = np.arange(1, n_terms + 1, dtype=float)
    total = math.fsum(n ** (-s))
    if tail:
        big_n = float(n_terms)
        total += 0.5 * (big_n ** (1.0 - s) + (big_n + 1.0) ** (1.0 - s)) / (s - 1.0)
    return total
