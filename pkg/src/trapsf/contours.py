"""Integration paths and variable changes, each with its exact derivative.

Every map takes a real parameter and returns the position together with
d(position)/d(parameter), so a line integral becomes a plain integral over the
real line that the trapezoidal engine can handle.
"""

from __future__ import annotations

import math
from typing import Callable, NamedTuple

HALF_PI = 0.5 * math.pi


class ContourPoint(NamedTuple):
    t: complex
    dt: complex


def _sech2(u: float) -> float:
    if abs(u) > 350.0:
        return 0.0
    c = math.cosh(u)
    return 1.0 / (c * c)


def contour_rotated_k(u: float) -> ContourPoint:
    """Path from the real axis up toward Im t = +-pi/2, for K at imaginary argument."""
    return ContourPoint(
        complex(math.sinh(u), HALF_PI * math.tanh(u)),
        complex(math.cosh(u), HALF_PI * _sech2(u)),
    )


def stationary_c(nu: float, x: float) -> float:
    """Shift that puts the saddle of ``x cosh t - nu t`` at ``u = 0``."""
    return -1.0 + math.asinh(nu / x)


def contour_saddle_i(u: float, c: float) -> ContourPoint:
    return ContourPoint(
        complex(math.cosh(u) + c, math.pi * math.tanh(u)),
        complex(math.sinh(u), math.pi * _sech2(u)),
    )


def contour_hankel_gamma(u: float) -> ContourPoint:
    """Loop around the negative real axis, counterclockwise, crossing at t = 1."""
    return ContourPoint(
        complex(2.0 - math.cosh(u), math.sinh(u)),
        complex(-math.sinh(u), math.cosh(u)),
    )


def map_tanh(u: float) -> tuple[float, float]:
    return math.tanh(u), _sech2(u)


def accel_sinh(v: float) -> tuple[float, float]:
    return math.sinh(v), math.cosh(v)


def accel_cubic(v: float) -> tuple[float, float]:
    return v * v * v, 3.0 * v * v


def accel_none(v: float) -> tuple[float, float]:
    return v, 1.0


ACCELERATIONS: dict[str, Callable[[float], tuple[float, float]]] = {
    "none": accel_none,
    "sinh": accel_sinh,
    "cubic": accel_cubic,
}


def accelerated(f: Callable[[float], complex], accel: str) -> Callable[[float], complex]:
    """Compose ``f(u) du`` with ``u = g(v)``: returns ``v -> f(g(v)) g'(v)``."""
    try:
        g = ACCELERATIONS[accel]
    except KeyError:
        raise ValueError(
            f"unknown acceleration {accel!r}; choose from {sorted(ACCELERATIONS)}"
        ) from None
    if g is accel_none:
        return f

    def composed(v: float):
        u, du = g(v)
        if du == 0.0:
            return 0.0
        return f(u) * du

    return composed
