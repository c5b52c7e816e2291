"""Identity and oracle checks run by ``trapsf validate``.

Every check compares a trapezoidal result against something it was not
computed from: a power series, an exact value, a recurrence, a Wronskian, or
a second integration route.  Checks receive their function handles through
:class:`Evaluators` so that a deliberately perturbed K can be injected to show
the suite notices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from . import oracles, specfun
from .quadrature import Domain, EngineConfig, refine, trapezoid_sum
from .reference import ALL_CASES


@dataclass(frozen=True)
class Evaluators:
    k: Callable[[float, float], float]
    j: Callable[[float, float], float]
    n: Callable[[float, float], float]
    i: Callable[[float, float], float]
    i_contour: Callable[[float, float], float]
    gamma: Callable[[complex], complex]
    recip_gamma: Callable[[complex], complex]
    zeta: Callable[[complex], complex]

    @classmethod
    def default(cls, config: EngineConfig | None = None, k_factor: float = 1.0):
        """Library evaluators; ``k_factor`` scales every K-integral result."""
        return cls(
            k=lambda nu, z: specfun.bessel_k(nu, z, config).value * k_factor,
            j=lambda nu, x: specfun.bessel_j(nu, x, config).value * k_factor,
            n=lambda nu, x: specfun.bessel_n(nu, x, config).value * k_factor,
            i=lambda nu, x: specfun.bessel_i(nu, x, config).value,
            i_contour=lambda nu, x: specfun.bessel_i_contour(nu, x, config).value,
            gamma=lambda z: specfun.gamma(z, config).value,
            recip_gamma=lambda z: specfun.recip_gamma(z, config).value,
            zeta=lambda s: specfun.zeta(s, config).value,
        )


@dataclass(frozen=True)
class Outcome:
    name: str
    passed: bool
    measured: float
    tolerance: float
    detail: str = ""


@dataclass(frozen=True)
class Check:
    name: str
    description: str
    run: Callable[[Evaluators], Outcome]


def _rel(a, b) -> float:
    if a == b:
        return 0.0
    return abs(a - b) / abs(b)


def _worst(name, residuals, tol, what="max relative error"):
    """Outcome for a grid: pass iff every residual is within ``tol``."""
    worst_at, worst = max(residuals.items(), key=lambda kv: kv[1])
    return Outcome(name, worst <= tol, worst, tol, f"{what} at {worst_at}")


# ---------------------------------------------------------------- checks


def _gaussian(ev):
    val, _ = trapezoid_sum(lambda u: math.exp(-u * u), 0.5)
    err = abs(val - math.sqrt(math.pi))
    return Outcome("gaussian", err <= 1e-12, err, 1e-12, "absolute error at h = 0.5")


def _convergence_order(ev):
    cfg = EngineConfig(convergence_tol=0.0, max_halvings=6)
    _, table = refine(specfun._k_integrand(0.0, 1.0), Domain.HALF_LINE, cfg)
    d = table.differences()
    worst = 0.0
    for a, b in zip(d, d[1:]):
        if 1e-12 <= a <= 1e-3:
            worst = max(worst, b / a**1.5)
    return Outcome(
        "convergence_order", worst <= 1.0, worst, 1.0,
        "max of delta[k+1] / delta[k]**1.5 for K_0(1)",
    )


def _reference_tables(ev):
    fns = {"k": ev.k, "j": ev.j, "n": ev.n, "i": ev.i, "gamma": ev.gamma}
    res = {}
    for case in ALL_CASES:
        val = fns[case.function](case.nu, case.z) if case.function != "gamma" else fns["gamma"](case.z)
        res[(case.function, case.nu, case.z)] = _rel(val, case.final)
    return _worst("reference_tables", res, 5e-12)


def _k_evenness(ev):
    res = {
        (nu, z): _rel(ev.k(-nu, z), ev.k(nu, z))
        for nu in (0.3, 1.0, 2.718)
        for z in (0.1, 1.0, 10.0)
    }
    return _worst("k_evenness", res, 1e-14)


def _cross_product(ev):
    res = {}
    for nu in (0.0, 1.0, 2.5):
        for x in (0.5, 1.0, 5.0, 20.0):
            lhs = ev.i(nu, x) * ev.k(nu + 1, x) + ev.i(nu + 1, x) * ev.k(nu, x)
            res[(nu, x)] = _rel(lhs, 1.0 / x)
    return _worst("cross_product", res, 1e-11)


def _wronskian(ev):
    res = {}
    for nu in (0.0, 1.0):
        for x in (0.5, 1.0, 5.0, 10.0):
            lhs = ev.j(nu + 1, x) * ev.n(nu, x) - ev.j(nu, x) * ev.n(nu + 1, x)
            res[(nu, x)] = _rel(lhs, 2.0 / (math.pi * x))
    return _worst("wronskian", res, 1e-10)


def _hankel_modulus(ev):
    mods = [ev.j(0, x) ** 2 + ev.n(0, x) ** 2 for x in (1.0, 2.0, 5.0, 10.0)]
    steps = [b - a for a, b in zip(mods, mods[1:])]
    worst = max(steps)
    return Outcome(
        "hankel_modulus", worst < 0, worst, 0.0,
        "largest increase of J0^2 + N0^2 over x = 1, 2, 5, 10 (must be < 0)",
    )


def _i_routes(ev):
    res = {
        (nu, x): _rel(ev.i_contour(nu, x), ev.i(nu, x))
        for nu, x in ((0.0, 1.0), (2.0, 1.0), (2.0, 10.0), (2.5, 5.0), (1.0, 20.0))
    }
    return _worst("i_routes", res, 1e-9)


def _i_contour_residue(ev):
    res = {}
    for nu, x in ((2.0, 1.0), (2.0, 10.0), (2.5, 5.0)):
        rep = specfun.bessel_i_contour(nu, x)
        res[(nu, x)] = rep.imag_residue / abs(rep.value)
    return _worst("i_contour_imag", res, 1e-8, "max |Im/Re|")


def _j0_periodic(ev):
    res = {
        x: abs(specfun.bessel_j0_periodic(x, 40) - ev.j(0, x)) for x in (0.1, 1.0, 10.0)
    }
    return _worst("j0_periodic", res, 1e-12, "max absolute difference")


def _series_j(ev):
    res = {}
    for x in (0.1, 1.0, 10.0):
        res[(1.0, x)] = _rel(ev.j(1.0, x), oracles.series_j(1.0, x).value)
    return _worst("series_j", res, 1e-12)


def _series_i(ev):
    res = {}
    for x in (0.01, 1.0):
        res[(2.0, x)] = _rel(ev.i(2.0, x), oracles.series_i(2.0, x).value)
    return _worst("series_i", res, 1e-12)


def _gamma_recurrence(ev):
    res = {z: _rel(ev.gamma(z + 1), z * ev.gamma(z)) for z in (0.1, 0.5, 2.3, 1 + 10j)}
    return _worst("gamma_recurrence", res, 1e-12)


def _gamma_exact(ev):
    res = {
        "gamma(1) = 1": _rel(ev.gamma(1.0), 1.0),
        "gamma(1/2)^2 = pi": _rel(ev.gamma(0.5) ** 2, math.pi),
    }
    return _worst("gamma_exact", res, 1e-13)


def _gamma_poles(ev):
    res = {z: abs(ev.recip_gamma(z)) for z in (0.0, -1.0, -3.0)}
    return _worst("gamma_poles", res, 1e-13, "max |1/Gamma|")


def _zeta_two(ev):
    err = _rel(ev.zeta(2.0), math.pi**2 / 6)
    return Outcome("zeta_basel", err <= 1e-13, err, 1e-13, "relative error vs pi^2/6")


def _zeta_direct(ev):
    res = {
        3.0: _rel(ev.zeta(3.0), oracles.zeta_direct(3.0, 100_000)),
        1.1: _rel(ev.zeta(1.1), oracles.zeta_direct(1.1, 1_000_000)),
    }
    # s = 3 sum is good to ~1e-15; s = 1.1 is limited by the tail model
    ok = res[3.0] <= 1e-13 and res[1.1] <= 1e-10
    return Outcome("zeta_direct", ok, max(res.values()), 1e-10,
                   f"s=3: {res[3.0]:.2e} (tol 1e-13), s=1.1: {res[1.1]:.2e} (tol 1e-10)")


def _zeta_direct_monotone(ev):
    sums = [oracles.zeta_direct(1.1, n, tail=False) for n in (10, 100, 1000, 10_000)]
    steps = [b - a for a, b in zip(sums, sums[1:])]
    worst = min(steps)
    return Outcome("zeta_direct_monotone", worst > 0, worst, 0.0,
                   "smallest increase of partial sums (must be > 0)")


def _ode_residual(ev):
    res = {}
    for nu in (0.0, 1.0, 2.718):
        for z in (0.5, 1.0, 5.0, 10.0):
            f = lambda w, nu=nu: ev.k(nu, w)  # noqa: E731
            res[(nu, z)] = oracles.operator_residual(f, nu, z, 1e-3, stencil=5)
    return _worst("ode_residual", res, 1e-6, "max relative residual")


def _ode_sanity(ev):
    r = oracles.operator_residual(lambda w: math.exp(-w), 0.0, 1.0, 1e-4)
    return Outcome("ode_sanity", r >= 1e-2, r, 1e-2,
                   "residual of exp(-z) must be large (>= tol)")


def _asymptotic(ev):
    e50 = abs(ev.k(0.0, 50.0) / oracles.asymptotic_k(0.0, 50.0) - 1)
    e10 = abs(ev.k(0.0, 10.0) / oracles.asymptotic_k(0.0, 10.0) - 1)
    ok = e50 <= 0.005 and e10 <= 0.02 and e50 <= e10 / 4
    return Outcome("asymptotic_k", ok, e50, 0.005,
                   f"|ratio-1| at z=50: {e50:.2e}, z=10: {e10:.2e} (tol 0.02), shrink x{e10 / e50:.1f}")


CHECKS: tuple[Check, ...] = (
    Check("gaussian", "trapezoid of exp(-u^2) equals sqrt(pi)", _gaussian),
    Check("convergence_order", "digits roughly double per halving for K_0(1)", _convergence_order),
    Check("reference_tables", "final values of the published convergence tables", _reference_tables),
    Check("k_evenness", "K_nu = K_-nu", _k_evenness),
    Check("cross_product", "I_nu K_nu+1 + I_nu+1 K_nu = 1/x", _cross_product),
    Check("wronskian", "J_nu+1 N_nu - J_nu N_nu+1 = 2/(pi x)", _wronskian),
    Check("hankel_modulus", "|H1_0(x)|^2 decreases in x", _hankel_modulus),
    Check("i_routes", "real and contour routes for I agree", _i_routes),
    Check("i_contour_imag", "contour route for I is real", _i_contour_residue),
    Check("j0_periodic", "periodic rule for J_0 agrees with rotated contour", _j0_periodic),
    Check("series_j", "J_1 against exact power series", _series_j),
    Check("series_i", "I_2 against exact power series", _series_i),
    Check("gamma_recurrence", "Gamma(z+1) = z Gamma(z)", _gamma_recurrence),
    Check("gamma_exact", "Gamma(1) and Gamma(1/2)", _gamma_exact),
    Check("gamma_poles", "1/Gamma vanishes at 0, -1, -3", _gamma_poles),
    Check("zeta_basel", "zeta(2) = pi^2/6", _zeta_two),
    Check("zeta_direct", "zeta against direct summation", _zeta_direct),
    Check("zeta_direct_monotone", "partial sums of the oracle increase", _zeta_direct_monotone),
    Check("ode_residual", "K satisfies the modified Bessel equation", _ode_residual),
    Check("ode_sanity", "ODE residual rejects a non-solution", _ode_sanity),
    Check("asymptotic_k", "K approaches sqrt(pi/2z) exp(-z)", _asymptotic),
)


@dataclass
class Report:
    outcomes: list[Outcome] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(o.passed for o in self.outcomes)


def run_checks(only: list[str] | None = None, k_factor: float = 1.0,
               config: EngineConfig | None = None) -> Report:
    """Run every check (or those whose name contains one of ``only``)."""
    ev = Evaluators.default(config, k_factor)
    selected = [
        c for c in CHECKS if not only or any(sel in c.name for sel in only)
    ]
    if only and not selected:
        raise ValueError(f"no check matches {only!r}; known: {[c.name for c in CHECKS]}")
    report = Report()
    for check in selected:
        try:
            report.outcomes.append(check.run(ev))
        except (ArithmeticError, ValueError) as exc:
            report.outcomes.append(Outcome(check.name, False, math.nan, math.nan, f"error: {exc}"))
    return report
