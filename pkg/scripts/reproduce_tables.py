"""Recompute every stored convergence table and show the digit agreement.

    python scripts/reproduce_tables.py
    python scripts/reproduce_tables.py --function gamma
"""

import argparse
import math

from trapsf.cli import fmt_grouped_complex
from trapsf.quadrature import EngineConfig
from trapsf.reference import ALL_CASES
from trapsf.specfun import bessel_i, bessel_j, bessel_k, bessel_n, gamma

EVAL = {
    "k": lambda c, cfg: bessel_k(c.nu, c.z, cfg),
    "j": lambda c, cfg: bessel_j(c.nu, c.z, cfg),
    "n": lambda c, cfg: bessel_n(c.nu, c.z, cfg),
    "i": lambda c, cfg: bessel_i(c.nu, c.z, cfg),
    "gamma": lambda c, cfg: gamma(c.z, cfg),
}


def digits(a: complex, b: complex) -> float:
    """Matching significant digits, capped at 16."""
    if a == b:
        return 16.0
    return min(16.0, -math.log10(abs(a - b) / abs(b)))


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--function", choices=sorted(EVAL), default=None)
    args = p.parse_args()

    for case in ALL_CASES:
        if args.function and case.function != args.function:
            continue
        cfg = EngineConfig(convergence_tol=0.0,
                           max_halvings=round(math.log2(2 * case.final_inv_h)))
        rep = EVAL[case.function](case, cfg)
        real = case.function != "gamma"
        label = f"{case.function}(nu={case.nu:g}, z={case.z:g})" if real else f"gamma({case.z:g})"
        print(f"{label}  final mesh {rep.result.mesh_points}"
              f" (stored {case.final_mesh if case.final_mesh else '-'})")
        for inv_h, ref in case.rows:
            got = rep.table.row_at(inv_h).estimate
            print(f"  1/h={inv_h:<4g} {fmt_grouped_complex(got, real):<48}"
                  f" digits {digits(got, ref):5.1f}")
        print()


if __name__ == "__main__":
    main()
