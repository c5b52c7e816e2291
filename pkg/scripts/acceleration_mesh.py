"""Mesh points needed with and without a variable change, for I_2 and zeta.

    python scripts/acceleration_mesh.py
"""

from trapsf.specfun import bessel_i, zeta

CASES = [("i", 2.0, x) for x in (0.01, 1.0, 10.0, 100.0)] + [("zeta", None, s) for s in (1.1, 2.0, 3.0, 10.0)]


def run(fn, nu, arg, accel):
    if fn == "i":
        return bessel_i(nu, arg, accel=accel)
    return zeta(arg, accel=accel)


def main():
    print(f"{'case':<16}{'none':>8}{'sinh':>8}{'cubic':>8}   max rel spread")
    for fn, nu, arg in CASES:
        reps = {a: run(fn, nu, arg, a) for a in ("none", "sinh", "cubic")}
        ref = reps["sinh"].value
        spread = max(abs(r.value - ref) / abs(ref) for r in reps.values())
        label = f"I_{nu:g}({arg:g})" if fn == "i" else f"zeta({arg:g})"
        cells = "".join(f"{r.result.mesh_points:>7}{'' if r.converged else '*'}"
                        f"{' ' if r.converged else ''}" for r in reps.values())
        print(f"{label:<16}{cells}   {spread:.1e}")
    print("(* = not converged within the halving budget)")


if __name__ == "__main__":
    main()
