"""Command-line front end.

    trapsf eval k --nu 0 --z 0.1
    trapsf table j --nu 1 --z 10 --format csv
    trapsf eval gamma --z-re 1 --z-im 10
    trapsf validate --only wronskian

Exit status: 0 converged / all checks pass, 2 not converged / a check failed,
1 usage or domain error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import asdict, dataclass

from . import specfun
from .quadrature import EngineConfig, QuadratureError
from .validate import run_checks

FUNCTIONS = ("k", "j", "n", "i", "gamma", "zeta")
DEFAULTS = EngineConfig()

EXIT_OK, EXIT_USAGE, EXIT_NOT_CONVERGED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class OutputRecord:
    function: str
    nu: float
    z_re: float
    z_im: float
    value_re: float
    value_im: float
    est_error: float
    mesh_points: int
    halvings: int
    converged: bool


# ---------------------------------------------------------------- formatting


def fmt_machine(x: float) -> str:
    return format(x, ".17g")


def fmt_grouped(x: float) -> str:
    """16 significant digits in groups of five: 2.42706 90247 02016e-05."""
    s = format(x, ".15e")
    mant, exp = s.split("e")
    sign = ""
    if mant[0] == "-":
        sign, mant = "-", mant[1:]
    head, frac = mant.split(".")
    grouped = " ".join(frac[i:i + 5] for i in range(0, len(frac), 5))
    e = int(exp)
    tail = "" if e == 0 else f"e{e:+03d}"
    return f"{sign}{head}.{grouped}{tail}"


def fmt_grouped_complex(z: complex, real: bool) -> str:
    if real:
        return fmt_grouped(z.real)
    im = z.imag
    sep = "-i" if im < 0 or (im == 0 and str(im).startswith("-")) else "+i"
    return f"{fmt_grouped(z.real)}{sep}{fmt_grouped(abs(im))}"


def parse_grouped(s: str) -> complex:
    """Inverse of the human formats, for round-trip checks."""
    s = s.replace(" ", "")
    for sep, sgn in (("+i", 1), ("-i", -1)):
        pos = s.find(sep, 1)
        if pos > 0:
            return complex(float(s[:pos]), sgn * float(s[pos + 2:]))
    return complex(float(s), 0.0)


# ---------------------------------------------------------------- argument handling


def _config(args) -> EngineConfig:
    try:
        return EngineConfig(
            h0=args.h0,
            max_halvings=args.max_halvings,
            truncation_cutoff=args.cutoff,
            convergence_tol=args.tol,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _argument(args) -> complex:
    if args.z is not None and (args.z_re is not None or args.z_im is not None):
        raise UsageError("give either --z or --z-re/--z-im, not both")
    if args.z is not None:
        try:
            return complex(args.z.replace("i", "j"))
        except ValueError:
            raise UsageError(f"malformed number for --z: {args.z!r}") from None
    if args.z_re is None and args.z_im is None:
        raise UsageError("an argument is required: --z or --z-re/--z-im")
    return complex(args.z_re or 0.0, args.z_im or 0.0)


def _accel(args) -> str:
    if args.accel is None:
        return "sinh" if args.function == "zeta" else "none"
    if args.function not in ("i", "zeta") and args.accel != "none":
        raise UsageError("--accel applies to the i and zeta functions only")
    return args.accel


def _settings(args) -> list[tuple[str, object, bool]]:
    """(name, value, differs-from-default) for the output header."""
    accel = _accel(args)
    default_accel = "sinh" if args.function == "zeta" else "none"
    route = args.route if args.function == "i" else None
    rows = [
        ("h0", args.h0, args.h0 != DEFAULTS.h0),
        ("tol", args.tol, args.tol != DEFAULTS.convergence_tol),
        ("max_halvings", args.max_halvings, args.max_halvings != DEFAULTS.max_halvings),
        ("cutoff", args.cutoff, args.cutoff != DEFAULTS.truncation_cutoff),
        ("accel", accel, accel != default_accel),
    ]
    if route is not None:
        rows.append(("route", route, route != "real"))
    return rows


def _evaluate(args) -> tuple[specfun.EvalReport, float, complex]:
    z = _argument(args)
    cfg = _config(args)
    accel = _accel(args)
    nu = args.nu
    fn = args.function
    if args.route != "real" and fn != "i":
        raise UsageError("--route applies to the i function only")
    if fn in ("k", "j", "n", "i"):
        if z.imag != 0:
            raise UsageError(f"{fn}: Bessel argument must be real")
        x = z.real
        if fn == "k":
            rep = specfun.bessel_k(nu, x, cfg)
        elif fn == "j":
            rep = specfun.bessel_j(nu, x, cfg)
        elif fn == "n":
            rep = specfun.bessel_n(nu, x, cfg)
        elif args.route == "contour":
            if accel != "none":
                raise UsageError("--accel is not available with --route contour")
            rep = specfun.bessel_i_contour(nu, x, cfg)
        else:
            rep = specfun.bessel_i(nu, x, cfg, accel=accel)
    elif fn == "gamma":
        nu = 0.0
        rep = specfun.gamma(z, cfg)
    else:
        nu = 0.0
        rep = specfun.zeta(z, cfg, accel=accel)
    return rep, nu, z


def _record(fn, nu, z, rep) -> OutputRecord:
    v = complex(rep.value)
    r = rep.result
    return OutputRecord(fn, nu, z.real, z.imag, v.real, v.imag, r.est_error,
                        r.mesh_points, r.halvings_used, r.converged)


def _header(args, nu, z) -> list[str]:
    if args.function in ("gamma", "zeta"):
        what = f"# {args.function}(z = {z.real!r}{z.imag:+}i)"
    else:
        what = f"# {args.function}(nu = {nu!r}, z = {z.real!r})"
    parts = []
    for name, value, changed in _settings(args):
        parts.append(f"{name}={value}{'*' if changed else ''}")
    return [what, "# settings: " + " ".join(parts) + "   (* = changed from default)"]


def _settings_dict(args) -> dict:
    return {name: value for name, value, _ in _settings(args)}


# ---------------------------------------------------------------- commands


def cmd_eval(args, out) -> int:
    rep, nu, z = _evaluate(args)
    rec = _record(args.function, nu, z, rep)
    real = args.function not in ("gamma", "zeta")
    if args.format == "json":
        json.dump({"settings": _settings_dict(args), "record": asdict(rec)}, out)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        names = list(asdict(rec))
        w.writerow(names)
        w.writerow([_csv_cell(getattr(rec, n)) for n in names])
    else:
        for line in _header(args, nu, z):
            out.write(line + "\n")
        out.write(f"value        {fmt_grouped_complex(complex(rep.value), real)}\n")
        out.write(f"est_error    {rec.est_error:.3e}\n")
        out.write(f"mesh_points  {rec.mesh_points}\n")
        out.write(f"halvings     {rec.halvings}\n")
        out.write(f"converged    {'yes' if rec.converged else 'no'}\n")
    return EXIT_OK if rec.converged else EXIT_NOT_CONVERGED


def _csv_cell(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_machine(v)
    return v


def cmd_table(args, out) -> int:
    rep, nu, z = _evaluate(args)
    real = args.function not in ("gamma", "zeta")
    rows = list(rep.table)
    if args.format == "json":
        doc = {
            "settings": _settings_dict(args),
            "rows": [
                {"inv_h": r.inv_h, "mesh_points": r.mesh_points,
                 "estimate_re": r.estimate.real, "estimate_im": r.estimate.imag}
                for r in rows
            ],
            "record": asdict(_record(args.function, nu, z, rep)),
        }
        json.dump(doc, out)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["inv_h", "mesh_points", "estimate_re", "estimate_im"])
        for r in rows:
            w.writerow([fmt_machine(r.inv_h), r.mesh_points,
                        fmt_machine(r.estimate.real), fmt_machine(r.estimate.imag)])
    else:
        for line in _header(args, nu, z):
            out.write(line + "\n")
        out.write(f"{'1/h':>8}  {'points':>7}  estimate\n")
        for r in rows:
            inv_h = f"{r.inv_h:g}"
            out.write(f"{inv_h:>8}  {r.mesh_points:>7}  {fmt_grouped_complex(r.estimate, real)}\n")
        status = "converged" if rep.converged else "NOT converged"
        out.write(f"# {status} after {rep.result.halvings_used} halvings, "
                  f"est_error {rep.result.est_error:.3e}\n")
    return EXIT_OK if rep.converged else EXIT_NOT_CONVERGED


def cmd_validate(args, out) -> int:
    try:
        report = run_checks(args.only, k_factor=1.0 + args.perturb)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.format == "json":
        json.dump({"passed": report.passed,
                   "checks": [asdict(o) for o in report.outcomes]}, out)
        out.write("\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["name", "passed", "measured", "tolerance", "detail"])
        for o in report.outcomes:
            w.writerow([o.name, _csv_cell(o.passed), fmt_machine(o.measured),
                        fmt_machine(o.tolerance), o.detail])
    else:
        if args.perturb:
            out.write(f"# K perturbed by factor 1 + {args.perturb:g}\n")
        for o in report.outcomes:
            mark = "PASS" if o.passed else "FAIL"
            out.write(f"{mark}  {o.name:<22} measured={o.measured:.3e}  "
                      f"tol={o.tolerance:.1e}  {o.detail}\n")
        n_ok = sum(o.passed for o in report.outcomes)
        out.write(f"{n_ok}/{len(report.outcomes)} checks passed\n")
    return EXIT_OK if report.passed else EXIT_NOT_CONVERGED


# ---------------------------------------------------------------- parser


def _add_function_args(p):
    p.add_argument("function", choices=FUNCTIONS)
    p.add_argument("--nu", type=float, default=0.0, help="order (Bessel functions)")
    p.add_argument("--z", default=None, help="argument; complex allowed, e.g. 1+10i")
    p.add_argument("--z-re", type=float, default=None)
    p.add_argument("--z-im", type=float, default=None)
    p.add_argument("--h0", type=float, default=DEFAULTS.h0)
    p.add_argument("--tol", type=float, default=DEFAULTS.convergence_tol)
    p.add_argument("--max-halvings", type=int, default=DEFAULTS.max_halvings)
    p.add_argument("--cutoff", type=float, default=DEFAULTS.truncation_cutoff)
    p.add_argument("--accel", choices=("none", "sinh", "cubic"), default=None,
                   help="variable change (default: sinh for zeta, none otherwise)")
    p.add_argument("--route", choices=("real", "contour"), default="real",
                   help="integral used for i")
    p.add_argument("--format", choices=("human", "csv", "json"), default="human")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="trapsf", description="Special functions by the trapezoidal rule.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add_function_args(sub.add_parser("eval", help="evaluate one function value"))
    _add_function_args(sub.add_parser("table", help="print the convergence table"))
    v = sub.add_parser("validate", help="run the oracle and identity checks")
    v.add_argument("--only", action="append", default=None, metavar="NAME",
                   help="run checks whose name contains NAME (repeatable)")
    v.add_argument("--format", choices=("human", "csv", "json"), default="human")
    v.add_argument("--perturb", type=float, default=0.0, help=argparse.SUPPRESS)
    return parser


COMMANDS = {"eval": cmd_eval, "table": cmd_table, "validate": cmd_validate}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, specfun.DomainError, QuadratureError, ValueError) as exc:
        print(f"trapsf {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def run(argv) -> tuple[int, str]:
    """Run the CLI in-process and capture standard output."""
    buf = io.StringIO()
    code = main(argv, buf)
    return code, buf.getvalue()


if __name__ == "__main__":
    sys.exit(main())
