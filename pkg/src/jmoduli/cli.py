"""Command line front end.

Four commands over a defining form f:

    jmoduli check  "x0^3 + x1^3 + x2^3"
    jmoduli moduli "x0^3 + x1^3 + x2^3"
    jmoduli deform "x0^4 + ... + x3^4" "x0^2*x1^2*x2^2*x3^2"
    jmoduli dgla   "x0^3 + x1^3 + x2^3" --degree 1 --weight=-3

check validates the hypotheses (homogeneous, nonsingular, nu = nvars),
moduli reports the graded dimensions and basis data, deform compares
the deformed algebra against the graded one, and dgla reports one
(degree, weight) spot of the first-order cohomology.

Exit codes: 0 success, 1 a mathematical hypothesis failed, 2 parse or
usage error, 3 compute budget exceeded.  --json switches the report to
a JSON document on stdout; everything else goes to stderr.  Output for
a fixed input is deterministic apart from the timing_ms field.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .extended import (
    build_extended,
    build_extended_deformed,
    to_json_dict,
    verify_dimension_equality,
)
from .dgla import cohomology_report
from .groebner import BudgetExceeded
from .jacobian import (
    SingularDeformationError,
    SingularInputError,
    deformed_subalgebra,
    graded_quotient,
    is_nonsingular,
    weight_of_or_none,
)
from .polys import (
    ParseError,
    Polynomial,
    RingContext,
    parse_polynomial,
    render_polynomial,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


class _Budget:
    """Coarse wall-clock budget, checked between pipeline stages."""

    def __init__(self, seconds: float) -> None:
        self.seconds = seconds
        self.start = time.perf_counter()

    def check(self, stage: str) -> None:
        if self.seconds and time.perf_counter() - self.start > self.seconds:
            raise BudgetExceeded(
                f"wall clock budget of {self.seconds:g}s exceeded at {stage}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmoduli",
        description="Jacobian rings of Calabi-Yau hypersurfaces: "
                    "dimensions, deformations, and first-order cohomology.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("f", help="defining polynomial, e.g. 'x0^3 + x1^3 + x2^3'")
        p.add_argument("--nvars", type=int, default=None,
                       help="number of variables (default: inferred from f)")
        p.add_argument("--json", action="store_true",
                       help="emit a JSON report on stdout")
        p.add_argument("--max-pairs", type=int, default=10**6,
                       help="Buchberger S-pair budget (default 1000000)")
        p.add_argument("--timeout-s", type=float, default=600.0,
                       help="wall clock budget in seconds, 0 disables "
                            "(default 600)")

    common(sub.add_parser("check", help="validate the hypotheses on f"))
    common(sub.add_parser("moduli", help="graded dimensions and bases"))

    deform = sub.add_parser("deform", help="deformed algebra for f+g")
    common(deform)
    deform.add_argument("g", nargs="?", default="",
                        help="deformation polynomial (empty means zero)")
    deform.add_argument("--g-file", default=None,
                        help="read g from a file instead")

    dgla = sub.add_parser("dgla", help="first-order cohomology at one spot")
    common(dgla)
    dgla.add_argument("--degree", type=int, required=True,
                      help="homological degree of the piece")
    dgla.add_argument("--weight", type=int, required=True,
                      help="weight of the piece (use --weight=-3 for "
                           "negative values)")
    return parser


def _parse_f(args) -> tuple[Polynomial, RingContext]:
    f = parse_polynomial(args.f, args.nvars)
    if f.is_zero():
        raise ParseError("f must be nonzero", 0)
    nu = weight_of_or_none(f)
    if nu is None:
        raise SingularInputError("f is not homogeneous")
    return f, RingContext(f.nvars, nu)


def _emit(args, report: dict, lines: list, warning: "str | None") -> None:
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        for line in lines:
            print(line)


def _report(command: str, f: Polynomial, ctx: "RingContext | None",
            g: "Polynomial | None", result: dict, started: float) -> dict:
    return {
        "command": command,
        "input": {
            "f": render_polynomial(f),
            "g": render_polynomial(g) if g is not None else None,
            "nvars": f.nvars,
            "nu": ctx.nu if ctx is not None else None,
        },
        "result": result,
        "timing_ms": int(round((time.perf_counter() - started) * 1000)),
        "version": __version__,
    }


def cmd_check(args) -> int:
    started = time.perf_counter()
    budget = _Budget(args.timeout_s)
    f = parse_polynomial(args.f, args.nvars)
    if f.is_zero():
        raise ParseError("f must be nonzero", 0)
    nu = weight_of_or_none(f)
    homogeneous = nu is not None
    calabi_yau = homogeneous and nu == f.nvars
    nonsingular = False
    if homogeneous:
        budget.check("parse")
        ctx = RingContext(f.nvars, nu)
        nonsingular = is_nonsingular(f, ctx, max_pairs=args.max_pairs)
    passed = homogeneous and calabi_yau and nonsingular
    result = {
        "homogeneous": homogeneous,
        "nu": nu,
        "nvars": f.nvars,
        "calabi_yau": calabi_yau,
        "nonsingular": nonsingular,
        "pass": passed,
    }
    ctx_or_none = RingContext(f.nvars, nu) if homogeneous else None
    report = _report("check", f, ctx_or_none, None, result, started)
    lines = [
        f"f = {render_polynomial(f)}  (nvars {f.nvars})",
        f"homogeneous:  {'yes' if homogeneous else 'no'}"
        + (f"  (weight {nu})" if homogeneous else ""),
        f"calabi-yau:   {'yes' if calabi_yau else 'no (needs weight = nvars)'}",
        f"nonsingular:  {'yes' if nonsingular else 'no'}",
        f"verdict:      {'pass' if passed else 'fail'}",
    ]
    _emit(args, report, lines, None)
    return EXIT_OK if passed else EXIT_MATH


def cmd_moduli(args) -> int:
    started = time.perf_counter()
    budget = _Budget(args.timeout_s)
    f, ctx = _parse_f(args)
    budget.check("parse")
    data = graded_quotient(f, ctx, max_pairs=args.max_pairs)
    budget.check("groebner")
    alg = build_extended(f, ctx, max_pairs=args.max_pairs)
    budget.check("extended algebra")
    n = ctx.nvars - 1
    bases = []
    for k in range(n):
        monos = data.primitive_basis(k, ctx.nu)
        bases.append([k, [render_polynomial(Polynomial.monomial(m))
                          for m in monos]])
    result = {
        "hilbert": list(data.hilbert),
        "r_dims": list(data.r_dims),
        "primitive_bases": bases,
        "dim_extended": alg.dim,
        "grading": list(alg.grading),
    }
    report = _report("moduli", f, ctx, None, result, started)
    lines = [
        f"f = {render_polynomial(f)}  (nvars {ctx.nvars}, nu {ctx.nu})",
        f"hilbert:      {list(data.hilbert)}",
        f"r_dims:       {list(data.r_dims)}",
        f"dim R~:       {alg.dim}",
        f"grading:      {list(alg.grading)}",
    ]
    for k, basis in bases:
        lines.append(f"R^{k} basis:    {', '.join(basis)}")
    _emit(args, report, lines, None)
    return EXIT_OK


def cmd_deform(args) -> int:
    started = time.perf_counter()
    budget = _Budget(args.timeout_s)
    f, ctx = _parse_f(args)
    if args.g_file is not None and args.g:
        raise ParseError("pass g inline or with --g-file, not both", 0)
    g_text = args.g
    if args.g_file is not None:
        with open(args.g_file, "r", encoding="utf-8") as handle:
            g_text = handle.read()
    g_text = g_text.strip()
    g = (Polynomial.zero(ctx.nvars) if not g_text
         else parse_polynomial(g_text, ctx.nvars))
    budget.check("parse")
    data = deformed_subalgebra(f, g, ctx, max_pairs=args.max_pairs)
    budget.check("closure")
    alg = build_extended_deformed(f, g, ctx, max_pairs=args.max_pairs)
    budget.check("products")
    comparison = verify_dimension_equality(f, g, ctx, max_pairs=args.max_pairs)
    dump = to_json_dict(alg)
    result = {
        "dim_extended": comparison["dim_extended"],
        "dim_extended_deformed": comparison["dim_deformed"],
        "equal": comparison["equal"],
        "stabilized_at": data.stabilized_at,
        "basis": dump["basis"],
        "products": dump["products"],
    }
    warning = None
    if not comparison["equal"]:
        warning = (
            f"dim R~_(f+g) = {comparison['dim_deformed']} differs from "
            f"dim R~ = {comparison['dim_extended']}; the deformation "
            f"direction is not transverse (g may be exact in the Jacobian "
            f"ideal, or of weight 2*nu or higher)")
        result["warning"] = warning
    report = _report("deform", f, ctx, g, result, started)
    lines = [
        f"f = {render_polynomial(f)}  (nvars {ctx.nvars}, nu {ctx.nu})",
        f"g = {render_polynomial(g)}",
        f"dim R~:        {comparison['dim_extended']}",
        f"dim R~_(f+g):  {comparison['dim_deformed']}",
        f"verdict:       {'equal' if comparison['equal'] else 'NOT equal'}",
        f"basis:         {', '.join(dump['basis'])}",
    ]
    _emit(args, report, lines, warning)
    return EXIT_OK


def cmd_dgla(args) -> int:
    started = time.perf_counter()
    budget = _Budget(args.timeout_s)
    f, ctx = _parse_f(args)
    budget.check("parse")
    spot = cohomology_report(f, args.degree, args.weight)
    budget.check("cohomology")
    result = {
        "degree": args.degree,
        "weight": args.weight,
        "dim_piece": spot["dim_piece"],
        "dim_ker": spot["dim_ker"],
        "dim_im_in": spot["dim_im_in"],
        "h_dim": spot["h_dim"],
    }
    crosscheck_ok = True
    if args.degree == 1:
        data = graded_quotient(f, ctx, max_pairs=args.max_pairs)
        idx = args.weight + ctx.nu
        expected = data.hilbert[idx] if 0 <= idx < len(data.hilbert) else 0
        crosscheck_ok = spot["h_dim"] == expected
        result["hilbert_value"] = expected
        result["crosscheck_pass"] = crosscheck_ok
    report = _report("dgla", f, ctx, None, result, started)
    lines = [
        f"f = {render_polynomial(f)}  (nvars {ctx.nvars}, nu {ctx.nu})",
        f"piece L^({args.degree},{args.weight}):  dim {spot['dim_piece']}",
        f"kernel:        {spot['dim_ker']}",
        f"image in:      {spot['dim_im_in']}",
        f"H^({args.degree},{args.weight}):       {spot['h_dim']}",
    ]
    if args.degree == 1:
        lines.append(
            f"hilbert check: {'pass' if crosscheck_ok else 'FAIL'}"
            f" (expected {result['hilbert_value']})")
    _emit(args, report, lines, None)
    return EXIT_OK if crosscheck_ok else EXIT_MATH


_COMMANDS = {
    "check": cmd_check,
    "moduli": cmd_moduli,
    "deform": cmd_deform,
    "dgla": cmd_dgla,
}


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (SingularInputError, SingularDeformationError) as exc:
        print(f"hypothesis failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
