"""Command-line front end.

Exit codes: 0 ok, 1 self-test failure, 2 parse error, 3 invalid form,
4 zero form, 5 interpolation could not find a regular sample set.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import statistics
import sys
import time
from pathlib import Path

from . import __version__
from .arith import PRIMAL, SparsePoly, monomial_basis
from .differential import hessian
from .equivariance import equivariance_suite
from .invariants import (CONSTANTS, INVARIANT_WEIGHTS, COVARIANT_WEIGHTS, SurfaceComputation,
                         ZeroFormError, check_cubic, weighted_projective_equal)
from .pentahedral import (PentahedralCoeffs, ZeroCoefficientError, cross_check, expand_pentahedral,
                          salmon_invariants, salmon_linear_covariants)
from .textform import ParseError, format_poly, format_rational, parse_poly
from .transfer import DEFAULT_SEED, InterpolationError, clebsch_T, interpolator

EXIT_OK = 0
EXIT_SELFTEST = 1
EXIT_PARSE = 2
EXIT_INVALID = 3
EXIT_ZERO = 4
EXIT_SINGULAR = 5


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_form_text(arg: str) -> str:
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    return arg


def load_cubic(arg: str, allow_zero: bool = False) -> SparsePoly:
    text = read_form_text(arg)
    try:
        f = parse_poly(text, PRIMAL)
    except ParseError as exc:
        raise CliError(f"parse error: {exc}", EXIT_PARSE) from exc
    if f.is_zero():
        if allow_zero:
            return f
        raise CliError("zero form: does not define a surface", EXIT_ZERO)
    if not f.is_homogeneous():
        raise CliError("invalid form: not homogeneous", EXIT_INVALID)
    if not f.is_homogeneous(3):
        raise CliError(f"invalid form: expected a cubic, got degree {f.total_degree()}", EXIT_INVALID)
    return f


def _inv_dict(vec) -> dict:
    return {k: format_rational(v) for k, v in vec.as_dict().items()}


def _cov_dict(covs) -> dict:
    rows = covs.coefficient_rows()
    return {f"C{d}": [format_rational(v) for v in row] for d, row in zip((11, 19, 27, 43), rows)}


# ---------------------------------------------------------------- commands


def cmd_invariants(args) -> dict:
    f = load_cubic(args.form)
    start = time.perf_counter()
    vec = SurfaceComputation(f, args.interp_seed).invariants(with_I100=True)
    elapsed = time.perf_counter() - start
    out = {
        "input": format_poly(f),
        "invariants": _inv_dict(vec),
        "degrees": {k: int(k[1:]) for k in ("I8", "I16", "I24", "I32", "I40", "I100")},
        "weights": {f"I{d}": w for d, w in INVARIANT_WEIGHTS.items()},
    }
    if args.timing:
        out["timing_ms"] = round(elapsed * 1000, 3)
    return out


def cmd_covariants(args) -> dict:
    f = load_cubic(args.form)
    comp = SurfaceComputation(f, args.interp_seed)
    return {
        "input": format_poly(f),
        "variables": list(PRIMAL.labels),
        "covariants": _cov_dict(comp.linear_covariants()),
        "weights": {f"C{d}": w for d, w in COVARIANT_WEIGHTS.items()},
    }


def cmd_dual(args) -> dict:
    from .transfer import dual_surface

    f = load_cubic(args.form, allow_zero=True)
    poly = dual_surface(f, args.interp_seed).poly
    return {"input": format_poly(f), "variables": ["y1", "y2", "y3", "y4"], "order": 12,
            "dual": format_poly(poly), "_text": format_poly(poly)}


def cmd_hessian(args) -> dict:
    f = load_cubic(args.form)
    poly = hessian(f).poly
    return {"input": format_poly(f), "hessian": format_poly(poly), "_text": format_poly(poly)}


def cmd_compare(args) -> dict:
    f = load_cubic(args.form_a)
    g = load_cubic(args.form_b)
    va = SurfaceComputation(f, args.interp_seed).invariants()
    vb = SurfaceComputation(g, args.interp_seed).invariants()
    verdict = weighted_projective_equal(va.as_tuple(), vb.as_tuple())
    return {"verdict": verdict.value, "a": _inv_dict(va), "b": _inv_dict(vb),
            "_text": verdict.value}


def cmd_pentahedral(args) -> dict:
    from fractions import Fraction

    try:
        a = PentahedralCoeffs(tuple(Fraction(v) for v in args.coeffs))
        f = expand_pentahedral(a)
    except ValueError as exc:
        raise CliError(f"invalid pentahedral data: {exc}", EXIT_INVALID) from exc
    out = {
        "a": [format_rational(v) for v in a.a],
        "sigma": [format_rational(v) for v in a.sigma],
        "form": format_poly(f),
        "salmon_invariants": {k: format_rational(v) for k, v in
                              zip(("I8", "I16", "I24", "I32", "I40"), salmon_invariants(a).as_tuple())},
    }
    try:
        rows = salmon_linear_covariants(a)
        out["salmon_covariants"] = {f"L{d}": [format_rational(v) for v in r]
                                    for d, r in zip((11, 19, 27, 43), rows)}
    except ZeroCoefficientError:
        out["salmon_covariants"] = None
    return out


def cmd_selftest(args) -> dict:
    constants = dict(CONSTANTS)
    if args.inject_fault:
        constants["I8"] = constants["I8"] * 2
    cc = cross_check(args.samples, args.seed, constants=constants, extra=[(1, 1, 1, 1, 1)])
    eq = equivariance_suite(args.eq_cubics, args.eq_matrices, seed=args.seed, include_T=not args.no_T,
                            interp_seed=args.interp_seed)
    ok = cc.ok and eq.ok
    out = {"ok": ok, "pentahedral": cc.to_dict(), "equivariance": eq.to_dict()}
    out["_text"] = (f"pentahedral cross-check: {cc.passed}/{len(cc.samples)} "
                    f"{'PASS' if cc.ok else 'FAIL'}\n"
                    f"equivariance ({eq.pairs} pairs): {'PASS' if eq.ok else 'FAIL'}\n"
                    f"selftest: {'PASS' if ok else 'FAIL'}")
    out["_exit"] = EXIT_OK if ok else EXIT_SELFTEST
    return out


def bench_coefficient(rng: random.Random, digits: int) -> int:
    """Uniform on ``[-(10^d - 1), -10^(d-1)]`` union ``[10^(d-1), 10^d - 1]``."""
    lo, hi = 10 ** (digits - 1), 10 ** digits - 1
    return rng.randint(lo, hi) * rng.choice((-1, 1))


def bench_surfaces(count: int, digits: int, seed: int) -> list[SparsePoly]:
    rng = random.Random(seed)
    basis = monomial_basis(4, 3)
    return [SparsePoly(PRIMAL, {e: bench_coefficient(rng, digits) for e in basis}) for _ in range(count)]


def cmd_bench(args) -> dict:
    if args.count < 1 or args.coeff_digits < 1:
        raise CliError("count and coeff-digits must be positive", EXIT_INVALID)
    surfaces = bench_surfaces(args.count, args.coeff_digits, args.seed)
    t0 = time.process_time()
    interpolator(4, args.interp_seed)
    interpolator(6, args.interp_seed)
    setup = time.process_time() - t0

    inv_times, full_times = [], []
    digest_inv, digest_full = hashlib.sha256(), hashlib.sha256()
    for f in surfaces:
        t0 = time.process_time()
        vec = SurfaceComputation(f, args.interp_seed).invariants()
        inv_times.append(time.process_time() - t0)
        digest_inv.update(json.dumps(_inv_dict(vec), sort_keys=True).encode())

        t0 = time.process_time()
        comp = SurfaceComputation(f, args.interp_seed)
        vec = comp.invariants()
        s_tilde = comp.C4_0_4
        t_tilde = clebsch_T(f, args.interp_seed)
        dual = s_tilde ** 3 - (t_tilde ** 2) * 6
        full_times.append(time.process_time() - t0)
        digest_full.update(json.dumps(_inv_dict(vec), sort_keys=True).encode())
        digest_full.update(format_poly(dual.poly).encode())

    def ms(x):
        return round(x * 1000, 3)

    out = {
        "count": args.count,
        "coeff_digits": args.coeff_digits,
        "seed": args.seed,
        "setup_ms": ms(setup),
        "invariants": {"total_ms": ms(sum(inv_times)), "median_ms": ms(statistics.median(inv_times))},
        "invariants_contravariants_dual": {"total_ms": ms(sum(full_times)),
                                           "median_ms": ms(statistics.median(full_times))},
        "digest_invariants": digest_inv.hexdigest(),
        "digest_full": digest_full.hexdigest(),
    }
    if args.rows:
        out["rows"] = [{"index": i, "invariants_ms": ms(a), "full_ms": ms(b)}
                       for i, (a, b) in enumerate(zip(inv_times, full_times))]
    return out


# ---------------------------------------------------------------- plumbing


def _text(result: dict) -> str:
    if "_text" in result:
        return result["_text"]
    lines = []
    for key, value in result.items():
        if key.startswith("_"):
            continue
        if isinstance(value, dict):
            lines.append(f"{key}:")
            for k, v in value.items():
                lines.append(f"  {k}: {v}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=1, help="seed for sampling (default 1)")
    common.add_argument("--interp-seed", type=int, default=DEFAULT_SEED,
                        help="seed for the interpolation sample functionals")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json")
    fmt.add_argument("--text", dest="format", action="store_const", const="text")
    common.add_argument("--output", type=Path, help="write the report here instead of stdout")
    common.set_defaults(format="json")

    parser = argparse.ArgumentParser(prog="cubicinv", description="Invariants of cubic surfaces.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def form_cmd(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.add_argument("form", help="cubic in x, y, z, w, or @path to read it from a file")
        p.set_defaults(func=func)
        return p

    p = form_cmd("invariants", cmd_invariants, "I8, I16, I24, I32, I40 and I100")
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte identity)")
    form_cmd("covariants", cmd_covariants, "Salmon's linear covariants C11, C19, C27, C43")
    form_cmd("dual", cmd_dual, "equation of the dual surface in y1..y4")
    form_cmd("hessian", cmd_hessian, "Hessian covariant")

    p = sub.add_parser("compare", parents=[common], help="isomorphy test via invariants")
    p.add_argument("form_a")
    p.add_argument("form_b")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("pentahedral", parents=[common], help="expand pentahedral data, Salmon values")
    p.add_argument("coeffs", nargs=5, metavar="a")
    p.set_defaults(func=cmd_pentahedral)

    p = sub.add_parser("selftest", parents=[common], help="pentahedral cross-check and equivariance")
    p.add_argument("--samples", type=int, default=25)
    p.add_argument("--eq-cubics", type=int, default=2)
    p.add_argument("--eq-matrices", type=int, default=2)
    p.add_argument("--no-T", action="store_true", help="skip the T~ transformation law")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_selftest)

    p = sub.add_parser("bench", parents=[common], help="time random surfaces")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--coeff-digits", type=int, default=2)
    p.add_argument("--rows", action="store_true", help="include per-surface timings")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ZeroFormError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ZERO
    except InterpolationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SINGULAR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    code = result.pop("_exit", EXIT_OK)
    if args.format == "json":
        text = json.dumps({k: v for k, v in result.items() if not k.startswith("_")}, indent=2)
    else:
        text = _text(result)
    if args.output:
        args.output.write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
