"""Salmon's closed forms on Sylvester's pentahedral family.

A surface ``a0 X0^3 + ... + a4 X4^3 = 0, X0 + ... + X4 = 0`` is written in
x, y, z, w by eliminating ``X4 = -x - y - z - w``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import prod

from .arith import PRIMAL, SparsePoly, as_rational, determinant

ELL = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (-1, -1, -1, -1))


class ZeroCoefficientError(ZeroDivisionError):
    """A pentahedral coefficient vanishes where ``1/a_i`` is needed."""


@dataclass(frozen=True)
class PentahedralCoeffs:
    a: tuple

    def __post_init__(self):
        a = tuple(as_rational(v) for v in self.a)
        if len(a) != 5:
            raise ValueError("need five pentahedral coefficients")
        if not any(a):
            raise ValueError("all pentahedral coefficients are zero")
        object.__setattr__(self, "a", a)

    @property
    def sigma(self) -> tuple:
        """Elementary symmetric functions sigma_1 .. sigma_5."""
        return tuple(as_rational(sum(prod(c) for c in combinations(self.a, k))) for k in range(1, 6))


def expand_pentahedral(a: PentahedralCoeffs | tuple) -> SparsePoly:
    if not isinstance(a, PentahedralCoeffs):
        a = PentahedralCoeffs(tuple(a))
    total = SparsePoly.zero(PRIMAL)
    for ai, ell in zip(a.a, ELL):
        if ai:
            total = total + SparsePoly.linear(PRIMAL, ell) ** 3 * ai
    if total.is_zero():
        raise ValueError("pentahedral data gives the zero form")
    return total


@dataclass(frozen=True)
class SalmonInvariants:
    I8: object
    I16: object
    I24: object
    I32: object
    I40: object

    def as_tuple(self) -> tuple:
        return (self.I8, self.I16, self.I24, self.I32, self.I40)


def salmon_invariants(a: PentahedralCoeffs | tuple) -> SalmonInvariants:
    if not isinstance(a, PentahedralCoeffs):
        a = PentahedralCoeffs(tuple(a))
    s1, s2, s3, s4, s5 = a.sigma
    return SalmonInvariants(
        I8=as_rational(s4 ** 2 - 4 * s3 * s5),
        I16=as_rational(s1 * s5 ** 3),
        I24=as_rational(s4 * s5 ** 4),
        I32=as_rational(s2 * s5 ** 6),
        I40=as_rational(s5 ** 8),
    )


def _combine(weights) -> tuple:
    return tuple(as_rational(sum(w * ell[j] for w, ell in zip(weights, ELL))) for j in range(4))


def salmon_linear_covariants(a: PentahedralCoeffs | tuple) -> tuple[tuple, tuple, tuple, tuple]:
    """Coefficient vectors (x, y, z, w) of L11, L19, L27, L43."""
    if not isinstance(a, PentahedralCoeffs):
        a = PentahedralCoeffs(tuple(a))
    if not all(a.a):
        raise ZeroCoefficientError("L19 needs every pentahedral coefficient nonzero")
    s5 = a.sigma[4]
    L11 = _combine([s5 ** 2 * ai for ai in a.a])
    L19 = _combine([s5 ** 4 * Fraction(1) / ai for ai in a.a])
    L27 = _combine([s5 ** 5 * ai ** 2 for ai in a.a])
    L43 = _combine([s5 ** 8 * ai ** 3 for ai in a.a])
    return L11, L19, L27, L43


def random_pentahedral(rng, bound: int = 99) -> PentahedralCoeffs:
    """Nonzero integer coefficients in ``[-bound, bound]`` with ``sigma_5 != 0``."""
    while True:
        a = tuple(rng.randint(1, bound) * rng.choice((-1, 1)) for _ in range(5))
        coeffs = PentahedralCoeffs(a)
        if coeffs.sigma[4]:
            return coeffs


def salmon_I100(a: PentahedralCoeffs | tuple):
    """Determinant of the L11, L19, L27, L43 coefficient rows."""
    return determinant(salmon_linear_covariants(a))


@dataclass
class SampleResult:
    a: tuple
    invariants_match: bool
    covariants_match: bool
    I100_match: bool
    pipeline: tuple
    oracle: tuple

    @property
    def ok(self) -> bool:
        return self.invariants_match and self.covariants_match and self.I100_match


@dataclass
class CrossCheckReport:
    samples: list[SampleResult]

    @property
    def passed(self) -> int:
        return sum(s.ok for s in self.samples)

    @property
    def ok(self) -> bool:
        return self.passed == len(self.samples)

    def to_dict(self) -> dict:
        from .textform import format_rational

        return {
            "passed": self.passed,
            "total": len(self.samples),
            "samples": [
                {
                    "a": [format_rational(v) for v in s.a],
                    "invariants": s.invariants_match,
                    "covariants": s.covariants_match,
                    "I100": s.I100_match,
                    "ok": s.ok,
                }
                for s in self.samples
            ],
        }


def check_sample(a: PentahedralCoeffs, constants=None, seed: int | None = None) -> SampleResult:
    """Run the full pipeline on the expanded surface and compare with Salmon exactly."""
    from .invariants import CONSTANTS, SurfaceComputation
    from .transfer import DEFAULT_SEED

    comp = SurfaceComputation(expand_pentahedral(a), DEFAULT_SEED if seed is None else seed,
                              dict(constants or CONSTANTS))
    inv = comp.invariants()
    rows = comp.linear_covariants().coefficient_rows()
    oracle_inv = salmon_invariants(a).as_tuple()
    oracle_rows = [tuple(r) for r in salmon_linear_covariants(a)]
    I100 = comp.I100()
    return SampleResult(
        a=a.a,
        invariants_match=inv.as_tuple() == oracle_inv,
        covariants_match=[tuple(r) for r in rows] == oracle_rows,
        I100_match=I100 == salmon_I100(a),
        pipeline=inv.as_tuple() + (I100,),
        oracle=oracle_inv + (salmon_I100(a),),
    )


def cross_check(sample_count: int, seed: int, constants=None, extra=()) -> CrossCheckReport:
    """Compare pipeline and Salmon's formulas on seeded random pentahedral surfaces.

    ``extra`` coefficient vectors are checked first; ``constants`` overrides the
    pipeline's normalizing constants (used to confirm that a wrong constant is caught).
    """
    if sample_count < 1:
        raise ValueError("sample_count must be positive")
    rng = random.Random(seed)
    coeffs = [c if isinstance(c, PentahedralCoeffs) else PentahedralCoeffs(tuple(c)) for c in extra]
    coeffs += [random_pentahedral(rng) for _ in range(sample_count)]
    return CrossCheckReport([check_sample(a, constants) for a in coeffs])
