"""Transformation-law checks under random coordinate changes.

For each object ``C`` and pair ``(f, M)`` the exponent ``e`` in
``C(M.f) = det(M)^e * M.C(f)`` is recovered from the data, and the suite
passes when one exponent per object is seen across all pairs and it equals
the frozen weight.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arith import PRIMAL, RatMatrix, SparsePoly, act_dual, act_primal, monomial_basis
from .differential import hessian
from .invariants import COVARIANT_WEIGHTS, INVARIANT_WEIGHTS, SurfaceComputation
from .transfer import DEFAULT_SEED, clebsch_T

CONTRAVARIANT_WEIGHTS = {"S~": 4, "T~": 6}
HESSIAN_WEIGHT = 2


def det_exponent(ratio, det) -> int | None:
    """The integer ``e`` with ``det**e == ratio``, or None.  Requires ``|det| > 1``."""
    ratio, det = Fraction(ratio), Fraction(det)
    if abs(det) <= 1:
        raise ValueError("exponent is not determined by a unimodular det")
    if ratio == 0:
        return None
    if abs(ratio) < 1:
        e = det_exponent(1 / ratio, det)
        return None if e is None else -e
    e = 0
    value = Fraction(1)
    while abs(value) < abs(ratio):
        value *= det
        e += 1
    return e if value == ratio else None


def scalar_ratio(a: SparsePoly, b: SparsePoly):
    """``r`` with ``a == r * b``, or None if they are not proportional (or ``b`` is zero)."""
    if b.is_zero():
        return None
    exp, cb = next(iter(b.terms.items()))
    r = Fraction(a.coefficient(exp)) / cb
    return r if a == b.scale(r) else None


def random_cubic(rng: random.Random, bound: int = 5) -> SparsePoly:
    while True:
        f = SparsePoly(PRIMAL, {e: rng.randint(-bound, bound) for e in monomial_basis(4, 3)})
        if not f.is_zero():
            return f


def random_matrix(rng: random.Random, bound: int = 2, n: int = 4) -> RatMatrix:
    """Integer matrix with entries in ``[-bound, bound]`` and ``|det| >= 2``."""
    while True:
        M = RatMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if abs(M.det()) >= 2:
            return M


@dataclass
class EquivarianceReport:
    expected: dict[str, int]
    observed: dict[str, set] = field(default_factory=dict)
    pairs: int = 0

    def record(self, name: str, exponent) -> None:
        self.observed.setdefault(name, set()).add(exponent)

    def status(self, name: str) -> bool:
        return self.observed.get(name) == {self.expected[name]}

    @property
    def ok(self) -> bool:
        return all(self.status(name) for name in self.expected)

    def to_dict(self) -> dict:
        return {
            "pairs": self.pairs,
            "objects": {
                name: {
                    "expected": self.expected[name],
                    "observed": sorted(self.observed.get(name, set()), key=str),
                    "ok": self.status(name),
                }
                for name in self.expected
            },
        }


def equivariance_suite(cubic_count: int = 10, matrix_count: int = 10, seed: int = 1,
                       include_T: bool = True, interp_seed: int = DEFAULT_SEED) -> EquivarianceReport:
    """Check invariants, linear covariants, Hessian, S~ and (optionally) T~ on all pairs."""
    rng = random.Random(seed)
    cubics = [random_cubic(rng) for _ in range(cubic_count)]
    matrices = [random_matrix(rng) for _ in range(matrix_count)]
    expected = {f"I{d}": w for d, w in INVARIANT_WEIGHTS.items()}
    expected.update({f"C{d}": w for d, w in COVARIANT_WEIGHTS.items()})
    expected["H"] = HESSIAN_WEIGHT
    expected["S~"] = CONTRAVARIANT_WEIGHTS["S~"]
    if include_T:
        expected["T~"] = CONTRAVARIANT_WEIGHTS["T~"]
    report = EquivarianceReport(expected)

    for f in cubics:
        base = SurfaceComputation(f, interp_seed)
        base_inv = base.invariants(with_I100=True)
        base_cov = base.linear_covariants().as_tuple()
        base_T = clebsch_T(f, interp_seed) if include_T else None
        for M in matrices:
            det = M.det()
            g = act_primal(M, f)
            moved = SurfaceComputation(g, interp_seed)
            inv = moved.invariants(with_I100=True)
            for name, a, b in zip(("I8", "I16", "I24", "I32", "I40", "I100"),
                                  base_inv.as_tuple() + (base_inv.I100,),
                                  inv.as_tuple() + (inv.I100,)):
                if a == 0:
                    report.record(name, "zero" if b == 0 else "mismatch")
                    continue
                report.record(name, det_exponent(Fraction(b) / Fraction(a), det))
            for d, c0, c1 in zip((11, 19, 27, 43), base_cov, moved.linear_covariants().as_tuple()):
                _record_form(report, f"C{d}", c1.poly, act_primal(M, c0.poly), det)
            _record_form(report, "H", hessian(g).poly, act_primal(M, base.C4_4.poly), det)
            _record_form(report, "S~", moved.C4_0_4.poly, act_dual(M, base.C4_0_4.poly), det)
            if include_T:
                _record_form(report, "T~", clebsch_T(g, interp_seed).poly, act_dual(M, base_T.poly), det)
            report.pairs += 1
    # all-zero observations say nothing; drop them when a real exponent was seen
    for name, seen in report.observed.items():
        if "zero" in seen and len(seen) > 1:
            seen.discard("zero")
    return report


def _record_form(report: EquivarianceReport, name: str, moved: SparsePoly, transported: SparsePoly,
                 det) -> None:
    if transported.is_zero():
        report.record(name, "zero" if moved.is_zero() else "mismatch")
        return
    r = scalar_ratio(moved, transported)
    report.record(name, None if r is None else det_exponent(r, det))
