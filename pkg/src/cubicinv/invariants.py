"""Clebsch-Salmon invariants, Salmon's linear covariants and I100 of cubic surfaces.

Naming follows ``C[D,p]`` for a covariant of degree D and order p and
``C[D,0,p]`` for a contravariant of degree D and order p.  The chain starts
from ``f``, its Hessian ``C[4,4]`` and the transferred Aronhold invariant
``C[4,0,4] = S~(f)`` and builds everything else with ``|-``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Mapping

from .arith import PRIMAL, RatMatrix, SparsePoly, as_rational
from .differential import form_of, hessian, pair
from .forms import GradedForm
from .transfer import DEFAULT_SEED, clebsch_S

INVARIANT_DEGREES = (8, 16, 24, 32, 40)
COVARIANT_DEGREES = (11, 19, 27, 43)

# det-power under f -> M.f, i.e. 3D/4 for degree D; checked by the equivariance tests
INVARIANT_WEIGHTS = {8: 6, 16: 12, 24: 18, 32: 24, 40: 30, 100: 75}
COVARIANT_WEIGHTS = {11: 8, 19: 14, 27: 20, 43: 32}


def _q(num: int, den: int) -> Fraction:
    return Fraction(num, den)


# Normalizing constants, built from factored literals.
CONSTANTS: dict[str, Fraction] = {
    "I8": _q(1, 2**11 * 3**9),
    "I16": _q(1, 2**30 * 3**22),
    "I24": _q(1, 2**41 * 3**33),
    "I32a": _q(1, 2**60 * 3**44),
    "I32": _q(2, 5),
    "I40_I8I32": _q(-1, 100),
    "I40_I16I24": _q(-1, 50),
    "I40a": _q(-1, 2**72 * 3**53 * 5**2),
    "C11": _q(1, 2**20 * 3**15),
    "C19": _q(1, 2**33 * 3**24 * 5),
    "C19_I8C11": _q(2**32 * 3**24, 1),  # multiplies I8 * C11 (normalized), not I8 * C11a
    "C27a": _q(1, 2**42 * 3**33),
    "C27": _q(1, 200),
    "C43a": _q(1, 2**68 * 3**53),
}


class ZeroFormError(ValueError):
    pass


def check_cubic(f: SparsePoly) -> None:
    if f.space != PRIMAL:
        raise ValueError("expected a form in x, y, z, w")
    if f.is_zero():
        raise ZeroFormError("the zero form defines no surface")
    if not f.is_homogeneous(3):
        raise ValueError("expected a homogeneous cubic")


@dataclass(frozen=True)
class InvariantVector:
    I8: object
    I16: object
    I24: object
    I32: object
    I40: object
    I100: object | None = None

    def as_tuple(self) -> tuple:
        return (self.I8, self.I16, self.I24, self.I32, self.I40)

    def as_dict(self) -> dict:
        out = dict(zip(("I8", "I16", "I24", "I32", "I40"), self.as_tuple()))
        if self.I100 is not None:
            out["I100"] = self.I100
        return out


@dataclass(frozen=True)
class LinearCovariants:
    C11: GradedForm
    C19: GradedForm
    C27: GradedForm
    C43: GradedForm

    def as_tuple(self) -> tuple[GradedForm, ...]:
        return (self.C11, self.C19, self.C27, self.C43)

    def coefficient_rows(self) -> list[tuple]:
        """Coefficients of (x, y, z, w) for C11, C19, C27, C43 in that order."""
        rows = []
        for cov in self.as_tuple():
            rows.append(tuple(cov.poly.coefficient(tuple(int(i == j) for i in range(4)))
                              for j in range(4)))
        return rows


@dataclass
class SurfaceComputation:
    """Lazily evaluated chain of intermediate (contra)covariants for one cubic.

    Intermediate objects are cached, so asking for the invariants and then the
    linear covariants does the expensive transfer only once.
    """

    f: SparsePoly
    seed: int = DEFAULT_SEED
    constants: Mapping[str, Fraction] = field(default_factory=lambda: dict(CONSTANTS))

    def __post_init__(self):
        check_cubic(self.f)
        self._cache: dict[str, GradedForm] = {}

    def _get(self, name: str, build) -> GradedForm:
        if name not in self._cache:
            self._cache[name] = build()
        return self._cache[name]

    # base objects
    @property
    def f_form(self) -> GradedForm:
        return self._get("f", lambda: form_of(self.f))

    @property
    def C4_0_4(self) -> GradedForm:
        return self._get("C4_0_4", lambda: clebsch_S(self.f, self.seed))

    @property
    def C4_4(self) -> GradedForm:
        return self._get("C4_4", lambda: hessian(self.f))

    # derived chain
    @property
    def C6_2(self) -> GradedForm:
        return self._get("C6_2", lambda: pair(self.C4_0_4, self.f_form ** 2))

    @property
    def C9_3(self) -> GradedForm:
        return self._get("C9_3", lambda: pair(self.C4_0_4, self.f_form * self.C4_4))

    @property
    def C10_0_2(self) -> GradedForm:
        return self._get("C10_0_2", lambda: pair(self.C6_2, self.C4_0_4))

    @property
    def C11_1a(self) -> GradedForm:
        return self._get("C11_1a", lambda: pair(self.C10_0_2, self.f_form))

    @property
    def C13_0_1(self) -> GradedForm:
        return self._get("C13_0_1", lambda: pair(self.C9_3, self.C4_0_4))

    @property
    def C14_2(self) -> GradedForm:
        return self._get("C14_2", lambda: pair(self.C10_0_2, self.C4_4))

    @property
    def C14_2a(self) -> GradedForm:
        return self._get("C14_2a", lambda: pair(self.C13_0_1, self.f_form))

    @property
    def C19_1a(self) -> GradedForm:
        return self._get("C19_1a", lambda: pair(self.C13_0_1, self.C6_2))

    # invariants
    def _inv(self, name: str, build) -> GradedForm:
        return self._get(name, build)

    @property
    def I8(self) -> GradedForm:
        k = self.constants
        return self._inv("I8", lambda: pair(self.C4_0_4, self.C4_4) * k["I8"])

    @property
    def I16(self) -> GradedForm:
        k = self.constants
        return self._inv("I16", lambda: pair(self.C6_2, self.C10_0_2) * k["I16"])

    @property
    def I24(self) -> GradedForm:
        k = self.constants
        return self._inv("I24", lambda: pair(self.C10_0_2, self.C14_2) * k["I24"])

    @property
    def I32a(self) -> GradedForm:
        return self._inv("I32a", lambda: pair(self.C10_0_2, self.C11_1a ** 2))

    @property
    def I32(self) -> GradedForm:
        k = self.constants
        return self._inv("I32", lambda: (self.I16 ** 2 - self.I32a * k["I32a"]) * k["I32"])

    @property
    def I40a(self) -> GradedForm:
        return self._inv("I40a", lambda: pair(self.C4_0_4, self.C11_1a ** 2 * self.C14_2))

    @property
    def I40(self) -> GradedForm:
        k = self.constants
        return self._inv("I40", lambda: (self.I8 * self.I32) * k["I40_I8I32"]
                         + (self.I16 * self.I24) * k["I40_I16I24"]
                         + self.I40a * k["I40a"])

    # linear covariants
    @property
    def C11_1(self) -> GradedForm:
        return self._get("C11_1", lambda: self.C11_1a * self.constants["C11"])

    @property
    def C19_1(self) -> GradedForm:
        k = self.constants
        return self._get("C19_1", lambda: (self.C19_1a + self.I8 * self.C11_1 * k["C19_I8C11"])
                         * k["C19"])

    @property
    def C27_1a(self) -> GradedForm:
        return self._get("C27_1a", lambda: pair(self.C13_0_1, self.C14_2a) * self.constants["C27a"])

    @property
    def C27_1(self) -> GradedForm:
        k = self.constants

        def build():
            I8, C11, C19 = self.I8, self.C11_1, self.C19_1
            inner = self.C27_1a - (I8 ** 2 * C11) * 2 - (I8 * C19) * 10
            return self.I16 * C11 + inner * k["C27"]

        return self._get("C27_1", build)

    @property
    def C43_1a(self) -> GradedForm:
        def build():
            c = self.C13_0_1
            return pair(c, pair(c, pair(c, self.C4_4))) * self.constants["C43a"]

        return self._get("C43_1a", build)

    @property
    def C43_1(self) -> GradedForm:
        def build():
            I8, I16, I24 = self.I8, self.I16, self.I24
            C11, C19, C27 = self.C11_1, self.C19_1, self.C27_1
            q = Fraction
            return (self.C43_1a * q(-1, 1000)
                    - (I8 ** 2 * C27) * q(1, 200)
                    + I16 * C27
                    + (I8 ** 3 * C19) * q(1, 1000)
                    - (I8 * I16 * C19) * q(1, 10)
                    - I24 * C19
                    + (I8 ** 2 * I16 * C11) * q(1, 200)
                    + (I8 * I24 * C11) * q(3, 20))

        return self._get("C43_1", build)

    # summaries
    def invariants(self, with_I100: bool = False) -> InvariantVector:
        vals = [as_rational(inv.value) for inv in (self.I8, self.I16, self.I24, self.I32, self.I40)]
        return InvariantVector(*vals, I100=self.I100() if with_I100 else None)

    def linear_covariants(self) -> LinearCovariants:
        return LinearCovariants(self.C11_1, self.C19_1, self.C27_1, self.C43_1)

    def I100(self):
        return RatMatrix(self.linear_covariants().coefficient_rows()).det()


def clebsch_salmon_invariants(f: SparsePoly, seed: int = DEFAULT_SEED) -> InvariantVector:
    """(I8, I16, I24, I32, I40) of the cubic surface ``f``."""
    return SurfaceComputation(f, seed).invariants()


def all_invariants(f: SparsePoly, seed: int = DEFAULT_SEED) -> InvariantVector:
    """The five Clebsch-Salmon invariants together with I100."""
    return SurfaceComputation(f, seed).invariants(with_I100=True)


def linear_covariants(f: SparsePoly, seed: int = DEFAULT_SEED) -> LinearCovariants:
    return SurfaceComputation(f, seed).linear_covariants()


def invariant_I100(f: SparsePoly, seed: int = DEFAULT_SEED):
    """Determinant of the coefficient matrix with rows C11, C19, C27, C43 and columns x, y, z, w."""
    return SurfaceComputation(f, seed).I100()


def has_automorphism_certificate(f: SparsePoly, seed: int = DEFAULT_SEED) -> bool:
    """True iff I100 vanishes; for smooth ``f`` this means Eckardt points exist.

    Smoothness is the caller's responsibility and is not checked.
    """
    return invariant_I100(f, seed) == 0


# ---------------------------------------------------------------- isomorphy


class Verdict(str, enum.Enum):
    EQUIVALENT = "equivalent"
    NOT_EQUIVALENT = "not-equivalent"
    INDETERMINATE = "indeterminate"


# weights of (I8, ..., I40) after dividing the degrees by 8
REDUCED_WEIGHTS = (1, 2, 3, 4, 5)


def _bezout(weights: list[int]) -> tuple[int, list[int]]:
    """``g = gcd(weights)`` and integers ``c`` with ``sum(c_i * w_i) = g``."""
    g, coeffs = weights[0], [1] + [0] * (len(weights) - 1)
    for idx in range(1, len(weights)):
        # extended Euclid on (g, w)
        old_r, r = g, weights[idx]
        old_s, s = 1, 0
        old_t, t = 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        coeffs = [c * old_s for c in coeffs]
        coeffs[idx] = old_t
        g = old_r
    return g, coeffs


def _rpow(x, n: int):
    return as_rational(Fraction(x) ** n)


def weighted_projective_equal(u: tuple, v: tuple, weights: tuple = REDUCED_WEIGHTS) -> Verdict:
    """Is there ``mu != 0`` over the algebraic closure with ``v_k = mu^{w_k} u_k`` for all k?

    With ``K`` the support and ``g = gcd(w_k, k in K)``, any such ``mu`` has
    ``mu^g`` forced to a Bezout product of the ratios, so the test is exact.
    Two all-zero vectors carry no information and give ``INDETERMINATE``.
    """
    if len(u) != len(v) or len(u) != len(weights):
        raise ValueError("vectors and weights must have equal length")
    support = [k for k in range(len(u)) if u[k] != 0]
    if support != [k for k in range(len(v)) if v[k] != 0]:
        return Verdict.NOT_EQUIVALENT
    if not support:
        return Verdict.INDETERMINATE
    ratios = {k: Fraction(v[k]) / Fraction(u[k]) for k in support}
    if u[0] != 0:
        # weight-1 coordinate forces mu directly
        mu = ratios[0]
        ok = all(ratios[k] == mu ** weights[k] for k in support)
        return Verdict.EQUIVALENT if ok else Verdict.NOT_EQUIVALENT
    ws = [weights[k] for k in support]
    g, coeffs = _bezout(ws)
    nu = Fraction(1)  # candidate for mu^g
    for k, c in zip(support, coeffs):
        nu *= ratios[k] ** c
    ok = all(ratios[k] == nu ** (weights[k] // g) for k in support)
    return Verdict.EQUIVALENT if ok else Verdict.NOT_EQUIVALENT


def equivalent_over_closure(f: SparsePoly, g: SparsePoly, seed: int = DEFAULT_SEED) -> Verdict:
    """Compare the surfaces ``V(f)`` and ``V(g)`` through their Clebsch-Salmon invariants.

    The verdict is only meaningful for stable surfaces; stability is not checked.
    """
    check_cubic(f)
    check_cubic(g)
    return weighted_projective_equal(clebsch_salmon_invariants(f, seed).as_tuple(),
                                     clebsch_salmon_invariants(g, seed).as_tuple())


def lcm_power_proportional(u: tuple, v: tuple, weights: tuple = REDUCED_WEIGHTS) -> bool:
    """Necessary condition: ``(v_k/u_k)^(L/w_k)`` agree for L the lcm of the supported weights."""
    support = [k for k in range(len(u)) if u[k] != 0]
    if support != [k for k in range(len(v)) if v[k] != 0]:
        return False
    if not support:
        return True
    L = 1
    for k in support:
        L = L * weights[k] // gcd(L, weights[k])
    powers = {(Fraction(v[k]) / Fraction(u[k])) ** (L // weights[k]) for k in support}
    return len(powers) == 1
