"""Contravariants of quaternary cubics from invariants of ternary cubics.

For a functional ``l`` pick ``v1, v2, v3`` with ``det(v, v1, v2, v3) = l(v)``,
restrict ``f`` to ``u1 v1 + u2 v2 + u3 v3`` and evaluate the ternary
invariant.  The resulting function of ``l`` is a form of order equal to the
invariant's weight; it is recovered exactly by interpolation on a fixed set
of sample functionals.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Sequence

from .arith import (DUAL, PRIMAL, TERNARY, RatMatrix, SingularMatrixError, SparsePoly,
                    as_rational, determinant, monomial_basis, monomial_value, solve_many,
                    substitute_linear)
from .forms import GradedForm
from .transvection import aronhold_S, aronhold_T

DEFAULT_SEED = 20240611
MAX_ATTEMPTS = 10
ENTRY_RANGE = 20


class InterpolationError(ArithmeticError):
    """No non-singular sample configuration found within the attempt cap."""


@dataclass(frozen=True)
class LinearFunctional:
    coeffs: tuple

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coeffs)
        if len(coeffs) != 4:
            raise ValueError("a functional on K^4 has four coefficients")
        if not any(coeffs):
            raise ValueError("the zero functional has no plane")
        object.__setattr__(self, "coeffs", coeffs)

    def __call__(self, v: Sequence):
        return as_rational(sum(a * b for a, b in zip(self.coeffs, v)))


@dataclass(frozen=True)
class PlaneFrame:
    v1: tuple
    v2: tuple
    v3: tuple

    @property
    def vectors(self) -> tuple[tuple, tuple, tuple]:
        return (self.v1, self.v2, self.v3)

    def phi(self) -> tuple:
        """Coefficients of ``v -> det(v, v1, v2, v3)``."""
        out = []
        for k in range(4):
            e = [int(i == k) for i in range(4)]
            out.append(determinant([e, self.v1, self.v2, self.v3]))
        return tuple(out)


def phi_inverse(l: LinearFunctional | Sequence) -> PlaneFrame:
    """A frame of the kernel of ``l`` whose wedge maps to ``l`` exactly."""
    if not isinstance(l, LinearFunctional):
        l = LinearFunctional(tuple(l))
    c = l.coeffs
    p = next(i for i in range(4) if c[i])
    basis = []
    for k in range(4):
        if k == p:
            continue
        v = [0] * 4
        v[k] = 1
        v[p] = as_rational(Fraction(-c[k]) / c[p])
        basis.append(v)
    image = PlaneFrame(*map(tuple, basis)).phi()
    ratio = Fraction(c[p]) / image[p]
    basis[0] = [as_rational(ratio * x) for x in basis[0]]
    frame = PlaneFrame(*map(tuple, basis))
    if frame.phi() != c:
        raise ArithmeticError("frame does not reproduce the functional")  # cannot happen for exact input
    return frame


def restrict_to_plane(f: SparsePoly, frame: PlaneFrame) -> SparsePoly:
    """``f(u1 v1 + u2 v2 + u3 v3)`` as a ternary form in u1, u2, u3."""
    if f.space != PRIMAL:
        raise ValueError("expected a form in x, y, z, w")
    images = [SparsePoly.linear(TERNARY, [v[j] for v in frame.vectors]) for j in range(4)]
    return substitute_linear(f, images, TERNARY)


@dataclass(frozen=True)
class TernaryInvariant:
    name: str
    evaluate: Callable[[SparsePoly], object]
    degree: int
    weight: int


S_INVARIANT = TernaryInvariant("S", aronhold_S, 4, 4)
T_INVARIANT = TernaryInvariant("T", aronhold_T, 6, 6)


class Interpolator:
    """Sample functionals, their frames and the inverse interpolation matrix for one order.

    Depends only on ``(order, seed)``, never on the form, so it is built once
    and cached.
    """

    def __init__(self, order: int, seed: int = DEFAULT_SEED, max_attempts: int = MAX_ATTEMPTS):
        self.order = order
        self.seed = seed
        self.basis = monomial_basis(4, order)
        rng = random.Random(f"{seed}:{order}")
        for attempt in range(max_attempts):
            points = [self._draw(rng) for _ in self.basis]
            matrix = RatMatrix([[monomial_value(e, p) for e in self.basis] for p in points])
            try:
                inverse_cols = solve_many(matrix, [[int(i == j) for i in range(len(points))]
                                                   for j in range(len(points))])
            except SingularMatrixError:
                continue
            self.attempts = attempt + 1
            break
        else:
            raise InterpolationError(f"no regular sample set of order {order} after {max_attempts} draws")
        self.points = [tuple(p) for p in points]
        self.frames = [phi_inverse(p) for p in points]
        # inverse with one common denominator, rows indexed by monomial
        rows = [list(r) for r in zip(*inverse_cols)]
        den = lcm(*(Fraction(v).denominator for r in rows for v in r))
        self.denominator = den
        self.numerators = [[int(v * den) for v in r] for r in rows]

    @staticmethod
    def _draw(rng: random.Random) -> list[int]:
        while True:
            p = [rng.randint(-ENTRY_RANGE, ENTRY_RANGE) for _ in range(4)]
            if any(p):
                return p

    def interpolate(self, values: Sequence) -> SparsePoly:
        den = lcm(*(Fraction(v).denominator for v in values))
        ints = [int(v * den) for v in values]
        scale = den * self.denominator
        terms = {}
        for e, row in zip(self.basis, self.numerators):
            c = sum(a * b for a, b in zip(row, ints))
            if c:
                terms[e] = as_rational(Fraction(c, scale))
        return SparsePoly(DUAL, terms, _trusted=True)


@lru_cache(maxsize=None)
def interpolator(order: int, seed: int = DEFAULT_SEED) -> Interpolator:
    return Interpolator(order, seed)


def transfer_values(inv: TernaryInvariant, f: SparsePoly, frames) -> list:
    return [inv.evaluate(restrict_to_plane(f, fr)) for fr in frames]


def transfer(inv: TernaryInvariant, f: SparsePoly, seed: int = DEFAULT_SEED) -> GradedForm:
    """Clebsch transfer of ``inv``: a contravariant of degree ``inv.degree`` and order ``inv.weight``."""
    if f.space != PRIMAL or not f.is_homogeneous(3):
        raise ValueError("expected a quaternary cubic in x, y, z, w")
    order = inv.weight
    if f.is_zero():
        return GradedForm(SparsePoly.zero(DUAL), inv.degree, order, inv.weight, "dual")
    interp = interpolator(order, seed)
    values = transfer_values(inv, f, interp.frames)
    poly = interp.interpolate(values)
    return GradedForm(poly, inv.degree, order, inv.weight, "dual")


def clebsch_S(f: SparsePoly, seed: int = DEFAULT_SEED) -> GradedForm:
    return transfer(S_INVARIANT, f, seed)


def clebsch_T(f: SparsePoly, seed: int = DEFAULT_SEED) -> GradedForm:
    return transfer(T_INVARIANT, f, seed)


def dual_surface(f: SparsePoly, seed: int = DEFAULT_SEED) -> GradedForm:
    """``S~(f)^3 - 6 T~(f)^2``; vanishes exactly on planes tangent to ``V(f)``."""
    s = clebsch_S(f, seed)
    t = clebsch_T(f, seed)
    return s ** 3 - (t ** 2) * 6
