"""Polynomials tagged with their covariant bookkeeping."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .arith import DUAL, PRIMAL, SparsePoly, as_rational

SPACES = {"primal": PRIMAL, "dual": DUAL}


class BookkeepingError(ValueError):
    """Forms combined with inconsistent degree, order, weight or space."""


@dataclass(frozen=True)
class GradedForm:
    """A covariant (primal) or contravariant (dual) value.

    ``degree`` is the degree in the coefficients of the input form, ``order``
    the degree in the variables and ``weight`` the power of the determinant in
    the transformation law.  Order 0 means an invariant.
    """

    poly: SparsePoly
    degree: int
    order: int
    weight: int
    space: str = "primal"

    def __post_init__(self):
        if self.space not in SPACES:
            raise BookkeepingError(f"unknown space {self.space!r}")
        if self.poly.space != SPACES[self.space]:
            raise BookkeepingError(f"polynomial lives in {self.poly.space.name}, tag says {self.space}")
        if not self.poly.is_homogeneous(self.order):
            raise BookkeepingError(f"polynomial is not homogeneous of order {self.order}")

    @classmethod
    def invariant(cls, value, degree: int, weight: int) -> GradedForm:
        return cls(SparsePoly.constant(PRIMAL, value), degree, 0, weight, "primal")

    @property
    def is_zero(self) -> bool:
        return self.poly.is_zero()

    @property
    def is_invariant(self) -> bool:
        return self.order == 0

    @property
    def value(self):
        """The constant of an order-0 form."""
        if self.order:
            raise BookkeepingError("only invariants have a scalar value")
        return self.poly.constant_value()

    def _same_shape(self, other: GradedForm) -> None:
        if (self.degree, self.order, self.space) != (other.degree, other.order, other.space):
            raise BookkeepingError(
                f"cannot add degree/order/space {(self.degree, self.order, self.space)} "
                f"and {(other.degree, other.order, other.space)}")
        if self.weight != other.weight:
            raise BookkeepingError(f"weights {self.weight} and {other.weight} differ")

    def __add__(self, other: GradedForm) -> GradedForm:
        if not isinstance(other, GradedForm):
            return NotImplemented
        self._same_shape(other)
        return GradedForm(self.poly + other.poly, self.degree, self.order, self.weight, self.space)

    def __neg__(self) -> GradedForm:
        return GradedForm(-self.poly, self.degree, self.order, self.weight, self.space)

    def __sub__(self, other: GradedForm) -> GradedForm:
        return self + (-other)

    def __mul__(self, other) -> GradedForm:
        if isinstance(other, (int, Fraction)):
            return GradedForm(self.poly.scale(other), self.degree, self.order, self.weight, self.space)
        if not isinstance(other, GradedForm):
            return NotImplemented
        degree = self.degree + other.degree
        weight = self.weight + other.weight
        if other.order == 0:
            return GradedForm(self.poly.scale(other.value), degree, self.order, weight, self.space)
        if self.order == 0:
            return GradedForm(other.poly.scale(self.value), degree, other.order, weight, other.space)
        if self.space != other.space:
            raise BookkeepingError("cannot multiply a covariant by a contravariant")
        return GradedForm(self.poly * other.poly, degree, self.order + other.order, weight, self.space)

    def __rmul__(self, other) -> GradedForm:
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> GradedForm:
        if n < 1:
            raise ValueError("power must be positive")
        out = self
        for _ in range(n - 1):
            out = out * self
        return out

    def scaled(self, c) -> GradedForm:
        return self * as_rational(c)

    def label(self) -> str:
        if self.order == 0:
            return f"I{self.degree}"
        if self.space == "primal":
            return f"C[{self.degree},{self.order}]"
        return f"C[{self.degree},0,{self.order}]"
