"""Contravariants acting on covariants as differential operators, and back.

``c |- C`` reads the dual polynomial ``c`` as a constant coefficient
operator by ``y_i -> d/dx_i`` (no multinomial normalization) and applies it
to the primal polynomial ``C``.  ``C |- c`` is the mirror image with
``x_i -> d/dy_i``.
"""

from __future__ import annotations

from itertools import permutations

from .arith import PRIMAL, SparsePoly, as_rational, partial_derivative
from .forms import GradedForm


class OrderMismatchError(ValueError):
    pass


def _falling(n: int, k: int) -> int:
    out = 1
    for t in range(n - k + 1, n + 1):
        out *= t
    return out


def apply_operator(op: SparsePoly, target: SparsePoly) -> SparsePoly:
    """Apply ``op`` (read as a polynomial in the partials) to ``target``.

    The two polynomials must have the same arity; the variable spaces may
    differ, the result lives in ``target.space``.
    """
    if op.space.arity != target.space.arity:
        raise ValueError("operator and target have different arity")
    out: dict = {}
    get = out.get
    titems = list(target._terms.items())
    for alpha, a in op._terms.items():
        for beta, b in titems:
            coeff = a * b
            for ai, bi in zip(alpha, beta):
                if ai > bi:
                    break
                if ai:
                    coeff *= _falling(bi, ai)
            else:
                e = tuple(bi - ai for ai, bi in zip(alpha, beta))
                out[e] = get(e, 0) + coeff
    return SparsePoly(target.space, {e: as_rational(c) for e, c in out.items() if c}, _trusted=True)


def apply_contravariant_to_covariant(c: GradedForm, C: GradedForm) -> GradedForm:
    """``c |- C``: a covariant of order ``C.order - c.order`` (an invariant when equal)."""
    if c.space != "dual" or C.space != "primal":
        raise ValueError("expected a contravariant acting on a covariant")
    if c.order > C.order:
        raise OrderMismatchError(
            f"contravariant order {c.order} exceeds covariant order {C.order}; use C |- c")
    poly = apply_operator(c.poly, C.poly)
    return GradedForm(poly, c.degree + C.degree, C.order - c.order, c.weight + C.weight, "primal")


def apply_covariant_to_contravariant(C: GradedForm, c: GradedForm) -> GradedForm:
    """``C |- c``: a contravariant of order ``c.order - C.order`` (an invariant when equal)."""
    if C.space != "primal" or c.space != "dual":
        raise ValueError("expected a covariant acting on a contravariant")
    if C.order > c.order:
        raise OrderMismatchError(
            f"covariant order {C.order} exceeds contravariant order {c.order}; use c |- C")
    poly = apply_operator(C.poly, c.poly)
    space = "dual" if poly.space.name == "dual" else "primal"
    result = GradedForm(poly, C.degree + c.degree, c.order - C.order, C.weight + c.weight, space)
    if result.order == 0:
        # invariants are stored uniformly in the primal space
        return GradedForm.invariant(poly.constant_value(), result.degree, result.weight)
    return result


def pair(a: GradedForm, b: GradedForm) -> GradedForm:
    """``a |- b`` dispatching on which side is dual."""
    if a.space == "dual":
        return apply_contravariant_to_covariant(a, b)
    return apply_covariant_to_contravariant(a, b)


def _det(matrix: list[list[SparsePoly]]) -> SparsePoly:
    n = len(matrix)
    space = matrix[0][0].space
    total = SparsePoly.zero(space)
    for perm in permutations(range(n)):
        inversions = sum(perm[a] > perm[b] for a in range(n) for b in range(a + 1, n))
        term = SparsePoly.constant(space, -1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term = term * matrix[i][j]
            if term.is_zero():
                break
        total = total + term
    return total


def hessian_poly(f: SparsePoly) -> SparsePoly:
    n = f.space.arity
    first = [partial_derivative(f, i) for i in range(n)]
    second = [[partial_derivative(first[i], j) for j in range(n)] for i in range(n)]
    return _det(second)


def hessian(f: SparsePoly) -> GradedForm:
    """Hessian covariant of a quaternary cubic: degree 4, order 4, weight 2."""
    if f.space != PRIMAL or not f.is_homogeneous(3):
        raise ValueError("expected a quaternary cubic in x, y, z, w")
    return GradedForm(hessian_poly(f), 4, 4, 2, "primal")


def form_of(f: SparsePoly) -> GradedForm:
    """The input cubic itself as a covariant of degree 1, order 3, weight 0."""
    return GradedForm(f, 1, 3, 0, "primal")
