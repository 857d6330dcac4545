"""Aronhold invariants of ternary cubics by transvection.

A bracket ``(i j k)`` is the 3x3 determinant of partial derivatives whose rows
are the letters X, Y, Z and whose columns are replicas i, j, k.  Expanded, it
takes one derivative in each of the three replicas, the letters forming a
permutation, signed by that permutation.

Evaluation is interleaved: replicas of ``f`` are multiplied in one at a time
and every bracket is applied as soon as all of its replicas are present.  The
result is identical to applying the brackets to the fully expanded product,
because the brackets commute with multiplication by a factor in replicas they
do not touch.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .arith import TERNARY, SparsePoly, VarSpace, as_rational, replicated_space

_SIGNED_PERMS = tuple(
    (p, 1 if sum(p[a] > p[b] for a in range(3) for b in range(a + 1, 3)) % 2 == 0 else -1)
    for p in permutations(range(3))
)


class ReplicaError(ValueError):
    pass


@dataclass(frozen=True)
class BracketOp:
    """The operator ``(i j k)`` on replicas i, j, k (1-based)."""

    i: int
    j: int
    k: int

    def __post_init__(self):
        if len({self.i, self.j, self.k}) != 3:
            raise ValueError(f"bracket replicas must be distinct, got {self.indices}")
        if min(self.indices) < 1:
            raise ValueError("replica labels are 1-based")

    @property
    def indices(self) -> tuple[int, int, int]:
        return (self.i, self.j, self.k)

    def __str__(self) -> str:
        return f"({self.i} {self.j} {self.k})"


@dataclass(frozen=True)
class TransvectionPlan:
    """A product of ``replicas`` copies of a cubic and a bracket schedule.

    ``schedule`` lists ``(bracket, multiplicity)`` pairs.  The order in which
    brackets are interleaved with the factors is derived deterministically by
    :meth:`steps`.
    """

    replicas: int
    schedule: tuple[tuple[BracketOp, int], ...]
    degree: int
    weight: int

    def __post_init__(self):
        uses = [0] * self.replicas
        for op, mult in self.schedule:
            for r in op.indices:
                if r > self.replicas:
                    raise ValueError(f"bracket {op} refers to a missing replica")
                uses[r - 1] += mult
        object.__setattr__(self, "_uses", tuple(uses))

    def is_complete_for_cubics(self) -> bool:
        """Every replica is differentiated exactly three times, so the result is a constant."""
        return all(u == 3 for u in self._uses)  # type: ignore[attr-defined]

    def steps(self) -> list[tuple[str, object]]:
        """Interleaved schedule: ``("factor", r)`` and ``("bracket", op)`` entries."""
        pending = [op for op, mult in self.schedule for _ in range(mult)]
        out: list[tuple[str, object]] = []
        for r in range(1, self.replicas + 1):
            out.append(("factor", r))
            ready = [op for op in pending if max(op.indices) <= r]
            for op in ready:
                out.append(("bracket", op))
                pending.remove(op)
        return out


S_PLAN = TransvectionPlan(
    replicas=4,
    schedule=((BracketOp(1, 2, 3), 1), (BracketOp(2, 3, 4), 1),
              (BracketOp(3, 4, 1), 1), (BracketOp(4, 1, 2), 1)),
    degree=4,
    weight=4,
)

T_PLAN = TransvectionPlan(
    replicas=6,
    schedule=((BracketOp(1, 2, 3), 1), (BracketOp(1, 2, 4), 1), (BracketOp(2, 3, 5), 1),
              (BracketOp(3, 1, 6), 1), (BracketOp(4, 5, 6), 2)),
    degree=6,
    weight=6,
)


def apply_bracket(op: BracketOp, p: SparsePoly) -> SparsePoly:
    """Apply ``(i j k)`` to a polynomial in a replicated X/Y/Z space."""
    n = p.space.arity
    if n % 3 or max(op.indices) > n // 3:
        raise ReplicaError(f"space {p.space.name} lacks a replica of {op}")
    base = [3 * (r - 1) for r in op.indices]
    # (positions, sign) for each letter permutation
    patterns = [((base[0] + perm[0], base[1] + perm[1], base[2] + perm[2]), sign)
                for perm, sign in _SIGNED_PERMS]
    out: dict = {}
    get = out.get
    for exp, c in p._terms.items():
        for (a, b, d), sign in patterns:
            ka, kb, kd = exp[a], exp[b], exp[d]
            if ka and kb and kd:
                e = list(exp)
                e[a] = ka - 1
                e[b] = kb - 1
                e[d] = kd - 1
                e = tuple(e)
                v = get(e, 0) + sign * c * ka * kb * kd
                if v:
                    out[e] = v
                else:
                    del out[e]
    return SparsePoly(p.space, out, _trusted=True)


def _check_ternary_cubic(f: SparsePoly) -> None:
    if f.space.arity != 3:
        raise ValueError(f"expected a ternary form, got arity {f.space.arity}")
    if not f.is_homogeneous(3):
        raise ValueError("expected a homogeneous cubic")


def replica_factor(f: SparsePoly, replica: int, space: VarSpace) -> SparsePoly:
    """``f(X_r, Y_r, Z_r)`` inside ``space``."""
    off = 3 * (replica - 1)
    n = space.arity
    terms = {}
    for e, c in f._terms.items():
        full = [0] * n
        full[off:off + 3] = e
        terms[tuple(full)] = c
    return SparsePoly(space, terms, _trusted=True)


def _multiply_in_replica(p: SparsePoly, f: SparsePoly, replica: int) -> SparsePoly:
    """``p * f(X_r, Y_r, Z_r)`` where ``p`` does not involve replica ``r`` yet."""
    off = 3 * (replica - 1)
    fitems = list(f._terms.items())
    out = {}
    for e, c in p._terms.items():
        head, tail = e[:off], e[off + 3:]
        for fe, fc in fitems:
            out[head + fe + tail] = c * fc
    return SparsePoly(p.space, out, _trusted=True)


def transvect(plan: TransvectionPlan, f: SparsePoly) -> SparsePoly:
    """Run ``plan`` on ``f`` with interleaved factors; returns the final polynomial."""
    space = replicated_space(plan.replicas)
    current = SparsePoly.constant(space, 1)
    for kind, what in plan.steps():
        if kind == "factor":
            current = _multiply_in_replica(current, f, what)
        else:
            current = apply_bracket(what, current)
        if current.is_zero():
            break
    return current


def _integral(f: SparsePoly) -> tuple[SparsePoly, int]:
    d = f.content_denominator()
    if d == 1:
        return f, 1
    return f.scale(d), d


def evaluate_plan(plan: TransvectionPlan, f: SparsePoly):
    """The constant produced by ``plan`` on the ternary cubic ``f``."""
    _check_ternary_cubic(f)
    if f.is_zero():
        return 0
    g, d = _integral(f)
    value = transvect(plan, g).constant_value()
    return as_rational(Fraction(value, d ** plan.degree))


def aronhold_S(f: SparsePoly):
    """Degree 4, weight 4 invariant ``(123)(234)(341)(412) f1 f2 f3 f4``."""
    return evaluate_plan(S_PLAN, f)


def aronhold_T(f: SparsePoly):
    """Degree 6, weight 6 invariant ``(123)(124)(235)(316)(456)^2 f1 ... f6``."""
    return evaluate_plan(T_PLAN, f)


def discriminant_ternary(f: SparsePoly):
    """``S^3 - 6 T^2``; zero exactly when the plane cubic is singular."""
    return as_rational(aronhold_S(f) ** 3 - 6 * aronhold_T(f) ** 2)


def ternary_cubic(coeffs) -> SparsePoly:
    """Ternary cubic from a mapping ``exponent -> coefficient`` or a text form in u1, u2, u3."""
    if isinstance(coeffs, str):
        from .textform import parse_poly

        f = parse_poly(coeffs, TERNARY)
    else:
        f = SparsePoly(TERNARY, coeffs)
    _check_ternary_cubic(f)
    return f
