"""Exact rational polynomials and matrices.

Scalars are Python ``int`` or :class:`fractions.Fraction`; both are exact and
mix freely, so a coefficient that happens to be integral is never forced into
a ``Fraction``.  Polynomials are sparse maps from exponent tuples to nonzero
coefficients, tied to a :class:`VarSpace` so that primal, dual, ternary and
replicated variables can never be confused.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement
from math import gcd, lcm
from operator import add
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Sequence

BigRational = Rational  # int or Fraction


class SpaceMismatchError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


class DimensionError(ValueError):
    pass


def as_rational(value) -> Fraction | int:
    """Coerce ``value`` to an exact scalar, collapsing integral fractions."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    if isinstance(value, (str, Rational)):
        value = Fraction(value)
        return value.numerator if value.denominator == 1 else value
    raise TypeError(f"cannot use {type(value).__name__} as an exact scalar")


@dataclass(frozen=True)
class VarSpace:
    """A named, ordered set of variables.

    Two spaces are equal only if name and labels agree, so ``x`` in the primal
    space and ``y1`` in the dual space never meet in one polynomial.
    """

    name: str
    labels: tuple[str, ...]

    @property
    def arity(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)


PRIMAL = VarSpace("primal", ("x", "y", "z", "w"))
DUAL = VarSpace("dual", ("y1", "y2", "y3", "y4"))
TERNARY = VarSpace("ternary", ("u1", "u2", "u3"))


def replicated_space(replicas: int) -> VarSpace:
    """Space with variables X_i, Y_i, Z_i for i = 1..replicas.

    Variable index of letter ``a`` (0, 1, 2 for X, Y, Z) in replica ``i``
    (1-based) is ``3*(i-1) + a``.
    """
    labels = tuple(f"{c}{i}" for i in range(1, replicas + 1) for c in "XYZ")
    return VarSpace(f"replicated{replicas}", labels)


def _grlex_key(exp: tuple[int, ...]):
    return (sum(exp), exp)


class SparsePoly:
    """Immutable sparse polynomial over the rationals.

    ``terms`` maps exponent tuples of length ``space.arity`` to nonzero exact
    coefficients.  Iteration order of :meth:`items` is descending graded-lex,
    which is also the serialization order.
    """

    __slots__ = ("space", "_terms", "_hash")

    def __init__(self, space: VarSpace, terms: Mapping[tuple[int, ...], object] | None = None,
                 *, _trusted: bool = False):
        self.space = space
        if _trusted:
            self._terms = terms  # type: ignore[assignment]
        else:
            clean: dict[tuple[int, ...], Fraction | int] = {}
            n = space.arity
            for exp, c in (terms or {}).items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != n or any(e < 0 for e in exp):
                    raise DimensionError(f"bad exponent vector {exp} for space {space.name}")
                c = as_rational(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
            self._terms = clean
        self._hash = None

    # construction helpers
    @classmethod
    def zero(cls, space: VarSpace) -> SparsePoly:
        return cls(space, {}, _trusted=True)

    @classmethod
    def constant(cls, space: VarSpace, c) -> SparsePoly:
        c = as_rational(c)
        return cls(space, {(0,) * space.arity: c} if c else {}, _trusted=True)

    @classmethod
    def var(cls, space: VarSpace, index: int | str) -> SparsePoly:
        if isinstance(index, str):
            index = space.index(index)
        exp = [0] * space.arity
        exp[index] = 1
        return cls(space, {tuple(exp): 1}, _trusted=True)

    @classmethod
    def linear(cls, space: VarSpace, coeffs: Sequence) -> SparsePoly:
        if len(coeffs) != space.arity:
            raise DimensionError("coefficient count does not match arity")
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_rational(c)
            if c:
                exp = [0] * space.arity
                exp[i] = 1
                terms[tuple(exp)] = c
        return cls(space, terms, _trusted=True)

    # basic protocol
    @property
    def terms(self) -> dict[tuple[int, ...], Fraction | int]:
        return dict(self._terms)

    def items(self) -> list[tuple[tuple[int, ...], Fraction | int]]:
        return sorted(self._terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    def coefficient(self, exp: Sequence[int]):
        return self._terms.get(tuple(exp), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self.space == other.space and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == SparsePoly.constant(self.space, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.space, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        from .textform import format_poly

        return f"SparsePoly({self.space.name}: {format_poly(self)})"

    def __str__(self) -> str:
        from .textform import format_poly

        return format_poly(self)

    # degree queries
    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {sum(e) for e in self._terms}

    def total_degree(self) -> int:
        return max(self.degrees(), default=-1)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def constant_value(self):
        """The value of a constant polynomial; raises if it is not constant."""
        if not self._terms:
            return 0
        if set(self._terms) != {(0,) * self.space.arity}:
            raise ValueError("polynomial is not constant")
        return self._terms[(0,) * self.space.arity]

    def content_denominator(self) -> int:
        """Least common multiple of coefficient denominators."""
        return reduce(lcm, (Fraction(c).denominator for c in self._terms.values()), 1)

    # arithmetic
    def _check(self, other: SparsePoly) -> None:
        if self.space != other.space:
            raise SpaceMismatchError(f"{self.space.name} vs {other.space.name}")

    def __add__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.space, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_add(self, other)

    __radd__ = __add__

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.space, {e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            other = SparsePoly.constant(self.space, other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_add(self, -other)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> SparsePoly:
        if n < 0:
            raise ValueError("negative power")
        result = SparsePoly.constant(self.space, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> SparsePoly:
        c = as_rational(c)
        if not c:
            return SparsePoly.zero(self.space)
        return SparsePoly(self.space, {e: as_rational(v * c) for e, v in self._terms.items()},
                          _trusted=True)

    def diff(self, var_index: int) -> SparsePoly:
        return partial_derivative(self, var_index)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return evaluate(self, point)


def poly_add(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    p._check(q)
    if len(p._terms) < len(q._terms):
        p, q = q, p
    out = dict(p._terms)
    for e, c in q._terms.items():
        v = out.get(e, 0) + c
        if v:
            out[e] = v
        else:
            out.pop(e, None)
    return SparsePoly(p.space, out, _trusted=True)


def poly_mul(p: SparsePoly, q: SparsePoly) -> SparsePoly:
    p._check(q)
    out: dict[tuple[int, ...], Fraction | int] = {}
    get = out.get
    qitems = list(q._terms.items())
    for e1, c1 in p._terms.items():
        for e2, c2 in qitems:
            e = tuple(map(add, e1, e2))
            out[e] = get(e, 0) + c1 * c2
    return SparsePoly(p.space, {e: c for e, c in out.items() if c}, _trusted=True)


def partial_derivative(p: SparsePoly, var_index: int) -> SparsePoly:
    if not 0 <= var_index < p.space.arity:
        raise IndexError(f"variable index {var_index} out of range for {p.space.name}")
    out = {}
    for e, c in p._terms.items():
        k = e[var_index]
        if k:
            ne = e[:var_index] + (k - 1,) + e[var_index + 1:]
            out[ne] = c * k
    return SparsePoly(p.space, out, _trusted=True)


def evaluate(p: SparsePoly, point: Sequence):
    if len(point) != p.space.arity:
        raise DimensionError(f"point has length {len(point)}, space arity is {p.space.arity}")
    point = [as_rational(v) for v in point]
    total = 0
    for e, c in p._terms.items():
        t = c
        for v, k in zip(point, e):
            if k:
                t *= v ** k
        total += t
    return as_rational(total)


def substitute_linear(p: SparsePoly, images: Sequence[SparsePoly], target: VarSpace) -> SparsePoly:
    """Replace variable j of ``p`` by the polynomial ``images[j]`` (in ``target``)."""
    if len(images) != p.space.arity:
        raise DimensionError("need one image per variable")
    powers: list[list[SparsePoly]] = [[SparsePoly.constant(target, 1)] for _ in images]

    def power(j: int, k: int) -> SparsePoly:
        cache = powers[j]
        while len(cache) <= k:
            cache.append(cache[-1] * images[j])
        return cache[k]

    out: dict = {}
    for e, c in p._terms.items():
        term = SparsePoly.constant(target, c)
        for j, k in enumerate(e):
            if k:
                term = term * power(j, k)
        for te, tc in term._terms.items():
            out[te] = out.get(te, 0) + tc
    return SparsePoly(target, {e: as_rational(c) for e, c in out.items() if c}, _trusted=True)


def monomial_basis(arity: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent vectors of total ``degree`` in ``arity`` variables, descending lex."""
    if degree < 0:
        raise ValueError("degree must be non-negative")
    out = []
    for combo in combinations_with_replacement(range(arity), degree):
        exp = [0] * arity
        for i in combo:
            exp[i] += 1
        out.append(tuple(exp))
    out.sort(reverse=True)
    return out


def monomial_value(exp: Sequence[int], point: Sequence):
    v = 1
    for x, k in zip(point, exp):
        if k:
            v *= x ** k
    return v


# ---------------------------------------------------------------- matrices


class RatMatrix:
    """Immutable dense matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable]):
        rows = tuple(tuple(as_rational(v) for v in row) for row in data)
        if not rows or not rows[0]:
            raise DimensionError("matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise DimensionError("ragged matrix")
        self._data = rows
        self.rows = len(rows)
        self.cols = len(rows[0])

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, entries: Sequence) -> RatMatrix:
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def __eq__(self, other) -> bool:
        return isinstance(other, RatMatrix) and self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        return f"RatMatrix({[[str(v) for v in r] for r in self._data]})"

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def transpose(self) -> RatMatrix:
        return RatMatrix(zip(*self._data))

    T = property(transpose)

    def __matmul__(self, other: RatMatrix) -> RatMatrix:
        if self.cols != other.rows:
            raise DimensionError("incompatible shapes")
        cols = list(zip(*other._data))
        return RatMatrix([[sum(a * b for a, b in zip(r, c)) for c in cols] for r in self._data])

    def apply(self, vec: Sequence) -> list:
        """Matrix-vector product ``self @ vec``."""
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        return [as_rational(sum(a * b for a, b in zip(r, vec))) for r in self._data]

    def det(self):
        if not self.is_square:
            raise DimensionError("determinant of a non-square matrix")
        return determinant(self._data)

    def inverse(self) -> RatMatrix:
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        cols = solve_many(self, [[int(i == j) for i in range(n)] for j in range(n)])
        return RatMatrix(zip(*cols))


def _integer_rows(rows: Sequence[Sequence]) -> list[list[int]]:
    """Scale each row by the lcm of its denominators."""
    out = []
    for r in rows:
        d = reduce(lcm, (Fraction(v).denominator for v in r), 1)
        out.append([int(v * d) for v in r])
    return out


def determinant(rows: Sequence[Sequence]):
    """Exact determinant by Bareiss elimination on denominator-cleared rows."""
    n = len(rows)
    scale = 1
    for r in rows:
        scale *= reduce(lcm, (Fraction(v).denominator for v in r), 1)
    a = _integer_rows(rows)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            ri[k] = 0
        prev = akk
    return as_rational(Fraction(sign * a[n - 1][n - 1], scale))


def solve_many(A: RatMatrix, rhs: Sequence[Sequence]) -> list[list]:
    """Solve ``A x = b`` for every ``b`` in ``rhs`` with one fraction-free sweep.

    Raises :class:`SingularMatrixError` when ``A`` is singular and
    :class:`DimensionError` on shape problems.
    """
    if not A.is_square:
        raise DimensionError("coefficient matrix must be square")
    n = A.rows
    for b in rhs:
        if len(b) != n:
            raise DimensionError("right-hand side length mismatch")
    m = len(rhs)
    # clear denominators row by row over the augmented system
    aug = [list(A.row(i)) + [b[i] for b in rhs] for i in range(n)]
    a = _integer_rows(aug)
    prev = 1
    width = n + m
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
        akk = a[k][k]
        rk = a[k]
        for i in range(n):
            if i == k:
                continue
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, width):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
            if i < k:
                ri[i] = akk * ri[i] // prev
            ri[k] = 0
        prev = akk
    # every diagonal entry now equals the last pivot (up to the row swaps)
    return [[as_rational(Fraction(a[i][n + t], a[i][i])) for i in range(n)] for t in range(m)]


def solve_exact(A: RatMatrix, b: Sequence) -> list:
    """The unique exact solution of ``A x = b``."""
    return solve_many(A, [list(b)])[0]


# ---------------------------------------------------------------- group actions


def _check_action(M: RatMatrix, space: VarSpace):
    if not M.is_square or M.rows != space.arity:
        raise DimensionError(f"matrix must be {space.arity}x{space.arity}")
    if M.det() == 0:
        raise SingularMatrixError("group element must be invertible")


def act_primal(M: RatMatrix, f: SparsePoly) -> SparsePoly:
    """``(M.f)(X) = f(X M)`` with ``X`` a row vector."""
    _check_action(M, f.space)
    n = f.space.arity
    images = [SparsePoly.linear(f.space, [M[i, j] for i in range(n)]) for j in range(n)]
    return substitute_linear(f, images, f.space)


def act_dual(M: RatMatrix, g: SparsePoly) -> SparsePoly:
    """``(M.g)(Y) = g(Y (M^-1)^T)``."""
    _check_action(M, g.space)
    Minv_T = M.inverse().transpose()
    n = g.space.arity
    images = [SparsePoly.linear(g.space, [Minv_T[i, j] for i in range(n)]) for j in range(n)]
    return substitute_linear(g, images, g.space)


def gcd_content(values: Iterable[int]) -> int:
    return reduce(gcd, values, 0)
