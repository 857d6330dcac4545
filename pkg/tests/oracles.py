"""Independent reference computations used only by the tests.

Nothing here imports the code paths it checks.  Ternary cubics are passed as
plain dicts ``{(i, j, k): coeff}``.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod

import sympy

# ---------------------------------------------------------------- transvection, full expansion
#
# Monomials in the 3*R replicated variables are packed into one int, two bits
# per variable (exponents never exceed 3).  Variable X/Y/Z of replica r
# (1-based) sits at bit offset 2*(3*(r-1) + letter).


def _shift(replica: int, letter: int) -> int:
    return 2 * (3 * (replica - 1) + letter)


def _packed_factor(f: dict, replica: int) -> dict[int, int]:
    out = {}
    for (a, b, c), coeff in f.items():
        key = (a << _shift(replica, 0)) | (b << _shift(replica, 1)) | (c << _shift(replica, 2))
        out[key] = coeff
    return out


def _packed_mul(p: dict, q: dict) -> dict:
    # factors live in disjoint replicas, so bit-or is monomial multiplication
    return {m1 | m2: c1 * c2 for m1, c1 in p.items() for m2, c2 in q.items()}


def _packed_diff(p: dict, shift: int) -> dict:
    out: dict = {}
    for m, c in p.items():
        k = (m >> shift) & 3
        if k:
            nm = m - (1 << shift)
            out[nm] = out.get(nm, 0) + c * k
    return {m: c for m, c in out.items() if c}


def _perm_sign(p) -> int:
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def _packed_bracket(p: dict, i: int, j: int, k: int) -> dict:
    """Determinant of partials, expanded term by term over the six letter permutations."""
    total: dict = {}
    for perm in permutations(range(3)):
        # row X differentiates replica (i, j, k)[perm[0]], and so on
        cols = (i, j, k)
        q = p
        for letter in range(3):
            q = _packed_diff(q, _shift(cols[perm[letter]], letter))
        s = _perm_sign(perm)
        for m, c in q.items():
            total[m] = total.get(m, 0) + s * c
    return {m: c for m, c in total.items() if c}


def naive_transvection(f: dict, replicas: int, brackets) -> Fraction:
    """Expand f(X1,Y1,Z1)...f(XR,YR,ZR) completely, then apply every bracket."""
    poly = {0: 1}
    for r in range(1, replicas + 1):
        poly = _packed_mul(poly, _packed_factor(f, r))
    for (i, j, k) in brackets:
        poly = _packed_bracket(poly, i, j, k)
    assert set(poly) <= {0}, "result is not a constant"
    return Fraction(poly.get(0, 0))


S_BRACKETS = [(1, 2, 3), (2, 3, 4), (3, 4, 1), (4, 1, 2)]
T_BRACKETS = [(1, 2, 3), (1, 2, 4), (2, 3, 5), (3, 1, 6), (4, 5, 6), (4, 5, 6)]


def naive_S(f: dict) -> Fraction:
    return naive_transvection(f, 4, S_BRACKETS)


def naive_T(f: dict) -> Fraction:
    return naive_transvection(f, 6, T_BRACKETS)


# ---------------------------------------------------------------- transvection, tensor contraction


def _third_derivative_tensor(f: dict):
    """D[a][b][c] = d^3 f / du_a du_b du_c (a constant for a cubic)."""
    D = {}
    for a, b, c in product(range(3), repeat=3):
        exp = [0, 0, 0]
        exp[a] += 1
        exp[b] += 1
        exp[c] += 1
        coeff = f.get(tuple(exp), 0)
        D[a, b, c] = coeff * prod(factorial(e) for e in exp)
    return D


def contracted_transvection(f: dict, replicas: int, brackets) -> Fraction:
    """Sum over all letter assignments of the bracket slots.

    Each bracket hands one letter to each of its replicas with the sign of
    the permutation; every replica receives exactly three letters and
    contributes the matching third derivative of ``f``.
    """
    D = _third_derivative_tensor(f)
    perms = [(p, _perm_sign(p)) for p in permutations(range(3))]
    total = 0
    for choice in product(perms, repeat=len(brackets)):
        letters: dict[int, list[int]] = {r: [] for r in range(1, replicas + 1)}
        sign = 1
        for (p, s), cols in zip(choice, brackets):
            sign *= s
            # row letter t differentiates replica cols[p[t]]
            for t in range(3):
                letters[cols[p[t]]].append(t)
        term = sign
        for r in range(1, replicas + 1):
            term *= D[tuple(letters[r])]
            if not term:
                break
        total += term
    return Fraction(total)


# ---------------------------------------------------------------- linear algebra


def gauss_solve(A, b):
    """Textbook Gaussian elimination with partial pivoting on Fractions."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(M[r][col]))
        if M[piv][col] == 0:
            raise ZeroDivisionError("singular")
        M[col], M[piv] = M[piv], M[col]
        for r in range(col + 1, n):
            factor = M[r][col] / M[col][col]
            for c in range(col, n + 1):
                M[r][c] -= factor * M[col][c]
    x = [Fraction(0)] * n
    for r in range(n - 1, -1, -1):
        x[r] = (M[r][n] - sum(M[r][c] * x[c] for c in range(r + 1, n))) / M[r][r]
    return x


def sympy_solve(A, b):
    sol = sympy.Matrix(A).LUsolve(sympy.Matrix(b))
    return [Fraction(int(v.p), int(v.q)) for v in sol]


def count_square_terms(coeffs: dict) -> int:
    """Number of monomials of p^2 for p = sum coeffs[e] x^e, by brute-force expansion."""
    out: dict = {}
    for e1, c1 in coeffs.items():
        for e2, c2 in coeffs.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            out[e] = out.get(e, 0) + c1 * c2
    return sum(1 for v in out.values() if v)


def sympy_det(rows) -> Fraction:
    d = sympy.Matrix(rows).det()
    d = sympy.Rational(d)
    return Fraction(int(d.p), int(d.q))
