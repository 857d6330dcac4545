import random

from hypothesis import strategies as st

from cubicinv.arith import PRIMAL, TERNARY, RatMatrix, SparsePoly, monomial_basis

FERMAT = "x^3 + y^3 + z^3 + w^3"


def small_poly(space, max_degree=3, max_terms=6, coeff=5):
    exps = st.tuples(*[st.integers(0, max_degree)] * space.arity)
    coeffs = st.fractions(min_value=-coeff, max_value=coeff, max_denominator=4)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: SparsePoly(space, d))


def random_int_cubic(rng: random.Random, bound: int = 9, space=PRIMAL) -> SparsePoly:
    return SparsePoly(space, {e: rng.randint(-bound, bound) for e in monomial_basis(space.arity, 3)})


def random_ternary(rng: random.Random, bound: int = 9) -> SparsePoly:
    return random_int_cubic(rng, bound, TERNARY)


def random_gl(rng: random.Random, n: int = 4, bound: int = 3) -> RatMatrix:
    while True:
        M = RatMatrix([[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)])
        if M.det() != 0:
            return M


def as_dict(f: SparsePoly) -> dict:
    return f.terms
