import pytest

from cubicinv.arith import DUAL, PRIMAL, SparsePoly
from cubicinv.forms import BookkeepingError, GradedForm
from cubicinv.textform import parse_poly


def cov(text, degree, weight):
    p = parse_poly(text)
    return GradedForm(p, degree, p.total_degree(), weight)


def test_addition_requires_matching_bookkeeping():
    a = cov("x^2", 2, 1)
    assert (a + cov("y^2", 2, 1)).poly == parse_poly("x^2 + y^2")
    with pytest.raises(BookkeepingError):
        a + cov("y^2", 3, 1)
    with pytest.raises(BookkeepingError):
        a + cov("y^2", 2, 2)


def test_products_add_degree_and_weight():
    a, b = cov("x", 2, 1), cov("y^2", 3, 4)
    ab = a * b
    assert (ab.degree, ab.order, ab.weight) == (5, 3, 5)
    i = GradedForm.invariant(7, 8, 6)
    ai = i * a
    assert ai.poly == parse_poly("7*x")
    assert (ai.degree, ai.order, ai.weight) == (10, 1, 7)
    assert (a ** 3).weight == 3


def test_scalar_multiples_keep_bookkeeping():
    a = cov("x", 2, 1)
    assert (3 * a).poly == parse_poly("3*x")
    assert (3 * a).degree == 2


def test_mixing_spaces_is_rejected():
    d = GradedForm(parse_poly("y1", DUAL), 1, 1, 0, "dual")
    with pytest.raises(BookkeepingError):
        cov("x", 1, 0) * d
    with pytest.raises(BookkeepingError):
        GradedForm(parse_poly("y1", DUAL), 1, 1, 0, "primal")


def test_homogeneity_enforced():
    with pytest.raises(BookkeepingError):
        GradedForm(parse_poly("x^2 + y"), 1, 2, 0)


def test_invariant_value():
    assert GradedForm.invariant(5, 8, 6).value == 5
    with pytest.raises(BookkeepingError):
        cov("x", 1, 0).value
    assert GradedForm(SparsePoly.zero(PRIMAL), 1, 3, 0).is_zero
