import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicinv.arith import act_primal
from cubicinv.invariants import (CONSTANTS, Verdict, ZeroFormError, all_invariants,
                                 clebsch_salmon_invariants, equivalent_over_closure,
                                 has_automorphism_certificate, lcm_power_proportional,
                                 linear_covariants, weighted_projective_equal)
from cubicinv.pentahedral import expand_pentahedral, salmon_I100, salmon_invariants
from cubicinv.textform import parse_poly
from helpers import random_gl, random_int_cubic

CLEBSCH = (1, 1, 1, 1, 1)


# ---------------------------------------------------------------- fixtures


def test_fermat(fermat):
    inv = all_invariants(fermat)
    assert inv.as_tuple() == (1, 0, 0, 0, 0)
    assert inv.I100 == 0
    assert has_automorphism_certificate(fermat)


def test_clebsch_diagonal():
    inv = all_invariants(expand_pentahedral(CLEBSCH))
    assert inv.as_tuple() == (-15, 5, 5, 10, 1)
    assert inv.I100 == 0


def test_pentahedral_12345():
    a = (1, 2, 3, 4, 5)
    inv = all_invariants(expand_pentahedral(a))
    assert inv.as_tuple() == salmon_invariants(a).as_tuple()
    assert inv.I100 == salmon_I100(a) != 0


def test_linear_covariant_bookkeeping(fermat):
    covs = linear_covariants(fermat).as_tuple()
    assert [(c.degree, c.order) for c in covs] == [(11, 1), (19, 1), (27, 1), (43, 1)]
    assert [c.weight for c in covs] == [8, 14, 20, 32]


def test_rejects_zero_and_non_cubics():
    with pytest.raises(ZeroFormError):
        clebsch_salmon_invariants(parse_poly("0"))
    with pytest.raises(ValueError):
        clebsch_salmon_invariants(parse_poly("x^3 + y^2"))


@pytest.mark.parametrize("lam", [2, Fraction(-1, 3)])
def test_homogeneity(lam):
    f = random_int_cubic(random.Random(5), bound=4)
    base = clebsch_salmon_invariants(f).as_tuple()
    scaled = clebsch_salmon_invariants(f.scale(lam)).as_tuple()
    assert scaled == tuple(lam ** d * v for d, v in zip((8, 16, 24, 32, 40), base))


def test_interp_seed_does_not_matter():
    f = random_int_cubic(random.Random(6), bound=4)
    assert clebsch_salmon_invariants(f) == clebsch_salmon_invariants(f, seed=7)


# ---------------------------------------------------------------- constants


@pytest.mark.parametrize("name, factored", [
    ("I8", {2: -11, 3: -9}),
    ("I16", {2: -30, 3: -22}),
    ("I24", {2: -41, 3: -33}),
    ("I32a", {2: -60, 3: -44}),
    ("I40a", {-1: 1, 2: -72, 3: -53, 5: -2}),
    ("C11", {2: -20, 3: -15}),
    ("C19", {2: -33, 3: -24, 5: -1}),
    ("C19_I8C11", {2: 32, 3: 24}),
    ("C27a", {2: -42, 3: -33}),
    ("C43a", {2: -68, 3: -53}),
])
def test_constants_factor_as_expected(name, factored):
    assert sympy.factorrat(sympy.Rational(str(CONSTANTS[name])), visual=False) == factored


@pytest.mark.parametrize("name, text", [
    ("I8", "1/40310784"),
    ("I16", "1/33695156183620386816"),
    ("I24", "1/12224503464877671758426013696"),
    ("I32a", "1/1135363550238571190807373046457466617856"),
    ("I40a", "-1/2288369741757009587062940024158445100980187955200"),
    ("C11", "1/15045919506432"),
    ("C19", "1/12130256226103339253760"),
    ("C19_I8C11", "1213025622610333925376"),
    ("C27a", "1/24449006929755343516852027392"),
    ("C43a", "1/5720924354392523967657350060396112752450469888"),
    ("I32", "2/5"),
    ("I40_I8I32", "-1/100"),
    ("I40_I16I24", "-1/50"),
    ("C27", "1/200"),
])
def test_constants_match_decimal_strings(name, text):
    assert CONSTANTS[name] == Fraction(text)


# ---------------------------------------------------------------- equivalence


@pytest.mark.parametrize("seed", range(2))
def test_equivalent_to_transformed(seed):
    rng = random.Random(seed)
    f = random_int_cubic(rng, bound=4)
    M = random_gl(rng, bound=2)
    assert equivalent_over_closure(f, act_primal(M, f)) is Verdict.EQUIVALENT


def test_equivalent_to_scalar_multiple():
    f = random_int_cubic(random.Random(9), bound=4)
    assert equivalent_over_closure(f, f.scale(-5)) is Verdict.EQUIVALENT


def test_fermat_and_clebsch_differ(fermat):
    assert equivalent_over_closure(fermat, expand_pentahedral(CLEBSCH)) is Verdict.NOT_EQUIVALENT


def test_permuted_pentahedral_is_equivalent():
    f = expand_pentahedral((1, 2, 3, 4, 5))
    g = expand_pentahedral((5, 3, 1, 2, 4))
    assert equivalent_over_closure(f, g) is Verdict.EQUIVALENT


def test_weighted_projective_examples():
    u = (1, 2, 3, 4, 5)
    v = (2, 8, 24, 64, 160)
    assert weighted_projective_equal(u, v) is Verdict.EQUIVALENT
    assert weighted_projective_equal(u, (2, 8, 24, 64, 161)) is Verdict.NOT_EQUIVALENT
    assert weighted_projective_equal(u, (0, 2, 3, 4, 5)) is Verdict.NOT_EQUIVALENT
    assert weighted_projective_equal((0,) * 5, (0,) * 5) is Verdict.INDETERMINATE


def test_weighted_projective_without_weight_one():
    # mu = i: weights 2 and 4 see -1 and 1
    assert weighted_projective_equal((0, 1, 0, 1, 0), (0, -1, 0, 1, 0)) is Verdict.EQUIVALENT
    # weight 2 and 3 only: mu = 2 gives (4, 8), mu^6 = 64 is forced
    assert weighted_projective_equal((0, 1, 1, 0, 0), (0, 4, 8, 0, 0)) is Verdict.EQUIVALENT
    assert weighted_projective_equal((0, 1, 1, 0, 0), (0, 4, -8, 0, 0)) is Verdict.EQUIVALENT
    assert weighted_projective_equal((0, 1, 1, 0, 0), (0, 4, 9, 0, 0)) is Verdict.NOT_EQUIVALENT
    # weights 2 and 4: (mu^2)^2 must equal the weight-4 ratio
    assert weighted_projective_equal((0, 1, 0, 1, 0), (0, 3, 0, 9, 0)) is Verdict.EQUIVALENT
    assert weighted_projective_equal((0, 1, 0, 1, 0), (0, 3, 0, 8, 0)) is Verdict.NOT_EQUIVALENT


def test_weighted_projective_single_coordinate():
    assert weighted_projective_equal((0, 0, 0, 0, 1), (0, 0, 0, 0, -7)) is Verdict.EQUIVALENT


def test_weighted_projective_length_check():
    with pytest.raises(ValueError):
        weighted_projective_equal((1, 2), (1, 2, 3))


nonzero = st.fractions(min_value=-9, max_value=9, max_denominator=5).filter(bool)


@given(st.lists(st.one_of(st.just(0), nonzero), min_size=5, max_size=5), nonzero)
@settings(max_examples=100)
def test_weighted_projective_accepts_true_rescalings(u, mu):
    v = tuple(mu ** w * x for w, x in zip((1, 2, 3, 4, 5), u))
    expected = Verdict.INDETERMINATE if not any(u) else Verdict.EQUIVALENT
    assert weighted_projective_equal(tuple(u), v) is expected
    assert lcm_power_proportional(tuple(u), v)
