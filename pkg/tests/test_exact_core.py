from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lambda_norms.exact_core import (
    INFINITY,
    OMEGA,
    CuspClass,
    EisensteinInt,
    ExtendedRational,
    GaussianInt,
    QuadraticPoint,
    cusp_class,
    is_prime,
    norm_eisenstein,
    norm_gaussian,
    reduce,
)
from lambda_norms.modular_group import apply_to_cusp

from strategies import cusps, gamma2, ints, nonzero


def test_reduce_examples():
    assert reduce(2, 6) == ExtendedRational(1, 3)
    assert reduce(-3, 0) == ExtendedRational(1, 0)
    assert reduce(4, -6) == ExtendedRational(-2, 3)
    assert reduce(0, -5) == ExtendedRational(0, 1)


def test_reduce_rejects_origin():
    with pytest.raises(ValueError):
        reduce(0, 0)


@pytest.mark.parametrize("num,den", [(2, 4), (3, 0), (1, -2), (-1, 0)])
def test_constructor_validates(num, den):
    with pytest.raises(ValueError):
        ExtendedRational(num, den)


@given(cusps(), nonzero)
def test_reduce_scaling_invariance(r, t):
    assert reduce(r.num * t, r.den * t) == r


def test_cusp_class_examples():
    assert cusp_class(INFINITY) is CuspClass.INFINITY
    assert cusp_class(reduce(0, 1)) is CuspClass.ZERO
    assert cusp_class(reduce(5, 3)) is CuspClass.ONE


@settings(max_examples=1000)
@given(cusps(), gamma2())
def test_cusp_class_constant_on_gamma2_orbits(r, g):
    assert cusp_class(apply_to_cusp(g, r)) is cusp_class(r)


def test_norm_examples():
    assert norm_eisenstein(EisensteinInt(1, 2)) == 3
    assert norm_eisenstein(EisensteinInt(0, 0)) == 0
    assert norm_eisenstein(EisensteinInt(1, 3)) == 1 - 3 + 9 == 7
    assert norm_gaussian(GaussianInt(1, 2)) == 5
    assert norm_gaussian(GaussianInt(0, 0)) == 0
    assert norm_gaussian(GaussianInt(2, 3)) == 13


def test_gaussian_norm_against_small_brute_force():
    # pairs of size <= 2 whose squares sum to 5
    found = {(c, d) for c in range(-2, 3) for d in range(-2, 3) if c * c + d * d == 5}
    assert (1, 2) in found and len(found) == 8


@given(ints, ints)
def test_eisenstein_form_symmetries(a, b):
    n = norm_eisenstein(EisensteinInt(a, b))
    assert n == norm_eisenstein(EisensteinInt(b, a)) == norm_eisenstein(EisensteinInt(-a, -b))
    assert n >= 0
    assert (n == 0) == (a == 0 and b == 0)


def test_eisenstein_norm_is_complex_modulus():
    # |a + b omega|^2 with omega = -1/2 + sqrt(3)/2 i: (a - b/2)^2 + 3 b^2 / 4
    for a in range(-6, 7):
        for b in range(-6, 7):
            assert Fraction(2 * a - b, 2) ** 2 + Fraction(3 * b * b, 4) == norm_eisenstein(
                EisensteinInt(a, b)
            )


def test_quadratic_point_validation():
    assert OMEGA == QuadraticPoint(Fraction(-1, 2), Fraction(1, 2), 3)
    with pytest.raises(ValueError):
        QuadraticPoint(0, 0, 1)
    with pytest.raises(ValueError):
        QuadraticPoint(0, 1, 2)


def test_format():
    assert str(EisensteinInt(1, 2)) == "1 + 2ω"
    assert str(EisensteinInt(3, -1)) == "3 - ω"
    assert str(GaussianInt(0, 1)) == "i"


@given(st.integers(min_value=-5, max_value=3000))
def test_is_prime_matches_trial_division(n):
    expected = n >= 2 and all(n % d for d in range(2, int(n**0.5) + 1))
    assert is_prime(n) == expected
