from dataclasses import replace
from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lambda_norms.exact_core import OMEGA, EisensteinInt, GaussianInt, I, QuadraticPoint
from lambda_norms.modular_group import PSI, S, UnimodularMatrix, apply_to_point, compose
from lambda_norms.norm_solver import (
    Ring,
    audit_witness,
    brute_force_eisenstein,
    brute_force_gaussian,
    canonical_eisenstein,
    canonical_gaussian,
    check_conjugation,
    conjugate_to_model,
    integer_kernel,
    represent_eisenstein,
    represent_gaussian,
)

from strategies import small_primes


def test_integer_kernel_is_saturated():
    # x + 2y + 3z = 0 in Z^3: kernel lattice has index 1 in its rational span
    basis = integer_kernel([[1, 2, 3]])
    assert len(basis) == 2
    for v in basis:
        assert v[0] + 2 * v[1] + 3 * v[2] == 0
    # a basis of a saturated lattice has coprime 2x2 minors
    (a1, a2, a3), (b1, b2, b3) = basis
    assert gcd(a1 * b2 - a2 * b1, a1 * b3 - a3 * b1, a2 * b3 - a3 * b2) == 1


def test_integer_kernel_of_nonsingular_matrix_is_trivial():
    assert integer_kernel([[2, 1], [1, 1]]) == []


def test_conjugate_worked_example():
    m = UnimodularMatrix(-1, 1, -3, 2)
    g = conjugate_to_model(m, PSI)
    assert check_conjugation(g, PSI, m)
    f = UnimodularMatrix(1, 0, 2, 1)
    # g = f * psi^j for some j
    assert g in {f, compose(f, PSI), compose(f, compose(PSI, PSI))}
    assert g == f


def test_conjugate_self():
    g = conjugate_to_model(PSI, PSI)
    assert g in {UnimodularMatrix(1, 0, 0, 1), PSI, compose(PSI, PSI)}


def test_conjugate_p7_stabilizer():
    m = UnimodularMatrix(2, -1, 7, -3)
    g = conjugate_to_model(m, PSI)
    assert check_conjugation(g, PSI, m)
    assert g.c**2 - g.c * g.d + g.d**2 == 7


def test_conjugate_rejects_wrong_class():
    # psi^2 is not conjugate to psi in PSL(2,Z)
    with pytest.raises(ArithmeticError):
        conjugate_to_model(compose(PSI, PSI), PSI)
    with pytest.raises(ValueError):
        conjugate_to_model(S, PSI)


def test_represent_eisenstein_examples():
    w = represent_eisenstein(3)
    assert w.k == 1 and w.norm == 3
    assert w.value == EisensteinInt(1, 2)
    assert w.conjugator == UnimodularMatrix(1, 0, 2, 1)
    assert represent_eisenstein(5) is None
    assert represent_eisenstein(2) is None
    w = represent_eisenstein(7)
    assert w.pair in brute_force_eisenstein(7)
    assert canonical_eisenstein(*w.pair) == (3, 1)


def test_represent_gaussian_examples():
    w = represent_gaussian(5)
    assert w.norm == 5 and canonical_gaussian(*w.pair) == (1, 2)
    assert w.k == 2
    assert represent_gaussian(7) is None
    w = represent_gaussian(13)
    assert w.pair in brute_force_gaussian(13) and w.k == 5
    w = represent_gaussian(2)
    assert w.pair in {(1, 1), (1, -1)}


@pytest.mark.parametrize("bad", [1, 4, 9, 91])
def test_solvers_reject_composites(bad):
    with pytest.raises(ValueError):
        represent_eisenstein(bad)
    with pytest.raises(ValueError):
        represent_gaussian(bad)


def test_brute_force_examples():
    assert {(1, 2), (2, 1)} <= brute_force_eisenstein(3)
    assert brute_force_eisenstein(5) == set()
    units = brute_force_eisenstein(1)
    assert units == {(1, 0), (0, 1), (-1, 0), (0, -1), (1, 1), (-1, -1)}
    assert brute_force_gaussian(2) == {(1, 1), (1, -1), (-1, 1), (-1, -1)}
    assert brute_force_gaussian(3) == set()
    assert {(3, 4), (0, 5)} <= brute_force_gaussian(25)


@given(st.integers(1, 400))
def test_brute_force_eisenstein_bound_is_complete(n):
    # a wider search finds nothing new
    wide = {
        (a, b)
        for a in range(-60, 61)
        for b in range(-60, 61)
        if a * a - a * b + b * b == n
    }
    assert brute_force_eisenstein(n) == wide


@pytest.mark.parametrize("p", small_primes(2, 400))
def test_witnesses_against_oracles(p):
    e = represent_eisenstein(p)
    assert (e is not None) == bool(brute_force_eisenstein(p)) == (p == 3 or p % 3 == 1)
    if e:
        assert e.pair in brute_force_eisenstein(p)
        assert audit_witness(e)
    g = represent_gaussian(p)
    assert (g is not None) == bool(brute_force_gaussian(p)) == (p == 2 or p % 4 == 1)
    if g:
        assert g.pair in brute_force_gaussian(p)
        assert audit_witness(g)


@pytest.mark.parametrize("p", [7, 13, 19, 31, 97, 1999])
def test_eisen_integers_imaginary_part(p):
    w = represent_eisenstein(p)
    c, d = w.conjugator.c, w.conjugator.d
    image = apply_to_point(w.conjugator, OMEGA)
    assert image.y == OMEGA.y / (c * c - c * d + d * d) == Fraction(1, 2 * p)
    assert image == w.center
    assert w.value == EisensteinInt(d, c)


@pytest.mark.parametrize("p", [5, 13, 17, 29])
def test_gaussian_midpoint_is_orbit_point_of_i(p):
    w = represent_gaussian(p)
    assert apply_to_point(w.conjugator, I) == QuadraticPoint(Fraction(w.k, p), Fraction(1, p), 1)
    assert w.value == GaussianInt(w.conjugator.c, w.conjugator.d)


def test_audit_detects_tampering():
    w = represent_eisenstein(7)
    assert not audit_witness(replace(w, conjugator=UnimodularMatrix(1, 0, 2, 1)))
    assert not audit_witness(replace(w, value=EisensteinInt(1, 1)))


def test_canonical_representatives():
    assert canonical_eisenstein(1, 2) == (2, 1)
    assert canonical_eisenstein(-1, 1) == (2, 1)
    assert canonical_gaussian(3, -2) == (2, 3)


def test_ring_enum():
    assert Ring("eisenstein") is Ring.EISENSTEIN
