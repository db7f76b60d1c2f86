from fractions import Fraction
from math import gcd

import mpmath
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from lambda_norms.exact_core import INFINITY, CuspClass, QuadraticPoint, cusp_class, reduce
from lambda_norms.lambda_geometry import (
    Arc,
    enumerate_incident_arcs,
    ford_circle,
    ford_tangent,
    lambda_length,
    vertical_arc_midpoint,
)
from lambda_norms.modular_group import apply_to_cusp

from strategies import cusps, psl2z, small_primes

mpmath.mp.dps = 50


def _truncated_lambda(r, s):
    """exp(half the hyperbolic length of the geodesic r-s outside the two Ford circles), numerically."""

    def ford_hit(x0, den, other):
        # second intersection of the geodesic with the Ford circle tangent at x0
        rad = mpmath.mpf(1) / (2 * den * den)
        if other is None:
            # vertical geodesic above x0
            return mpmath.mpc(x0, 2 * rad)
        cx = (x0 + other) / 2
        # reflect the common point (x0, 0) across the line of centres (cx, 0)-(x0, rad)
        dx, dy = x0 - cx, rad
        t = ((x0 - cx) * dx) / (dx * dx + dy * dy)
        fx, fy = cx + t * dx, t * dy
        return mpmath.mpc(2 * fx - x0, 2 * fy)

    def dist(z, w):
        return mpmath.acosh(1 + abs(z - w) ** 2 / (2 * z.imag * w.imag))

    if r.is_infinity or s.is_infinity:
        fin = s if r.is_infinity else r
        x0 = mpmath.mpf(fin.num) / fin.den
        z = ford_hit(x0, fin.den, None)
        w = mpmath.mpc(x0, 1)
    else:
        x0 = mpmath.mpf(r.num) / r.den
        x1 = mpmath.mpf(s.num) / s.den
        z = ford_hit(x0, r.den, x1)
        w = ford_hit(x1, s.den, x0)
    return mpmath.exp(dist(z, w) / 2)


def test_lambda_length_examples():
    assert lambda_length(Arc(INFINITY, reduce(0, 1))) == 1
    assert lambda_length(Arc(reduce(1, 3), reduce(2, 3))) == 3
    for p in (3, 5, 7, 11):
        for k in range(1, 2 * p):
            if gcd(k, p) == 1:
                assert lambda_length(Arc(INFINITY, reduce(k, p))) == p


def test_degenerate_arc_rejected():
    with pytest.raises(ValueError):
        Arc(reduce(1, 2), reduce(2, 4))


def test_arc_canonical_order():
    a = Arc(reduce(2, 3), INFINITY)
    assert a.e1 == INFINITY
    assert Arc(reduce(2, 3), reduce(1, 3)) == Arc(reduce(1, 3), reduce(2, 3))
    assert Arc(reduce(2, 3), reduce(1, 3)).e1 == reduce(1, 3)


@pytest.mark.parametrize(
    "r,s",
    [
        (INFINITY, reduce(3, 7)),
        (INFINITY, reduce(0, 1)),
        (reduce(1, 3), reduce(2, 3)),
        (reduce(0, 1), reduce(1, 5)),
        (reduce(2, 7), reduce(5, 9)),
        (reduce(-4, 11), reduce(13, 6)),
    ],
)
def test_lambda_length_matches_truncated_geodesic(r, s):
    lam = lambda_length(Arc(r, s))
    if lam == 1:
        # Farey edge: horoballs tangent, the truncated segment has length 0
        assert _truncated_lambda(r, s) == pytest.approx(1, abs=1e-30)
    else:
        assert mpmath.almosteq(_truncated_lambda(r, s), lam, rel_eps=mpmath.mpf(10) ** -40)


def test_ford_circle_examples():
    assert ford_circle(reduce(0, 1)).diameter == 1
    assert ford_circle(reduce(1, 2)).diameter == Fraction(1, 4)
    horoball = ford_circle(INFINITY)
    assert horoball.diameter is None
    with pytest.raises(ValueError):
        horoball.radius


def test_vertical_midpoints():
    assert vertical_arc_midpoint(Arc(INFINITY, reduce(3, 7))) == QuadraticPoint(
        Fraction(3, 7), Fraction(1, 7), 1
    )
    assert vertical_arc_midpoint(Arc(INFINITY, reduce(0, 1))) == QuadraticPoint(0, 1, 1)
    assert vertical_arc_midpoint(Arc(INFINITY, reduce(1, 2))) == QuadraticPoint(
        Fraction(1, 2), Fraction(1, 2), 1
    )
    with pytest.raises(ValueError):
        vertical_arc_midpoint(Arc(reduce(0, 1), reduce(1, 1)))


def test_enumerate_incident_arcs_examples():
    assert enumerate_incident_arcs(3) == [1, 2, 4, 5]
    assert len(enumerate_incident_arcs(5)) == 8
    assert enumerate_incident_arcs(7) == [*range(1, 7), *range(8, 14)]
    assert enumerate_incident_arcs(7) == [k for k in range(1, 14) if k % 7]


@pytest.mark.parametrize("bad", [2, 9, 1, 15])
def test_enumerate_incident_arcs_rejects(bad):
    with pytest.raises(ValueError):
        enumerate_incident_arcs(bad)


@settings(max_examples=1000)
@given(cusps(), cusps(), psl2z())
def test_lambda_length_psl_invariant(r, s, m):
    assume(r != s)
    arc = Arc(r, s)
    moved = Arc(apply_to_cusp(m, r), apply_to_cusp(m, s))
    assert lambda_length(moved) == lambda_length(arc)


@given(st.integers(1, 200), st.integers(-200, 200), st.integers(1, 200))
def test_farey_neighbours_have_tangent_ford_circles(c, a, d):
    assume(gcd(a, c) == 1)
    # b/d with ad - bc = 1 (solve b from a*d = 1 mod c)
    if c == 1:
        b = a * d - 1
    else:
        d = pow(a, -1, c)
        b = (a * d - 1) // c
    r, s = reduce(a, c), reduce(b, d)
    assert lambda_length(Arc(r, s)) == 1
    assert ford_tangent(r, s)


def test_non_neighbours_not_tangent():
    assert not ford_tangent(reduce(1, 3), reduce(2, 3))


@pytest.mark.parametrize("p", small_primes(3, 113))
def test_incident_arcs_distinct_cusps(p):
    for k in enumerate_incident_arcs(p):
        r = reduce(k, p)
        assert lambda_length(Arc(INFINITY, r)) == p
        assert cusp_class(r) in (CuspClass.ZERO, CuspClass.ONE)
