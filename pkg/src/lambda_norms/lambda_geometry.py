"""Ford circles, lambda-lengths of arcs, and the arcs of lambda-length p at oo."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exact_core import ExtendedRational, QuadraticPoint, require_odd_prime


def _before(r: ExtendedRational, s: ExtendedRational) -> bool:
    if r.is_infinity:
        return True
    if s.is_infinity:
        return False
    return r.num * s.den < s.num * r.den


@dataclass(frozen=True, init=False)
class Arc:
    """Unordered pair of distinct cusps; stored with oo first, else smaller first."""

    e1: ExtendedRational
    e2: ExtendedRational

    def __init__(self, e1: ExtendedRational, e2: ExtendedRational):
        if e1 == e2:
            raise ValueError(f"degenerate arc at {e1}")
        if not _before(e1, e2):
            e1, e2 = e2, e1
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    def __str__(self):
        return f"[{self.e1}, {self.e2}]"


@dataclass(frozen=True)
class FordCircle:
    """Horoball tangent to the boundary at ``tangent_point``.

    ``diameter`` is None for the horoball {Im z > 1} at oo.
    """

    tangent_point: ExtendedRational
    diameter: Fraction | None

    @property
    def center(self) -> tuple[Fraction, Fraction]:
        if self.diameter is None:
            raise ValueError("the horoball at oo has no center")
        return (self.tangent_point.to_fraction(), self.diameter / 2)

    @property
    def radius(self) -> Fraction:
        if self.diameter is None:
            raise ValueError("the horoball at oo has infinite radius")
        return self.diameter / 2


def lambda_length(arc: Arc) -> int:
    """|ad - bc| for endpoints a/c and b/d; the exponential of the truncated half-length."""
    a, c = arc.e1.num, arc.e1.den
    b, d = arc.e2.num, arc.e2.den
    return abs(a * d - b * c)


def ford_circle(r: ExtendedRational) -> FordCircle:
    if r.is_infinity:
        return FordCircle(r, None)
    return FordCircle(r, Fraction(1, r.den * r.den))


def vertical_arc_midpoint(arc: Arc) -> QuadraticPoint:
    """Midpoint b/d + i/|d| of the arc from oo to b/d (radicand 1)."""
    if not arc.e1.is_infinity:
        raise ValueError(f"{arc} is not a vertical arc")
    b, d = arc.e2.num, arc.e2.den
    return QuadraticPoint(Fraction(b, d), Fraction(1, abs(d)), 1)


def incident_arc_indices(p: int) -> list[int]:
    """k in {1, ..., 2p-1} coprime to p, without validating p."""
    return [k for k in range(1, 2 * p) if gcd(k, p) == 1]


def enumerate_incident_arcs(p: int) -> list[int]:
    """Indices k of the arcs (oo, k/p) of lambda-length p, finite end in the strip [0, 2).

    Translations z -> z + 2n generate the stabilizer of oo in Gamma(2), so
    each arc at the cusp oo has exactly one such lift.
    """
    require_odd_prime(p)
    return incident_arc_indices(p)


def ford_tangent(r: ExtendedRational, s: ExtendedRational) -> bool:
    """True iff the finite Ford circles at r and s are externally tangent (exact)."""
    cr, cs = ford_circle(r), ford_circle(s)
    (x1, y1), (x2, y2) = cr.center, cs.center
    dist2 = (x1 - x2) ** 2 + (y1 - y2) ** 2
    return dist2 == (cr.radius + cs.radius) ** 2
