"""Equilateral ideal triangles of lambda-length p on H/Gamma(2) and the psi-action on them.

A triangle on the quotient is stored by its canonical lift (oo, k/p, (k+1)/p),
with both finite vertices in the strip (0, 2). Each properly immersed triangle
has exactly one spike at the cusp oo, and translations z -> z + 2n make the
lift unique.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd

from .exact_core import (
    INFINITY,
    CuspClass,
    ExtendedRational,
    QuadraticPoint,
    cusp_class,
    reduce,
    require_odd_prime,
)
from .lambda_geometry import Arc, lambda_length
from .modular_group import (
    PSI,
    UnimodularMatrix,
    apply_to_cusp,
    coset_representatives,
    mobius_through,
    reduce_cusp_to_infinity,
)


@dataclass(frozen=True, order=True)
class CanonicalTriangle:
    p: int
    k: int

    def __post_init__(self):
        if not (1 <= self.k <= 2 * self.p - 2) or self.k in (self.p - 1, self.p):
            raise ValueError(f"k = {self.k} is not a canonical index for p = {self.p}")

    @cached_property
    def vertices(self) -> tuple[ExtendedRational, ExtendedRational, ExtendedRational]:
        return (INFINITY, reduce(self.k, self.p), reduce(self.k + 1, self.p))

    def edge_lengths(self) -> tuple[int, int, int]:
        v0, v1, v2 = self.vertices
        return (
            lambda_length(Arc(v0, v1)),
            lambda_length(Arc(v1, v2)),
            lambda_length(Arc(v2, v0)),
        )

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self.vertices) + ")"


@dataclass(frozen=True)
class OrbitDecomposition:
    p: int
    fixed: tuple[CanonicalTriangle, ...]
    three_cycles: tuple[tuple[CanonicalTriangle, CanonicalTriangle, CanonicalTriangle], ...]

    @property
    def size(self) -> int:
        return len(self.fixed) + 3 * len(self.three_cycles)


def triangle_indices(p: int) -> list[int]:
    """Canonical indices k for p, without validating p (empty for p = 2)."""
    return [k for k in range(1, 2 * p - 1) if gcd(k, p) == 1 and gcd(k + 1, p) == 1]


def enumerate_triangles(p: int) -> list[CanonicalTriangle]:
    """All properly immersed equilateral triangles of lambda-length p, by ascending k.

    Two arcs (oo, k/p) and (oo, (k+1)/p) bound such a triangle because
    det((k+1, k), (p, p)) = p.
    """
    require_odd_prime(p)
    return [CanonicalTriangle(p, k) for k in triangle_indices(p)]


def is_properly_immersed(t: CanonicalTriangle) -> bool:
    classes = {cusp_class(v) for v in t.vertices}
    return len(classes) == 3


def canonicalize(p: int, vertices) -> CanonicalTriangle:
    """Canonical lift of the Gamma(2)-class of an equilateral triangle of lambda-length p."""
    at_infinity = [v for v in vertices if cusp_class(v) is CuspClass.INFINITY]
    if len(at_infinity) != 1:
        raise AssertionError(f"triangle {vertices} does not have exactly one spike at oo")
    gamma = reduce_cusp_to_infinity(at_infinity[0])
    lo, hi = (apply_to_cusp(gamma, v) for v in vertices if v is not at_infinity[0])
    if lo.num * hi.den > hi.num * lo.den:
        lo, hi = hi, lo
    if lo.den != p or hi.den != p or hi.num - lo.num != 1:
        raise AssertionError(f"triangle {vertices} is not equilateral of lambda-length {p}")
    # translate by z -> z + 2n into the strip
    return CanonicalTriangle(p, lo.num % (2 * p))


def psi_image(t: CanonicalTriangle) -> CanonicalTriangle:
    """The triangle obtained from t by the automorphism of H/Gamma(2) induced by psi."""
    return canonicalize(t.p, [apply_to_cusp(PSI, v) for v in t.vertices])


def transport(g: UnimodularMatrix, t: CanonicalTriangle) -> CanonicalTriangle:
    return canonicalize(t.p, [apply_to_cusp(g, v) for v in t.vertices])


@lru_cache(maxsize=32)
def orbit_decomposition(p: int) -> OrbitDecomposition:
    """Split the triangles of lambda-length p into psi-orbits (sizes 1 and 3), by ascending least k."""
    triangles = enumerate_triangles(p)
    seen: set[CanonicalTriangle] = set()
    fixed, cycles = [], []
    for t in triangles:
        if t in seen:
            continue
        t1 = psi_image(t)
        if t1 == t:
            fixed.append(t)
            seen.add(t)
            continue
        t2 = psi_image(t1)
        if psi_image(t2) != t or t2 == t:
            raise AssertionError(f"psi does not act with order 3 on {t}")
        cycles.append((t, t1, t2))
        seen.update((t, t1, t2))
    return OrbitDecomposition(p, tuple(fixed), tuple(cycles))


def stabilizer_matrix(t: CanonicalTriangle) -> UnimodularMatrix | None:
    """The order-3 element of PSL(2,Z) cycling oo -> k/p -> (k+1)/p -> oo, if it exists.

    Found by solving for the Mobius map through the three vertices; the map is
    integral exactly when p divides k^2 + k + 1, and then equals
    (k, -(k^2+k+1)/p; p, -(k+1)).
    """
    v0, v1, v2 = t.vertices
    a, b, c, d = mobius_through((v0, v1, v2), (v1, v2, v0))
    if a * d - b * c != 1:
        return None
    return UnimodularMatrix(a, b, c, d)


def stabilizer_closed_form(t: CanonicalTriangle) -> UnimodularMatrix | None:
    p, k = t.p, t.k
    q, r = divmod(k * k + k + 1, p)
    if r:
        return None
    return UnimodularMatrix(k, -q, p, -(k + 1))


def fixed_point(m: UnimodularMatrix) -> QuadraticPoint:
    """The fixed point in H of an elliptic element.

    Solves c z^2 + (d - a) z - b = 0; the discriminant (a + d)^2 - 4 is -3
    for order 3 and -4 for order 2.
    """
    a, b, c, d = m.entries
    disc = (a + d) ** 2 - 4
    if disc >= 0 or c == 0:
        raise ValueError(f"{m} is not elliptic")
    x = Fraction(a - d, 2 * c)
    # sqrt(disc) = sqrt(-disc) * i, write -disc = rad * s^2
    rad = 3 if disc == -3 else 1
    s = 1 if disc == -3 else 2
    return QuadraticPoint(x, Fraction(s, 2 * c), rad)


def barycenter(t: CanonicalTriangle) -> QuadraticPoint:
    m = stabilizer_matrix(t)
    if m is None:
        raise ValueError(f"{t} is not psi-fixed; its barycenter is not computed")
    return fixed_point(m)


@dataclass(frozen=True)
class IncidenceCensus:
    p: int
    triangle_count: int
    per_cusp: dict[CuspClass, int]
    spike_total: int

    @property
    def ok(self) -> bool:
        f = self.triangle_count
        return (
            f == 2 * (self.p - 2)
            and all(n == f for n in self.per_cusp.values())
            and self.spike_total == 3 * f
            and sum(self.per_cusp.values()) == 3 * f
        )


def incidence_census(p: int) -> IncidenceCensus:
    """Count triangles incident at each cusp by transporting the oo-incident family.

    For each cusp, a coset representative carrying oo into that cusp maps the
    canonical family to the triangles incident there; the distinct images are
    counted and their spikes at that cusp tallied.
    """
    triangles = enumerate_triangles(p)
    transporters = {}
    for g in coset_representatives():
        cls = cusp_class(apply_to_cusp(g, INFINITY))
        transporters.setdefault(cls, g)
    per_cusp = {}
    for cls in (CuspClass.ZERO, CuspClass.ONE, CuspClass.INFINITY):
        g = transporters[cls]
        images = {transport(g, t) for t in triangles}
        per_cusp[cls] = sum(
            1 for t in images for v in t.vertices if cusp_class(v) is cls
        )
    spikes = sum(len(t.vertices) for t in triangles if is_properly_immersed(t))
    return IncidenceCensus(p, len(triangles), per_cusp, spikes)
