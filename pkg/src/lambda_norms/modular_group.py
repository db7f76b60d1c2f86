"""PSL(2,Z): normalized matrices, Mobius actions, Gamma(2) and its cosets."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .exact_core import (
    CuspClass,
    ExtendedRational,
    QuadraticPoint,
    cusp_class,
    reduce,
)


@dataclass(frozen=True, init=False)
class UnimodularMatrix:
    """An element of PSL(2,Z), stored as the representative with c > 0, or c = 0 and d > 0.

    ``UnimodularMatrix(a, b, c, d)`` accepts either sign and normalizes, so
    equality of two instances is equality in PSL(2,Z).
    """

    a: int
    b: int
    c: int
    d: int

    def __init__(self, a: int, b: int, c: int, d: int):
        if a * d - b * c != 1:
            raise ValueError(f"determinant of ({a}, {b}, {c}, {d}) is {a * d - b * c}, not 1")
        if c < 0 or (c == 0 and d < 0):
            a, b, c, d = -a, -b, -c, -d
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def trace(self) -> int:
        """Trace of the normalized representative (so well defined, sign included)."""
        return self.a + self.d

    def inverse(self) -> UnimodularMatrix:
        return UnimodularMatrix(self.d, -self.b, -self.c, self.a)

    def __matmul__(self, other: UnimodularMatrix) -> UnimodularMatrix:
        return compose(self, other)

    def __pow__(self, n: int) -> UnimodularMatrix:
        base = self if n >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(n)):
            result = compose(result, base)
        return result

    def __str__(self):
        return f"({self.a}, {self.b}; {self.c}, {self.d})"


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
# z -> (z + 1)/(-z), order 3, fixes omega
PSI = UnimodularMatrix(1, 1, -1, 0)
# z -> -1/z, order 2, fixes i
S = UnimodularMatrix(0, -1, 1, 0)
T = UnimodularMatrix(1, 1, 0, 1)
T2 = UnimodularMatrix(1, 2, 0, 1)
L2 = UnimodularMatrix(1, 0, 2, 1)


def compose(m1: UnimodularMatrix, m2: UnimodularMatrix) -> UnimodularMatrix:
    return UnimodularMatrix(
        m1.a * m2.a + m1.b * m2.c,
        m1.a * m2.b + m1.b * m2.d,
        m1.c * m2.a + m1.d * m2.c,
        m1.c * m2.b + m1.d * m2.d,
    )


def apply_to_cusp(m: UnimodularMatrix, r: ExtendedRational) -> ExtendedRational:
    return reduce(m.a * r.num + m.b * r.den, m.c * r.num + m.d * r.den)


def apply_to_point(m: UnimodularMatrix, z: QuadraticPoint) -> QuadraticPoint:
    """Image of z under (az + b)/(cz + d), exact in Q(sqrt(-d))."""
    # w = cz + d, so |w|^2 = (cx + d)^2 + c^2 y^2 rad
    rad = z.d
    wx = m.c * z.x + m.d
    denom = wx * wx + m.c * m.c * z.y * z.y * rad
    # (az + b) * conj(cz + d), real part
    ux = m.a * z.x + m.b
    real = ux * wx + m.a * m.c * z.y * z.y * rad
    return QuadraticPoint(real / denom, z.y / denom, rad)


def in_gamma2(m: UnimodularMatrix) -> bool:
    return m.a % 2 == 1 and m.b % 2 == 0 and m.c % 2 == 0 and m.d % 2 == 1


def mod2_image(m: UnimodularMatrix) -> tuple[int, int, int, int]:
    """Image in SL(2, F_2); well defined on PSL since -1 = 1 mod 2."""
    return (m.a % 2, m.b % 2, m.c % 2, m.d % 2)


def reduce_cusp_to_infinity(r: ExtendedRational) -> UnimodularMatrix:
    """Return gamma in Gamma(2) with gamma(r) = oo.

    For r = a/c with a odd and c even, pick u, v with ua + vc = 1; the matrix
    (u, v; -c, a) sends r to 1/0. Shifting (u, v) by t*(c, -a) makes v even,
    and then the matrix is the identity mod 2.
    """
    if cusp_class(r) is not CuspClass.INFINITY:
        raise ValueError(f"{r} is not in the Gamma(2)-orbit of oo")
    a, c = r.num, r.den
    if c == 0:
        return IDENTITY
    u = pow(a, -1, c)
    v = (1 - u * a) // c
    if v % 2:
        u, v = u + c, v - a
    return UnimodularMatrix(u, v, -c, a)


def coset_representatives() -> list[UnimodularMatrix]:
    """Six fixed representatives of PSL(2,Z)/Gamma(2), one per element of SL(2, F_2).

    Order: identity, z+1, psi, psi^2, -1/z, z/(z+1).
    """
    return [IDENTITY, T, PSI, PSI @ PSI, S, UnimodularMatrix(1, 0, 1, 1)]


def cusp_permutation(m: UnimodularMatrix) -> dict[CuspClass, CuspClass]:
    """The permutation of the three cusps of H/Gamma(2) induced by m."""
    base = {
        CuspClass.ZERO: reduce(0, 1),
        CuspClass.ONE: reduce(1, 1),
        CuspClass.INFINITY: reduce(1, 0),
    }
    return {cls: cusp_class(apply_to_cusp(m, r)) for cls, r in base.items()}


def mobius_through(
    src: tuple[ExtendedRational, ExtendedRational, ExtendedRational],
    dst: tuple[ExtendedRational, ExtendedRational, ExtendedRational],
) -> tuple[int, int, int, int]:
    """Primitive integer matrix (up to sign) of the Mobius map sending src[i] to dst[i].

    The determinant of the result need not be 1; it is 1 exactly when the map
    lies in PSL(2,Z), and negative when the map reverses orientation.
    """

    def frame(pts):
        # columns alpha*v1, beta*v2 with alpha*v1 + beta*v2 = v3, scaled by det(v1, v2)
        (p1, q1), (p2, q2), (p3, q3) = ((pt.num, pt.den) for pt in pts)
        alpha = p3 * q2 - p2 * q3
        beta = p1 * q3 - p3 * q1
        if p1 * q2 - p2 * q1 == 0 or alpha == 0 or beta == 0:
            raise ValueError("points must be distinct")
        return (alpha * p1, beta * p2, alpha * q1, beta * q2)

    pa, pb, pc, pd = frame(src)
    qa, qb, qc, qd = frame(dst)
    # Q * adj(P), a scalar multiple of Q * P^{-1}
    ints = (
        qa * pd - qb * pc,
        -qa * pb + qb * pa,
        qc * pd - qd * pc,
        -qc * pb + qd * pa,
    )
    g = gcd(*ints)
    return tuple(e // g for e in ints)
