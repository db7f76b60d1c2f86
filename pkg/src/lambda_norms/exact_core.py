"""Exact arithmetic primitives: cusps, quadratic points, Eisenstein/Gaussian integers.

Everything here is built on Python ints and ``fractions.Fraction``; there is
no floating point anywhere in the package core.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy


class CuspClass(enum.Enum):
    """The three Gamma(2)-orbits of Q u {oo}, i.e. the cusps of H/Gamma(2)."""

    ZERO = "0"
    ONE = "1"
    INFINITY = "oo"


_PARITY_TABLE = {
    (0, 1): CuspClass.ZERO,
    (1, 1): CuspClass.ONE,
    (1, 0): CuspClass.INFINITY,
}


@dataclass(frozen=True)
class ExtendedRational:
    """A reduced element num/den of Q u {oo}; infinity is stored as 1/0.

    Use :func:`reduce` to build one from an arbitrary pair. The constructor
    only validates.
    """

    num: int
    den: int

    def __post_init__(self):
        if self.den < 0:
            raise ValueError(f"denominator must be non-negative: {self.num}/{self.den}")
        if self.den == 0:
            if self.num != 1:
                raise ValueError("infinity must be stored as 1/0")
        elif gcd(self.num, self.den) != 1:
            raise ValueError(f"{self.num}/{self.den} is not in lowest terms")

    @property
    def is_infinity(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.den == 0:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __str__(self):
        if self.den == 0:
            return "oo"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"


INFINITY = ExtendedRational(1, 0)


def reduce(num: int, den: int) -> ExtendedRational:
    """Return the unique reduced representative of the projective pair (num : den)."""
    if num == 0 and den == 0:
        raise ValueError("(0, 0) is not a point of the projective line")
    if den == 0:
        return INFINITY
    if den < 0:
        num, den = -num, -den
    g = gcd(num, den)
    # already reduced, skip the validating constructor
    r = object.__new__(ExtendedRational)
    object.__setattr__(r, "num", num // g)
    object.__setattr__(r, "den", den // g)
    return r


def cusp_class(r: ExtendedRational) -> CuspClass:
    return _PARITY_TABLE[(r.num % 2, r.den % 2)]


@dataclass(frozen=True)
class QuadraticPoint:
    """The point x + y*sqrt(d)*i of the upper half-plane, with x, y rational.

    ``d`` is 1 for points of Q(i) and 3 for points of Q(sqrt(-3)).
    """

    x: Fraction
    y: Fraction
    d: int

    def __post_init__(self):
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))
        if self.d not in (1, 3):
            raise ValueError(f"radicand must be 1 or 3, got {self.d}")
        if self.y <= 0:
            raise ValueError("point must lie in the open upper half-plane")

    def __str__(self):
        root = "" if self.d == 1 else f"*sqrt({self.d})"
        return f"{self.x} + {self.y}{root}*i"


I = QuadraticPoint(Fraction(0), Fraction(1), 1)
OMEGA = QuadraticPoint(Fraction(-1, 2), Fraction(1, 2), 3)


@dataclass(frozen=True)
class EisensteinInt:
    """a + b*omega with omega = exp(2*pi*i/3)."""

    a: int
    b: int

    def __str__(self):
        return _format_linear(self.a, self.b, "ω")


@dataclass(frozen=True)
class GaussianInt:
    """c + d*i."""

    c: int
    d: int

    def __str__(self):
        return _format_linear(self.c, self.d, "i")


def _format_linear(x: int, y: int, unit: str) -> str:
    coeff = "" if abs(y) == 1 else str(abs(y))
    if y == 0:
        return str(x)
    if x == 0:
        return f"{'-' if y < 0 else ''}{coeff}{unit}"
    sign = "-" if y < 0 else "+"
    return f"{x} {sign} {coeff}{unit}"


def norm_eisenstein(e: EisensteinInt) -> int:
    return e.a * e.a - e.a * e.b + e.b * e.b


def norm_gaussian(g: GaussianInt) -> int:
    return g.c * g.c + g.d * g.d


def is_prime(n: int) -> bool:
    # sympy.isprime is deterministic below 2**64 and BPSW above
    return n >= 2 and bool(sympy.isprime(n))


def require_odd_prime(p: int) -> None:
    if p == 2:
        raise ValueError("p = 2 is excluded: the enumeration needs an odd prime")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
