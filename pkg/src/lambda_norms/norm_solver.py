"""Eisenstein and Gaussian norm representations of primes, read off from fixed triangles and arc midpoints.

The geometric route: a psi-fixed triangle has an order-3 stabilizer m in
PSL(2,Z); conjugating psi to m by some g gives g(omega) = barycenter, and the
bottom row (c, d) of g satisfies c^2 - cd + d^2 = p. The Gaussian pipeline is
the same with the order-2 element fixing (k + i)/p and the model z -> -1/z.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import isqrt

from .exact_core import (
    OMEGA,
    I,
    EisensteinInt,
    GaussianInt,
    QuadraticPoint,
    is_prime,
    norm_eisenstein,
    norm_gaussian,
)
from .modular_group import PSI, S, UnimodularMatrix, apply_to_point, compose
from .triangle_orbits import (
    CanonicalTriangle,
    fixed_point,
    orbit_decomposition,
    stabilizer_matrix,
)


class Ring(enum.Enum):
    EISENSTEIN = "eisenstein"
    GAUSSIAN = "gaussian"


@dataclass(frozen=True)
class NormWitness:
    p: int
    ring: Ring
    value: EisensteinInt | GaussianInt
    # elliptic element the conjugator produces from the model
    stabilizer: UnimodularMatrix
    conjugator: UnimodularMatrix
    # fixed point of the stabilizer: barycenter (Eisenstein) or arc midpoint (Gaussian)
    center: QuadraticPoint
    # canonical triangle index (Eisenstein) or midpoint abscissa numerator (Gaussian)
    k: int

    @property
    def pair(self) -> tuple[int, int]:
        v = self.value
        return (v.a, v.b) if isinstance(v, EisensteinInt) else (v.c, v.d)

    @property
    def norm(self) -> int:
        if isinstance(self.value, EisensteinInt):
            return norm_eisenstein(self.value)
        return norm_gaussian(self.value)

    @property
    def model(self) -> UnimodularMatrix:
        return PSI if self.ring is Ring.EISENSTEIN else S

    @property
    def canonical_pair(self) -> tuple[int, int]:
        if self.ring is Ring.EISENSTEIN:
            return canonical_eisenstein(*self.pair)
        return canonical_gaussian(*self.pair)


def canonical_eisenstein(a: int, b: int) -> tuple[int, int]:
    """Representative with 0 < b <= a among the 12 pairs a^2 - ab + b^2 = n related by form symmetries."""
    n = a * a - a * b + b * b
    orbit = set()
    x, y = a, b
    for _ in range(6):
        # multiplication by -omega^2 = 1 + omega: (x + y w)(1 + w) = (x - y) + x w
        x, y = x - y, x
        orbit.update({(x, y), (y, x)})
    good = sorted(q for q in orbit if 0 < q[1] <= q[0])
    assert good and good[0][0] ** 2 - good[0][0] * good[0][1] + good[0][1] ** 2 == n
    return good[0]


def canonical_gaussian(c: int, d: int) -> tuple[int, int]:
    x, y = sorted((abs(c), abs(d)))
    return (x, y)


# ---- integer linear algebra for the conjugator lattice ----


def integer_kernel(rows: list[list[int]]) -> list[list[int]]:
    """Basis of {v in Z^n : A v = 0} (saturated lattice) by unimodular row reduction of [A^T | I]."""
    m = len(rows)
    n = len(rows[0])
    # rows of aug: (A^T row j | e_j)
    aug = [[rows[i][j] for i in range(m)] + [int(j == t) for t in range(n)] for j in range(n)]
    pivot_row = 0
    for col in range(m):
        # Euclid down the column until a single nonzero entry remains
        while True:
            nz = [r for r in range(pivot_row, n) if aug[r][col] != 0]
            if len(nz) <= 1:
                break
            best = min(nz, key=lambda r: abs(aug[r][col]))
            for r in nz:
                if r != best:
                    q = aug[r][col] // aug[best][col]
                    aug[r] = [x - q * y for x, y in zip(aug[r], aug[best])]
        if nz:
            r = nz[0]
            aug[pivot_row], aug[r] = aug[r], aug[pivot_row]
            pivot_row += 1
    return [row[m:] for row in aug[pivot_row:]]


def _commutation_system(m: UnimodularMatrix, model: UnimodularMatrix, sign: int) -> list[list[int]]:
    """Linear map g -> m g - sign * g model on vec(g) = (g11, g12, g21, g22), as a 4x4 matrix."""
    cols = []
    for j in range(4):
        e = [int(j == t) for t in range(4)]
        g11, g12, g21, g22 = e
        left = (
            m.a * g11 + m.b * g21,
            m.a * g12 + m.b * g22,
            m.c * g11 + m.d * g21,
            m.c * g12 + m.d * g22,
        )
        right = (
            g11 * model.a + g12 * model.c,
            g11 * model.b + g12 * model.d,
            g21 * model.a + g22 * model.c,
            g21 * model.b + g22 * model.d,
        )
        cols.append([lv - sign * rv for lv, rv in zip(left, right)])
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def _det(v) -> int:
    return v[0] * v[3] - v[1] * v[2]


def _comb(x: int, u, y: int, w):
    return tuple(x * s + y * t for s, t in zip(u, w))


def _gauss_reduce(u, w):
    """Lagrange-Gauss reduction of a basis with respect to the definite form det(.)."""

    def form(v):
        return _det(v)

    def bilinear(v1, v2):
        # polarization of the quadratic form det
        return (_det(_comb(1, v1, 1, v2)) - _det(v1) - _det(v2))

    if abs(form(u)) > abs(form(w)):
        u, w = w, u
    while True:
        fu = form(u)
        if fu == 0:
            return u, w
        # nearest integer to B(u, w) / (2 Q(u))
        num, den = bilinear(u, w), 2 * fu
        q = (2 * num + den) // (2 * den)
        w = _comb(1, w, -q, u)
        if abs(form(w)) >= abs(fu):
            return u, w
        u, w = w, u


def conjugate_to_model(m: UnimodularMatrix, model: UnimodularMatrix) -> UnimodularMatrix:
    """Return g in PSL(2,Z) with g model g^-1 = m.

    The integer solutions of m g = +-g model form a rank-2 lattice on which
    det is a definite binary quadratic form. After Gauss reduction of a
    lattice basis, vectors of determinant 1 are searched in boxes of doubling
    size. Among the solutions (which differ by powers of the model on the
    right) the one with the largest bottom row (c, d) is returned.
    """
    if abs(m.trace) != abs(model.trace) or abs(model.trace) >= 2:
        raise ValueError(f"{m} and {model} are not elliptic of the same order")
    for sign in (1, -1):
        basis = integer_kernel(_commutation_system(m, model, sign))
        if len(basis) != 2:
            continue
        u, w = _gauss_reduce(tuple(basis[0]), tuple(basis[1]))
        if _det(u) <= 0:
            # det is definite; negative means only det -1 solutions exist
            continue
        bound = 1
        while bound <= 1 << 20:
            sols = [
                _comb(x, u, y, w)
                for x in range(-bound, bound + 1)
                for y in range(-bound, bound + 1)
                if _det(_comb(x, u, y, w)) == 1
            ]
            if sols:
                found = {UnimodularMatrix(*v) for v in sols}
                return max(found, key=lambda g: (g.c, g.d))
            bound *= 2
    raise ArithmeticError(f"{m} is not conjugate to {model} in PSL(2,Z)")


def check_conjugation(g: UnimodularMatrix, model: UnimodularMatrix, m: UnimodularMatrix) -> bool:
    return compose(compose(g, model), g.inverse()) == m


# ---- solvers ----


def _require_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def eisenstein_from_triangle(t: CanonicalTriangle) -> NormWitness:
    stab = stabilizer_matrix(t)
    if stab is None:
        raise ValueError(f"{t} is not psi-fixed")
    if stab.trace != PSI.trace:
        # the other generator of the stabilizer lies in the conjugacy class of psi
        stab = compose(stab, stab)
    g = conjugate_to_model(stab, PSI)
    return NormWitness(
        p=t.p,
        ring=Ring.EISENSTEIN,
        value=EisensteinInt(g.d, g.c),
        stabilizer=stab,
        conjugator=g,
        center=fixed_point(stab),
        k=t.k,
    )


def represent_eisenstein(p: int) -> NormWitness | None:
    """p = N(d + c*omega) read off from the least-k psi-fixed triangle, or None."""
    _require_prime(p)
    if p == 2:
        # no equilateral triangles of lambda-length 2 are properly immersed
        return None
    od = orbit_decomposition(p)
    if not od.fixed:
        return None
    return eisenstein_from_triangle(min(od.fixed))


def gaussian_elliptic(p: int, k: int) -> UnimodularMatrix:
    """Order-2 element fixing (k + i)/p, the midpoint of the arc (oo, k/p)."""
    q, r = divmod(k * k + 1, p)
    if r:
        raise ValueError(f"{p} does not divide {k}^2 + 1")
    return UnimodularMatrix(k, -q, p, -k)


def midpoint_indices(p: int) -> list[int]:
    return [k for k in range(1, max(p, 2)) if (k * k + 1) % p == 0]


def represent_gaussian(p: int) -> NormWitness | None:
    _require_prime(p)
    ks = midpoint_indices(p)
    if not ks:
        return None
    k = ks[0]
    e = gaussian_elliptic(p, k)
    g = conjugate_to_model(e, S)
    return NormWitness(
        p=p,
        ring=Ring.GAUSSIAN,
        value=GaussianInt(g.c, g.d),
        stabilizer=e,
        conjugator=g,
        center=fixed_point(e),
        k=k,
    )


# ---- brute force oracles ----


def brute_force_eisenstein(n: int) -> set[tuple[int, int]]:
    # a^2 - ab + b^2 = (a - b/2)^2 + 3b^2/4 >= 3/4 * max(a, b)^2, so |a|, |b| <= 2 sqrt(n) suffices
    bound = isqrt(4 * n) + 1
    r = range(-bound, bound + 1)
    return {(a, b) for a in r for b in r if a * a - a * b + b * b == n}


def brute_force_gaussian(n: int) -> set[tuple[int, int]]:
    bound = isqrt(n)
    r = range(-bound, bound + 1)
    return {(c, d) for c in r for d in r if c * c + d * d == n}


def audit_witness(w: NormWitness) -> bool:
    """Re-check a witness from scratch: norm, conjugation, fixed point, Im of g(model point)."""
    model_point = OMEGA if w.ring is Ring.EISENSTEIN else I
    g = w.conjugator
    if w.norm != w.p:
        return False
    bottom = (g.d, g.c) if w.ring is Ring.EISENSTEIN else (g.c, g.d)
    if w.pair != bottom:
        return False
    if not check_conjugation(g, w.model, w.stabilizer):
        return False
    if apply_to_point(w.stabilizer, w.center) != w.center:
        return False
    image = apply_to_point(g, model_point)
    if image != w.center:
        return False
    if w.ring is Ring.EISENSTEIN:
        c, d = g.c, g.d
        return image.y * (c * c - c * d + d * d) == model_point.y and image.y * 2 * w.p == 1
    return image.y * w.p == 1
