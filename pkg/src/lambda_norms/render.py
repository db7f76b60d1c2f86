"""Deterministic SVG of Ford circles, the arcs of lambda-length p at oo, and fixed triangles."""

from __future__ import annotations

import decimal
from decimal import Decimal
from fractions import Fraction
from math import gcd
from xml.sax.saxutils import escape

from .exact_core import reduce
from .lambda_geometry import ford_circle, incident_arc_indices
from .triangle_orbits import barycenter, orbit_decomposition

SCALE = 512
_CTX = decimal.Context(prec=40)


def fmt(value: Fraction | Decimal | int) -> str:
    """Decimal string with 12 significant digits, computed without floats."""
    if isinstance(value, Fraction):
        value = _CTX.divide(Decimal(value.numerator), Decimal(value.denominator))
    value = Decimal(value)
    if value == 0:
        return "0"
    s = format(_CTX.plus(value).normalize(decimal.Context(prec=12)), "f")
    if "." in s:
        s = s.rstrip("0").rstrip(".")
    return "0" if s in ("-0", "") else s


def render_svg(p: int, window: tuple[Fraction, Fraction] = (Fraction(0), Fraction(2)), den_limit: int = 32) -> str:
    lo, hi = Fraction(window[0]), Fraction(window[1])
    if hi <= lo:
        raise ValueError(f"degenerate window [{lo}, {hi}]")
    if den_limit < 1:
        raise ValueError("denominator limit must be positive")
    od = orbit_decomposition(p)
    fixed = set(od.fixed)
    top = Fraction(5, 4)
    width = (hi - lo) * SCALE
    height = top * SCALE

    def X(x: Fraction) -> str:
        return fmt((x - lo) * SCALE)

    def Y(y: Fraction) -> str:
        return fmt((top - y) * SCALE)

    out = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{fmt(width)}" '
        f'height="{fmt(height)}" viewBox="0 0 {fmt(width)} {fmt(height)}">',
        f"<title>{escape(f'lambda-length {p} arcs and triangles on H/Gamma(2)')}</title>",
        f'<rect x="0" y="0" width="{fmt(width)}" height="{fmt(height)}" fill="white"/>',
    ]

    # horoball {Im z > 1} at oo
    out.append('<g id="ford-circles" fill="none" stroke="#7f7f7f" stroke-width="0.5">')
    out.append(f'<line x1="0" y1="{Y(Fraction(1))}" x2="{fmt(width)}" y2="{Y(Fraction(1))}"/>')
    for n in range(1, den_limit + 1):
        r = Fraction(1, 2 * n * n)
        m_lo = (lo - r) * n
        m_start = m_lo.numerator // m_lo.denominator
        m = m_start
        while Fraction(m, n) - r <= hi:
            if gcd(m, n) == 1 and Fraction(m, n) + r >= lo:
                fc = ford_circle(reduce(m, n))
                cx, cy = fc.center
                out.append(f'<circle cx="{X(cx)}" cy="{Y(cy)}" r="{fmt(fc.radius * SCALE)}"/>')
            m += 1
    out.append("</g>")

    # lifts of arcs of lambda-length p at oo, in every strip translate meeting the window
    shifts = range((lo // 2) - 1, (hi // 2) + 2)
    arcs = incident_arc_indices(p)
    out.append('<g id="arcs" stroke="#1f4e9c" stroke-width="1">')
    for s in shifts:
        for k in arcs:
            x = Fraction(k, p) + 2 * s
            if lo <= x <= hi:
                out.append(f'<line x1="{X(x)}" y1="{Y(top)}" x2="{X(x)}" y2="{Y(Fraction(0))}"/>')
    out.append("</g>")

    out.append('<g id="triangles" stroke="#1f4e9c" stroke-width="1">')
    marks = []
    for s in shifts:
        for t in sorted(fixed | {x for cyc in od.three_cycles for x in cyc}):
            a = Fraction(t.k, p) + 2 * s
            b = Fraction(t.k + 1, p) + 2 * s
            if b < lo or a > hi:
                continue
            rad = fmt(Fraction(1, 2 * p) * SCALE)
            path = (
                f"M {X(a)} {Y(top)} L {X(a)} {Y(Fraction(0))} "
                f"A {rad} {rad} 0 0 1 {X(b)} {Y(Fraction(0))} L {X(b)} {Y(top)}"
            )
            if t in fixed:
                out.append(
                    f'<path class="fixed" d="{path} Z" fill="#f2a33a" fill-opacity="0.45" '
                    f'stroke="#c0392b" stroke-width="1.5"/>'
                )
                bc = barycenter(t)
                # y = bc.y * sqrt(3)
                by = _CTX.multiply(
                    _CTX.divide(Decimal(bc.y.numerator), Decimal(bc.y.denominator)),
                    _CTX.sqrt(Decimal(bc.d)),
                )
                by_px = _CTX.multiply(_CTX.subtract(Decimal(top.numerator) / Decimal(top.denominator), by), SCALE)
                marks.append(
                    f'<circle class="barycenter" cx="{X(bc.x + 2 * s)}" cy="{fmt(by_px)}" r="3" fill="#c0392b"/>'
                )
            else:
                out.append(f'<path class="cycle" d="{path}" fill="none"/>')
    out.append("</g>")
    out.append('<g id="barycenters">')
    out.extend(marks)
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
