"""Chord-tangent group law on E(Q), scalar multiples, and the transported
group law on H(Q).

All arithmetic is exact rational; there is no floating-point path.  The
doubling closed form is kept as an independent route so the chord-tangent
law and the division-polynomial machinery can cross-validate each other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from .curves import EPoint, HPoint, HolmParams, INFINITY, WeierstrassCurve, curve_from_params
from .errors import ValidationError
from .isomorphism import gamma, gamma_inv


def e_negate(curve: WeierstrassCurve, p: EPoint) -> EPoint:
    if p.is_infinity:
        return INFINITY
    return EPoint(p.x, -p.y)


def e_add(curve: WeierstrassCurve, p: EPoint, q: EPoint) -> EPoint:
    """Standard chord-tangent addition.  Doubling a point with y = 0 yields
    infinity (2-torsion), never a division error."""
    if p.is_infinity:
        return q
    if q.is_infinity:
        return p
    if p.x == q.x:
        if p.y == -q.y:
            return INFINITY
        # p == q with y != 0: tangent line
        lam = (3 * p.x * p.x + curve.a) / (2 * p.y)
    else:
        lam = (q.y - p.y) / (q.x - p.x)
    x3 = lam * lam - p.x - q.x
    y3 = lam * (p.x - x3) - p.y
    return EPoint(x3, y3)


def e_double_closed_form(curve: WeierstrassCurve, p: EPoint) -> EPoint:
    """Doubling via the closed form

        x(2P) = (x^4 - 2ax^2 - 8bx + a^2) / (4y^2)
        y(2P) = (x^6 + 5ax^4 + 20bx^3 - 5a^2x^2 - 4abx - a^3 - 8b^2) / (8y^3)

    kept independent of e_add as a transcription cross-check."""
    if p.is_infinity or p.y == 0:
        return INFINITY
    a, b = curve.a, curve.b
    x, y = p.x, p.y
    num_x = x**4 - 2 * a * x**2 - 8 * b * x + a * a
    num_y = x**6 + 5 * a * x**4 + 20 * b * x**3 - 5 * a * a * x**2 - 4 * a * b * x - a**3 - 8 * b * b
    return EPoint(num_x / (4 * y * y), num_y / (8 * y**3))


def e_scalar_mul(curve: WeierstrassCurve, n: int, p: EPoint) -> EPoint:
    """n*P by double-and-add; negative n via negation, 0*P = infinity."""
    if n < 0:
        return e_scalar_mul(curve, -n, e_negate(curve, p))
    acc = INFINITY
    addend = p
    while n:
        if n & 1:
            acc = e_add(curve, acc, addend)
        n >>= 1
        if n:
            addend = e_add(curve, addend, addend)
    return acc


def h_negate(params: HolmParams, p: HPoint) -> HPoint:
    """Inverse in the transported group; on the Holm cubic it is the
    antipode (-x, -y)."""
    return HPoint(-p.x, -p.y)


def h_add(params: HolmParams, p: HPoint, q: HPoint) -> HPoint:
    """Group law on H(Q) transported through the isomorphism:
    gamma_inv(gamma(p) + gamma(q))."""
    curve = curve_from_params(params)
    return gamma_inv(params, e_add(curve, gamma(params, p), gamma(params, q)))


def h_scalar_mul(params: HolmParams, n: int, p: HPoint) -> HPoint:
    curve = curve_from_params(params)
    return gamma_inv(params, e_scalar_mul(curve, n, gamma(params, p)))


def order_upto(curve: WeierstrassCurve, p: EPoint, max_order: int = 12) -> Optional[int]:
    """Least m in 1..max_order with m*P = infinity, or None.  The default
    cap of 12 is the largest order a rational torsion point can have."""
    if max_order < 1:
        raise ValidationError(f"max_order must be >= 1, got {max_order}")
    acc = INFINITY
    for m in range(1, max_order + 1):
        acc = e_add(curve, acc, p)
        if acc.is_infinity:
            return m
    return None
