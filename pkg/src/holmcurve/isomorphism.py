"""The birational group isomorphism between H(Q) and E(Q).

Forward map, for a point (x, y) on the Holm cubic:

    ( kl(kx - ly) / (lx - ky),  kl(k^2 - l^2) / (lx - ky) )

with the identity convention (0, 0) <-> infinity.  Inverse map, for an
affine (x, y) on the Weierstrass curve:

    ( k(x - l^2) / y,  l(x - k^2) / y ).

On the Holm cubic the denominator lx - ky vanishes only at the identity:
lx = ky substituted into the curve equation forces x^3 * l(l^2 - k^2) = 0,
hence x = y = 0.  Reaching that branch for a non-identity point therefore
signals an upstream bug, not a representable outcome.
"""

from __future__ import annotations

from fractions import Fraction

from .curves import EPoint, HPoint, HolmParams, INFINITY, H_IDENTITY, on_E, on_H, curve_from_params
from .errors import ConsistencyError, ContradictionError, ValidationError


def gamma(params: HolmParams, p: HPoint) -> EPoint:
    """Map a Holm-curve point to the Weierstrass curve.  (0, 0) maps to
    infinity; every other on-curve point has lx - ky != 0."""
    if not on_H(params, p):
        raise ValidationError(f"point {p} is not on the Holm curve for (k, l) = ({params.k}, {params.l})")
    if p.is_identity:
        return INFINITY
    k, l = params.k, params.l
    den = l * p.x - k * p.y
    if den == 0:
        raise ConsistencyError(
            f"lx - ky vanished at non-identity point {p}; impossible on the curve"
        )
    kl = k * l
    return EPoint(kl * (k * p.x - l * p.y) / den, kl * (k * k - l * l) / den)


def gamma_inv(params: HolmParams, p: EPoint) -> HPoint:
    """Map a Weierstrass-curve point back to the Holm cubic.  Infinity maps
    to (0, 0).  An affine rational point with y = 0 cannot exist on a
    Holm-derived curve, so encountering one is a contradiction finding."""
    if p.is_infinity:
        return H_IDENTITY
    if p.y == 0:
        raise ContradictionError(
            f"cannot invert {p}: no rational point with y = 0 exists on a "
            "Holm-derived curve"
        )
    curve = curve_from_params(params)
    if not on_E(curve, p):
        raise ValidationError(f"point {p} is not on {curve}")
    k, l = params.k, params.l
    return HPoint(k * (p.x - l * l) / p.y, l * (p.x - k * k) / p.y)
