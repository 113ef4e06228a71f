"""Curve parameter and point types, on-curve predicates, integral-point scan.

Two curves live side by side: the Holm cubic k(y^3 - y) = l(x^3 - x) with
identity (0, 0), and the short Weierstrass curve y^2 = x^3 + ax + b it is
isomorphic to, with a = -3k^2l^2 and b = k^2l^2(k^2 + l^2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ValidationError
from .exact_arith import is_perfect_square, is_squarefree

_Coord = Union[Fraction, int, str]


@dataclass(frozen=True)
class HolmParams:
    """Validated (k, l): distinct, positive, coprime, squarefree integers."""

    k: int
    l: int

    def __post_init__(self) -> None:
        k, l = self.k, self.l
        if not isinstance(k, int) or not isinstance(l, int):
            raise ValidationError(f"k and l must be integers, got ({k!r}, {l!r})")
        if k < 1 or l < 1:
            raise ValidationError(f"k and l must be positive, got ({k}, {l})")
        if k == l:
            raise ValidationError(f"k and l must be distinct, got k = l = {k}")
        if math.gcd(k, l) != 1:
            raise ValidationError(f"k and l must be coprime, got gcd({k}, {l}) = {math.gcd(k, l)}")
        if not is_squarefree(k):
            raise ValidationError(f"k = {k} is not squarefree")
        if not is_squarefree(l):
            raise ValidationError(f"l = {l} is not squarefree")


@dataclass(frozen=True)
class WeierstrassCurve:
    """y^2 = x^3 + ax + b with nonzero discriminant.  ``params`` is set when
    the curve was derived from Holm parameters."""

    a: int
    b: int
    params: Optional[HolmParams] = None

    def __post_init__(self) -> None:
        if 4 * self.a**3 + 27 * self.b**2 == 0:
            raise ValidationError(f"singular curve: 4a^3 + 27b^2 = 0 for a={self.a}, b={self.b}")
        if self.params is not None:
            k, l = self.params.k, self.params.l
            if self.a != -3 * k**2 * l**2 or self.b != k**2 * l**2 * (k**2 + l**2):
                raise ValidationError(
                    f"(a, b) = ({self.a}, {self.b}) does not match params (k, l) = ({k}, {l})"
                )

    @property
    def discriminant(self) -> int:
        return -16 * (4 * self.a**3 + 27 * self.b**2)

    def rhs(self, x: Fraction) -> Fraction:
        """The cubic x^3 + ax + b."""
        return x * x * x + self.a * x + self.b

    def __str__(self) -> str:
        sa, sb = ("-" if v < 0 else "+" for v in (self.a, self.b))
        return f"y^2 = x^3 {sa} {abs(self.a)}x {sb} {abs(self.b)}"


@dataclass(frozen=True)
class EPoint:
    """A point on a Weierstrass curve: affine (x, y) or the point at
    infinity (both coordinates None).  Coordinates are exact rationals."""

    x: Optional[Fraction] = None
    y: Optional[Fraction] = None

    def __post_init__(self) -> None:
        if (self.x is None) != (self.y is None):
            raise ValidationError("EPoint needs both coordinates or neither")
        if self.x is not None:
            object.__setattr__(self, "x", Fraction(self.x))
            object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def is_integral(self) -> bool:
        """True iff both reduced coordinates are integers.  Infinity is not
        an integral point."""
        if self.is_infinity:
            return False
        return self.x.denominator == 1 and self.y.denominator == 1

    def __str__(self) -> str:
        if self.is_infinity:
            return "INFINITY"
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


#: The identity of E(Q).
INFINITY = EPoint()


@dataclass(frozen=True)
class HPoint:
    """An affine rational point on the Holm cubic.  (0, 0) is the identity;
    there is no point at infinity on this model."""

    x: Fraction
    y: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", Fraction(self.x))
        object.__setattr__(self, "y", Fraction(self.y))

    @property
    def is_identity(self) -> bool:
        return self.x == 0 and self.y == 0

    def __str__(self) -> str:
        return f"({_fmt(self.x)}, {_fmt(self.y)})"


#: The identity of H(Q).
H_IDENTITY = HPoint(Fraction(0), Fraction(0))


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def curve_from_params(params: HolmParams) -> WeierstrassCurve:
    """The Weierstrass curve attached to (k, l):
    a = -3k^2l^2, b = k^2l^2(k^2 + l^2)."""
    k, l = params.k, params.l
    return WeierstrassCurve(a=-3 * k**2 * l**2, b=k**2 * l**2 * (k**2 + l**2), params=params)


def holm_curve(k: int, l: int) -> WeierstrassCurve:
    """Convenience: validate (k, l) and build the derived curve."""
    return curve_from_params(HolmParams(k, l))


def on_E(curve: WeierstrassCurve, p: EPoint) -> bool:
    """Exact check of y^2 = x^3 + ax + b (infinity counts as on-curve)."""
    if p.is_infinity:
        return True
    return p.y * p.y == curve.rhs(p.x)


def on_H(params: HolmParams, p: HPoint) -> bool:
    """Exact check of k(y^3 - y) = l(x^3 - x)."""
    k, l = params.k, params.l
    return k * (p.y**3 - p.y) == l * (p.x**3 - p.x)


def default_x_bound(curve: WeierstrassCurve) -> int:
    """Scan half-width guaranteeing the canonical points k^2 and l^2 fall
    inside the window for every valid parameter pair."""
    if curve.params is not None:
        return max(10**4, 4 * curve.b)
    return 10**4


def find_integral_points(
    curve: WeierstrassCurve, x_bound: Optional[int] = None
) -> list[EPoint]:
    """All points with integer x in [-x_bound, x_bound] and integer y
    solving y^2 = x^3 + ax + b.  Both signs of y are returned (y = 0 once);
    sorted by (x, y).  The scan is a direct sweep and is deterministic.
    """
    if x_bound is None:
        x_bound = default_x_bound(curve)
    if x_bound < 1:
        raise ValidationError(f"x_bound must be >= 1, got {x_bound}")
    points: list[EPoint] = []
    a, b = curve.a, curve.b
    for x in range(-x_bound, x_bound + 1):
        rhs = x * x * x + a * x + b
        if rhs < 0:
            continue
        y = is_perfect_square(rhs)
        if y is None:
            continue
        if y == 0:
            points.append(EPoint(x, 0))
        else:
            points.append(EPoint(x, -y))
            points.append(EPoint(x, y))
    points.sort(key=lambda p: (p.x, p.y))
    return points
