"""Division polynomials over the coordinate ring of y^2 = x^3 + ax + b.

Ring elements are represented as f(x) + y*g(x) with exact integer
coefficients; multiplication eagerly rewrites y^2 as x^3 + ax + b.  In this
representation psi_n is pure-x for odd n and y times a pure-x polynomial for
even n, which makes the divisions by 2y and 4y in the recurrences checkable
exact divisions.

Definitions (with C = x^3 + ax + b):

    psi_0 = 0, psi_1 = 1, psi_2 = 2y
    psi_3 = 3x^4 + 6ax^2 + 12bx - a^2
    psi_4 = y(4x^6 + 20ax^4 + 80bx^3 - 20a^2x^2 - 16abx - 4a^3 - 32b^2)
    psi_{2n+1} = psi_{n+2} psi_n^3 - psi_{n-1} psi_{n+1}^3          (n >= 2)
    psi_{2n}   = psi_n (psi_{n+2} psi_{n-1}^2 - psi_{n-2} psi_{n+1}^2) / 2y
                                                                    (n >= 3)
    phi_n   = x psi_n^2 - psi_{n-1} psi_{n+1}                        (n >= 1)
    omega_n = (psi_{n-1}^2 psi_{n+2} - psi_{n-2} psi_{n+1}^2) / 4y   (n >= 2)

For n >= 2 and an affine point P with psi_n(P) != 0,

    n*P = (phi_n / psi_n^2, omega_n / psi_n^3)

with no sign or scale correction: the n = 2 case reproduces the doubling
closed form exactly, and the tests pin the convention against the group law
for every sampled n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .curves import EPoint, WeierstrassCurve, on_E
from .errors import ConsistencyError, TorsionDenominatorError, ValidationError

try:  # GMP-backed bignum product for the Kronecker path; pure-int fallback
    import gmpy2 as _gmpy2
except ImportError:
    _gmpy2 = None

Coeffs = tuple[int, ...]

# Above this many coefficient products, multiply via Kronecker substitution.
_KRONECKER_CUTOFF = 4096


def _trim(cs) -> Coeffs:
    cs = list(cs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(u: Coeffs, v: Coeffs) -> Coeffs:
    if len(u) < len(v):
        u, v = v, u
    out = list(u)
    for i, c in enumerate(v):
        out[i] += c
    return _trim(out)


def _pneg(u: Coeffs) -> Coeffs:
    return tuple(-c for c in u)


def _psub(u: Coeffs, v: Coeffs) -> Coeffs:
    return _padd(u, _pneg(v))


def _pscale(u: Coeffs, c: int) -> Coeffs:
    if c == 0:
        return ()
    return tuple(c * a for a in u)


def _pmul_schoolbook(u: Coeffs, v: Coeffs) -> Coeffs:
    out = [0] * (len(u) + len(v) - 1)
    for i, a in enumerate(u):
        if a == 0:
            continue
        for j, b in enumerate(v):
            out[i + j] += a * b
    return _trim(out)


def _pack(cs: list[int], width: int) -> int:
    buf = b"".join(c.to_bytes(width, "little") for c in cs)
    return int.from_bytes(buf, "little")


def _unpack(n: int, width: int, count: int) -> list[int]:
    buf = n.to_bytes(width * count, "little")
    return [
        int.from_bytes(buf[i * width : (i + 1) * width], "little") for i in range(count)
    ]


def _pmul_kronecker(u: Coeffs, v: Coeffs) -> Coeffs:
    """Exact product via evaluation at a power of two.

    Signed coefficients are packed as the difference of two nonnegative
    packings, multiplied as a single big integer, then recovered with
    balanced digits: adding 2^(K-1) to every digit position makes all
    digits of the product nonnegative without carry propagation, because
    every convolution coefficient is strictly below 2^(K-1) in magnitude.
    """
    bits = (
        max(abs(c) for c in u).bit_length()
        + max(abs(c) for c in v).bit_length()
        + min(len(u), len(v)).bit_length()
        + 2
    )
    width = (bits + 7) // 8
    k_bits = width * 8
    a = _pack([c if c > 0 else 0 for c in u], width) - _pack(
        [-c if c < 0 else 0 for c in u], width
    )
    b = _pack([c if c > 0 else 0 for c in v], width) - _pack(
        [-c if c < 0 else 0 for c in v], width
    )
    if _gmpy2 is not None:
        prod = int(_gmpy2.mpz(a) * _gmpy2.mpz(b))
    else:
        prod = a * b
    count = len(u) + len(v) - 1
    half = 1 << (k_bits - 1)
    bias = half * ((1 << (k_bits * count)) - 1) // ((1 << k_bits) - 1)
    digits = _unpack(prod + bias, width, count)
    return _trim(d - half for d in digits)


def _pmul(u: Coeffs, v: Coeffs) -> Coeffs:
    if not u or not v:
        return ()
    if len(u) * len(v) <= _KRONECKER_CUTOFF:
        return _pmul_schoolbook(u, v)
    return _pmul_kronecker(u, v)


def _pdivmod_monic(num: Coeffs, div: Coeffs) -> tuple[Coeffs, Coeffs]:
    """Divide by a monic divisor over the integers."""
    assert div and div[-1] == 1
    rem = list(num)
    dd = len(div) - 1
    if len(rem) - 1 < dd:
        return (), _trim(rem)
    quot = [0] * (len(rem) - dd)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - dd] = c
        for j, d in enumerate(div):
            rem[i - dd + j] -= c * d
    return _trim(quot), _trim(rem)


def _peval(cs: Coeffs, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(cs):
        acc = acc * x + c
    return acc


@dataclass(frozen=True)
class CurvePoly:
    """f(x) + y*g(x) in Z[x, y] / (y^2 - x^3 - ax - b).

    Coefficient tuples are constant-first with no trailing zeros; instances
    are immutable and freely shareable.
    """

    curve: WeierstrassCurve
    f: Coeffs = ()
    g: Coeffs = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "f", _trim(self.f))
        object.__setattr__(self, "g", _trim(self.g))

    @property
    def is_zero(self) -> bool:
        return not self.f and not self.g

    @property
    def is_pure_x(self) -> bool:
        return not self.g

    @property
    def x_degree(self) -> int:
        """Degree in x of the f-part; -1 for the zero polynomial."""
        return len(self.f) - 1

    def _cubic(self) -> Coeffs:
        return (self.curve.b, self.curve.a, 0, 1)

    def __add__(self, other: "CurvePoly") -> "CurvePoly":
        self._same_curve(other)
        return CurvePoly(self.curve, _padd(self.f, other.f), _padd(self.g, other.g))

    def __sub__(self, other: "CurvePoly") -> "CurvePoly":
        self._same_curve(other)
        return CurvePoly(self.curve, _psub(self.f, other.f), _psub(self.g, other.g))

    def __neg__(self) -> "CurvePoly":
        return CurvePoly(self.curve, _pneg(self.f), _pneg(self.g))

    def __mul__(self, other: Union["CurvePoly", int]) -> "CurvePoly":
        if isinstance(other, int):
            return CurvePoly(self.curve, _pscale(self.f, other), _pscale(self.g, other))
        self._same_curve(other)
        ff = _pmul(self.f, other.f)
        gg = _pmul(self.g, other.g)
        cross = _padd(_pmul(self.f, other.g), _pmul(self.g, other.f))
        return CurvePoly(self.curve, _padd(ff, _pmul(gg, self._cubic())), cross)

    __rmul__ = __mul__

    def square(self) -> "CurvePoly":
        return self * self

    def cube(self) -> "CurvePoly":
        return self.square() * self

    def times_x(self) -> "CurvePoly":
        return CurvePoly(
            self.curve,
            (0,) + self.f if self.f else (),
            (0,) + self.g if self.g else (),
        )

    def div_exact_y(self, scalar: int) -> "CurvePoly":
        """Divide by scalar*y, requiring exactness in the ring.

        From r * scalar*y = f + y*g: the new f-part is g/scalar and the new
        g-part is f/(scalar*C), so g needs coefficients divisible by scalar
        and f must be a polynomial multiple of the curve cubic.
        """
        new_f = []
        for c in self.g:
            q, r = divmod(c, scalar)
            if r:
                raise ConsistencyError(
                    f"inexact division by {scalar}y: coefficient {c} not divisible by {scalar}"
                )
            new_f.append(q)
        if self.f:
            quot, rem = _pdivmod_monic(self.f, self._cubic())
            if rem:
                raise ConsistencyError(
                    f"inexact division by {scalar}y: remainder {rem} modulo the curve cubic"
                )
        else:
            quot = ()
        new_g = []
        for c in quot:
            q, r = divmod(c, scalar)
            if r:
                raise ConsistencyError(
                    f"inexact division by {scalar}y: coefficient {c} not divisible by {scalar}"
                )
            new_g.append(q)
        return CurvePoly(self.curve, tuple(new_f), tuple(new_g))

    def evaluate(self, x: Union[Fraction, int], y: Union[Fraction, int, None] = None) -> Fraction:
        """Value at (x, y); y may be omitted for pure-x elements."""
        x = Fraction(x)
        val = _peval(self.f, x)
        if self.g:
            if y is None:
                raise ValidationError("y coordinate required to evaluate a mixed element")
            val += Fraction(y) * _peval(self.g, x)
        return val

    def __str__(self) -> str:
        return f"CurvePoly(f={list(self.f)}, g={list(self.g)})"

    def _same_curve(self, other: "CurvePoly") -> None:
        if self.curve != other.curve:
            raise ValidationError("cannot combine ring elements from different curves")


class DivPolyCache:
    """Memoized psi/phi/omega tables for one curve.

    Filling is bottom-up and idempotent.  The fill path is not synchronized:
    warm the cache before sharing across threads, or serialize access
    externally.  A filled cache is immutable in practice and safe for
    concurrent reads.
    """

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve
        a, b = curve.a, curve.b
        self._psi: dict[int, CurvePoly] = {
            0: CurvePoly(curve),
            1: CurvePoly(curve, f=(1,)),
            2: CurvePoly(curve, g=(2,)),
            3: CurvePoly(curve, f=(-a * a, 12 * b, 6 * a, 0, 3)),
            4: CurvePoly(
                curve,
                g=(
                    -4 * a**3 - 32 * b * b,
                    -16 * a * b,
                    -20 * a * a,
                    80 * b,
                    20 * a,
                    0,
                    4,
                ),
            ),
        }
        self._phi: dict[int, CurvePoly] = {}
        self._omega: dict[int, CurvePoly] = {}
        self._psisq: dict[int, CurvePoly] = {}

    def psi(self, n: int) -> CurvePoly:
        if n < 0:
            raise ValidationError(f"psi index must be >= 0, got {n}")
        self._fill_psi(n)
        return self._psi[n]

    def _fill_psi(self, n: int) -> None:
        for m in range(5, n + 1):
            if m in self._psi:
                continue
            psi = self._psi
            if m % 2:
                h = (m - 1) // 2
                self._psi[m] = psi[h + 2] * psi[h].cube() - psi[h - 1] * psi[h + 1].cube()
            else:
                h = m // 2
                num = psi[h] * (psi[h + 2] * psi[h - 1].square() - psi[h - 2] * psi[h + 1].square())
                self._psi[m] = num.div_exact_y(2)

    def phi(self, n: int) -> CurvePoly:
        if n < 1:
            raise ValidationError(f"phi index must be >= 1, got {n}")
        if n not in self._phi:
            result = self.psi_squared(n).times_x() - self.psi(n - 1) * self.psi(n + 1)
            if not result.is_pure_x:
                raise ConsistencyError(f"phi_{n} has a nonzero y-part after reduction")
            self._phi[n] = result
        return self._phi[n]

    def omega(self, n: int) -> CurvePoly:
        if n < 2:
            raise ValidationError(f"omega index must be >= 2, got {n}")
        if n not in self._omega:
            num = self.psi_squared(n - 1) * self.psi(n + 2) - self.psi(n - 2) * self.psi_squared(n + 1)
            self._omega[n] = num.div_exact_y(4)
        return self._omega[n]

    def psi_squared(self, n: int) -> CurvePoly:
        """psi_n^2, always pure-x after reduction."""
        if n not in self._psisq:
            sq = self.psi(n).square()
            if not sq.is_pure_x:
                raise ConsistencyError(f"psi_{n}^2 has a nonzero y-part after reduction")
            self._psisq[n] = sq
        return self._psisq[n]


def mul_via_divpolys(cache: DivPolyCache, n: int, p: EPoint) -> EPoint:
    """n*P computed as (phi_n / psi_n^2, omega_n / psi_n^3) at P.

    Requires n >= 2 and an affine on-curve P; a vanishing psi_n(P) means P
    is n-torsion and the quotient cannot be formed.
    """
    if n < 2:
        raise ValidationError(f"division-polynomial multiplication needs n >= 2, got {n}")
    if p.is_infinity:
        raise ValidationError("division-polynomial multiplication needs an affine point")
    if not on_E(cache.curve, p):
        raise ValidationError(f"point {p} is not on {cache.curve}")
    psi_val = cache.psi(n).evaluate(p.x, p.y)
    if psi_val == 0:
        raise TorsionDenominatorError(
            f"psi_{n} vanishes at {p}: {n}-torsion denominator"
        )
    phi_val = cache.phi(n).evaluate(p.x, p.y)
    omega_val = cache.omega(n).evaluate(p.x, p.y)
    return EPoint(phi_val / psi_val**2, omega_val / psi_val**3)


def x_triple_closed_form(curve: WeierstrassCurve, x: Union[Fraction, int]) -> Fraction:
    """x(3P) for any on-curve point with this x-coordinate:

        (x^9 - 12ax^7 - 96bx^6 + 30a^2x^5 - 24abx^4 + 12(3a^3 + 4b^2)x^3
           + 48a^2bx^2 + 3a(3a^3 + 32b^2)x + 8b(a^3 + 8b^2))
        / (3x^4 + 6ax^2 + 12bx - a^2)^2

    The denominator vanishes exactly on 3-torsion x-coordinates."""
    x = Fraction(x)
    a, b = curve.a, curve.b
    num_coeffs = (
        8 * b * (a**3 + 8 * b * b),
        3 * a * (3 * a**3 + 32 * b * b),
        48 * a * a * b,
        12 * (3 * a**3 + 4 * b * b),
        -24 * a * b,
        30 * a * a,
        -96 * b,
        -12 * a,
        0,
        1,
    )
    den = _peval((-a * a, 12 * b, 6 * a, 0, 3), x)
    if den == 0:
        raise TorsionDenominatorError(f"3-torsion x-coordinate {x}: psi_3 vanishes")
    return _peval(num_coeffs, x) / den**2


def check_divisibility(cache: DivPolyCache, n: int, d: int) -> bool:
    """Whether every coefficient of psi_n^2 - n^2 x^(n^2-1) and of
    phi_n - x^(n^2) is divisible by d.  Requires d | a and d | b."""
    if d < 1:
        raise ValidationError(f"d must be a positive integer, got {d}")
    if cache.curve.a % d or cache.curve.b % d:
        raise ValidationError(f"d = {d} does not divide both a and b of {cache.curve}")
    if n < 1:
        raise ValidationError(f"index must be >= 1, got {n}")
    psisq = _psub(cache.psi_squared(n).f, _monomial(n * n - 1, n * n))
    phi = _psub(cache.phi(n).f, _monomial(n * n, 1))
    return all(c % d == 0 for c in psisq) and all(c % d == 0 for c in phi)


def scaled_integrality(
    cache: DivPolyCache, n: int, w: int, z: int, d: int
) -> tuple[tuple[int, int], tuple[bool, bool]]:
    """At x = w/z, the scaled quantities

        A = z^(n^2-3) (psi_n^2(x) - n^2 x^(n^2-1))
        B = z^(n^2-2) (phi_n(x)   - x^(n^2))

    are integers; when d divides both a and b, d divides both A and B.
    Returns ((A, B), (d | A, d | B)) and raises ConsistencyError if either
    guarantee fails."""
    if n < 2:
        raise ValidationError(f"scaled integrality needs n >= 2, got {n}")
    if w == 0 or z == 0:
        raise ValidationError("w and z must be nonzero")
    if d < 1:
        raise ValidationError(f"d must be a positive integer, got {d}")
    x = Fraction(w, z)
    nsq = n * n
    psi_part = z ** (nsq - 3) * (cache.psi_squared(n).evaluate(x) - nsq * x ** (nsq - 1))
    phi_part = z ** (nsq - 2) * (cache.phi(n).evaluate(x) - x**nsq)
    if psi_part.denominator != 1 or phi_part.denominator != 1:
        raise ConsistencyError(
            f"scaled quantities at x = {w}/{z}, n = {n} are not integers: "
            f"{psi_part}, {phi_part}"
        )
    a_int, b_int = psi_part.numerator, phi_part.numerator
    flags = (a_int % d == 0, b_int % d == 0)
    if cache.curve.a % d == 0 and cache.curve.b % d == 0 and not all(flags):
        raise ConsistencyError(
            f"d = {d} divides a and b but not both scaled values ({a_int}, {b_int})"
        )
    return (a_int, b_int), flags


def _monomial(degree: int, coeff: int) -> Coeffs:
    return (0,) * degree + (coeff,)
