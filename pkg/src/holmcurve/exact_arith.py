"""Exact integer and rational arithmetic utilities.

Rational numbers are ``fractions.Fraction`` throughout: arbitrary precision,
always stored reduced with a positive denominator, so equality and valuation
checks are canonical.  On top of that this module provides p-adic valuations
and the small number-theoretic helpers (primality, squarefreeness, perfect
squares, factorization, divisors) that the rest of the package builds on.

Everything here is pure and operates on immutable values; all functions are
safe for unrestricted concurrent use.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Union

from .errors import CapacityError, ValidationError

#: Exact rational type used for all point coordinates.
Rational = Fraction

#: Default ceiling for trial-division factorization.  All certified
#: parameter pairs are desk-scale; exceeding this raises CapacityError.
DEFAULT_FACTOR_CEILING = 10**7


class _InfiniteValuation:
    """Distinguished valuation of zero.  Compares greater than every integer
    and equal only to itself; never participates in arithmetic."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INFINITE"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _InfiniteValuation)

    def __hash__(self) -> int:
        return hash("_InfiniteValuation")

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, _InfiniteValuation)):
            return not isinstance(other, _InfiniteValuation)
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, _InfiniteValuation)):
            return True
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, _InfiniteValuation)):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        return self == other


#: Marker returned by ``vp`` for the valuation of zero.
INFINITE = _InfiniteValuation()

#: A p-adic valuation: an integer, or INFINITE (only for vp(0)).
Valuation = Union[int, _InfiniteValuation]


def is_prime(n: int) -> bool:
    """Trial-division primality test, adequate for desk-scale inputs."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def vp(x: Union[Rational, int], p: int) -> Valuation:
    """p-adic valuation of the rational x: the exponent of the prime p in
    the factorization of x.  Negative when p divides the reduced
    denominator; INFINITE for x = 0.
    """
    if not is_prime(p):
        raise ValidationError(f"vp requires a prime, got {p}")
    x = Fraction(x)
    if x == 0:
        return INFINITE

    def count(n: int) -> int:
        n = abs(n)
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        return e

    return count(x.numerator) - count(x.denominator)


def prime_factorize(n: int, ceiling: int = DEFAULT_FACTOR_CEILING) -> list[tuple[int, int]]:
    """Factor n >= 1 by trial division into (prime, exponent) pairs with
    strictly increasing primes.

    Raises CapacityError if a cofactor survives past the ceiling and cannot
    be certified prime, rather than returning a wrong factorization.
    """
    if n <= 0:
        raise ValidationError(f"prime_factorize requires n >= 1, got {n}")
    factors: list[tuple[int, int]] = []
    m = n
    d = 2
    while d * d <= m:
        if d > ceiling:
            raise CapacityError(
                f"factorization of {n} exceeded trial-division ceiling {ceiling}"
            )
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return factors


def is_squarefree(n: int, ceiling: int = DEFAULT_FACTOR_CEILING) -> bool:
    """True iff no prime squared divides n (n >= 1)."""
    if n <= 0:
        raise ValidationError(f"is_squarefree requires n >= 1, got {n}")
    return all(e == 1 for _, e in prime_factorize(n, ceiling))


def is_perfect_square(n: int) -> Optional[int]:
    """The nonnegative integer root of n when n is a perfect square, else
    None.  Negative n is never a square."""
    if n < 0:
        return None
    r = math.isqrt(n)
    return r if r * r == n else None


def divisors(n: int, ceiling: int = DEFAULT_FACTOR_CEILING) -> list[int]:
    """All positive divisors of n >= 1, sorted ascending."""
    result = [1]
    for p, e in prime_factorize(n, ceiling):
        result = [d * p**i for d in result for i in range(e + 1)]
    return sorted(result)


def square_divisor_roots(n: int, ceiling: int = DEFAULT_FACTOR_CEILING) -> list[int]:
    """All positive y with y**2 dividing n >= 1, sorted ascending."""
    result = [1]
    for p, e in prime_factorize(n, ceiling):
        result = [d * p**i for d in result for i in range(e // 2 + 1)]
    return sorted(result)


def format_rational(q: Union[Rational, int]) -> str:
    """Render an exact rational as "num/den", omitting "/1"."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Rational:
    """Parse "num" or "num/den" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"not an exact rational: {text!r}") from exc
