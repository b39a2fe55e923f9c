import math
import re
from fractions import Fraction

import sympy

from .errors import ArgumentError

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def as_rational(value: int | str | Fraction) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ArgumentError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise ArgumentError(f"not a rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse `num/den` (den optional); accepts the unicode minus sign."""
    match = _RATIONAL_RE.match(text.replace("−", "-"))
    if match is None:
        raise ArgumentError(f"not a rational: {text!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ArgumentError(f"zero denominator: {text!r}")
    return Fraction(int(num), int(den or 1))


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def is_prime(n: int) -> bool:
    return bool(sympy.isprime(n))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ArgumentError(f"{p!r} is not a prime")


def valuation_p(q: Fraction | int, p: int) -> int | float:
    """
    The p-adic valuation of a rational number.

    Args:
        q: The rational number.
        p: A prime.

    Returns:
        v with q = p^v * (unit prime to p), or `math.inf` when q is zero.
    """
    _require_prime(p)
    q = Fraction(q)
    if q == 0:
        return math.inf
    return _int_valuation(q.numerator, p) - _int_valuation(q.denominator, p)


def _int_valuation(n: int, p: int) -> int:
    n = abs(n)
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def is_square(q: Fraction | int) -> Fraction | None:
    """The nonnegative rational square root of q, or None when q is not a square in Q."""
    q = Fraction(q)
    if q < 0:
        return None
    num_root = math.isqrt(q.numerator)
    den_root = math.isqrt(q.denominator)
    if num_root * num_root != q.numerator or den_root * den_root != q.denominator:
        return None
    return Fraction(num_root, den_root)


def primes_up_to(bound: int) -> list[int]:
    return [int(p) for p in sympy.primerange(2, bound + 1)]


def prime_factors(n: int) -> dict[int, int]:
    """Factorization of |n| as {prime: exponent}."""
    if n == 0:
        raise ArgumentError("zero has no factorization")
    return {int(p): int(k) for p, k in sympy.factorint(abs(n)).items()}


def divisors(n: int) -> list[int]:
    """Positive divisors of |n|, ascending."""
    if n == 0:
        raise ArgumentError("zero has infinitely many divisors")
    return [int(d) for d in sympy.divisors(abs(n))]


def prime_power_base(n: int) -> int | None:
    """p when n = p^k with k >= 1, else None."""
    if n < 2:
        return None
    factors = prime_factors(n)
    if len(factors) != 1:
        return None
    return next(iter(factors))


def jordan_totient_2(n: int) -> int:
    result = n * n
    for p in prime_factors(n):
        result = result // (p * p) * (p * p - 1)
    return result
