"""
Factorization helpers over QQ at degree four and factor-degree patterns modulo p.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .domains import QQ, FiniteField
from .errors import ArgumentError, BadPrimeError
from .exactmath import divisors, is_prime, is_square
from .polyring import Poly, discriminant

logger = logging.getLogger(__name__)


def integer_coefficients(f: Poly) -> list[int]:
    """The primitive integer multiple of f with positive leading coefficient, ascending."""
    if not f:
        raise ArgumentError("the zero polynomial has no primitive part")
    denominator = math.lcm(*(Fraction(c).denominator for c in f.coeffs))
    ints = [int(Fraction(c) * denominator) for c in f.coeffs]
    content = math.gcd(*ints)
    if ints[-1] < 0:
        content = -content
    return [c // content for c in ints]


def rational_roots(f: Poly) -> list[Fraction]:
    """
    Rational roots of f with multiplicity, ascending.

    Candidates are +-num/den with num dividing the lowest nonzero coefficient and den the
    leading coefficient of the primitive integer multiple.
    """
    if not f:
        raise ArgumentError("the zero polynomial has every rational root")
    ints = integer_coefficients(f)
    zeros = next(k for k, c in enumerate(ints) if c)
    roots = [Fraction(0)] * zeros
    ints = ints[zeros:]
    if len(ints) == 1:
        return roots
    rest = Poly(ints, QQ)
    for num in divisors(ints[0]):
        for den in divisors(ints[-1]):
            if math.gcd(num, den) != 1:
                continue
            for candidate in (Fraction(num, den), Fraction(-num, den)):
                linear = Poly([-candidate, 1], QQ)
                while rest.degree > 0 and not rest(candidate):
                    rest = rest.exact_divide(linear)
                    roots.append(candidate)
    return sorted(roots)


def resolvent_cubic(f: Poly) -> Poly:
    """z^3 - b z^2 + (ac - 4d) z - (a^2 d - 4bd + c^2) for f = x^4 + a x^3 + b x^2 + c x + d (made monic)."""
    if f.degree != 4:
        raise ArgumentError(f"the resolvent cubic needs a quartic, got degree {f.degree}")
    d, c, b, a, _ = f.monic().coeffs
    return Poly([-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1], QQ)


@dataclass(frozen=True)
class QuarticFactorization:
    """`kind` lists the factor degrees, linear factors first, e.g. (1, 1, 2)."""

    kind: tuple[int, ...]
    factors: tuple[Poly, ...]

    @property
    def is_irreducible(self) -> bool:
        return self.kind == (4,)

    def product(self) -> Poly:
        result = Poly([1], QQ)
        for factor in self.factors:
            result = result * factor
        return result


def _quadratic_split(f: Poly) -> tuple[Poly, Poly] | None:
    """A splitting of a monic rootless quartic into two rational quadratics, if one exists."""
    d, c, b, a, _ = f.coeffs
    for theta in sorted(set(rational_roots(resolvent_cubic(f)))):
        root = is_square(theta * theta - 4 * d)
        if root is None:
            continue
        q, s = (theta + root) / 2, (theta - root) / 2
        other = is_square(a * a - 4 * (b - theta))
        if other is None:
            continue
        p, r = (a + other) / 2, (a - other) / 2
        for left, right in ((Poly([q, p], QQ), Poly([s, r], QQ)), (Poly([s, p], QQ), Poly([q, r], QQ))):
            left, right = left + Poly.monomial(2), right + Poly.monomial(2)
            if left * right == f:
                return left, right
    return None


def factor_quartic(f: Poly) -> QuarticFactorization:
    """
    Complete factorization of a squarefree quartic over QQ.

    Args:
        f: A polynomial of degree 4 over QQ; it is made monic first.

    Returns:
        The factor degrees and the monic irreducible factors.

    Raises:
        ArgumentError: f is not a squarefree quartic.
    """
    if f.domain != QQ or f.degree != 4:
        raise ArgumentError("factor_quartic needs a quartic over QQ")
    g = f.monic()
    if g.gcd(g.derivative()).degree > 0:
        raise ArgumentError(f"{g} is not squarefree")
    roots = rational_roots(g)
    linear = tuple(Poly([-r, 1], QQ) for r in roots)
    residue = g
    for factor in linear:
        residue = residue.exact_divide(factor)
    if len(roots) == 4:
        return QuarticFactorization((1, 1, 1, 1), linear)
    if len(roots) == 2:
        return QuarticFactorization((1, 1, 2), linear + (residue,))
    if len(roots) == 1:
        return QuarticFactorization((1, 3), linear + (residue,))
    split = _quadratic_split(g)
    if split is not None:
        return QuarticFactorization((2, 2), tuple(sorted(split, key=lambda h: h.coeffs)))
    return QuarticFactorization((4,), (g,))


class QuarticGroup(str, Enum):
    S4 = "S4"
    A4 = "A4"
    D4 = "D4"
    C4 = "C4"
    V4 = "V4"


def _in_square_class(value: Fraction, disc: Fraction) -> bool:
    """True when Z^2 - value splits over QQ(sqrt(disc)), i.e. value is 0, a square, or disc times a square."""
    return value == 0 or is_square(value) is not None or is_square(value / disc) is not None


def quartic_galois(f: Poly) -> QuarticGroup:
    """
    Galois group of an irreducible quartic over QQ from its resolvent cubic and discriminant.

    With exactly one rational resolvent root theta the group is C4 when both
    Z^2 - theta Z + d and Z^2 + a Z + (b - theta) split over QQ(sqrt(disc)), otherwise D4.
    """
    factorization = factor_quartic(f)
    if not factorization.is_irreducible:
        raise ArgumentError(f"{f} is reducible over QQ (type {factorization.kind})")
    g = f.monic()
    disc = discriminant(g)
    thetas = sorted(set(rational_roots(resolvent_cubic(g))))
    if not thetas:
        return QuarticGroup.A4 if is_square(disc) is not None else QuarticGroup.S4
    if len(thetas) == 3:
        return QuarticGroup.V4
    (theta,) = thetas
    d, _, b, a, _ = g.coeffs
    if _in_square_class(theta * theta - 4 * d, disc) and _in_square_class(a * a - 4 * (b - theta), disc):
        return QuarticGroup.C4
    return QuarticGroup.D4


def mod_p_degree_pattern(f: Poly, p: int) -> tuple[int, ...]:
    """
    Degrees of the irreducible factors of f modulo p, ascending.

    Uses distinct-degree factorization: after removing the factors of degree < i, the
    gcd of the remainder with x^(p^i) - x collects the factors of degree exactly i.

    Raises:
        BadPrimeError: p divides the leading coefficient or f is not squarefree modulo p.
    """
    if not is_prime(p):
        raise ArgumentError(f"{p} is not a prime")
    ints = integer_coefficients(f)
    if ints[-1] % p == 0:
        raise BadPrimeError(f"{p} divides the leading coefficient")
    field = FiniteField(p)
    g = Poly(ints, field).monic()
    if g.degree > 0 and g.gcd(g.derivative()).degree > 0:
        raise BadPrimeError(f"not squarefree modulo {p}")
    x = Poly.x(field)
    degrees: list[int] = []
    h = x
    i = 1
    while g.degree >= 2 * i:
        h = h.powmod(p, g)
        common = g.gcd(h - x)
        if common.degree > 0:
            degrees.extend([i] * (common.degree // i))
            g = g.exact_divide(common)
            h = h % g
        i += 1
    if g.degree > 0:
        degrees.append(g.degree)
    return tuple(sorted(degrees))
