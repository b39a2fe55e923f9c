"""
Dense univariate polynomials over the exact rings of `domains`.
"""

import logging
from fractions import Fraction
from typing import Any, Callable, Iterable

from .domains import QQ, Domain, PolynomialRing
from .errors import ArgumentError, InexactDivisionError

logger = logging.getLogger(__name__)


class Poly:
    """
    A polynomial with ascending coefficient list; the zero polynomial has no coefficients.

    Elements of `domain` act as scalars in every arithmetic operation.
    """

    __slots__ = ("coeffs", "domain")

    coeffs: tuple
    domain: Domain

    def __init__(self, coeffs: Iterable[Any] = (), domain: Domain = QQ):
        self.coeffs = _strip(tuple(domain.convert(c) for c in coeffs))
        self.domain = domain

    @classmethod
    def _new(cls, coeffs: Iterable[Any], domain: Domain) -> "Poly":
        obj = object.__new__(cls)
        obj.coeffs = _strip(tuple(domain.normalize(c) for c in coeffs))
        obj.domain = domain
        return obj

    @classmethod
    def x(cls, domain: Domain = QQ) -> "Poly":
        return cls._new((domain.zero, domain.one), domain)

    @classmethod
    def constant(cls, value: Any, domain: Domain = QQ) -> "Poly":
        return cls([value], domain)

    @classmethod
    def monomial(cls, degree: int, coeff: Any = None, domain: Domain = QQ) -> "Poly":
        coeff = domain.one if coeff is None else domain.convert(coeff)
        return cls._new((domain.zero,) * degree + (coeff,), domain)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else self.domain.zero

    def coeff(self, k: int) -> Any:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else self.domain.zero

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == self.domain.one

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            try:
                other = self._coerce(other)
            except ArgumentError:
                return NotImplemented
        return self.domain == other.domain and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.domain, self.coeffs))

    def __repr__(self) -> str:
        return f"Poly({list(self.coeffs)!r}, {self.domain})"

    def _coerce(self, other: Any) -> "Poly":
        if isinstance(other, Poly) and other.domain == self.domain:
            return other
        return Poly._new((self.domain.convert(other),), self.domain)

    def _embeds_in(self, other: Any) -> bool:
        """True when `other` is a polynomial whose coefficients live in this polynomial's ring."""
        return (
            isinstance(other, Poly) and isinstance(other.domain, PolynomialRing) and other.domain.base == self.domain
        )

    def __add__(self, other: Any) -> "Poly":
        if self._embeds_in(other):
            return other + self
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly._new(tuple(x + y for x, y in zip(a, b)) + a[len(b) :], self.domain)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._new(tuple(-c for c in self.coeffs), self.domain)

    def __sub__(self, other: Any) -> "Poly":
        if self._embeds_in(other):
            return -other + self
        return self + (-self._coerce(other))

    def __rsub__(self, other: Any) -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: Any) -> "Poly":
        if self._embeds_in(other):
            return other.scale(self)
        if not (isinstance(other, Poly) and other.domain == self.domain):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly._new((), self.domain)
        out = [self.domain.zero] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return Poly._new(out, self.domain)

    __rmul__ = __mul__

    def scale(self, scalar: Any) -> "Poly":
        scalar = self.domain.convert(scalar)
        return Poly._new(tuple(c * scalar for c in self.coeffs), self.domain)

    def __pow__(self, exponent: int) -> "Poly":
        if exponent < 0:
            raise ArgumentError("negative exponent")
        result = Poly._new((self.domain.one,), self.domain)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __call__(self, value: Any) -> Any:
        acc = self.domain.zero
        for c in reversed(self.coeffs):
            acc = self.domain.normalize(acc * value + c)
        return acc

    evaluate = __call__

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return Poly._new((self.domain.zero,) * k + self.coeffs, self.domain)

    def map_coeffs(self, fn: Callable[[Any], Any], domain: Domain | None = None) -> "Poly":
        domain = domain or self.domain
        return Poly._new(tuple(fn(c) for c in self.coeffs), domain)

    def specialize(self, t0: Any) -> "Poly":
        """Substitute t = t0 in every coefficient (the domain must carry the parameter t)."""
        if not self.domain.has_parameter:
            return self
        return self.map_coeffs(lambda c: self.domain.specialize(c, t0), self.domain.specialized())

    def derivative(self) -> "Poly":
        return Poly._new(tuple(c * k for k, c in enumerate(self.coeffs) if k), self.domain)

    def _divmod(self, divisor: "Poly") -> tuple["Poly", "Poly"]:
        if not divisor:
            raise ZeroDivisionError("polynomial division by zero")
        dom = self.domain
        rem = list(self.coeffs)
        dg = divisor.degree
        lc = divisor.lc
        quot = [dom.zero] * max(len(rem) - dg, 0)
        for k in range(len(rem) - dg - 1, -1, -1):
            top = rem[k + dg]
            if not top:
                continue
            c = dom.exquo(top, lc)
            quot[k] = c
            for i, d in enumerate(divisor.coeffs):
                rem[k + i] = dom.normalize(rem[k + i] - c * d)
        return Poly._new(quot, dom), Poly._new(rem[:dg], dom)

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        return self._divmod(self._coerce(other))

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self._divmod(self._coerce(other))[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return self._divmod(self._coerce(other))[1]

    def exact_divide(self, divisor: "Poly") -> "Poly":
        quotient, remainder = self._divmod(self._coerce(divisor))
        if remainder:
            raise InexactDivisionError(remainder)
        return quotient

    def monic(self) -> "Poly":
        if not self.coeffs:
            raise ArgumentError("the zero polynomial has no monic multiple")
        lc = self.lc
        return Poly._new(tuple(self.domain.exquo(c, lc) for c in self.coeffs), self.domain)

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd; the domain must be a field."""
        a, b = self, self._coerce(other)
        while b:
            a, b = b, a % b
        return a.monic() if a else a

    def powmod(self, exponent: int, modulus: "Poly") -> "Poly":
        result = Poly._new((self.domain.one,), self.domain) % modulus
        base = self % modulus
        while exponent:
            if exponent & 1:
                result = result * base % modulus
            exponent >>= 1
            if exponent:
                base = base * base % modulus
        return result


def _strip(coeffs: tuple) -> tuple:
    end = len(coeffs)
    while end and not coeffs[end - 1]:
        end -= 1
    return coeffs[:end]


def exact_divide(f: Poly, g: Poly) -> Poly:
    """
    Exact quotient of f by g over an integral domain.

    Raises:
        InexactDivisionError: g does not divide f; the error carries the remainder.
    """
    return f.exact_divide(g)


def resultant(f: Poly, g: Poly) -> Any:
    """
    Resultant of f and g as the determinant of their Sylvester matrix, f-rows first.

    With this convention Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots alpha of f.
    """
    from .linalg import determinant, sylvester_matrix

    if not f or not g:
        raise ArgumentError("resultant of a zero polynomial")
    if f.domain != g.domain:
        raise ArgumentError(f"resultant over different rings: {f.domain} and {g.domain}")
    if f.degree == 0:
        return f.domain.normalize(f.lc**g.degree)
    if g.degree == 0:
        return g.domain.normalize(g.lc**f.degree)
    return determinant(sylvester_matrix(f, g), f.domain)


def discriminant(f: Poly) -> Any:
    """(-1)^(n(n-1)/2) * Res(f, f') / lc(f)."""
    n = f.degree
    if n < 2:
        raise ArgumentError("discriminant needs degree >= 2")
    res = resultant(f, f.derivative())
    if (n * (n - 1) // 2) % 2:
        res = -res
    return f.domain.exquo(res, f.lc)


def sample_points(count: int) -> list[Fraction]:
    """0, 1, -1, 2, -2, ... (count values)."""
    points = []
    k = 0
    while len(points) < count:
        points.append(Fraction(k))
        if k > 0 and len(points) < count:
            points.append(Fraction(-k))
        k += 1
    return points


def interpolate(points: list[Fraction], values: list[Fraction]) -> Poly:
    """The unique polynomial over QQ of degree < len(points) through (points, values); Newton form."""
    if len(points) != len(values):
        raise ArgumentError("points and values differ in length")
    if len(set(points)) != len(points):
        raise ArgumentError("interpolation points must be distinct")
    table = [Fraction(v) for v in values]
    n = len(points)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            table[i] = (table[i] - table[i - 1]) / (points[i] - points[i - level])
    result = Poly([], QQ)
    x = Poly.x(QQ)
    for i in range(n - 1, -1, -1):
        result = result * (x - points[i]) + table[i]
    return result
