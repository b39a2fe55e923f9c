"""
Coefficient rings for `Poly`.

Elements are plain Python values: `Fraction` for QQ, `int` in [0, p) for GF(p) and
`Poly` for polynomial rings. Ring operations use the Python operators on those
values; `normalize` brings a freshly computed value back to canonical form.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Any

from .errors import ArgumentError
from .exactmath import as_rational, is_prime

if TYPE_CHECKING:  # pragma: no cover
    from .polyring import Poly


class Domain:
    has_parameter = False

    def convert(self, value: Any) -> Any:
        raise NotImplementedError

    def normalize(self, value: Any) -> Any:
        return value

    def exquo(self, a: Any, b: Any) -> Any:
        """Exact quotient a / b, raising `InexactDivisionError` when b does not divide a."""
        raise NotImplementedError


@dataclass(frozen=True)
class RationalField(Domain):
    zero = Fraction(0)
    one = Fraction(1)

    def convert(self, value: Any) -> Fraction:
        return as_rational(value)

    def exquo(self, a: Fraction, b: Fraction) -> Fraction:
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def __str__(self) -> str:
        return "QQ"


@dataclass(frozen=True)
class FiniteField(Domain):
    p: int
    zero = 0
    one = 1

    def __post_init__(self):
        if not is_prime(self.p):
            raise ArgumentError(f"GF({self.p}): modulus is not prime")

    def convert(self, value: Any) -> int:
        if isinstance(value, int):
            return value % self.p
        q = as_rational(value)
        if q.denominator % self.p == 0:
            raise ArgumentError(f"{q} is not {self.p}-integral")
        return q.numerator * pow(q.denominator, -1, self.p) % self.p

    def normalize(self, value: int) -> int:
        return value % self.p

    def exquo(self, a: int, b: int) -> int:
        if b % self.p == 0:
            raise ZeroDivisionError(f"division by zero in GF({self.p})")
        return a * pow(b, -1, self.p) % self.p

    def __str__(self) -> str:
        return f"GF({self.p})"


@dataclass(frozen=True)
class PolynomialRing(Domain):
    """base[var]; elements are `Poly` instances over `base`."""

    base: Domain
    var: str

    @cached_property
    def zero(self) -> "Poly":
        from .polyring import Poly

        return Poly([], self.base)

    @cached_property
    def one(self) -> "Poly":
        from .polyring import Poly

        return Poly([self.base.one], self.base)

    @property
    def has_parameter(self) -> bool:  # type: ignore[override]
        return self.var == "t" or self.base.has_parameter

    def convert(self, value: Any) -> "Poly":
        from .polyring import Poly

        if isinstance(value, Poly):
            if value.domain == self.base:
                return value
            raise ArgumentError(f"cannot use a polynomial over {value.domain} as an element of {self}")
        return Poly([self.base.convert(value)], self.base)

    def exquo(self, a: "Poly", b: "Poly") -> "Poly":
        return a.exact_divide(b)

    def specialized(self) -> Domain:
        """The ring obtained by substituting a value for t."""
        if self.var == "t":
            return self.base
        if isinstance(self.base, PolynomialRing) and self.base.has_parameter:
            return PolynomialRing(self.base.specialized(), self.var)
        return self

    def specialize(self, value: "Poly", t0: Fraction) -> Any:
        if self.var == "t":
            return value(t0)
        if isinstance(self.base, PolynomialRing) and self.base.has_parameter:
            return value.map_coeffs(lambda c: self.base.specialize(c, t0), self.specialized())
        return value

    def t_degree(self, value: "Poly") -> int:
        if self.var == "t":
            return max(value.degree, 0)
        if isinstance(self.base, PolynomialRing) and self.base.has_parameter:
            return max((self.base.t_degree(c) for c in value.coeffs), default=0)
        return 0

    def lift(self, points: list[Fraction], values: list[Any]) -> Any:
        """Inverse of `specialize` at the given points (exact interpolation in t)."""
        from .polyring import Poly, interpolate

        if self.var == "t":
            return interpolate(points, values)
        length = max((len(v.coeffs) for v in values), default=0)
        coeffs = []
        for k in range(length):
            column = [v.coeffs[k] if k < len(v.coeffs) else self.base.base.zero for v in values]
            coeffs.append(self.base.lift(points, column))
        return Poly(coeffs, self.base)

    def __str__(self) -> str:
        return f"{self.base}[{self.var}]"


QQ = RationalField()
QQt = PolynomialRing(QQ, "t")
