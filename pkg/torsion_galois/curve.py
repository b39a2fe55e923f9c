import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

import numpy as np

from .domains import QQ, QQt, Domain, FiniteField
from .errors import (
    ArgumentError,
    BadReductionError,
    InadmissibleLinearFunctionError,
    InternalError,
    NotPIntegralError,
    SingularCurveError,
)
from .exactmath import format_rational, is_prime, parse_rational, valuation_p
from .polyring import Poly

logger = logging.getLogger(__name__)

_TERM_RE = re.compile(r"^(\d+(?:/\d+)?)?\*?(t(?:\^(\d+))?)?$")


def parse_scalar(text: str) -> Fraction | Poly:
    """
    Parse a rational ("-4/13") or a polynomial in t ("t", "t+1", "2*t^2-1", "3/4*t").

    Returns a `Fraction` when no t appears, otherwise a `Poly` over QQ in t.
    """
    source = text.replace("−", "-").replace(" ", "")
    if not source:
        raise ArgumentError("empty coefficient")
    if "t" not in source:
        return parse_rational(source)
    terms = re.split(r"(?=[+-])", source)
    coeffs: dict[int, Fraction] = {}
    for term in terms:
        if not term:
            continue
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        match = _TERM_RE.match(body)
        if not body or match is None or (match.group(1) is None and match.group(2) is None):
            raise ArgumentError(f"cannot parse coefficient {text!r}")
        value = parse_rational(match.group(1)) if match.group(1) else Fraction(1)
        power = 0
        if match.group(2):
            power = int(match.group(3)) if match.group(3) else 1
        coeffs[power] = coeffs.get(power, Fraction(0)) + sign * value
    top = max(coeffs)
    return Poly([coeffs.get(k, 0) for k in range(top + 1)], QQ)


def format_scalar(value: Any) -> str:
    if isinstance(value, Poly):
        terms = []
        for k in range(value.degree, -1, -1):
            c = value.coeffs[k]
            if not c:
                continue
            monomial = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if not monomial:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(monomial)
            elif c == -1:
                terms.append(f"-{monomial}")
            else:
                terms.append(f"{format_rational(c)}*{monomial}")
        text = "+".join(terms) or "0"
        return text.replace("+-", "-")
    return format_rational(value) if isinstance(value, Fraction | int) else str(value)


@dataclass(frozen=True)
class BInvariants:
    b2: Any
    b4: Any
    b6: Any
    b8: Any


@dataclass(frozen=True)
class CoordElem:
    """p(x) + q(x)*y in the coordinate ring, y-degree at most one."""

    p: Poly
    q: Poly

    def __add__(self, other: "CoordElem") -> "CoordElem":
        return CoordElem(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "CoordElem") -> "CoordElem":
        return CoordElem(self.p - other.p, self.q - other.q)

    def scale(self, factor: Any) -> "CoordElem":
        if isinstance(factor, Poly):
            return CoordElem(self.p * factor, self.q * factor)
        return CoordElem(self.p.scale(factor), self.q.scale(factor))

    def is_univariate(self) -> bool:
        return self.q.is_zero()


@dataclass(frozen=True)
class LinearFunction:
    """u = a*y + b*x + c with rational a, b, c."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def parse(cls, text: str) -> "LinearFunction":
        parts = text.replace(" ", "").split(",")
        if len(parts) != 3:
            raise ArgumentError(f"linear function needs 'a,b,c', got {text!r}")
        return cls(*(parse_rational(part) for part in parts))

    @classmethod
    def y(cls) -> "LinearFunction":
        return cls(Fraction(1), Fraction(0), Fraction(0))

    @classmethod
    def x(cls) -> "LinearFunction":
        return cls(Fraction(0), Fraction(1), Fraction(0))

    @property
    def is_y(self) -> bool:
        return (self.a, self.b, self.c) == (1, 0, 0)

    def __str__(self) -> str:
        return ",".join(format_rational(v) for v in (self.a, self.b, self.c))


@dataclass(frozen=True)
class WeierstrassCurve:
    """
    y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6 over QQ, QQ[t] or GF(p).

    Coefficients are elements of `domain`; construction rejects a vanishing discriminant.
    """

    a1: Any
    a2: Any
    a3: Any
    a4: Any
    a6: Any
    domain: Domain = QQ

    def __post_init__(self):
        for name in ("a1", "a2", "a3", "a4", "a6"):
            object.__setattr__(self, name, self.domain.convert(getattr(self, name)))
        if not self.discriminant:
            raise SingularCurveError(f"singular Weierstrass equation {self}")

    @classmethod
    def from_coefficients(cls, coeffs: list[Any]) -> "WeierstrassCurve":
        if len(coeffs) != 5:
            raise ArgumentError("a Weierstrass equation needs five coefficients a1,a2,a3,a4,a6")
        parametric = any(isinstance(c, Poly) for c in coeffs)
        return cls(*coeffs, domain=QQt if parametric else QQ)

    @classmethod
    def parse(cls, text: str) -> "WeierstrassCurve":
        """Parse "a1,a2,a3,a4,a6"; each entry a rational or a polynomial in t."""
        return cls.from_coefficients([parse_scalar(part) for part in text.split(",")])

    @property
    def coefficients(self) -> tuple:
        return self.a1, self.a2, self.a3, self.a4, self.a6

    @property
    def is_parametric(self) -> bool:
        return self.domain == QQt

    @property
    def is_short(self) -> bool:
        return not self.a1 and not self.a2 and not self.a3

    @property
    def b_invariants(self) -> BInvariants:
        a1, a2, a3, a4, a6 = self.coefficients
        n = self.domain.normalize
        return BInvariants(
            b2=n(a1 * a1 + 4 * a2),
            b4=n(2 * a4 + a1 * a3),
            b6=n(a3 * a3 + 4 * a6),
            b8=n(a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4),
        )

    @property
    def discriminant(self) -> Any:
        b = self.b_invariants
        return self.domain.normalize(
            -b.b2 * b.b2 * b.b8 - 8 * b.b4 * b.b4 * b.b4 - 27 * b.b6 * b.b6 + 9 * b.b2 * b.b4 * b.b6
        )

    def rhs(self) -> Poly:
        """G = x^3 + a2*x^2 + a4*x + a6, so that y^2 = G - H*y."""
        return Poly([self.a6, self.a4, self.a2, 1], self.domain)

    def y_linear(self) -> Poly:
        """H = a1*x + a3."""
        return Poly([self.a3, self.a1], self.domain)

    def multiply(self, left: CoordElem, right: CoordElem) -> CoordElem:
        """Product in the coordinate ring, y^2 rewritten as G - H*y."""
        qq = left.q * right.q
        p = left.p * right.p + qq * self.rhs()
        q = left.p * right.q + left.q * right.p - qq * self.y_linear()
        return CoordElem(p, q)

    def coord(self, p: Poly | None = None, q: Poly | None = None) -> CoordElem:
        zero = Poly([], self.domain)
        return CoordElem(p if p is not None else zero, q if q is not None else zero)

    def linear_function(self, u: LinearFunction) -> CoordElem:
        return self.coord(Poly([u.c, u.b], self.domain), Poly([u.a], self.domain))

    def specialize(self, t0: Any) -> "WeierstrassCurve":
        """Substitute t = t0; raises `SingularCurveError` when the specialization is singular."""
        if not self.is_parametric:
            return self
        t0 = Fraction(t0)
        return WeierstrassCurve(*(c(t0) for c in self.coefficients), domain=QQ)

    def __str__(self) -> str:
        return ",".join(format_scalar(c) for c in self.coefficients)


def b_invariants(curve: WeierstrassCurve) -> BInvariants:
    return curve.b_invariants


def discriminant(curve: WeierstrassCurve) -> Any:
    return curve.discriminant


def check_admissible(curve: WeierstrassCurve, u: LinearFunction) -> None:
    if u.a == 0:
        raise InadmissibleLinearFunctionError(f"u = {u}: the coefficient of y must be nonzero")
    if not curve.domain.normalize(2 * u.b - curve.a1 * u.a):
        raise InadmissibleLinearFunctionError(f"u = {u}: 2b - a1*a vanishes on {curve}")


def change_coordinates(curve: WeierstrassCurve, r: Any, s: Any, t: Any, u: Any) -> WeierstrassCurve:
    """
    The curve in the coordinates x = u^2*x' + r, y = u^3*y' + s*u^2*x' + t.

    Args:
        curve: The source equation.
        r: Translation of x.
        s: Shear of y by x.
        t: Translation of y.
        u: Nonzero scaling.

    Returns:
        The transformed Weierstrass equation over the same ring.
    """
    if u == 0:
        raise ArgumentError("change of coordinates with u = 0")
    a1, a2, a3, a4, a6 = curve.coefficients
    r, s, t, u = (Fraction(v) for v in (r, s, t, u))
    inv = 1 / u
    return WeierstrassCurve(
        (a1 + 2 * s) * inv,
        (a2 - s * a1 + 3 * r - s * s) * inv**2,
        (a3 + r * a1 + 2 * t) * inv**3,
        (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * inv**4,
        (a6 + r * a4 + r * r * a2 + r**3 - t * a3 - t * t - r * t * a1) * inv**6,
        domain=curve.domain,
    )


def inverse_coordinates(r: Any, s: Any, t: Any, u: Any) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    r, s, t, u = (Fraction(v) for v in (r, s, t, u))
    return -r / u**2, -s / u, (r * s - t) / u**3, 1 / u


@dataclass(frozen=True)
class TransformedCurve:
    """
    `curve` carries a coordinate y' equal to `scale` * u.

    x' = scale * x as well; `coordinates` are the (r, s, t, u) of `change_coordinates`.
    """

    curve: WeierstrassCurve
    scale: Fraction
    coordinates: tuple[Fraction, Fraction, Fraction, Fraction]


def transform_for_u(curve: WeierstrassCurve, u: LinearFunction) -> TransformedCurve:
    """
    An isomorphic equation on which u becomes, up to the factor a^2, the y-coordinate.

    Raises:
        InadmissibleLinearFunctionError: a = 0.
    """
    if u.a == 0:
        raise InadmissibleLinearFunctionError(f"u = {u}: the coefficient of y must be nonzero")
    coordinates = (Fraction(0), -u.b / u.a, -u.c / u.a, 1 / u.a)
    return TransformedCurve(change_coordinates(curve, *coordinates), u.a * u.a, coordinates)


def conjugate(curve: WeierstrassCurve, u: LinearFunction) -> LinearFunction:
    """u* = u o [-1] = -a*y + (b - a*a1)*x + (c - a*a3); needs rational a1 and a3."""
    _, s, t, scale = negation_coordinates(curve)
    return LinearFunction(u.a * scale**3, u.b + u.a * s * scale**2, u.c + u.a * t)


def recover_point(curve: WeierstrassCurve, u: LinearFunction, value: Any, conjugate_value: Any) -> tuple[Any, Any]:
    """
    (x, y) of a point P from u(P) and u*(P).

    x = (u + u* + a*a3 - 2c) / (2b - a1*a) and y = (u - b*x - c) / a, so u and u* generate
    the function field exactly when u is admissible.
    """
    check_admissible(curve, u)
    x = (value + conjugate_value + u.a * curve.a3 - 2 * u.c) / (2 * u.b - curve.a1 * u.a)
    return x, (value - u.b * x - u.c) / u.a


def negation_coordinates(curve: WeierstrassCurve) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """(r, s, t, u) of the automorphism (x, y) -> (x, -y - a1*x - a3)."""
    if curve.domain != QQ:
        raise ArgumentError("the negation map needs a curve over QQ")
    return Fraction(0), -curve.a1, -curve.a3, Fraction(-1)


def reduce_mod_p(curve: WeierstrassCurve, p: int) -> WeierstrassCurve:
    """
    The reduction of an equation over QQ modulo p.

    Raises:
        NotPIntegralError: Some coefficient has negative p-adic valuation.
        BadReductionError: p divides the discriminant.
    """
    if curve.domain != QQ:
        raise ArgumentError("reduction mod p needs a curve over QQ")
    if not is_prime(p):
        raise ArgumentError(f"{p} is not a prime")
    if any(valuation_p(c, p) < 0 for c in curve.coefficients):
        raise NotPIntegralError(f"{curve} is not {p}-integral")
    if valuation_p(curve.discriminant, p) > 0:
        raise BadReductionError(f"{curve} has bad reduction at {p}")
    field = FiniteField(p)
    return WeierstrassCurve(*(field.convert(c) for c in curve.coefficients), domain=field)


def count_points(curve: WeierstrassCurve) -> int:
    """#E(GF(p)) including the point at infinity, for a curve over GF(p)."""
    if not isinstance(curve.domain, FiniteField):
        raise ArgumentError("point counting needs a curve over a finite field")
    p = curve.domain.p
    a1, a2, a3, a4, a6 = curve.coefficients
    if p <= 3:
        affine = sum(
            1
            for x in range(p)
            for y in range(p)
            if (y * y + a1 * x * y + a3 * y - x**3 - a2 * x * x - a4 * x - a6) % p == 0
        )
        return affine + 1
    xs = np.arange(p, dtype=np.int64)
    x2 = xs * xs % p
    x3 = x2 * xs % p
    h = (a1 * xs + a3) % p
    g = (x3 + a2 * x2 + a4 * xs + a6) % p
    # y^2 + h*y - g = 0 has as many roots as z^2 = h^2 + 4g
    delta = (h * h % p + 4 * g) % p
    square_counts = np.bincount(xs * xs % p, minlength=p)
    return int(square_counts[delta].sum()) + 1


def ap(curve: WeierstrassCurve, p: int) -> int:
    """
    The trace of Frobenius p + 1 - #E(GF(p)) at a prime of good reduction.

    Raises:
        BadReductionError: p divides the discriminant.
        NotPIntegralError: The equation is not p-integral.
        InternalError: The count violates the Hasse bound.
    """
    reduced = reduce_mod_p(curve, p) if curve.domain == QQ else curve
    trace = p + 1 - count_points(reduced)
    if trace * trace > 4 * p:
        raise InternalError(f"a_{p} = {trace} violates the Hasse bound for {curve}")
    return trace
