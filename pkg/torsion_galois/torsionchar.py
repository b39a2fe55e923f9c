"""
Characteristic polynomials of linear functions on the n-torsion.

For n >= 3 the quotient ring A = K[x, y] / (psi~_n, w_E) is free of rank 2d over K
(d = deg psi~_n) with basis 1, x, ..., x^(d-1), y, x*y, ..., x^(d-1)*y. The
characteristic polynomial of multiplication by u = a*y + b*x + c on A is
prod (T - u(P)) over the points P of exact order n. It is computed either from the
multiplication matrix or as a resultant in x of psi~_n and the curve equation.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Literal

import numpy as np

from .curve import (
    CoordElem,
    LinearFunction,
    WeierstrassCurve,
    change_coordinates,
    check_admissible,
    transform_for_u,
)
from .divpoly import psi2_squared, psi_tilde
from .domains import QQ, Domain, PolynomialRing
from .errors import ArgumentError, RegimeError
from .exactmath import prime_power_base, valuation_p
from .linalg import Matrix, charpoly
from .numeric import numeric_roots
from .polyring import Poly, resultant

logger = logging.getLogger(__name__)

Method = Literal["matrix", "resultant", "formula"]


@dataclass(frozen=True)
class CharPolyResult:
    """
    chi_{u,n}, monic, over the ring of the curve.

    `degree` is the number of points of exact order n (3 for n = 2).
    """

    chi: Poly
    n: int
    u: LinearFunction
    method: Method
    curve: WeierstrassCurve

    @property
    def degree(self) -> int:
        return self.chi.degree

    @property
    def domain(self) -> Domain:
        return self.chi.domain

    def specialize(self, t0: Any) -> "CharPolyResult":
        if not self.domain.has_parameter:
            return self
        return replace(self, chi=self.chi.specialize(t0), curve=self.curve.specialize(t0))


class QuotientRing:
    """K[x, y] / (psi~_n, w_E) with elements kept as p(x) + q(x)*y, deg p, deg q < d."""

    def __init__(self, curve: WeierstrassCurve, n: int):
        if n < 3:
            raise ArgumentError(f"the quotient ring needs n >= 3, got {n}")
        self.curve = curve
        self.n = n
        self.modulus = psi_tilde(curve, n).monic()
        self.degree = self.modulus.degree

    @property
    def dimension(self) -> int:
        return 2 * self.degree

    def reduce(self, elem: CoordElem) -> CoordElem:
        return CoordElem(elem.p % self.modulus, elem.q % self.modulus)

    def multiply(self, left: CoordElem, right: CoordElem) -> CoordElem:
        return self.reduce(self.curve.multiply(left, right))

    def element(self, u: LinearFunction) -> CoordElem:
        return self.reduce(self.curve.linear_function(u))

    def coordinates(self, elem: CoordElem) -> list[Any]:
        d = self.degree
        return [elem.p.coeff(k) for k in range(d)] + [elem.q.coeff(k) for k in range(d)]

    def multiplication_matrix(self, u: LinearFunction) -> Matrix:
        """Row j holds the coordinates of u times the j-th basis element (the transpose of the operator)."""
        u_elem = self.element(u)
        y_elem = self.curve.coord(q=Poly([1], self.curve.domain))
        rows = []
        for start in (u_elem, self.multiply(u_elem, y_elem)):
            current = start
            for _ in range(self.degree):
                rows.append(self.coordinates(current))
                current = self.reduce(CoordElem(current.p.shift(1), current.q.shift(1)))
        return rows


def charpoly_matrix(curve: WeierstrassCurve, u: LinearFunction, n: int) -> CharPolyResult:
    """
    chi_{u,n} as the characteristic polynomial of multiplication by u on the quotient ring.

    Args:
        curve: A curve over QQ or QQ[t].
        u: An admissible linear function.
        n: The order, at least 3.

    Returns:
        A monic polynomial of degree 2 * deg psi~_n.
    """
    check_admissible(curve, u)
    ring = QuotientRing(curve, n)
    matrix = ring.multiplication_matrix(u)
    logger.debug("multiplication matrix of size %d for n=%d, u=%s", len(matrix), n, u)
    chi = charpoly(matrix, curve.domain)
    return CharPolyResult(chi, n, u, "matrix", curve)


def _curve_equation(curve: WeierstrassCurve, ring: PolynomialRing) -> Poly:
    """w_E as a cubic in X with coefficients in base[Y], ascending."""
    base = curve.domain
    a1, a2, a3, a4, a6 = curve.coefficients
    return Poly(
        [
            Poly([-a6, a3, 1], base),
            Poly([-a4, a1], base),
            Poly([-a2], base),
            Poly([-1], base),
        ],
        ring,
    )


def _chi_y(curve: WeierstrassCurve, n: int) -> Poly:
    base = curve.domain
    ring = PolynomialRing(base, "Y")
    primitive = psi_tilde(curve, n)
    # psi~_n as a polynomial in X with constant coefficients in base[Y]
    lifted = Poly([Poly([c], base) for c in primitive.coeffs], ring)
    res = resultant(lifted, _curve_equation(curve, ring))
    return res.scale(base.exquo(base.one, primitive.lc**3))


def charpoly_resultant(curve: WeierstrassCurve, u: LinearFunction, n: int) -> CharPolyResult:
    """
    chi_{u,n} as Res_X(psi~_n, w_E) / r^3, r the leading coefficient of psi~_n.

    A general u is first turned into the y-coordinate of an isomorphic equation on which
    y' = a^2 * u; the coefficients are then rescaled.
    """
    check_admissible(curve, u)
    if n < 3:
        raise ArgumentError(f"the resultant route needs n >= 3, got {n}")
    if u.is_y:
        return CharPolyResult(_chi_y(curve, n), n, u, "resultant", curve)
    transformed = transform_for_u(curve, u)
    scaled = _chi_y(transformed.curve, n)
    top = scaled.degree
    s = transformed.scale
    chi = Poly([c * s ** (k - top) for k, c in enumerate(scaled.coeffs)], curve.domain)
    return CharPolyResult(chi, n, u, "resultant", curve)


def charpoly_n2(curve: WeierstrassCurve) -> CharPolyResult:
    """chi_{x,2} = psi_2^2 / 4, the monic cubic whose roots are the x-coordinates of the 2-torsion."""
    chi = psi2_squared(curve).scale(Fraction(1, 4))
    return CharPolyResult(chi, 2, LinearFunction.x(), "formula", curve)


def compute_charpoly(curve: WeierstrassCurve, u: LinearFunction, n: int, method: Method = "matrix") -> CharPolyResult:
    if n == 2:
        if u != LinearFunction.x():
            raise ArgumentError("for n = 2 only u = x is supported")
        return charpoly_n2(curve)
    if method == "matrix":
        return charpoly_matrix(curve, u, n)
    if method == "resultant":
        return charpoly_resultant(curve, u, n)
    raise ArgumentError(f"unknown method {method!r}")


def _scalar_valuation(value: Any, ell: int) -> int | float:
    if isinstance(value, Poly):
        return min((valuation_p(c, ell) for c in value.coeffs), default=math.inf)
    return valuation_p(value, ell)


@dataclass(frozen=True)
class ValuationProfile:
    ell: int
    n: int
    minimum: int | float
    bound: int
    valuations: tuple[int | float, ...] = field(repr=False)

    @property
    def ok(self) -> bool:
        return self.minimum >= self.bound

    @property
    def attained(self) -> bool:
        return self.minimum == self.bound


def _check_regime(result: CharPolyResult, ell: int) -> None:
    u = result.u
    if result.method != "formula":
        if u.a != 1 or u.b not in (-1, 0, 1) or u.c not in (-1, 0, 1):
            raise RegimeError(f"u = {u} lies outside a = 1, b, c in {{0, 1, -1}}")
    if any(_scalar_valuation(c, ell) < 0 for c in result.curve.coefficients):
        raise RegimeError(f"{result.curve} is not {ell}-integral")


def valuation_profile(result: CharPolyResult, ell: int) -> ValuationProfile:
    """
    Minimum ell-adic valuation of the coefficients of chi, against its bound.

    The bound is -3 when n is a power of ell and 0 otherwise. Over QQ[t] a coefficient's
    valuation is the minimum over its t-coefficients.

    Raises:
        RegimeError: u or the curve lies outside the range where the bound is claimed.
    """
    _check_regime(result, ell)
    valuations = tuple(_scalar_valuation(c, ell) for c in result.chi.coeffs)
    bound = -3 if prime_power_base(result.n) == ell else 0
    return ValuationProfile(ell, result.n, min(valuations, default=math.inf), bound, valuations)


@dataclass(frozen=True)
class ScalingProfile:
    p: int
    m: int
    n: int
    result: CharPolyResult
    required: tuple[int, ...]
    valuations: tuple[int | float, ...]

    @property
    def ok(self) -> bool:
        return all(v >= r for v, r in zip(self.valuations, self.required))

    @property
    def failures(self) -> list[int]:
        return [i for i, (v, r) in enumerate(zip(self.valuations, self.required)) if v < r]


def scaling_experiment(
    curve: WeierstrassCurve, p: int, m: int, n: int = 3, method: Method = "matrix"
) -> ScalingProfile:
    """
    Check that scaling u by powers of p = lambda raises coefficient valuations.

    For n = 3, u = lambda^3*y + lambda^2*x with lambda = p^m and the i-th coefficient of
    chi_{u,3} must have p-adic valuation at least 2m(8 - i). For n = 2 the cubic of the
    curve y^2 = x^3 + lambda^4*A*x + lambda^6*B is checked against 2m(3 - i).
    """
    if curve.domain != QQ or not curve.is_short:
        raise ArgumentError("the scaling check needs a short Weierstrass equation over QQ")
    if m < 0:
        raise ArgumentError(f"m must be nonnegative, got {m}")
    if any(valuation_p(c, p) < 0 for c in curve.coefficients):
        raise ArgumentError(f"{curve} is not {p}-integral")
    lam = Fraction(p) ** m
    if n == 2:
        result = charpoly_n2(change_coordinates(curve, 0, 0, 0, 1 / lam))
    elif n == 3:
        if p == 3:
            raise ArgumentError("the scaling check at n = 3 excludes p = 3")
        result = compute_charpoly(curve, LinearFunction(lam**3, lam**2, 0), 3, method)
    else:
        raise ArgumentError(f"the scaling check supports n = 2 and n = 3, got {n}")
    top = result.degree
    required = tuple(2 * m * (top - i) for i in range(top + 1))
    valuations = tuple(valuation_p(result.chi.coeff(i), p) for i in range(top + 1))
    return ScalingProfile(p, m, n, result, required, valuations)


@dataclass(frozen=True)
class NumericCheck:
    residual: float
    tolerance: float
    points: int

    @property
    def ok(self) -> bool:
        return self.residual <= self.tolerance


def _as_floats(poly: Poly) -> np.ndarray:
    """Descending float coefficients, the order `numpy.polyval` expects."""
    return np.array([float(c) for c in reversed(poly.coeffs)], dtype=np.complex128)


def numeric_root_check(
    curve: WeierstrassCurve,
    u: LinearFunction,
    n: int,
    tol: float = 1e-6,
    chi: Poly | None = None,
    **root_options: Any,
) -> NumericCheck:
    """
    Evaluate chi_{u,n} at u(P) for numerically computed points P of exact order n.

    The residual of a value z is |chi(z)| / sum |c_k| |z|^k; the check reports the largest.
    `chi` defaults to the matrix-route polynomial.
    """
    if curve.domain != QQ:
        raise ArgumentError("the numeric check needs a curve over QQ")
    if chi is None:
        chi = charpoly_matrix(curve, u, n).chi
    coeffs = _as_floats(chi)
    magnitudes = np.abs(coeffs)
    g = _as_floats(curve.rhs())
    h = _as_floats(curve.y_linear())
    a, b, c = float(u.a), float(u.b), float(u.c)
    worst = 0.0
    points = 0
    for x0 in numeric_roots(psi_tilde(curve, n), **root_options):
        hx = np.polyval(h, x0)
        root = cmath.sqrt(hx * hx + 4 * np.polyval(g, x0))
        for y0 in ((-hx + root) / 2, (-hx - root) / 2):
            z = a * y0 + b * x0 + c
            scale = np.polyval(magnitudes, abs(z))
            residual = abs(np.polyval(coeffs, z)) / scale if scale else 0.0
            worst = max(worst, float(residual))
            points += 1
    logger.debug("numeric check of chi_{%s,%d}: residual %.3g over %d points", u, n, worst, points)
    return NumericCheck(worst, tol, points)
