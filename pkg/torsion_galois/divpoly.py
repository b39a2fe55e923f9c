import logging
import threading
from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache

from .curve import CoordElem, WeierstrassCurve
from .errors import ArgumentError, InternalError
from .exactmath import divisors, jordan_totient_2, prime_power_base
from .polyring import Poly

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DivisionPolynomial:
    """
    psi_n as an element of the coordinate ring.

    `cofactor` is psi_n itself for odd n and psi_n / psi_2 for even n; it never involves y.
    """

    n: int
    value: CoordElem
    cofactor: Poly

    @property
    def is_even(self) -> bool:
        return self.n % 2 == 0


class DivisionPolynomials:
    """
    Memoized division polynomials of one curve.

    Index n holds psi_n for odd n and psi_n / psi_2 for even n, so every entry is a
    polynomial in x alone. Access is serialized by a reentrant lock; published entries
    are never mutated.
    """

    def __init__(self, curve: WeierstrassCurve):
        self.curve = curve
        self._lock = threading.RLock()
        dom = curve.domain
        b = curve.b_invariants
        self.psi2_squared = Poly([b.b6, 2 * b.b4, b.b2, 4], dom)
        self._cache: dict[int, Poly] = {
            0: Poly([], dom),
            1: Poly([1], dom),
            2: Poly([1], dom),
            3: Poly([b.b8, 3 * b.b6, 3 * b.b4, b.b2, 3], dom),
            4: Poly(
                [
                    b.b4 * b.b8 - b.b6 * b.b6,
                    b.b2 * b.b8 - b.b4 * b.b6,
                    10 * b.b8,
                    10 * b.b6,
                    5 * b.b4,
                    b.b2,
                    2,
                ],
                dom,
            ),
        }
        self._primitive: dict[int, Poly] = {}

    def __len__(self) -> int:
        return len(self._cache)

    def __getitem__(self, n: int) -> Poly:
        if n < 0:
            raise ArgumentError(f"division polynomial index must be nonnegative, got {n}")
        with self._lock:
            cached = self._cache.get(n)
            if cached is not None:
                return cached
            m = n // 2
            if n % 2:
                f2 = self.psi2_squared * self.psi2_squared
                if m % 2 == 0:
                    result = f2 * self[m + 2] * self[m] ** 3 - self[m - 1] * self[m + 1] ** 3
                else:
                    result = self[m + 2] * self[m] ** 3 - f2 * self[m - 1] * self[m + 1] ** 3
            else:
                # same shape for both parities of m thanks to the psi_2 bookkeeping
                result = self[m] * (self[m + 2] * self[m - 1] ** 2 - self[m - 2] * self[m + 1] ** 2)
            self._cache[n] = result
            logger.debug("computed psi_%d of degree %d", n, result.degree)
            return result

    def psi(self, n: int) -> DivisionPolynomial:
        if n < 1:
            raise ArgumentError(f"psi_n needs n >= 1, got {n}")
        cofactor = self[n]
        if n % 2:
            return DivisionPolynomial(n, self.curve.coord(cofactor), cofactor)
        value = self.curve.coord(cofactor * self.curve.y_linear(), cofactor.scale(2))
        return DivisionPolynomial(n, value, cofactor)

    def primitive(self, n: int) -> Poly:
        if n < 3:
            raise ArgumentError(f"primitive division polynomials are defined for n >= 3, got {n}")
        with self._lock:
            cached = self._primitive.get(n)
            if cached is not None:
                return cached
            result = self[n]
            for m in divisors(n):
                if 3 <= m < n:
                    result = result.exact_divide(self.primitive(m))
            _check_primitive(n, result)
            self._primitive[n] = result
            return result


def _check_primitive(n: int, poly: Poly) -> None:
    expected_degree = primitive_degree(n)
    if poly.degree != expected_degree:
        raise InternalError(f"deg psi~_{n} = {poly.degree}, expected {expected_degree}")
    expected_lc = prime_power_base(n) or 1
    if poly.lc != expected_lc:
        raise InternalError(f"leading coefficient of psi~_{n} is {poly.lc}, expected {expected_lc}")


@lru_cache(maxsize=128)
def division_polynomials(curve: WeierstrassCurve) -> DivisionPolynomials:
    return DivisionPolynomials(curve)


def psi(curve: WeierstrassCurve, n: int) -> DivisionPolynomial:
    return division_polynomials(curve).psi(n)


def psi_tilde(curve: WeierstrassCurve, n: int) -> Poly:
    """
    The primitive division polynomial, whose roots are the x-coordinates of points of exact order n.

    Args:
        curve: A curve over QQ or QQ[t].
        n: The order, at least 3.

    Returns:
        A polynomial in x of degree J_2(n)/2 with leading coefficient p when n is a power of p, else 1.
    """
    return division_polynomials(curve).primitive(n)


def psi2_squared(curve: WeierstrassCurve) -> Poly:
    return division_polynomials(curve).psi2_squared


def primitive_degree(n: int) -> int:
    if n < 3:
        raise ArgumentError(f"primitive degree is defined for n >= 3, got {n}")
    return jordan_totient_2(n) // 2


def x_field_polynomial(curve: WeierstrassCurve, n: int) -> Poly:
    """psi~_n for n >= 3 and psi_2^2 for n = 2: a polynomial whose splitting field is QQ(x(E[n]))."""
    if n == 2:
        return psi2_squared(curve)
    return psi_tilde(curve, n)


def degree_coincidences(limit: int) -> list[list[int]]:
    """Groups of 3 <= n <= limit sharing the same primitive degree, ordered by that degree."""
    groups: dict[int, list[int]] = defaultdict(list)
    for n in range(3, limit + 1):
        groups[primitive_degree(n)].append(n)
    return [members for _, members in sorted(groups.items()) if len(members) > 1]
