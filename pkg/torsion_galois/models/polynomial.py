from typing import Literal

from pydantic import BaseModel, model_validator

from ..domains import QQ, QQt, Domain, FiniteField
from ..errors import ArgumentError
from ..exactmath import format_rational, parse_rational
from ..polyring import Poly

Ring = Literal["Q", "Qt", "Fp"]


def _ring_of(domain: Domain) -> tuple[Ring, int | None]:
    if domain == QQ:
        return "Q", None
    if domain == QQt:
        return "Qt", None
    if isinstance(domain, FiniteField):
        return "Fp", domain.p
    raise ArgumentError(f"no JSON form for polynomials over {domain}")


class PolynomialModel(BaseModel):
    """
    A polynomial with ascending coefficients.

    Rationals are "num/den" strings (den omitted when 1); a coefficient in QQ[t] is itself
    an ascending list of such strings.
    """

    ring: Ring
    p: int | None = None
    coeffs: list[str | list[str]]

    @model_validator(mode="after")
    def check_shape(self) -> "PolynomialModel":
        if (self.ring == "Fp") != (self.p is not None):
            raise ValueError("a prime p is required exactly when ring is Fp")
        nested = self.ring == "Qt"
        if any(isinstance(c, list) != nested for c in self.coeffs):
            raise ValueError(f"coefficients over {self.ring} must be {'lists' if nested else 'strings'}")
        return self

    @classmethod
    def from_poly(cls, poly: Poly) -> "PolynomialModel":
        ring, p = _ring_of(poly.domain)
        if ring == "Qt":
            coeffs: list = [[format_rational(c) for c in coeff.coeffs] for coeff in poly.coeffs]
        else:
            coeffs = [format_rational(c) for c in poly.coeffs]
        return cls(ring=ring, p=p, coeffs=coeffs)

    def to_poly(self) -> Poly:
        if self.ring == "Qt":
            return Poly([Poly([parse_rational(c) for c in coeff], QQ) for coeff in self.coeffs], QQt)
        domain: Domain = FiniteField(self.p) if self.ring == "Fp" else QQ  # type: ignore[arg-type]
        return Poly([parse_rational(c) for c in self.coeffs], domain)  # type: ignore[arg-type]
