from pydantic import BaseModel

from .polynomial import PolynomialModel


class CharPolyReport(BaseModel):
    """
    chi_{u,n} with the checks requested on the command line.

    `valuation_min` maps a prime to the minimum coefficient valuation, or None when the
    curve and u lie outside the range where a bound is claimed.
    """

    curve: str
    u: str
    n: int
    degree: int
    method: str
    chi: PolynomialModel
    valuation_min: dict[int, int | None] = {}
    valuation_bound_ok: dict[int, bool | None] = {}
    numeric_residual: float | None = None
    timings: dict[str, float] | None = None
