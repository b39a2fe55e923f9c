"""
Serialization of results: JSON through the pydantic models, pretty text through jinja2.
"""

from typing import Any, Literal

from jinja2 import Template
from pydantic import BaseModel

from .curve import format_scalar
from .exactmath import format_rational
from .models import (
    CharPolyReport,
    ClassificationReport,
    CorpusReport,
    DegreeReport,
    PolynomialModel,
    ProbeReport,
    ScalingReport,
)
from .polyring import Poly
from .templates import (
    charpoly_report_string,
    classification_string,
    corpus_report_string,
    degree_string,
    polynomial_string,
    probe_string,
    scaling_string,
)

Format = Literal["json", "pretty"]


def _format_coeff(value: Any) -> tuple[str, bool]:
    """Text of |value| and whether the term is negative; t-polynomials are parenthesized."""
    if isinstance(value, Poly):
        nonzero = [c for c in value.coeffs if c]
        if len(nonzero) == 1:
            negative = nonzero[0] < 0
            return format_scalar(-value if negative else value), negative
        text = format_scalar(value).replace("+", " + ").replace("-", " - ").strip()
        if text.startswith("- "):
            text = "-" + text[2:]
        return f"({text})", False
    return format_rational(abs(value)), value < 0


def format_poly(poly: Poly, var: str = "x") -> str:
    """Descending powers with "/" rationals, e.g. "x^8 - 1/3*x^7 + (8*t + 1/27)*x^6"."""
    terms: list[str] = []
    for k in range(poly.degree, -1, -1):
        c = poly.coeffs[k]
        if not c:
            continue
        text, negative = _format_coeff(c)
        monomial = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        if monomial and text == "1":
            body = monomial
        elif monomial:
            body = f"{text}*{monomial}"
        else:
            body = text
        if not terms:
            terms.append(f"-{body}" if negative else body)
        else:
            terms.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(terms) or "0"


def emit(result: BaseModel, fmt: Format = "json") -> str:
    """
    Deterministic text for a result model.

    Args:
        result: A polynomial or report model.
        fmt: "json" (indented, None fields dropped) or "pretty".
    """
    if fmt == "json":
        return result.model_dump_json(indent=2, exclude_none=True)
    if isinstance(result, PolynomialModel):
        return Template(polynomial_string).render(name="f", poly=format_poly(result.to_poly()))
    if isinstance(result, CharPolyReport):
        return Template(charpoly_report_string).render(report=result, chi=format_poly(result.chi.to_poly()))
    if isinstance(result, ClassificationReport):
        return Template(classification_string).render(report=result)
    if isinstance(result, ProbeReport):
        return Template(probe_string).render(report=result)
    if isinstance(result, CorpusReport):
        return Template(corpus_report_string).render(report=result)
    if isinstance(result, ScalingReport):
        return Template(scaling_string).render(report=result)
    if isinstance(result, DegreeReport):
        return Template(degree_string).render(report=result)
    raise TypeError(f"no pretty form for {type(result).__name__}")


def parse_polynomial(text: str) -> Poly:
    """Inverse of `emit(PolynomialModel.from_poly(p))` for the JSON form."""
    return PolynomialModel.model_validate_json(text).to_poly()
