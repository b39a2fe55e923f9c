import json
from fractions import Fraction

import pytest
from pydantic import ValidationError

from torsion_galois.domains import QQ, QQt, FiniteField
from torsion_galois.emit import emit, format_poly, parse_polynomial
from torsion_galois.lattice import Mod3Label
from torsion_galois.models import (
    CharPolyReport,
    ClassificationReport,
    CorpusReport,
    DegreeGroup,
    DegreeReport,
    EntryKind,
    EntryResult,
    EntryStatus,
    Evidence,
    PolynomialModel,
    ProbeReport,
    ScalingReport,
)
from torsion_galois.polyring import Poly

t = Poly([0, 1], QQ)


def test_format_poly():
    assert format_poly(Poly([-27, 0, 0, 0, 18, 0, 8, 0, 1])) == "x^8 + 8*x^6 + 18*x^4 - 27"
    assert format_poly(Poly([Fraction(-4, 13), 0, Fraction(1, 4), 1])) == "x^3 + 1/4*x^2 - 4/13"
    assert format_poly(Poly([-1, 1]), var="T") == "T - 1"
    assert format_poly(Poly([])) == "0"
    f = Poly([Poly([Fraction(1, 27), 8], QQ), Poly([Fraction(-1, 3)], QQ), 1], QQt)
    assert format_poly(f) == "x^2 - 1/3*x + (8*t + 1/27)"
    assert format_poly(Poly([-t, t * t], QQt)) == "t^2*x - t"


def test_polynomial_model():
    f = Poly([Poly([0, 0, 0, 0, -27], QQ), 0, Poly([Fraction(1, 27), 8], QQ), 1], QQt)
    model = PolynomialModel.from_poly(f)
    assert model.ring == "Qt"
    assert model.coeffs[0] == ["0", "0", "0", "0", "-27"]
    assert model.coeffs[1] == []
    assert model.to_poly() == f
    assert parse_polynomial(emit(model)) == f

    g = Poly([1, 2], FiniteField(5))
    model = PolynomialModel.from_poly(g)
    assert (model.ring, model.p, model.coeffs) == ("Fp", 5, ["1", "2"])
    assert model.to_poly() == g


def test_polynomial_model_validation():
    with pytest.raises(ValidationError):
        PolynomialModel(ring="Fp", coeffs=["1"])
    with pytest.raises(ValidationError):
        PolynomialModel(ring="Q", p=5, coeffs=["1"])
    with pytest.raises(ValidationError):
        PolynomialModel(ring="Qt", coeffs=["1"])
    with pytest.raises(ValidationError):
        PolynomialModel(ring="Q", coeffs=[["1"]])


def test_emit_json_drops_none():
    report = ProbeReport(ell=3, bound=100, found=None)
    assert json.loads(emit(report)) == {"ell": 3, "bound": 100}


def test_emit_pretty():
    chi = PolynomialModel.from_poly(Poly([-27, 0, 0, 0, 18, 0, 8, 0, 1]))
    report = CharPolyReport(
        curve="0,0,0,0,1",
        u="1,0,0",
        n=3,
        degree=8,
        method="resultant",
        chi=chi,
        valuation_min={3: 0, 5: None},
        valuation_bound_ok={3: True, 5: None},
        numeric_residual=1e-15,
    )
    text = emit(report, "pretty")
    assert "chi_{1,0,0,3} of [0,0,0,0,1], resultant, degree 8" in text
    assert "x^8 + 8*x^6 + 18*x^4 - 27" in text
    assert "valuation at 3: 0 (ok)" in text
    assert "valuation at 5: not applicable" in text
    assert "numeric residual: 1.000e-15" in text

    assert emit(ProbeReport(ell=3, bound=100, found=7), "pretty") == "ell=3: Found(7)"
    assert emit(ProbeReport(ell=3, bound=100), "pretty") == "ell=3: NotFoundUpTo(100)"
    assert emit(PolynomialModel.from_poly(Poly([1, 0, 3])), "pretty") == "f = 3*x^2 + 1"


def test_emit_pretty_classification():
    report = ClassificationReport(
        curve="1,0,0,0,-4/13",
        label=Mod3Label.D12,
        qualifier="exact",
        evidence=Evidence(factorization_type=[1, 3], probe=ProbeReport(ell=3, bound=1000, found=13)),
    )
    text = emit(report, "pretty")
    assert text.startswith("[1,0,0,0,-4/13]: D12 (exact)")
    assert "psi_3 factors as 1+3" in text
    assert "Found(13)" in text
    assert json.loads(emit(report))["label"] == "D12"


def test_emit_pretty_reports():
    corpus = CorpusReport(
        entries=[
            EntryResult(name="a", kind=EntryKind.CHARPOLY, status=EntryStatus.PASS),
            EntryResult(name="b", kind=EntryKind.CLASSIFY, status=EntryStatus.FAIL, detail="got C1"),
        ]
    )
    text = emit(corpus, "pretty")
    assert "fail     b: got C1" in text
    assert text.endswith("1 passed, 0 errata, 1 failed, 0 skipped")
    assert json.loads(emit(corpus))["summary"] == {"pass": 1, "erratum": 0, "fail": 1, "skipped": 0}

    scaling = ScalingReport(
        curve="0,0,0,2,-1", p=5, m=1, n=2, ok=True, required=[6, 4, 2, 0], valuations=[6, 4, None, 0]
    )
    text = emit(scaling, "pretty")
    assert "x^2: valuation inf >= 2" in text

    degrees = DegreeReport(limit=10, groups=[DegreeGroup(degree=12, orders=[5, 6])])
    assert emit(degrees, "pretty") == "deg 12: n = 5, 6\n"


def test_emit_unknown_model():
    with pytest.raises(TypeError):
        emit(EntryResult(name="a", kind=EntryKind.DEGREE, status=EntryStatus.PASS), "pretty")
