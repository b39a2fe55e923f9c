import itertools
import random
from fractions import Fraction
from pathlib import Path

import pytest

from torsion_galois.curve import (
    LinearFunction,
    WeierstrassCurve,
    change_coordinates,
    check_admissible,
    conjugate,
    negation_coordinates,
)
from torsion_galois.divpoly import primitive_degree, psi2_squared
from torsion_galois.domains import QQt
from torsion_galois.errors import ArgumentError, InadmissibleLinearFunctionError, RegimeError, SingularCurveError
from torsion_galois.models import PolynomialModel
from torsion_galois.polyring import Poly
from torsion_galois.torsionchar import (
    QuotientRing,
    charpoly_matrix,
    charpoly_n2,
    charpoly_resultant,
    compute_charpoly,
    numeric_root_check,
    scaling_experiment,
    valuation_profile,
)

GOLDEN = Path(__file__).parent.parent / "corpus" / "golden"

y = LinearFunction.y()
x_plus_y = LinearFunction(1, 1, 0)
mordell = WeierstrassCurve.parse("0,0,0,0,1")
borel = WeierstrassCurve.parse("1,0,0,0,-4/13")
serre = WeierstrassCurve.parse("1,0,0,0,t")
e37a1 = WeierstrassCurve.parse("0,0,1,-1,0")
e11a1 = WeierstrassCurve.parse("0,-1,1,-10,-20")

CURVES = {
    "11a1": e11a1,
    "14a1": WeierstrassCurve.parse("1,0,1,4,-6"),
    "15a1": WeierstrassCurve.parse("1,1,1,-10,-10"),
    "19a1": WeierstrassCurve.parse("0,1,1,-9,-15"),
    "37a1": e37a1,
    "borel": borel,
    "generic": WeierstrassCurve.parse("1,0,0,0,1"),
    "j0": WeierstrassCurve.parse("0,0,1,0,0"),
    "short": WeierstrassCurve.parse("0,0,0,-2,3"),
    "mordell": mordell,
}
U_CHOICES = [y, x_plus_y, LinearFunction(1, 1, 1)]


def golden(name: str) -> Poly:
    return PolynomialModel.model_validate_json((GOLDEN / name).read_text(encoding="utf-8")).to_poly()


def admissible(curve: WeierstrassCurve, u: LinearFunction) -> bool:
    try:
        check_admissible(curve, u)
    except InadmissibleLinearFunctionError:
        return False
    return True


def dual_route_cases():
    for name, curve in CURVES.items():
        for u in filter(lambda u: admissible(curve, u), U_CHOICES):
            for n in range(3, 8):
                marks = [pytest.mark.slow] if n >= 6 else []
                yield pytest.param(curve, u, n, marks=marks, id=f"{name}-{u}-{n}")
    yield pytest.param(serre, x_plus_y, 3, id="serre-x+y-3")
    yield pytest.param(serre, y, 4, id="serre-y-4")


def random_curves(count: int, seed: int = 20):
    rng = random.Random(seed)
    curves = []
    while len(curves) < count:
        coefficients = ",".join(f"{rng.randint(-9, 9)}/{rng.randint(1, 5)}" for _ in range(5))
        try:
            curves.append(WeierstrassCurve.parse(coefficients))
        except SingularCurveError:
            continue
    return curves


def test_y_inadmissible_without_a1():
    # 2b - a1*a vanishes for u = y when a1 = 0
    with pytest.raises(InadmissibleLinearFunctionError):
        charpoly_resultant(mordell, y, 3)
    with pytest.raises(InadmissibleLinearFunctionError):
        charpoly_matrix(e37a1, y, 3)


def test_chi_x_plus_y_3_mordell():
    expected = Poly([-43, 72, 16, -80, 18, 8, 8, 0, 1])
    assert charpoly_resultant(mordell, x_plus_y, 3).chi == expected
    assert charpoly_matrix(mordell, x_plus_y, 3).chi == expected


def test_borel_golden():
    result = compute_charpoly(borel, y, 3, "resultant")
    assert result.chi == golden("borel_chi_y_3.json")
    assert result.chi.coeff(6) == Fraction(-851, 351)
    assert result.degree == 8
    assert charpoly_matrix(borel, y, 3).chi == result.chi


def test_serre_chi_y_3_odd_signs():
    result = charpoly_resultant(serre, y, 3)
    table = golden("serre_chi_y_3.json")
    assert result.domain == QQt
    for k in range(9):
        assert result.chi.coeff(k) == table.coeff(k) * (-1) ** k
    # the sum of the x-roots of psi~_3 is -1/3
    assert result.chi.coeff(7) == Poly([Fraction(-1, 3)])


def test_serre_chi_y_4_golden():
    result = charpoly_resultant(serre, y, 4)
    assert result.degree == 12
    assert result.chi == golden("serre_chi_y_4.json")


@pytest.mark.slow
@pytest.mark.parametrize("n", [5, 6])
def test_serre_golden_slow(n):
    assert charpoly_resultant(serre, y, n).chi == golden(f"serre_chi_y_{n}.json")


@pytest.mark.parametrize("curve, u, n", dual_route_cases())
def test_dual_route(curve, u, n):
    assert charpoly_matrix(curve, u, n).chi == charpoly_resultant(curve, u, n).chi


def test_resultant_route_over_parameter_ring():
    result = compute_charpoly(serre, y, 3, "resultant")
    assert result.method == "resultant"
    assert result.domain == QQt
    assert result.chi.is_monic()
    assert result.chi.coeff(0) == Poly([0, 0, 0, 0, -27])
    assert result.chi == charpoly_matrix(serre, y, 3).chi


@pytest.mark.parametrize(
    "curve, u",
    [(e37a1, x_plus_y), (borel, y), (CURVES["14a1"], LinearFunction(1, 1, 1)), (e11a1, LinearFunction(2, -1, 3))],
)
def test_conjugate_symmetry(curve, u):
    # u(-P) = u*(P) and P -> -P permutes the points of exact order n
    assert change_coordinates(curve, *negation_coordinates(curve)) == curve
    star = conjugate(curve, u)
    for n in (3, 4):
        assert charpoly_matrix(curve, star, n).chi == charpoly_matrix(curve, u, n).chi
    assert charpoly_resultant(curve, star, 3).chi == charpoly_resultant(curve, u, 3).chi


def test_specialize_commutes():
    result = charpoly_resultant(serre, y, 3)
    for t0 in (1, -2):
        specialized = result.specialize(t0)
        assert specialized.chi == charpoly_resultant(serre.specialize(t0), y, 3).chi
        assert specialized.curve == serre.specialize(t0)


def test_quotient_ring():
    ring = QuotientRing(e37a1, 3)
    assert ring.degree == 4
    assert ring.dimension == 8
    assert ring.modulus.is_monic()
    matrix = ring.multiplication_matrix(y)
    assert len(matrix) == 8
    assert all(len(row) == 8 for row in matrix)
    with pytest.raises(ArgumentError):
        QuotientRing(e37a1, 2)


def test_inadmissible():
    with pytest.raises(InadmissibleLinearFunctionError):
        charpoly_matrix(borel, LinearFunction(0, 1, 0), 3)
    with pytest.raises(InadmissibleLinearFunctionError):
        charpoly_resultant(borel, LinearFunction(2, 1, 0), 3)


def test_n2():
    short = WeierstrassCurve.parse("0,0,0,-2,3")
    assert charpoly_n2(short).chi == Poly([3, -2, 0, 1])
    assert charpoly_n2(borel).chi == Poly([Fraction(-4, 13), 0, Fraction(1, 4), 1])
    assert compute_charpoly(short, LinearFunction.x(), 2).method == "formula"
    with pytest.raises(ArgumentError):
        compute_charpoly(short, y, 2)
    with pytest.raises(ArgumentError):
        charpoly_resultant(short, y, 2)


def test_valuation_profile():
    profile = valuation_profile(charpoly_resultant(serre, y, 3), 3)
    assert profile.bound == -3
    assert profile.minimum == -3
    assert profile.ok and profile.attained

    profile = valuation_profile(charpoly_resultant(e37a1, x_plus_y, 6), 2)
    assert profile.bound == 0
    assert profile.ok

    with pytest.raises(RegimeError):
        valuation_profile(charpoly_resultant(e37a1, LinearFunction(2, 1, 0), 3), 3)
    with pytest.raises(RegimeError):
        valuation_profile(charpoly_resultant(borel, y, 3), 13)


@pytest.mark.parametrize(
    "coefficients, p, m", itertools.product(["0,0,0,1,1", "0,0,0,0,1", "0,0,0,2,-1"], [2, 5, 7], [1, 2])
)
def test_scaling(coefficients, p, m):
    profile = scaling_experiment(WeierstrassCurve.parse(coefficients), p, m)
    assert profile.ok
    assert profile.required[0] == 16 * m
    assert profile.failures == []



def test_n2_random_curves():
    for curve in random_curves(20):
        b = curve.b_invariants
        chi = charpoly_n2(curve).chi
        assert chi == psi2_squared(curve).scale(Fraction(1, 4))
        assert chi == Poly([b.b6 / 4, b.b4 / 2, b.b2 / 4, 1])
    for a, b in ((1, 1), (-2, 3), (Fraction(1, 2), Fraction(-7, 3))):
        assert charpoly_n2(WeierstrassCurve(0, 0, 0, a, b)).chi == Poly([b, a, 0, 1])

def test_scaling_n2():
    profile = scaling_experiment(WeierstrassCurve.parse("0,0,0,2,-1"), 5, 1, n=2)
    assert profile.ok
    assert profile.required == (6, 4, 2, 0)
    assert profile.valuations[:2] == (6, 4)


def test_scaling_arguments():
    with pytest.raises(ArgumentError):
        scaling_experiment(WeierstrassCurve.parse("0,0,0,1,1"), 3, 1)
    with pytest.raises(ArgumentError):
        scaling_experiment(borel, 5, 1)
    with pytest.raises(ArgumentError):
        scaling_experiment(WeierstrassCurve.parse("0,0,0,1,1/5"), 5, 1)
    with pytest.raises(ArgumentError):
        scaling_experiment(WeierstrassCurve.parse("0,0,0,1,1"), 5, 1, n=4)


def test_numeric_root_check():
    check = numeric_root_check(e37a1, x_plus_y, 3)
    assert check.ok
    assert check.points == 8
    check = numeric_root_check(borel, x_plus_y, 4, tol=1e-6)
    assert check.ok
    assert check.points == 12
    wrong = charpoly_resultant(mordell, x_plus_y, 3).chi + Poly([1])
    assert not numeric_root_check(mordell, x_plus_y, 3, chi=wrong).ok
    with pytest.raises(ArgumentError):
        numeric_root_check(serre, y, 3)


@pytest.mark.parametrize(
    "curve, u, n, tol",
    [
        (e37a1, x_plus_y, 5, 1e-6),
        (e37a1, x_plus_y, 6, 1e-6),
        (borel, y, 6, 1e-6),
        pytest.param(e37a1, x_plus_y, 7, 1e-5, marks=pytest.mark.slow),
        pytest.param(e11a1, LinearFunction(1, 1, 1), 7, 1e-5, marks=pytest.mark.slow),
    ],
)
def test_numeric_root_check_high_order(curve, u, n, tol):
    check = numeric_root_check(curve, u, n, tol)
    assert check.ok
    assert check.points == 2 * primitive_degree(n)
