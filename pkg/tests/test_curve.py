from fractions import Fraction

import pytest

from torsion_galois.curve import (
    LinearFunction,
    WeierstrassCurve,
    ap,
    change_coordinates,
    check_admissible,
    conjugate,
    count_points,
    inverse_coordinates,
    negation_coordinates,
    parse_scalar,
    recover_point,
    reduce_mod_p,
    transform_for_u,
)
from torsion_galois.domains import QQ, QQt
from torsion_galois.errors import (
    ArgumentError,
    BadReductionError,
    InadmissibleLinearFunctionError,
    NotPIntegralError,
    SingularCurveError,
)
from torsion_galois.polyring import Poly

borel = WeierstrassCurve.parse("1,0,0,0,-4/13")
e11a1 = WeierstrassCurve.parse("0,-1,1,-10,-20")
j0 = WeierstrassCurve.parse("0,0,1,0,0")


def test_parse():
    assert borel.coefficients == (1, 0, 0, 0, Fraction(-4, 13))
    assert borel.domain == QQ
    assert str(borel) == "1,0,0,0,-4/13"
    assert not borel.is_short
    assert WeierstrassCurve.parse("0, 0, 0, 1, 1").is_short
    with pytest.raises(ArgumentError):
        WeierstrassCurve.parse("1,2,3")
    with pytest.raises(SingularCurveError):
        WeierstrassCurve.parse("0,0,0,0,0")


def test_parse_parametric():
    assert parse_scalar("2*t^2-1") == Poly([-1, 0, 2], QQ)
    assert parse_scalar("3/4*t") == Poly([0, Fraction(3, 4)], QQ)
    serre = WeierstrassCurve.parse("1,0,0,0,t")
    assert serre.is_parametric
    assert serre.domain == QQt
    assert str(serre) == "1,0,0,0,t"
    assert serre.specialize(2) == WeierstrassCurve(1, 0, 0, 0, 2)
    with pytest.raises(SingularCurveError):
        serre.specialize(0)
    with pytest.raises(ArgumentError):
        parse_scalar("2*s")


def test_invariants():
    b = WeierstrassCurve.parse("0,0,0,1,1").b_invariants
    assert (b.b2, b.b4, b.b6, b.b8) == (0, 2, 4, -1)
    assert WeierstrassCurve.parse("0,0,0,1,1").discriminant == -16 * 31
    assert j0.discriminant == -27
    assert e11a1.discriminant == -161051


def test_admissible():
    check_admissible(borel, LinearFunction.y())
    with pytest.raises(InadmissibleLinearFunctionError):
        check_admissible(borel, LinearFunction.x())
    with pytest.raises(InadmissibleLinearFunctionError):
        check_admissible(borel, LinearFunction(1, Fraction(1, 2), 0))
    assert str(LinearFunction.parse("1, 1/2, -3")) == "1,1/2,-3"
    with pytest.raises(ArgumentError):
        LinearFunction.parse("1,2")


def test_change_coordinates():
    r, s, t, u = Fraction(1), Fraction(-2), Fraction(3), Fraction(2)
    moved = change_coordinates(e11a1, r, s, t, u)
    assert moved.discriminant == e11a1.discriminant / u**12
    assert change_coordinates(moved, *inverse_coordinates(r, s, t, u)) == e11a1


def test_transform_for_u():
    u = LinearFunction(2, 1, 3)
    transformed = transform_for_u(borel, u)
    assert transformed.scale == 4
    assert transformed.curve.discriminant == borel.discriminant * 2**12
    with pytest.raises(InadmissibleLinearFunctionError):
        transform_for_u(borel, LinearFunction.x())


def test_conjugate():
    assert conjugate(borel, LinearFunction.y()) == LinearFunction(-1, -1, 0)
    assert conjugate(j0, LinearFunction(1, 1, 0)) == LinearFunction(-1, 1, -1)


def test_negation_is_an_automorphism():
    for curve in (borel, e11a1, j0):
        assert change_coordinates(curve, *negation_coordinates(curve)) == curve
    assert negation_coordinates(borel) == (0, -1, 0, -1)
    with pytest.raises(ArgumentError):
        negation_coordinates(WeierstrassCurve.parse("1,0,0,0,t"))


def test_recover_point():
    u = LinearFunction(1, 1, 0)
    star = conjugate(j0, u)
    for x, y in ((Fraction(0), Fraction(0)), (Fraction(0), Fraction(-1))):
        value = u.a * y + u.b * x + u.c
        conjugate_value = star.a * y + star.b * x + star.c
        assert recover_point(j0, u, value, conjugate_value) == (x, y)
    with pytest.raises(InadmissibleLinearFunctionError):
        recover_point(j0, LinearFunction.y(), Fraction(0), Fraction(-1))


def test_reduce_mod_p():
    reduced = reduce_mod_p(e11a1, 7)
    assert reduced.coefficients == (0, 6, 1, 4, 1)
    with pytest.raises(BadReductionError):
        reduce_mod_p(e11a1, 11)
    with pytest.raises(NotPIntegralError):
        reduce_mod_p(borel, 13)


def test_ap():
    assert [ap(e11a1, p) for p in (2, 3, 5, 7, 13)] == [-2, -1, 1, -2, 4]
    assert count_points(reduce_mod_p(e11a1, 2)) == 5
    assert ap(j0, 5) == 0
    assert ap(j0, 11) == 0
    for p in (7, 13, 19, 31, 37, 43):
        assert ap(j0, p) ** 2 <= 4 * p
