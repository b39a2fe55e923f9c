from fractions import Fraction

import pytest

from torsion_galois.curve import LinearFunction, WeierstrassCurve, ap
from torsion_galois.divpoly import psi_tilde
from torsion_galois.errors import ArgumentError
from torsion_galois.factorization import QuarticGroup
from torsion_galois.galois import (
    Irreducibility,
    QuadraticElement,
    classify_mod3,
    minus_id_probe,
    probable_irreducible,
)
from torsion_galois.lattice import Mod3Label
from torsion_galois.polyring import Poly
from torsion_galois.torsionchar import charpoly_resultant

e11a1 = WeierstrassCurve.parse("0,-1,1,-10,-20")
j0 = WeierstrassCurve.parse("0,0,1,0,0")
borel = WeierstrassCurve.parse("1,0,0,0,-4/13")
generic = WeierstrassCurve.parse("1,0,0,0,1")


def test_quadratic_element():
    two = Fraction(2)
    root = QuadraticElement(Fraction(0), Fraction(1), two)
    assert root * root == QuadraticElement(two, Fraction(0), two)
    assert (1 + root) * (1 + root) == QuadraticElement(Fraction(3), two, two)
    assert ((1 + root) * (1 + root)).is_square()
    assert not root.is_square()
    assert QuadraticElement(two, Fraction(0), two).is_square()
    assert not QuadraticElement(Fraction(3), Fraction(0), two).is_square()
    assert not (root - root)
    with pytest.raises(ArgumentError):
        root + QuadraticElement(Fraction(0), Fraction(1), Fraction(3))


def test_minus_id_probe():
    probe = minus_id_probe(e11a1, 3, 100)
    assert probe.found == 7
    assert str(probe) == "Found(7)"
    assert probe.found % 3 == 1
    assert (ap(e11a1, probe.found) + 2) % 3 == 0


def test_minus_id_probe_threads():
    assert minus_id_probe(e11a1, 3, 5000, threads=4).found == 7


def test_minus_id_probe_not_found():
    probe = minus_id_probe(j0, 3, 3000, threads=2)
    assert probe.found is None
    assert not probe.is_found
    assert str(probe) == "NotFoundUpTo(3000)"


def test_minus_id_mod_5():
    # a_p = 0 at p = 2 mod 3; a_31 = -4, a_61 = -1, a_151 = -19, a_181 = -7
    assert minus_id_probe(j0, 5, 100).found is None
    search = minus_id_probe(j0, 5, 200, threads=2)
    assert search.found == 181
    assert ap(j0, 41) == 0
    assert ap(j0, 181) == -7


@pytest.mark.slow
def test_minus_id_probe_full_bound():
    assert minus_id_probe(j0, 3, 100_000, threads=4).found is None


def test_minus_id_probe_arguments():
    with pytest.raises(ArgumentError):
        minus_id_probe(e11a1, 2, 100)
    with pytest.raises(ArgumentError):
        minus_id_probe(e11a1, 9, 100)
    with pytest.raises(ArgumentError):
        minus_id_probe(WeierstrassCurve.parse("1,0,0,0,t"), 3, 100)


def test_classify_two_c2():
    classification = classify_mod3(j0, 1000)
    assert classification.label == Mod3Label.TwoC2
    assert classification.qualifier == "exact"
    assert classification.factorization == (1, 1, 2)


def test_classify_gl2():
    classification = classify_mod3(generic, 1000)
    assert classification.label == Mod3Label.GL2F3
    assert classification.quartic_group == QuarticGroup.S4
    assert classification.label.contains_minus_id


def test_classify_borel():
    classification = classify_mod3(borel, 1000, threads=2)
    assert classification.factorization == (1, 3)
    assert classification.label == Mod3Label.D12
    assert classification.probe is not None and classification.probe.is_found


def test_classify_rejects_parametric():
    with pytest.raises(ArgumentError):
        classify_mod3(WeierstrassCurve.parse("1,0,0,0,t"))


def test_probable_irreducible():
    witness = probable_irreducible(Poly([1, 1, 0, 0, 1]))
    assert witness.verdict == Irreducibility.CERTIFIED
    assert witness.patterns[2] == (4,)

    witness = probable_irreducible(Poly([1, 0, 0, 0, 1]))
    assert witness.verdict == Irreducibility.UNDECIDED
    assert 2 not in witness.patterns
    # x^4 + 1 splits completely modulo 41 = 1 mod 8
    assert witness.patterns[41] == (1, 1, 1, 1)
    assert max(witness.patterns) == 199

    witness = probable_irreducible(Poly([1, 0, 0, 0, 1]), prime_bound=50)
    assert max(witness.patterns) == 47


def test_probable_irreducible_on_gl2_curve():
    assert probable_irreducible(psi_tilde(generic, 3)).verdict == Irreducibility.CERTIFIED
    chi = charpoly_resultant(generic, LinearFunction.y(), 3).chi
    assert probable_irreducible(chi).verdict == Irreducibility.CERTIFIED


def test_probable_irreducible_arguments():
    with pytest.raises(ArgumentError):
        probable_irreducible(Poly([3]))


def small_curves():
    for a in range(-3, 4):
        for b in range(-3, 4):
            if 4 * a**3 + 27 * b**2:
                yield WeierstrassCurve.parse(f"0,0,0,{a},{b}")


def test_classify_consistency():
    for curve in small_curves():
        classification = classify_mod3(curve, 300)
        label = classification.label
        # the cyclotomic determinant rules out images inside SL2
        assert not label.inside_sl2, curve
        if classification.factorization in ((4,), (2, 2)):
            assert label.contains_minus_id, curve
        probe = classification.probe
        if probe is not None and probe.is_found:
            assert label.contains_minus_id, curve
        if classification.qualifier == "probable":
            assert label == Mod3Label.S3_Borel
