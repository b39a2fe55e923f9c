from fractions import Fraction

import sympy

from torsion_galois.domains import QQ, QQt
from torsion_galois.linalg import bareiss_determinant, charpoly, determinant, sylvester_matrix
from torsion_galois.polyring import Poly

t = Poly([0, 1], QQ)


def rationals(rows):
    return [[Fraction(c) for c in row] for row in rows]


def test_bareiss_determinant():
    assert bareiss_determinant(rationals([[2, 1], [1, 3]]), QQ) == 5
    assert bareiss_determinant(rationals([[0, 1], [1, 0]]), QQ) == -1
    assert bareiss_determinant(rationals([[1, 2], [2, 4]]), QQ) == 0
    assert bareiss_determinant([], QQ) == 1


def test_sylvester_matrix():
    rows = sylvester_matrix(Poly([1, 0, 1]), Poly([-2, 1]))
    assert rows == rationals([[1, 0, 1], [1, -2, 0], [0, 1, -2]])


def test_charpoly():
    assert charpoly(rationals([[1, 2], [3, 4]]), QQ) == Poly([-2, -5, 1])
    m = [[3, 0, 1, Fraction(1, 2)], [1, -1, 2, 0], [0, 5, 2, 1], [Fraction(-2, 3), 1, 0, 4]]
    expected = sympy.Matrix(m).charpoly().all_coeffs()
    assert charpoly(rationals(m), QQ) == Poly([Fraction(str(c)) for c in reversed(expected)])


def test_parametric_determinant():
    m = [[t, Poly([1], QQ)], [Poly([1], QQ), t]]
    assert determinant(m, QQt) == t * t - 1


def test_parametric_charpoly():
    zero, one = Poly([], QQ), Poly([1], QQ)
    m = [[t, one], [zero, t]]
    assert charpoly(m, QQt) == Poly([t * t, -2 * t, one], QQt)
