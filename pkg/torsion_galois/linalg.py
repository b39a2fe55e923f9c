"""
Exact dense linear algebra over the rings of `domains`.

Matrices are lists of rows. Over rings carrying the parameter t the work is done by
specializing t at enough integer points, computing over the specialized ring and
interpolating back; the number of points comes from a row-wise degree bound.
"""

import logging
from typing import Any

from .domains import Domain, PolynomialRing
from .polyring import Poly, sample_points

logger = logging.getLogger(__name__)

Matrix = list[list[Any]]


def sylvester_matrix(f: Poly, g: Poly) -> Matrix:
    """deg(g) rows of f coefficients followed by deg(f) rows of g coefficients, leading terms first."""
    m, n = f.degree, g.degree
    size = m + n
    zero = f.domain.zero
    f_desc = list(reversed(f.coeffs))
    g_desc = list(reversed(g.coeffs))
    rows = []
    for i in range(n):
        row = [zero] * size
        row[i : i + m + 1] = f_desc
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        row[i : i + n + 1] = g_desc
        rows.append(row)
    return rows


def bareiss_determinant(matrix: Matrix, domain: Domain) -> Any:
    """
    Fraction-free determinant over an integral domain.

    Every division is exact (Sylvester's identity), row swaps flip the sign.
    """
    rows = [list(row) for row in matrix]
    n = len(rows)
    if n == 0:
        return domain.one
    if any(len(row) != n for row in rows):
        raise ValueError("determinant of a non-square matrix")
    normalize = domain.normalize
    sign = 1
    previous = domain.one
    for k in range(n - 1):
        if not rows[k][k]:
            for i in range(k + 1, n):
                if rows[i][k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return domain.zero
        pivot = rows[k][k]
        pivot_row = rows[k]
        for i in range(k + 1, n):
            row = rows[i]
            lead = row[k]
            for j in range(k + 1, n):
                row[j] = domain.exquo(normalize(row[j] * pivot - lead * pivot_row[j]), previous)
        previous = pivot
    det = rows[n - 1][n - 1]
    return normalize(-det) if sign < 0 else det


def _row_bound(matrix: Matrix, domain: PolynomialRing) -> int:
    return sum(max((domain.t_degree(entry) for entry in row), default=0) for row in matrix)


def _specialize_matrix(matrix: Matrix, domain: PolynomialRing, t0) -> Matrix:
    return [[domain.specialize(entry, t0) for entry in row] for row in matrix]


def determinant(matrix: Matrix, domain: Domain) -> Any:
    if not domain.has_parameter:
        return bareiss_determinant(matrix, domain)
    assert isinstance(domain, PolynomialRing)
    points = sample_points(_row_bound(matrix, domain) + 1)
    target = domain.specialized()
    logger.debug("determinant of size %d over %s at %d points", len(matrix), domain, len(points))
    values = [bareiss_determinant(_specialize_matrix(matrix, domain, t0), target) for t0 in points]
    return domain.lift(points, values)


def hessenberg_charpoly(matrix: Matrix, domain: Domain) -> Poly:
    """
    Characteristic polynomial det(T*I - M) over a field.

    Reduces M to upper Hessenberg form by similarity transforms, then runs the
    three-term recurrence on the leading principal blocks.
    """
    h = [[domain.normalize(entry) for entry in row] for row in matrix]
    n = len(h)
    zero = domain.zero
    for m in range(1, n - 1):
        pivot_row = next((i for i in range(m, n) if h[i][m - 1]), None)
        if pivot_row is None:
            continue
        if pivot_row != m:
            h[m], h[pivot_row] = h[pivot_row], h[m]
            for row in h:
                row[m], row[pivot_row] = row[pivot_row], row[m]
        pivot = h[m][m - 1]
        for i in range(m + 1, n):
            if not h[i][m - 1]:
                continue
            factor = domain.exquo(h[i][m - 1], pivot)
            row_i, row_m = h[i], h[m]
            for j in range(n):
                row_i[j] = domain.normalize(row_i[j] - factor * row_m[j])
            for row in h:
                row[m] = domain.normalize(row[m] + factor * row[i])

    x = Poly.x(domain)
    polys = [Poly([domain.one], domain)]
    for m in range(1, n + 1):
        current = (x - h[m - 1][m - 1]) * polys[m - 1]
        product = domain.one
        for i in range(1, m):
            product = domain.normalize(product * h[m - i][m - i - 1])
            if not product:
                break
            term = domain.normalize(product * h[m - i - 1][m - 1])
            if term != zero:
                current = current - polys[m - i - 1].scale(term)
        polys.append(current)
    return polys[n]


def charpoly(matrix: Matrix, domain: Domain) -> Poly:
    """det(T*I - M) as a monic polynomial over `domain`."""
    if not domain.has_parameter:
        return hessenberg_charpoly(matrix, domain)
    assert isinstance(domain, PolynomialRing)
    points = sample_points(_row_bound(matrix, domain) + 1)
    target = domain.specialized()
    logger.debug("characteristic polynomial of size %d over %s at %d points", len(matrix), domain, len(points))
    values = [hessenberg_charpoly(_specialize_matrix(matrix, domain, t0), target) for t0 in points]
    return PolynomialRing(domain, "T").lift(points, values)
