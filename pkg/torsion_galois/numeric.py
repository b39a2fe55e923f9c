import logging

import numpy as np

from .config import DefaultConfig
from .errors import ArgumentError, NumericError
from .polyring import Poly

logger = logging.getLogger(__name__)

_EPS = np.finfo(np.float64).eps


def _fujiwara_bound(monic: np.ndarray) -> float:
    """Upper bound for the moduli of the roots of a monic polynomial (descending coefficients)."""
    degree = len(monic) - 1
    terms = [abs(monic[k]) ** (1 / k) for k in range(1, degree)]
    terms.append(abs(monic[degree] / 2) ** (1 / degree))
    return 2 * max(terms) or 1.0


def numeric_roots(
    f: Poly,
    max_iterations: int = DefaultConfig.NUMERIC_MAX_ITERATIONS,
    step_tolerance: float = DefaultConfig.NUMERIC_STEP_TOLERANCE,
    residual_tolerance: float = DefaultConfig.NUMERIC_RESIDUAL_TOLERANCE,
) -> np.ndarray:
    """
    All complex roots of a squarefree polynomial over QQ by Aberth iteration.

    Args:
        f: A nonzero squarefree polynomial with rational coefficients.
        max_iterations: Iteration cap.
        step_tolerance: Stop once every correction is below this, relative to max(1, |z|).
        residual_tolerance: Accept a root z when |f(z)| <= residual_tolerance * sum |c_k| |z|^k.

    Returns:
        deg f complex roots sorted by real then imaginary part.
    """
    if not f:
        raise ArgumentError("the zero polynomial has no finite set of roots")
    # roots at zero are exact; a relative residual cannot certify them
    zeros = next(k for k, c in enumerate(f.coeffs) if c)
    f = Poly(f.coeffs[zeros:], f.domain)
    degree = f.degree
    if degree == 0:
        return np.zeros(zeros, dtype=np.complex128)
    coeffs = np.array([float(c) for c in reversed(f.monic().coeffs)], dtype=np.complex128)
    derivative = np.polyder(coeffs)
    magnitudes = np.abs(coeffs)

    radius = _fujiwara_bound(coeffs)
    angles = 2 * np.pi * np.arange(degree) / degree + 0.4
    z = radius * np.exp(1j * angles)

    for iteration in range(max_iterations):
        values = np.polyval(coeffs, z)
        slopes = np.polyval(derivative, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1)
        inverse = 1 / diff
        np.fill_diagonal(inverse, 0)
        denominator = slopes - values * inverse.sum(axis=1)
        step = np.divide(values, denominator, out=np.zeros_like(values), where=denominator != 0)
        z = z - step
        scale = np.polyval(magnitudes, np.abs(z))
        settled = np.abs(step) <= step_tolerance * np.maximum(1, np.abs(z))
        at_roundoff = np.abs(np.polyval(coeffs, z)) <= 4 * degree * _EPS * scale
        if np.all(settled | at_roundoff):
            logger.debug("Aberth iteration converged after %d steps for degree %d", iteration + 1, degree)
            break
    else:
        raise NumericError(f"no convergence after {max_iterations} iterations (degree {degree})")

    residuals = np.abs(np.polyval(coeffs, z)) / np.where(scale > 0, scale, 1)
    if np.any(residuals > residual_tolerance):
        raise NumericError(f"root residual {residuals.max():.3g} exceeds {residual_tolerance:g}")
    z = np.concatenate([z, np.zeros(zeros, dtype=np.complex128)])
    return z[np.lexsort((z.imag, z.real))]
