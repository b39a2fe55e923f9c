import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import partial
from typing import Any, Literal

from .config import DefaultConfig
from .curve import WeierstrassCurve, ap
from .divpoly import psi_tilde
from .domains import QQ
from .errors import ArgumentError, BadPrimeError, InconsistencyError, SkipSignal
from .exactmath import is_prime, is_square, primes_up_to
from .factorization import QuarticGroup, factor_quartic, mod_p_degree_pattern, quartic_galois
from .lattice import Mod3Label
from .polyring import Poly

logger = logging.getLogger(__name__)

_PROBE_CHUNK = 64
IRREDUCIBILITY_PRIME_BOUND = 200


@dataclass(frozen=True)
class QuadraticElement:
    """p + q*sqrt(D) in QQ(sqrt(D)), D a rational non-square."""

    p: Fraction
    q: Fraction
    D: Fraction

    def _lift(self, other: Any) -> "QuadraticElement":
        if isinstance(other, QuadraticElement):
            if other.D != self.D:
                raise ArgumentError("elements of different quadratic fields")
            return other
        return QuadraticElement(Fraction(other), Fraction(0), self.D)

    def __add__(self, other: Any) -> "QuadraticElement":
        other = self._lift(other)
        return QuadraticElement(self.p + other.p, self.q + other.q, self.D)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticElement":
        return QuadraticElement(-self.p, -self.q, self.D)

    def __sub__(self, other: Any) -> "QuadraticElement":
        return self + (-self._lift(other))

    def __mul__(self, other: Any) -> "QuadraticElement":
        other = self._lift(other)
        return QuadraticElement(
            self.p * other.p + self.D * self.q * other.q,
            self.p * other.q + self.q * other.p,
            self.D,
        )

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.p) or bool(self.q)

    def is_square(self) -> bool:
        """Whether this element is a square in QQ(sqrt(D))."""
        if not self.q:
            return not self.p or is_square(self.p) is not None or is_square(self.p / self.D) is not None
        # (r + s*sqrt(D))^2 = p + q*sqrt(D) forces r^2 - D*s^2 = +-sqrt(p^2 - D*q^2)
        norm_root = is_square(self.p * self.p - self.D * self.q * self.q)
        if norm_root is None:
            return False
        return any(c != 0 and is_square(c) is not None for c in ((self.p + norm_root) / 2, (self.p - norm_root) / 2))


@dataclass(frozen=True)
class MinusIdProbeResult:
    """`found` is the first good prime p = 1 mod ell with a_p = -2 mod ell, or None up to `bound`."""

    ell: int
    bound: int
    found: int | None

    @property
    def is_found(self) -> bool:
        return self.found is not None

    def __str__(self) -> str:
        return f"Found({self.found})" if self.found is not None else f"NotFoundUpTo({self.bound})"


def _scan(curve: WeierstrassCurve, ell: int, primes: list[int]) -> int | None:
    for p in primes:
        try:
            trace = ap(curve, p)
        except SkipSignal as e:
            logger.debug("skipping p=%d: %s", p, e)
            continue
        if (trace + 2) % ell == 0:
            return p
    return None


def minus_id_probe(
    curve: WeierstrassCurve,
    ell: int,
    bound: int = DefaultConfig.PROBE_BOUND,
    threads: int = 1,
) -> MinusIdProbeResult:
    """
    Search for a Frobenius witnessing -id in the mod-ell image.

    Good primes p <= bound with p = 1 mod ell are scanned in increasing order; chunks run
    on a thread pool but are consumed in order, so the reported prime is always the
    smallest one.

    Args:
        curve: A curve over QQ; primes where it is not integral or has bad reduction are skipped.
        ell: An odd prime.
        bound: Largest prime examined.
        threads: Worker threads.

    Returns:
        The first witness, or a result with `found` set to None.
    """
    if curve.domain != QQ:
        raise ArgumentError("the -id probe needs a curve over QQ")
    if ell == 2 or not is_prime(ell):
        raise ArgumentError(f"the -id probe needs an odd prime, got {ell}")
    candidates = [p for p in primes_up_to(bound) if p % ell == 1]
    chunks = [candidates[i : i + _PROBE_CHUNK] for i in range(0, len(candidates), _PROBE_CHUNK)]
    threads = max(threads, 1)
    scan = partial(_scan, curve, ell)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for start in range(0, len(chunks), threads):
            for found in pool.map(scan, chunks[start : start + threads]):
                if found is not None:
                    logger.debug("-id witness for ell=%d at p=%d", ell, found)
                    return MinusIdProbeResult(ell, bound, found)
    return MinusIdProbeResult(ell, bound, None)


@dataclass(frozen=True)
class Mod3Classification:
    label: Mod3Label
    qualifier: Literal["exact", "probable"]
    factorization: tuple[int, ...]
    quartic_group: QuarticGroup | None = None
    probe: MinusIdProbeResult | None = None


_QUARTIC_LABELS = {
    QuarticGroup.S4: Mod3Label.GL2F3,
    QuarticGroup.D4: Mod3Label.SD16,
    QuarticGroup.C4: Mod3Label.C8,
}


def _y_splits(curve: WeierstrassCurve, x0: Any, disc: Fraction) -> bool:
    """Whether y^2 + H(x0) y - G(x0) splits over QQ(sqrt(disc))."""
    h = curve.y_linear()(x0)
    delta = h * h + 4 * curve.rhs()(x0)
    if isinstance(delta, QuadraticElement):
        return delta.is_square()
    return not delta or is_square(delta) is not None or is_square(delta / disc) is not None


def _two_roots_label(curve: WeierstrassCurve, roots: list[Fraction], quadratic: Poly) -> Mod3Label:
    gamma, beta, _ = quadratic.coeffs
    disc = beta * beta - 4 * gamma
    conjugate = QuadraticElement(-beta / 2, Fraction(1, 2), disc)
    if all(_y_splits(curve, x0, disc) for x0 in roots) and _y_splits(curve, conjugate, disc):
        return Mod3Label.TwoC2
    return Mod3Label.V4


def classify_mod3(
    curve: WeierstrassCurve,
    probe_bound: int = DefaultConfig.PROBE_BOUND,
    threads: int = 1,
) -> Mod3Classification:
    """
    The mod-3 image of a curve over QQ, read off the factorization of psi_3.

    Irreducible psi_3 gives GL2F3, SD16 or C8 by the Galois group of the quartic; two
    quadratic factors give D8; two rational roots give TwoC2 or V4 exactly; a single
    rational root gives D12 when the -id probe finds a witness and S3_Borel (probable)
    otherwise.

    Raises:
        InconsistencyError: psi_3 factors in a way that cannot happen over QQ.
    """
    if curve.domain != QQ:
        raise ArgumentError("mod-3 classification needs a curve over QQ")
    factorization = factor_quartic(psi_tilde(curve, 3).monic())
    kind = factorization.kind
    if kind == (4,):
        group = quartic_galois(factorization.factors[0])
        label = _QUARTIC_LABELS.get(group)
        if label is None:
            raise InconsistencyError(f"psi_3 of {curve} has Galois group {group.value}")
        return Mod3Classification(label, "exact", kind, quartic_group=group)
    if kind == (2, 2):
        return Mod3Classification(Mod3Label.D8, "exact", kind)
    if kind == (1, 1, 2):
        roots = [-f.coeffs[0] for f in factorization.factors[:2]]
        return Mod3Classification(_two_roots_label(curve, roots, factorization.factors[2]), "exact", kind)
    if kind == (1, 3):
        probe = minus_id_probe(curve, 3, probe_bound, threads)
        if probe.is_found:
            return Mod3Classification(Mod3Label.D12, "exact", kind, probe=probe)
        logger.warning("no -id witness below %d for %s: the S3_Borel label is probable", probe_bound, curve)
        return Mod3Classification(Mod3Label.S3_Borel, "probable", kind, probe=probe)
    raise InconsistencyError(f"psi_3 of {curve} splits completely over QQ")


class Irreducibility(str, Enum):
    CERTIFIED = "IrreducibleCertified"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class IrreducibilityWitness:
    verdict: Irreducibility
    patterns: dict[int, tuple[int, ...]] = field(default_factory=dict)


def _subset_sums(pattern: tuple[int, ...]) -> set[int]:
    sums = {0}
    for degree in pattern:
        sums |= {s + degree for s in sums}
    return sums


def probable_irreducible(
    f: Poly, primes: list[int] | None = None, prime_bound: int = IRREDUCIBILITY_PRIME_BOUND
) -> IrreducibilityWitness:
    """
    Certify irreducibility over QQ from factor-degree patterns modulo primes.

    A factor of degree k over QQ reduces to factors whose degrees sum to k at every good
    prime, so f is irreducible once no 0 < k < deg f is a subset sum of every pattern.
    Stops at the first prime that certifies. Without explicit `primes` every prime up to
    `prime_bound` is tried.
    """
    if f.domain != QQ or f.degree < 1:
        raise ArgumentError("irreducibility needs a nonconstant polynomial over QQ")
    if primes is None:
        primes = primes_up_to(prime_bound)
    degree = f.degree
    common = set(range(degree + 1))
    patterns: dict[int, tuple[int, ...]] = {}
    for p in primes:
        try:
            pattern = mod_p_degree_pattern(f, p)
        except BadPrimeError:
            continue
        patterns[p] = pattern
        common &= _subset_sums(pattern)
        if pattern == (degree,) or not any(0 < k < degree for k in common):
            return IrreducibilityWitness(Irreducibility.CERTIFIED, patterns)
    return IrreducibilityWitness(Irreducibility.UNDECIDED, patterns)
