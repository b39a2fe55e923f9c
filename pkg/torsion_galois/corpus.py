"""
The golden-corpus runner.

A corpus is a JSON `CorpusFile`; golden polynomials live in separate `PolynomialModel`
files referenced relative to the corpus file. Entries run on a thread pool and are
reported in corpus order.
"""

import logging
import time
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any

from .config import DefaultConfig
from .curve import LinearFunction, WeierstrassCurve
from .divpoly import division_polynomials, primitive_degree, psi_tilde
from .errors import SingularCurveError, SkipSignal, TorsionGaloisError
from .exactmath import divisors, prime_power_base
from .galois import classify_mod3, minus_id_probe
from .models import CorpusEntry, CorpusFile, CorpusReport, EntryKind, EntryResult, EntryStatus, PolynomialModel
from .polyring import Poly
from .torsionchar import (
    CharPolyResult,
    charpoly_matrix,
    charpoly_resultant,
    compute_charpoly,
    numeric_root_check,
    scaling_experiment,
    valuation_profile,
)

logger = logging.getLogger(__name__)

ERRATUM_POINTS = (1, 2, 3, -1, -2)
DEFAULT_TOLERANCE = 1e-6

Outcome = tuple[EntryStatus, str, list[int]]


def load_corpus(path: str | Path) -> CorpusFile:
    return CorpusFile.model_validate_json(Path(path).read_text(encoding="utf-8"))


def _mismatches(chi: Poly, golden: Poly) -> list[int]:
    top = max(chi.degree, golden.degree)
    return [k for k in range(top + 1) if chi.coeff(k) != golden.coeff(k)]


class CorpusRunner:
    """
    Runs corpus entries.

    Args:
        base_dir: Directory golden paths are resolved against.
        threads: Worker threads for entries and for the -id probe.
        skip_slow: Report entries flagged slow as skipped.
        timings: Attach wall-clock timings to each result.
        probe_bound: Default bound of the -id probe when an entry gives none.
        root_options: Keyword arguments of the numeric root finder.
    """

    def __init__(
        self,
        base_dir: str | Path = ".",
        threads: int = 1,
        skip_slow: bool = False,
        timings: bool = False,
        probe_bound: int = DefaultConfig.PROBE_BOUND,
        root_options: dict[str, Any] | None = None,
    ):
        self.base_dir = Path(base_dir)
        self.threads = max(threads, 1)
        self.skip_slow = skip_slow
        self.timings = timings
        self.probe_bound = probe_bound
        self.root_options = root_options or {}

    def run(self, corpus: CorpusFile) -> CorpusReport:
        with ThreadPoolExecutor(max_workers=self.threads) as pool:
            results = list(pool.map(self.run_entry, corpus.entries))
        return CorpusReport(entries=results)

    def run_entry(self, entry: CorpusEntry) -> EntryResult:
        if entry.slow and self.skip_slow:
            return EntryResult(name=entry.name, kind=entry.kind, status=EntryStatus.SKIPPED, detail="slow")
        start = time.perf_counter()
        try:
            status, detail, mismatches = self._dispatch(entry)
        except SkipSignal as e:
            status, detail, mismatches = EntryStatus.SKIPPED, str(e), []
        except TorsionGaloisError as e:
            logger.debug("entry %s raised", entry.name, exc_info=True)
            status, detail, mismatches = EntryStatus.FAIL, f"{type(e).__name__}: {e}", []
        elapsed = time.perf_counter() - start
        logger.debug("entry %s: %s in %.2fs", entry.name, status.value, elapsed)
        return EntryResult(
            name=entry.name,
            kind=entry.kind,
            status=status,
            detail=detail,
            mismatches=mismatches,
            timings={"total": elapsed} if self.timings else None,
        )

    def _dispatch(self, entry: CorpusEntry) -> Outcome:
        handler = {
            EntryKind.CHARPOLY: self._charpoly,
            EntryKind.DUAL_ROUTE: self._dual_route,
            EntryKind.CLASSIFY: self._classify,
            EntryKind.VALUATION: self._valuation,
            EntryKind.MINUS_ID: self._minus_id,
            EntryKind.SCALING: self._scaling,
            EntryKind.DEGREE: self._degree,
            EntryKind.NUMERIC: self._numeric,
        }[entry.kind]
        return handler(entry)

    @staticmethod
    def _setup(entry: CorpusEntry) -> tuple[WeierstrassCurve, LinearFunction]:
        return WeierstrassCurve.parse(entry.curve), LinearFunction.parse(entry.u)

    def _compute(self, entry: CorpusEntry) -> tuple[CharPolyResult, CharPolyResult | None]:
        """The requested route, plus the other one when "both" is asked for."""
        curve, u = self._setup(entry)
        if entry.method == "both":
            return charpoly_resultant(curve, u, entry.n), charpoly_matrix(curve, u, entry.n)
        return compute_charpoly(curve, u, entry.n, entry.method), None

    def _charpoly(self, entry: CorpusEntry) -> Outcome:
        if entry.golden is None:
            return EntryStatus.FAIL, "no golden file given", []
        result, other = self._compute(entry)
        if other is not None and other.chi != result.chi:
            return EntryStatus.FAIL, "matrix and resultant routes disagree", []
        golden = PolynomialModel.model_validate_json((self.base_dir / entry.golden).read_text(encoding="utf-8"))
        mismatches = _mismatches(result.chi, golden.to_poly())
        if not mismatches:
            return EntryStatus.PASS, "", []
        return self._erratum(entry, result, other, mismatches)

    def _erratum(
        self, entry: CorpusEntry, result: CharPolyResult, other: CharPolyResult | None, mismatches: list[int]
    ) -> Outcome:
        """A golden mismatch counts as a documented erratum only when both routes and the numeric check agree."""
        listed = f"exponents {mismatches}"
        if result.n < 3:
            return EntryStatus.FAIL, f"golden differs at {listed}", mismatches
        if other is None:
            route = charpoly_matrix if result.method == "resultant" else charpoly_resultant
            other = route(result.curve, result.u, result.n)
        if other.chi != result.chi:
            return EntryStatus.FAIL, f"golden differs at {listed} and the routes disagree", mismatches
        tolerance = entry.tolerance or DEFAULT_TOLERANCE
        points = ERRATUM_POINTS if result.curve.is_parametric else (0,)
        checked = 0
        for t0 in points:
            try:
                specialized = result.specialize(t0)
            except SingularCurveError:
                continue
            curve = specialized.curve
            check = numeric_root_check(curve, result.u, result.n, tolerance, specialized.chi, **self.root_options)
            if not check.ok:
                detail = f"golden differs at {listed}; numeric residual {check.residual:.3g}"
                return EntryStatus.FAIL, detail, mismatches
            checked += 1
        if not checked or not set(mismatches) <= set(entry.errata):
            return EntryStatus.FAIL, f"golden differs at {listed}, not all documented", mismatches
        logger.warning("%s: documented erratum at %s confirmed by both routes", entry.name, listed)
        return EntryStatus.ERRATUM, f"documented erratum at {listed}", mismatches

    def _dual_route(self, entry: CorpusEntry) -> Outcome:
        curve, u = self._setup(entry)
        matrix = charpoly_matrix(curve, u, entry.n)
        resultant = charpoly_resultant(curve, u, entry.n)
        if matrix.chi == resultant.chi:
            return EntryStatus.PASS, "", []
        return EntryStatus.FAIL, "routes disagree", _mismatches(matrix.chi, resultant.chi)

    def _classify(self, entry: CorpusEntry) -> Outcome:
        curve = WeierstrassCurve.parse(entry.curve)
        classification = classify_mod3(curve, entry.bound or self.probe_bound, self.threads)
        got = f"{classification.label.value} ({classification.qualifier})"
        if classification.label != entry.label:
            return EntryStatus.FAIL, f"got {got}, expected {entry.label and entry.label.value}", []
        if entry.qualifier is not None and classification.qualifier != entry.qualifier:
            return EntryStatus.FAIL, f"got {got}, expected qualifier {entry.qualifier}", []
        probe = classification.probe
        if probe is not None and probe.is_found and not classification.label.contains_minus_id:
            return EntryStatus.FAIL, f"{got} contradicts the -id witness", []
        return EntryStatus.PASS, got, []

    def _valuation(self, entry: CorpusEntry) -> Outcome:
        if entry.ell is None:
            return EntryStatus.FAIL, "no prime given", []
        result, _ = self._compute(entry)
        profile = valuation_profile(result, entry.ell)
        detail = f"minimum {profile.minimum}, bound {profile.bound}"
        if not profile.ok:
            return EntryStatus.FAIL, detail, []
        if entry.attained is not None and profile.attained != entry.attained:
            return EntryStatus.FAIL, f"{detail}, attained={profile.attained}", []
        return EntryStatus.PASS, detail, []

    def _minus_id(self, entry: CorpusEntry) -> Outcome:
        curve = WeierstrassCurve.parse(entry.curve)
        ell = entry.ell or 3
        probe = minus_id_probe(curve, ell, entry.bound or self.probe_bound, self.threads)
        if probe.found != entry.found:
            return EntryStatus.FAIL, f"got {probe}, expected {entry.found}", []
        return EntryStatus.PASS, str(probe), []

    def _scaling(self, entry: CorpusEntry) -> Outcome:
        if entry.p is None or entry.m is None:
            return EntryStatus.FAIL, "scaling entries need p and m", []
        curve = WeierstrassCurve.parse(entry.curve)
        method = "matrix" if entry.method == "both" else entry.method
        profile = scaling_experiment(curve, entry.p, entry.m, entry.n, method)
        if profile.ok:
            return EntryStatus.PASS, "", []
        return EntryStatus.FAIL, f"valuation below 2m(N - i) at i = {profile.failures}", profile.failures

    def _degree(self, entry: CorpusEntry) -> Outcome:
        curve = WeierstrassCurve.parse(entry.curve)
        table = division_polynomials(curve)
        for n in range(3, (entry.limit or entry.n) + 1):
            primitive = psi_tilde(curve, n)
            if primitive.degree != primitive_degree(n) or primitive.lc != (prime_power_base(n) or 1):
                detail = f"psi~_{n} has degree {primitive.degree}, leading coefficient {primitive.lc}"
                return EntryStatus.FAIL, detail, []
            product = Poly([1], curve.domain)
            for m in divisors(n):
                if m >= 3:
                    product = product * psi_tilde(curve, m)
            if product != table[n]:
                return EntryStatus.FAIL, f"psi_{n} is not the product of its primitive factors", []
        return EntryStatus.PASS, "", []

    def _numeric(self, entry: CorpusEntry) -> Outcome:
        curve, u = self._setup(entry)
        check = numeric_root_check(curve, u, entry.n, entry.tolerance or DEFAULT_TOLERANCE, **self.root_options)
        detail = f"residual {check.residual:.3g} over {check.points} points"
        return (EntryStatus.PASS if check.ok else EntryStatus.FAIL), detail, []


def run_corpus(
    path: str | Path,
    threads: int = 1,
    skip_slow: bool = False,
    timings: bool = False,
    probe_bound: int = DefaultConfig.PROBE_BOUND,
    root_options: dict[str, Any] | None = None,
) -> CorpusReport:
    """Load a corpus file and run every entry; golden paths resolve against the file's directory."""
    path = Path(path)
    corpus = load_corpus(path)
    runner = CorpusRunner(path.parent, threads, skip_slow, timings, probe_bound, root_options)
    return runner.run(corpus)
