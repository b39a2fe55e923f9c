"""
JSON forms of polynomials, reports and the golden corpus.
"""

from .charpoly_report import CharPolyReport
from .classification_report import ClassificationReport, Evidence
from .corpus_entry import CorpusEntry
from .corpus_file import CorpusFile
from .corpus_report import CorpusReport
from .degree_report import DegreeGroup, DegreeReport
from .entry_kind import EntryKind
from .entry_result import EntryResult, EntryStatus
from .polynomial import PolynomialModel
from .probe_report import ProbeReport
from .scaling_report import ScalingReport
