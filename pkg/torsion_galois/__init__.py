from .__version__ import __version__
from .config import Config, load_config
from .corpus import CorpusRunner, load_corpus, run_corpus
from .curve import LinearFunction, WeierstrassCurve, ap, change_coordinates, reduce_mod_p
from .divpoly import (
    DivisionPolynomial,
    DivisionPolynomials,
    degree_coincidences,
    division_polynomials,
    primitive_degree,
    psi,
    psi_tilde,
    x_field_polynomial,
)
from .domains import QQ, QQt, FiniteField, PolynomialRing
from .emit import emit, format_poly, parse_polynomial
from .errors import (
    ArgumentError,
    BadPrimeError,
    BadReductionError,
    InadmissibleLinearFunctionError,
    InconsistencyError,
    InexactDivisionError,
    InternalError,
    NotPIntegralError,
    NumericError,
    RegimeError,
    SingularCurveError,
    SkipSignal,
    TorsionGaloisError,
)
from .factorization import QuarticGroup, factor_quartic, mod_p_degree_pattern, quartic_galois
from .galois import (
    Irreducibility,
    MinusIdProbeResult,
    Mod3Classification,
    classify_mod3,
    minus_id_probe,
    probable_irreducible,
)
from .lattice import LATTICE, Mod3Label
from .numeric import numeric_roots
from .polyring import Poly, discriminant, resultant
from .torsionchar import (
    CharPolyResult,
    charpoly_matrix,
    charpoly_n2,
    charpoly_resultant,
    compute_charpoly,
    numeric_root_check,
    scaling_experiment,
    valuation_profile,
)
