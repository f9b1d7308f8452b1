"""Representations of twist knot groups into the universal cover of SL(2,R).

The pipeline: exact defining polynomials (exactpoly), certified numeric roots
(solver), the matrix representation and its longitude (rep), the slope map
g and its inversion (slopes), and lifting to the universal cover with surgery
certificates (cover).  checks bundles the runtime invariant suites; cli is
the command line frontend.  Hot kernels live in kernels, with a compiled
extension used when available (kernels.BACKEND says which).
"""

from ._version import __version__
from .cover import (
    CoverElem,
    SU11Elem,
    SurgeryCertificate,
    certificate,
    certificate_json,
    chart,
    cover_inv,
    cover_mul,
    cover_pow,
    cover_word,
    from_su11,
    lift_generators,
    lifted_longitude,
    to_su11,
    unchart,
)
from .errors import (
    CertificateFailed,
    ClosedFormAvailable,
    DomainError,
    LongitudeOmegaNonzero,
    NoBracketFound,
    NonConvergence,
    NumericsError,
    OffDiagonalTooLarge,
    RelatorNotCentral,
    SlopeOutOfRange,
)
from .exactpoly import TRACE_POLY, BivarPoly, eval_exact, riley_poly, tau_poly
from .rep import (
    HolonomyData,
    Mat2,
    gen_matrices,
    longitude,
    longitude_holonomy,
    relation_residual,
    w_matrix,
    w_power,
)
from .slopes import SlopeSample, g_eval, invert, scan, scan_to_csv
from .solver import Bracket, RepSolution, bracket, phi_num, solve, t_from_T, tau_num

__all__ = [
    "__version__",
    "BivarPoly",
    "TRACE_POLY",
    "tau_poly",
    "riley_poly",
    "eval_exact",
    "Bracket",
    "RepSolution",
    "tau_num",
    "phi_num",
    "bracket",
    "solve",
    "t_from_T",
    "Mat2",
    "HolonomyData",
    "gen_matrices",
    "w_matrix",
    "w_power",
    "relation_residual",
    "longitude",
    "longitude_holonomy",
    "SlopeSample",
    "g_eval",
    "scan",
    "scan_to_csv",
    "invert",
    "CoverElem",
    "SU11Elem",
    "SurgeryCertificate",
    "to_su11",
    "from_su11",
    "chart",
    "unchart",
    "cover_mul",
    "cover_inv",
    "cover_pow",
    "cover_word",
    "lift_generators",
    "lifted_longitude",
    "certificate",
    "certificate_json",
    "DomainError",
    "SlopeOutOfRange",
    "ClosedFormAvailable",
    "NumericsError",
    "NonConvergence",
    "NoBracketFound",
    "OffDiagonalTooLarge",
    "RelatorNotCentral",
    "LongitudeOmegaNonzero",
    "CertificateFailed",
]
