"""Invariants of Cohen-Macaulay local rings k[x_1..x_n]_(x)/I.

Tangent cones via Mora's algorithm, Hilbert series and coefficients of the
associated graded ring, superficial sequences, type, depth of G(A), the
Ratliff-Rush filtration, and verdicts on the inequalities relating them.
"""

from .field import DEFAULT_CHAR, Field
from .hilbert import HilbertSeries, hilbert_coefficients, macaulay_upper
from .ideal import (IdealHandle, artinian_basis, brute_force_length, hilbert_samuel, ideal_ops,
                    local_length, quotient_length, tangent_cone)
from .linalg import BACKEND
from .local import (LocalRing, NotCohenMacaulay, RatliffRushData, StabilizationError,
                    SuperficialError, SuperficialSequence, cm_test, depth_assoc_graded,
                    random_superficial_sequence, ratliff_rush, reduction_number, rho_sigma,
                    tilde_hilbert, type_of)
from .monomial import DEGREVLEX, LOCAL, MonomialOrder
from .poly import PolyRing, Polynomial
from .presentation import PresentationError, RingPresentation
from .report import InvariantReport, StageError, analyze
from .ringfile import RingFileError, format_ring_file, parse_ring_file, read_ring_file
from .semigroup import SemigroupData, random_semigroup, semigroup_ring
from .verify import Verdict, classify, run_checks

__version__ = "0.1.0"
