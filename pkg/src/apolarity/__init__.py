"""Apolarity, catalecticants and cactus-rank bounds for homogeneous forms,
in exact arithmetic over Q or F_p."""

from .ring import (DEFAULT_PRIME, GF, QQ, LinearSubstitution, Poly, apply_op, dehomogenize,
                   format_poly, homogenize_element, random_form, random_linear_form,
                   rehomogenize, substitute)
from .graded import (EmptinessResult, ExactMatrix, GradedPiece, empty_projective, ideal_piece,
                     kernel, monomial_basis, piece_contained)
from .apolar import (ApolarityError, ApolarScheme, DiffSpace, affine_annihilator,
                     annihilator_piece, catalecticant, decompose_check, diff_space, gamma_scheme,
                     hilbert_function, is_apolar, point_ideal_piece, remark2_check)
from .rank import (RankReport, cactus_upper_bound, diff_length, generic_rank, nd_bound,
                   rank_report, secant_dimension)
from .parse import PolySyntaxError, parse_poly

__version__ = "0.1.0"
