from .constants import *
from .utils import (ChoiceFormError, InvalidProfileError, UsageError,
                    UnsupportedSpaceError, BudgetError, ConstructionError,
                    HypothesisError, NoFixedPointError, VerificationError,
                    DocumentError)

from .space import StrategySpace, ProductSpace
from .subset import ProductSubset, from_section_matrix
from .correspondence import Correspondence, lower_inverse
from .topology import (GridTopology, interior_h, closure_h, is_h_open,
                       is_h_closed)
from .game import (ChoiceFormGame, upper_section, check_assumption_a,
                   has_nonempty_sections)
from .normal_form import NormalFormGame, best_reply, to_choice_form_normal
from .qualitative import QualitativeGame, to_choice_form_qualitative
from .certificate import Clause, EquilibriumCertificate
from .equilibrium import (is_equilibrium_in_choice, is_strong_ec, is_nash,
                          is_weak_nash, qualitative_equilibrium,
                          equilibrium_mask, enumerate_equilibria, check)
from .analysis import (is_h_lsc, is_h_usc, glue,
                       has_local_intersection_property,
                       is_transfer_open_valued, inverse_interior_cover)
from .convexity import grid_convex_hull, is_grid_convex, is_wcg
from .report import HypothesisEntry, HypothesisReport, RunReport
from .hypotheses import check_theorem_hypotheses
from .solver import (ProofCorrespondence, DiscreteSelection, FixedPointResult,
                     build_proof_correspondence, construct_selection,
                     fixed_point_search, solve_ec, solve_weak_nash,
                     solve_weak_equilibrium)
from .document import GameDocument, parse_game, serialize
from .cli import run_cli
