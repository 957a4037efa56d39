"""Tenability semantics for abstract argumentation frameworks: classic and
weak extension-based semantics, the static tenability quantifier, two dispute
games with a memoized solver, a QBF reduction, interchange formats, fixtures,
random testing support, a CLI, and an HTTP dispute service."""

from .core import (ArgSet, Framework, ancestor_closure, as_cogent, attackers,
                   attacks_set, is_conflict_free, more_cogent, plus, reduct,
                   restriction)
from .classic import (ConflictError, GroundedLayers, defends, defense_closure,
                      grounded, is_admissible)
from .weak import (IN, Labeling, OUT, SizeLimitError, UNDEC,
                   WEAKLY_COMPLETE_SIZE_CAP, contained_in_weakly_complete,
                   is_cogent, is_cyclically_cogent, is_weakly_admissible,
                   is_weakly_complete_extension, is_weakly_complete_labeling,
                   weakly_complete_extensions, weakly_complete_labelings)
from .games import (DEFAULT_STATE_BUDGET, DisputeKind, DisputeSolver,
                    DisputeState, OPP, PRO, ResourceBudgetError,
                    SEMANTICS_TAGS, STRONG_TENABILITY, SolveResult, TENABILITY,
                    best_move, credulous, diagnose_move, is_statically_tenable,
                    is_strongly_tenable, is_tenable, legal_opp_moves,
                    legal_pro_moves, solve_dispute)
from .qbf import (EXISTS, FORALL, QbfFormula, QbfParseError, ReductionOutput,
                  check_reduction, eval_qbf, parse_qdimacs, qbf_to_af)
from .afio import (Fixture, ParseError, fixture_names, fixtures, get_fixture,
                   parse_apx, parse_framework, parse_iccma, write_apx,
                   write_dot, write_iccma)
from .testkit import GenConfig, ZooReport, random_framework, zoo_check

__version__ = "1.0.0"
