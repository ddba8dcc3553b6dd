"""Integral Chow rings of smooth non-strict toric stacks, with exact arithmetic."""
from .exactla import (FgAbelianGroup, IntMatrix, SnfResult, cokernel, complement, primitive,
                      rank, saturation, smith_normal_form)
from .fan import Fan, ValidationReport, has_torus_factor, hat_fan, is_smooth, minimal_nonfaces, validate_fan
from .present import (GradedTable, Polynomial, Presentation, graded_equal, graded_invariants,
                      parse_relations, render, simplify)
from .stacky import (CoxQuotientReport, HypothesisError, StackyFan, assemble_block_matrix,
                     chow_ring, cokernel_is_finite, fantastack_chow, split_infinite,
                     stanley_reisner, validate_hypotheses)

__version__ = "0.1.0"

__all__ = [
    "CoxQuotientReport", "Fan", "FgAbelianGroup", "GradedTable", "HypothesisError", "IntMatrix",
    "Polynomial", "Presentation", "SnfResult", "StackyFan", "ValidationReport",
    "assemble_block_matrix", "chow_ring", "cokernel", "cokernel_is_finite", "complement",
    "fantastack_chow", "graded_equal", "graded_invariants", "has_torus_factor", "hat_fan",
    "is_smooth", "minimal_nonfaces", "parse_relations", "primitive", "rank", "render",
    "saturation", "simplify", "smith_normal_form", "split_infinite", "stanley_reisner",
    "validate_fan", "validate_hypotheses",
]
