"""Graded ring presentations over Z."""
from .parse import ParseError, parse_relations, variable_names
from .polynomial import Polynomial
from .render import (format_polynomial, from_json_doc, parse_ring, render, render_latex,
                     render_text, to_json_doc)
from .ring import (GradedTable, Presentation, graded_equal, graded_invariants, monomials,
                   simplify)

__all__ = [
    "GradedTable", "ParseError", "Polynomial", "Presentation", "format_polynomial",
    "from_json_doc", "graded_equal", "graded_invariants", "monomials", "parse_relations",
    "parse_ring", "render", "render_latex", "render_text", "simplify", "to_json_doc",
    "variable_names",
]
