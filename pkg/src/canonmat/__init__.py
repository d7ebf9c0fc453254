"""Canonical forms of matrices over {0..p-1} under row/column permutations."""

from .canonicity import (CanonicityReport, RowStats, condition5_transform,
                         first_row_col_structure, is_canonical,
                         is_semi_canonical, row_stats)
from .enumeration import (ClassCensus, burnside_count, census,
                          enumerate_canonical, orbit_size)
from .equivalence import (CanonResult, Permutation, PermPair, apply,
                          canonical_form, equivalent, pruned_canonical_form)
from .errors import (BudgetExceededError, DigitRangeError, IntegrityError,
                     ParseError)
from .hadamard import (classify_hadamard, classify_weighing, is_hadamard,
                       is_weighing, sign_view)
from .matrices import (ColCode, Matrix, RowCode, decode_rows, encode_cols,
                       encode_rows, format_matrix, lex_compare, parse_matrix)

__all__ = [
    "BudgetExceededError", "CanonResult", "CanonicityReport", "ClassCensus",
    "ColCode", "DigitRangeError", "IntegrityError", "Matrix", "ParseError",
    "PermPair", "Permutation", "RowCode", "RowStats", "apply",
    "burnside_count", "canonical_form", "census", "classify_hadamard",
    "classify_weighing", "condition5_transform", "decode_rows", "encode_cols",
    "encode_rows", "enumerate_canonical", "equivalent", "first_row_col_structure",
    "format_matrix", "is_canonical", "is_hadamard", "is_semi_canonical",
    "is_weighing", "lex_compare", "orbit_size", "parse_matrix",
    "pruned_canonical_form", "row_stats", "sign_view",
]
