"""Pinned counterexamples to the six-condition characterization.

The structural conditions implemented by is_canonical are not a complete
characterization of lex-minimality: exhaustive sweeps (cross-validated with
a naive all-arrangements oracle) found divergence starting at 3x3 over
base 3 and 4x4 over base 2.  These tests pin the known counterexamples so
the behavior of the checker is documented; the acceptance suite's
theorem/oracle criterion fails loudly at the affected shapes and writes
every counterexample to artifacts/.
"""

from canonmat import Matrix, canonical_form, is_canonical
from conftest import naive_minimum

# Satisfies all six conditions but is not the class minimum: swapping the
# first two columns and re-sorting the rows yields a smaller row code, a
# rearrangement possible because the condition-6 submatrix ((0,1),(1,0))
# has a nontrivial automorphism.
FALSE_POSITIVE = Matrix.from_rows([(0, 0, 1), (0, 1, 2), (1, 0, 1)], 3)

# Verified lex-minimal, yet its condition-6 submatrix is not canonical on
# its own, so the checker rejects it.
FALSE_NEGATIVE = Matrix.from_rows(
    [(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 1), (0, 1, 0, 1)], 2)


def test_conditions_admit_a_nonminimal_matrix():
    report = is_canonical(FALSE_POSITIVE)
    assert report.verdict, "checker behavior changed: update the pinned case"
    minimum = canonical_form(FALSE_POSITIVE).canonical
    assert minimum != FALSE_POSITIVE
    assert minimum.rows == ((0, 0, 1), (0, 1, 1), (1, 0, 2))
    assert naive_minimum(FALSE_POSITIVE) == minimum.rows


def test_conditions_reject_a_true_minimum():
    assert naive_minimum(FALSE_NEGATIVE) == FALSE_NEGATIVE.rows
    assert canonical_form(FALSE_NEGATIVE).canonical == FALSE_NEGATIVE
    report = is_canonical(FALSE_NEGATIVE)
    assert not report.verdict, "checker behavior changed: update the pinned case"
    assert report.conditions[5].status == "fail"
    # the submatrix the checker recursed into really is non-minimal
    sub = report.failing_submatrix
    assert canonical_form(sub).canonical != sub
