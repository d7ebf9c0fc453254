"""Hadamard and weighing-matrix predicates over the base-3 digit encoding.

Digits {0, 1, 2} stand for {0, 1, -1}; the predicates check the integer
Gram identity W W^T = k I on that sign view.  Classification enumerates
canonical base-3 matrices with a row-count pruning filter (every row of a
weight-k matrix has exactly k nonzero entries) and keeps those passing the
predicate.  Equivalence here is permutation-only: no row or column
negations, so class counts differ from the negation-equivalence literature.
"""

from __future__ import annotations

from .enumeration import ClassCensus, enumerate_canonical
from .matrices import Matrix


def sign_view(a: Matrix) -> tuple[tuple[int, ...], ...]:
    """Map digits to signs: 2 -> -1, 0 and 1 unchanged.  Requires p = 3."""
    if a.p != 3:
        raise ValueError(f"sign view requires p = 3, got p = {a.p}")
    return tuple(tuple(-1 if e == 2 else e for e in row) for row in a.rows)


def _gram_is_scaled_identity(a: Matrix, k: int) -> bool:
    sv = sign_view(a)
    n = a.n
    for i in range(n):
        for j in range(i, n):
            dot = sum(sv[i][c] * sv[j][c] for c in range(a.m))
            if dot != (k if i == j else 0):
                return False
    return True


def is_hadamard(a: Matrix) -> bool:
    """Square, no zero entries, and pairwise-orthogonal rows of norm n."""
    if a.n != a.m:
        raise ValueError(f"Hadamard check requires a square matrix, got {a.n}x{a.m}")
    if any(e == 0 for row in a.rows for e in row):
        return False
    return _gram_is_scaled_identity(a, a.n)


def is_weighing(a: Matrix, k: int) -> bool:
    """W W^T = k I on the sign view; coincides with is_hadamard when k = n."""
    if a.n != a.m:
        raise ValueError(f"weighing check requires a square matrix, got {a.n}x{a.m}")
    if not (1 <= k <= a.n):
        raise ValueError(f"weight k={k} outside [1, {a.n}]")
    return _gram_is_scaled_identity(a, k)


def _all_nonzero(row: tuple[int, ...]) -> bool:
    return all(e != 0 for e in row)


def classify_hadamard(n: int, budget: int | None = None) -> ClassCensus:
    """Canonical representatives of the n x n Hadamard matrices.

    Empty census (no error) at orders where none exist.
    """
    kwargs = {} if budget is None else {"budget": budget}
    reps = list(enumerate_canonical(n, n, 3, predicate=is_hadamard,
                                    row_filter=_all_nonzero, **kwargs))
    return ClassCensus(shape=(n, n, 3), count=len(reps), representatives=reps)


def classify_weighing(n: int, k: int, budget: int | None = None) -> ClassCensus:
    """Canonical representatives of the weight-k weighing matrices of order n."""
    if not (1 <= k <= n):
        raise ValueError(f"weight k={k} outside [1, {n}]")
    kwargs = {} if budget is None else {"budget": budget}

    def k_nonzeros(row: tuple[int, ...]) -> bool:
        return sum(1 for e in row if e != 0) == k

    reps = list(enumerate_canonical(n, n, 3, predicate=lambda a: is_weighing(a, k),
                                    row_filter=k_nonzeros, **kwargs))
    return ClassCensus(shape=(n, n, 3), count=len(reps), representatives=reps)
