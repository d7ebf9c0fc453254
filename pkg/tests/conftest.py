import itertools

import pytest
from hypothesis import strategies as st

from canonmat import Matrix

# 3x4 base-4 matrix with known row/column codes.
DEMO_34 = Matrix.from_rows([(1, 0, 3, 2), (0, 2, 1, 0), (0, 1, 1, 3)], 4)

# Three equivalent 4x4 base-3 matrices; TRIO_C is the class minimum,
# TRIO_A and TRIO_B are semi-canonical but not minimal.
TRIO_A = Matrix.from_rows([(0, 0, 1, 2), (0, 0, 2, 2), (0, 2, 0, 0), (1, 0, 0, 0)], 3)
TRIO_B = Matrix.from_rows([(0, 0, 0, 2), (0, 1, 2, 0), (0, 2, 2, 0), (1, 0, 0, 0)], 3)
TRIO_C = Matrix.from_rows([(0, 0, 0, 1), (0, 0, 2, 0), (1, 2, 0, 0), (2, 2, 0, 0)], 3)


def all_matrices(n, m, p):
    """Every n x m matrix over {0..p-1}."""
    for entries in itertools.product(range(p), repeat=n * m):
        yield Matrix(n, m, p, tuple(entries[i * m:(i + 1) * m] for i in range(n)))


def naive_minimum(a: Matrix) -> tuple:
    """Row tuple of the class minimum by trying all n! * m! arrangements."""
    best = None
    for rho in itertools.permutations(range(a.n)):
        for sigma in itertools.permutations(range(a.m)):
            cand = tuple(tuple(a.rows[i][j] for j in sigma) for i in rho)
            if best is None or cand < best:
                best = cand
    return best


@st.composite
def matrices(draw, max_n=4, max_m=4, max_p=4):
    n = draw(st.integers(1, max_n))
    m = draw(st.integers(1, max_m))
    p = draw(st.integers(2, max_p))
    rows = tuple(tuple(draw(st.integers(0, p - 1)) for _ in range(m))
                 for _ in range(n))
    return Matrix(n, m, p, rows)


@pytest.fixture
def demo34():
    return DEMO_34


@pytest.fixture
def trio():
    return TRIO_A, TRIO_B, TRIO_C
