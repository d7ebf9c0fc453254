"""Row/column permutation actions and the canonical-form search.

Two matrices are equivalent when one arises from the other by permuting
rows and columns.  The canonical representative of a class is the member
whose row code is lexicographically minimal.  For a fixed column order the
optimal row order is simply ascending row sort, so the search space is the
m! column orders; a branch-and-bound variant prunes column prefixes whose
best completion already loses to the incumbent.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import BudgetExceededError
from .matrices import Matrix

EXHAUSTIVE_COLS_GUARD = 10


@dataclass(frozen=True)
class Permutation:
    """A bijection on {0, ..., k-1}; images[i] is the image of i."""

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a bijection: {self.images}")

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(tuple(range(k)))

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img] = i
        return Permutation(tuple(inv))

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(i) = self(other(i))."""
        return Permutation(tuple(self.images[other.images[i]] for i in range(len(self.images))))


@dataclass(frozen=True)
class PermPair:
    """A row permutation and a column permutation acting together."""

    row: Permutation
    col: Permutation

    @classmethod
    def identity(cls, n: int, m: int) -> "PermPair":
        return cls(Permutation.identity(n), Permutation.identity(m))

    def inverse(self) -> "PermPair":
        return PermPair(self.row.inverse(), self.col.inverse())

    def compose(self, other: "PermPair") -> "PermPair":
        return PermPair(self.row.compose(other.row), self.col.compose(other.col))


@dataclass(frozen=True)
class CanonResult:
    canonical: Matrix
    witness: PermPair


def apply(a: Matrix, pp: PermPair) -> Matrix:
    """Apply a permutation pair: entry (i, j) moves to (row(i), col(j)).

    This is a left group action under `compose`:
    apply(apply(a, q), r) == apply(a, r.compose(q)).
    """
    if pp.row.size != a.n or pp.col.size != a.m:
        raise ValueError(f"permutation sizes {pp.row.size}x{pp.col.size} "
                         f"do not match matrix shape {a.n}x{a.m}")
    grid = [[0] * a.m for _ in range(a.n)]
    for i, row in enumerate(a.rows):
        ti = pp.row.images[i]
        for j, e in enumerate(row):
            grid[ti][pp.col.images[j]] = e
    return Matrix(n=a.n, m=a.m, p=a.p, rows=tuple(tuple(r) for r in grid))


def _witness(order, sigma) -> PermPair:
    # order[k] = source row placed at destination k; sigma[j] = source column
    # placed at destination j.  Invert both to get source -> destination maps.
    row_images = [0] * len(order)
    for dest, src in enumerate(order):
        row_images[src] = dest
    col_images = [0] * len(sigma)
    for dest, src in enumerate(sigma):
        col_images[src] = dest
    return PermPair(Permutation(tuple(row_images)), Permutation(tuple(col_images)))


def canonical_form(a: Matrix, max_cols: int = EXHAUSTIVE_COLS_GUARD) -> CanonResult:
    """Exhaustive minimum of the row code over the equivalence class.

    Loops over all m! column orders; for each, ascending row sort is the
    optimal row order.  Guarded by `max_cols`; beyond it use
    pruned_canonical_form.
    """
    if a.m > max_cols:
        raise BudgetExceededError(
            f"m={a.m} exceeds the factorial guard ({max_cols}); "
            "use pruned_canonical_form")
    rows = a.rows
    n = a.n
    best = None
    best_order = None
    best_sigma = None
    for sigma in itertools.permutations(range(a.m)):
        permuted = [tuple(row[j] for j in sigma) for row in rows]
        order = sorted(range(n), key=permuted.__getitem__)
        cand = tuple(permuted[i] for i in order)
        if best is None or cand < best:
            best = cand
            best_order = order
            best_sigma = sigma
    canonical = Matrix(n=a.n, m=a.m, p=a.p, rows=best)
    return CanonResult(canonical=canonical, witness=_witness(best_order, best_sigma))


def pruned_canonical_form(a: Matrix) -> CanonResult:
    """Branch-and-bound over column orders; same contract as canonical_form.

    A partial column order is cut via a lower bound: sort the prefix rows
    and pad the unchosen digit positions with zeros.  Any completion sorts
    its full rows, whose prefix sequence is >= the sorted prefix, and its
    unknown digits are >= the zero padding, so the padded matrix is a lower
    bound for the whole subtree; if it already beats the incumbent the
    branch is dead.
    """
    rows = a.rows
    n, m = a.n, a.m
    identity_order = sorted(range(n), key=rows.__getitem__)
    state = {
        "rows": tuple(rows[i] for i in identity_order),
        "order": identity_order,
        "sigma": tuple(range(m)),
    }

    def dfs(sigma: tuple[int, ...], remaining: tuple[int, ...]):
        k = len(sigma)
        pad = (0,) * (m - k)
        bound = tuple(t + pad for t in sorted(tuple(row[j] for j in sigma) for row in rows))
        if bound > state["rows"]:
            return
        if not remaining:
            permuted = [tuple(row[j] for j in sigma) for row in rows]
            order = sorted(range(n), key=permuted.__getitem__)
            cand = tuple(permuted[i] for i in order)
            if cand < state["rows"]:
                state["rows"] = cand
                state["order"] = order
                state["sigma"] = sigma
            return
        for idx, j in enumerate(remaining):
            dfs(sigma + (j,), remaining[:idx] + remaining[idx + 1:])

    dfs((), tuple(range(m)))
    canonical = Matrix(n=a.n, m=a.m, p=a.p, rows=state["rows"])
    return CanonResult(canonical=canonical,
                       witness=_witness(state["order"], state["sigma"]))


def equivalent(a: Matrix, b: Matrix) -> PermPair | None:
    """Witness pair pp with apply(b, pp) == a, or None if inequivalent."""
    if (a.n, a.m, a.p) != (b.n, b.m, b.p):
        raise ValueError(f"shape/base mismatch: {(a.n, a.m, a.p)} vs {(b.n, b.m, b.p)}")
    ra = pruned_canonical_form(a)
    rb = pruned_canonical_form(b)
    if ra.canonical != rb.canonical:
        return None
    pp = ra.witness.inverse().compose(rb.witness)
    assert apply(b, pp) == a
    return pp
