"""Isomorph-free generation of canonical matrices and orbit-count oracles.

Generation is a depth-first search over row codes: the first row must have
the zeros-then-nondecreasing-nonzeros shape every canonical matrix starts
with, each later row is >= its predecessor and carries at least as many
nonzero entries as the first (all provably necessary for minimality), and
completed candidates are kept iff they equal their own canonical form.
The six-condition structural check is deliberately NOT the leaf filter: it
admits non-minimal matrices (e.g. at 3x3 over p=3) and rejects some minima
(e.g. at 4x4 over p=2), so counts filtered by it would not partition the
matrix set.  Emission order is strictly ascending in the row code, so
streams are deterministic.

The Burnside count (orbits of S_n x S_m on the full matrix set, via the
cycle index) is computed by entirely different means and serves as an
independent check on enumerated class counts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Callable, Iterator

from .equivalence import PermPair, Permutation, apply, pruned_canonical_form
from .errors import BudgetExceededError, IntegrityError
from .matrices import Matrix

BURNSIDE_GUARD = 12
DEFAULT_BUDGET = 10_000_000


@dataclass
class ClassCensus:
    """Result of counting/streaming equivalence classes for one shape."""

    shape: tuple[int, int, int]
    count: int
    burnside: int | None = None
    representatives: list[Matrix] | None = None
    nodes: int = 0

    @property
    def agree(self) -> bool:
        return self.burnside is None or self.count == self.burnside


def structured_first_rows(m: int, p: int) -> Iterator[tuple[int, ...]]:
    """First-row candidates: zeros, then a nondecreasing nonzero tail."""
    for s in range(m + 1):
        for tail in itertools.combinations_with_replacement(range(1, p), s):
            yield (0,) * (m - s) + tail


def enumerate_canonical(n: int, m: int, p: int,
                        predicate: Callable[[Matrix], bool] | None = None,
                        row_filter: Callable[[tuple[int, ...]], bool] | None = None,
                        budget: int | None = DEFAULT_BUDGET,
                        counters: dict | None = None,
                        first_rows=None) -> Iterator[Matrix]:
    """Yield every canonical n x m matrix over {0..p-1}, ascending by row code.

    `predicate` filters completed canonical matrices.  `row_filter`, when
    given, must hold for every row of every matrix of interest (it is used
    to prune, so it has to be invariant under the equivalence); e.g. "no
    zero entries" for Hadamard candidates.  `counters`, when passed, gets a
    "nodes" entry with the number of partial rows placed.  `first_rows`
    restricts the search to the given first-row choices (used to partition
    the tree among workers); it must be a subset of structured_first_rows.
    """
    if n < 1 or m < 1 or p < 2:
        raise ValueError(f"invalid shape/base n={n} m={m} p={p}")
    all_rows = sorted(itertools.product(range(p), repeat=m))
    if row_filter is not None:
        all_rows = [r for r in all_rows if row_filter(r)]
    state = {"nodes": 0, "emitted": 0}
    if counters is not None:
        counters["nodes"] = 0

    def charge():
        state["nodes"] += 1
        if counters is not None:
            counters["nodes"] = state["nodes"]
        if budget is not None and state["nodes"] > budget:
            raise BudgetExceededError(
                f"node budget {budget} exceeded",
                nodes=state["nodes"], partial_count=state["emitted"])

    def extend(prefix: list[tuple[int, ...]], s: int) -> Iterator[Matrix]:
        if len(prefix) == n:
            cand = Matrix(n=n, m=m, p=p, rows=tuple(prefix))
            if ((predicate is None or predicate(cand))
                    and pruned_canonical_form(cand).canonical == cand):
                state["emitted"] += 1
                yield cand
            return
        last = prefix[-1]
        for row in all_rows:
            if row < last:
                continue
            if sum(1 for e in row if e != 0) < s:
                continue
            charge()
            prefix.append(row)
            yield from extend(prefix, s)
            prefix.pop()

    for first in (structured_first_rows(m, p) if first_rows is None else first_rows):
        if row_filter is not None and not row_filter(first):
            continue
        charge()
        s = sum(1 for e in first if e != 0)
        yield from extend([first], s)


def _partitions(k: int) -> Iterator[tuple[int, ...]]:
    """Integer partitions of k, parts nonincreasing."""
    if k == 0:
        yield ()
        return
    def gen(remaining: int, largest: int):
        if remaining == 0:
            yield ()
            return
        for part in range(min(remaining, largest), 0, -1):
            for rest in gen(remaining - part, part):
                yield (part,) + rest
    yield from gen(k, k)


def _conjugacy_class_size(partition: tuple[int, ...], k: int) -> int:
    z = 1
    for length in set(partition):
        count = partition.count(length)
        z *= length**count * math.factorial(count)
    return math.factorial(k) // z


def burnside_count(n: int, m: int, p: int) -> int:
    """Orbits of S_n x S_m on the p^(n*m) matrices, via the cycle index.

    A pair of permutations with row cycles of lengths {a} and column cycles
    of lengths {b} fixes p^(sum gcd(a, b)) matrices.
    """
    if n > BURNSIDE_GUARD or m > BURNSIDE_GUARD:
        raise BudgetExceededError(f"burnside guard: n, m must be <= {BURNSIDE_GUARD}")
    total = 0
    col_classes = [(mu, _conjugacy_class_size(mu, m)) for mu in _partitions(m)]
    for lam in _partitions(n):
        size_lam = _conjugacy_class_size(lam, n)
        for mu, size_mu in col_classes:
            exponent = sum(math.gcd(a, b) for a in lam for b in mu)
            total += size_lam * size_mu * p**exponent
    order = math.factorial(n) * math.factorial(m)
    assert total % order == 0
    return total // order


def census(n: int, m: int, p: int, stream: bool = False,
           budget: int | None = DEFAULT_BUDGET) -> ClassCensus:
    """Enumerated class count cross-checked against the Burnside oracle.

    Raises IntegrityError (carrying both counts) on disagreement.
    """
    counters: dict = {}
    reps = list(enumerate_canonical(n, m, p, budget=budget, counters=counters))
    expected = burnside_count(n, m, p)
    result = ClassCensus(shape=(n, m, p), count=len(reps), burnside=expected,
                         representatives=reps if stream else None,
                         nodes=counters.get("nodes", 0))
    if not result.agree:
        raise IntegrityError(
            f"census disagreement at {(n, m, p)}: enumerated {result.count}, "
            f"burnside {expected}", enumerated=result.count, expected=expected)
    return result


def orbit_size(a: Matrix) -> int:
    """|class of a| = n! * m! / |stabilizer|, by exhaustive permutation search.

    Desk-scale only (n! * m! pairs are tried).
    """
    stab = 0
    for rho in itertools.permutations(range(a.n)):
        for sigma in itertools.permutations(range(a.m)):
            pp = PermPair(Permutation(rho), Permutation(sigma))
            if apply(a, pp) == a:
                stab += 1
    return math.factorial(a.n) * math.factorial(a.m) // stab
