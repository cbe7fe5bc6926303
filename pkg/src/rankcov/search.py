"""Constructive and exhaustive numerical methods.

The greedy cover construction follows the staged analysis behind the
Johnson-Stein-Lovasz-type bound: seed with an MRD code of distance
2*rho + 1 (the single zero word when 2*rho > n), then repeatedly adopt
the center covering the most still-uncovered vectors.  Processing centers
in order of current gain realizes exactly the per-weight "maximal set of
columns with pairwise disjoint supports" selection: once a column's
remaining weight drops below the stage weight it is precisely the columns
whose support met an earlier pick.  Ties break toward the lowest packed
index, which makes runs reproducible.

Exhaustive verifiers certify impossibility: no size-K code (or no
dimension-k linear code) achieves covering radius rho.  Codes are
enumerated with the first word fixed to zero (covering radius is
translation invariant); optional canonicalization of the second word per
rank class uses the GL x GL isometries of the matrix picture.
"""

from __future__ import annotations

import heapq
import itertools
import json
import random
from dataclasses import dataclass
from math import comb

import numpy as np

from . import gf2
from .codes import Code, covering_radius, mrd_construct
from .fields import Field
from .qcombinatorics import canonical_rank_vector

__all__ = [
    "SearchBudget",
    "CoverState",
    "jsl_construct",
    "local_search",
    "exhaustive_lower_bound",
    "linear_exhaustive",
    "enumeration_cost",
    "certificate",
]


@dataclass(frozen=True)
class SearchBudget:
    max_iterations: int = 200
    max_restarts: int = 20
    random_seed: int = 0
    time_limit: float | None = None


class CoverState:
    """Coverage bitmap over packed vector indices."""

    def __init__(self, m: int, n: int, rho: int):
        self.m, self.n, self.rho = m, n, rho
        self.table = gf2.rank_table(m, n)
        self.ball0 = np.flatnonzero(self.table <= rho).astype(np.int64)
        self.covered = np.zeros(1 << (m * n), dtype=bool)

    def add(self, center: int) -> None:
        self.covered[self.ball0 ^ center] = True

    def gain(self, center: int) -> int:
        return int(np.count_nonzero(~self.covered[self.ball0 ^ center]))

    @property
    def count_uncovered(self) -> int:
        return int(np.count_nonzero(~self.covered))

    def all_covered(self) -> bool:
        return bool(self.covered.all())


def jsl_construct(
    q: int, m: int, n: int, rho: int, *, cap: int | None = None, verify: bool = True
) -> Code:
    """Greedy covering-code construction with MRD seeding.

    Returns a code whose covering radius is independently re-verified to
    be <= rho.  Deterministic: lowest-index tie break, lazy exact gains.
    """
    if q != 2:
        raise NotImplementedError("greedy construction is implemented for q = 2")
    field = Field(q, m)
    size = (q**m) ** n
    gf2.check_cap(size, cap)
    state = CoverState(m, n, rho)

    if 2 * rho <= n:
        seed = mrd_construct(q, m, n, 2 * rho + 1)
    else:
        seed = Code(field, n, (0,))
    chosen = list(seed.word_indices)
    for c in chosen:
        state.add(c)

    # lazy exact greedy: heap keys are stale upper bounds on the gain
    # (gains only decrease), so a popped entry whose fresh key still beats
    # the heap top is the true argmax; ties resolve to the lowest index
    heap = [(-len(state.ball0), c) for c in range(size)]
    heapq.heapify(heap)
    while not state.all_covered():
        while True:
            _, c = heapq.heappop(heap)
            fresh = state.gain(c)
            if not heap or (-fresh, c) <= heap[0]:
                break
            heapq.heappush(heap, (-fresh, c))
        if fresh == 0:
            raise AssertionError("no candidate covers anything; state corrupt")
        chosen.append(c)
        state.add(c)

    code = Code(field, n, tuple(chosen))
    if verify:
        measured = covering_radius(code, cap=cap)
        assert measured <= rho, f"greedy produced radius {measured} > {rho}"
    return code


def local_search(
    q: int,
    m: int,
    n: int,
    rho: int,
    K: int,
    budget: SearchBudget | None = None,
    *,
    cap: int | None = None,
) -> Code | None:
    """Hill-climbing over size-K codes minimizing the uncovered count.

    Moves are the q^m * n single-coordinate modifications of one randomly
    chosen codeword, taken steepest-descent; restarts on plateaus.  A code
    is returned only after an independent covering-radius check; None
    means the budget ran out, not that no code exists.
    """
    if q != 2:
        raise NotImplementedError("local search is implemented for q = 2")
    budget = budget or SearchBudget()
    field = Field(q, m)
    size = (q**m) ** n
    gf2.check_cap(size, cap)
    table = gf2.rank_table(m, n)
    ball0 = np.flatnonzero(table <= rho).astype(np.int64)
    rng = random.Random(budget.random_seed)
    qm = q**m

    def uncovered_count(words: list[int]) -> int:
        covered = np.zeros(size, dtype=bool)
        for c in words:
            covered[ball0 ^ c] = True
        return int(np.count_nonzero(~covered))

    for _ in range(budget.max_restarts):
        words = [0] + rng.sample(range(1, size), K - 1)
        current = uncovered_count(words)
        for _ in range(budget.max_iterations):
            if current == 0:
                break
            pos = rng.randrange(K)
            base = words[pos]
            best_word, best_val = base, current
            for coord in range(n):
                shift = m * (n - 1 - coord)
                cleared = base & ~(((qm - 1)) << shift)
                for val in range(qm):
                    cand = cleared | (val << shift)
                    if cand == base or cand in words:
                        continue
                    trial = words[:pos] + [cand] + words[pos + 1 :]
                    u = uncovered_count(trial)
                    if u < best_val:
                        best_val, best_word = u, cand
            if best_word == base:
                break  # plateau: restart
            words[pos] = best_word
            current = best_val
        if current == 0:
            code = Code(field, n, tuple(words))
            measured = covering_radius(code, cap=cap)
            assert measured <= rho, "local search bookkeeping disagrees with verifier"
            return code
    return None


def enumeration_cost(space: int, K: int, symmetry: bool = False) -> int:
    """Number of candidate codes exhaustive_lower_bound would scan."""
    free = K - 1
    if symmetry:
        return comb(space - 2, free - 1) if free >= 1 else 1
    return comb(space - 1, free)


def exhaustive_lower_bound(
    q: int,
    m: int,
    n: int,
    rho: int,
    K: int,
    *,
    symmetry: bool = False,
    max_candidates: int = 2_000_000,
    cap: int | None = None,
) -> bool:
    """True iff NO size-K code has covering radius <= rho (so K(..) > K).

    The first codeword is fixed to 0 (translation invariance).  With
    symmetry=True the second codeword is additionally canonicalized per
    rank class via the GL(m) x GL(n) isometries; every code is isometric
    to one of the enumerated family, so a True verdict stays a sound
    certificate.
    """
    if q != 2:
        raise NotImplementedError("exhaustive search is implemented for q = 2")
    field = Field(q, m)
    size = (q**m) ** n
    gf2.check_cap(size, cap)
    if K < 1:
        raise ValueError("K must be >= 1")
    cost = enumeration_cost(size, K, symmetry) * (1 if symmetry else 1)
    if cost > max_candidates:
        raise gf2.EnumerationCapError(
            f"would scan ~{cost} candidate codes (> {max_candidates}); "
            "raise max_candidates to force it"
        )
    table = gf2.rank_table(m, n)
    ball0 = np.flatnonzero(table <= rho).astype(np.int64)
    space = 1 << (m * n)
    base = np.zeros(space, dtype=bool)
    base[ball0] = True  # coverage of the zero word

    def covers(rest: tuple[int, ...]) -> bool:
        covered = base.copy()
        for c in rest:
            covered[ball0 ^ c] = True
        return bool(covered.all())

    if K == 1:
        return not covers(())
    if symmetry:
        seconds = [canonical_rank_vector(field, n, d).index for d in range(1, min(m, n) + 1)]
        for c1 in seconds:
            others = [x for x in range(1, space) if x != c1]
            for rest in itertools.combinations(others, K - 2):
                if covers((c1,) + rest):
                    return False
        return True
    for rest in itertools.combinations(range(1, space), K - 1):
        if covers(rest):
            return False
    return True


def _linear_code_generators(field: Field, n: int, k: int):
    """Canonical k x n generator matrices over GF(q^m): reduced echelon
    forms, one per k-dimensional subspace of GF(q^m)^n."""
    order = field.order
    for pivots in itertools.combinations(range(n), k):
        free_positions = [
            (r, c)
            for r in range(k)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(order), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(k)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free_positions, values):
                rows[r][c] = val
            yield tuple(tuple(r) for r in rows)


def linear_exhaustive(
    q: int,
    m: int,
    n: int,
    rho: int,
    k: int,
    *,
    max_candidates: int = 200_000,
    cap: int | None = None,
) -> bool:
    """True iff NO (n, k) linear code over GF(q^m) has covering radius <= rho.

    Enumerates canonical echelon generator matrices (every subspace once).
    """
    if q != 2:
        raise NotImplementedError("linear exhaustive search is implemented for q = 2")
    field = Field(q, m)
    size = (q**m) ** n
    gf2.check_cap(size, cap)
    if k == 0:
        return rho < n
    from .qcombinatorics import gaussian

    n_codes = gaussian(n, k, q**m)
    if n_codes > max_candidates:
        raise gf2.EnumerationCapError(
            f"would scan {n_codes} linear codes (> {max_candidates})"
        )
    table = gf2.rank_table(m, n)
    ball0 = np.flatnonzero(table <= rho).astype(np.int64)
    for gen in _linear_code_generators(field, n, k):
        code = Code.linear(field, gen)
        covered = np.zeros(size, dtype=bool)
        for c in code.word_indices:
            covered[ball0 ^ c] = True
        if covered.all():
            return False
    return True


def certificate(
    code: Code, rho: int, method: str, seed: int | None = None
) -> dict:
    """JSON-ready verification record for a constructed code."""
    measured = covering_radius(code)
    return {
        "params": {
            "q": code.field.q,
            "m": code.field.m,
            "n": code.n,
            "rho": rho,
        },
        "K": code.size,
        "radius_measured": measured,
        "radius_verified": measured <= rho,
        "seed": seed,
        "method": method,
    }
