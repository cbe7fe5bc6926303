"""Bit-packed GF(2) kernels for the hot loops of every search and count.

A vector of GF(2^m)^n is packed into one integer of m*n bits: coordinate j
occupies the m-bit chunk starting at bit m*(n-1-j) (coordinate 0 most
significant), and within a chunk bit i is the coefficient of alpha^i.  Rank
weight is the GF(2)-rank of the n chunk values viewed as vectors of
GF(2)^m, so addition of vectors is XOR of packed integers and computing a
full table of ranks for the whole space reduces to a chain of table
gathers.

The rank table is produced by a subspace automaton: states are canonical
reduced-echelon bases of subspaces of GF(2)^m, the transition on column c
inserts c into the basis.  Only states of dimension < n need transitions.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "gf2_rank",
    "gf2_rref",
    "rank_table",
    "packed_rank",
    "covering_radius_packed",
    "min_distance_packed",
    "farthest_point_packed",
    "intersection_count_packed",
    "coverage_mask",
    "EnumerationCapError",
    "DEFAULT_CAP",
]

DEFAULT_CAP = 1 << 26  # largest space enumerated without an explicit override

_BLOCK = 1 << 22  # index block size for gather passes


class EnumerationCapError(ValueError):
    """Raised when a brute-force scan would exceed the configured cap."""


def check_cap(size: int, cap: int | None = None) -> None:
    limit = DEFAULT_CAP if cap is None else cap
    if size > limit:
        raise EnumerationCapError(
            f"space of size {size} exceeds enumeration cap {limit}; "
            "raise the cap explicitly to force the scan"
        )


# ----------------------------------------------------------------------
# plain int-bitset linear algebra
# ----------------------------------------------------------------------
def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of a set of GF(2) row vectors given as int bitsets."""
    basis: list[int] = []  # basis[i] has a unique leading bit
    for v in rows:
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
    return len(basis)


def gf2_rref(rows: Iterable[int]) -> tuple[int, ...]:
    """Canonical reduced row-echelon basis, rows sorted by leading bit desc."""
    basis: list[int] = []
    for v in rows:
        for b in basis:
            if v ^ b < v:
                v ^= b
        if not v:
            continue
        pivot = v.bit_length() - 1
        basis = [b ^ v if (b >> pivot) & 1 else b for b in basis]
        basis.append(v)
    return tuple(sorted(basis, reverse=True))


def packed_rank(x: int, m: int, n: int) -> int:
    """Rank weight of one packed vector (columns = m-bit chunks)."""
    mask = (1 << m) - 1
    return gf2_rank((x >> (m * j)) & mask for j in range(n))


# ----------------------------------------------------------------------
# subspace automaton and full-space rank tables
# ----------------------------------------------------------------------
def _insert(rows: tuple[int, ...], c: int) -> tuple[int, ...]:
    for b in rows:
        if c ^ b < c:
            c ^= b
    if not c:
        return rows
    pivot = c.bit_length() - 1
    out = [b ^ c if (b >> pivot) & 1 else b for b in rows]
    out.append(c)
    return tuple(sorted(out, reverse=True))


def _automaton(m: int, depth: int) -> tuple[np.ndarray, np.ndarray]:
    """Transition table and dimensions for bases of <= depth columns.

    Returns (trans, dim): trans[s, c] = successor state, defined for states
    of dimension < depth; dim[s] = basis size of state s.
    """
    cols = 1 << m
    state_id: dict[tuple[int, ...], int] = {(): 0}
    states: list[tuple[int, ...]] = [()]
    trans_rows: list[list[int]] = []
    frontier = [()]
    while frontier:
        nxt = []
        for rows in frontier:
            sid = state_id[rows]
            if len(rows) >= depth:
                continue
            while len(trans_rows) <= sid:
                trans_rows.append([0] * cols)
            row = trans_rows[sid]
            for c in range(cols):
                succ = _insert(rows, c)
                tid = state_id.get(succ)
                if tid is None:
                    tid = state_id[succ] = len(states)
                    states.append(succ)
                    nxt.append(succ)
                row[c] = tid
        frontier = nxt
    trans = np.zeros((len(trans_rows), cols), dtype=np.int32)
    for sid, row in enumerate(trans_rows):
        trans[sid] = row
    dim = np.array([len(rows) for rows in states], dtype=np.uint8)
    return trans, dim


_table_cache: dict[tuple[int, int], np.ndarray] = {}


def rank_table(m: int, n: int, cap: int | None = None) -> np.ndarray:
    """uint8 array R with R[i] = rank weight of the packed vector i.

    Cached per (m, n).  Size 2^(m*n); guarded by the enumeration cap.
    """
    key = (m, n)
    cached = _table_cache.get(key)
    if cached is not None:
        return cached
    size = 1 << (m * n)
    check_cap(size, cap)
    trans, dim = _automaton(m, min(m, n))
    mask = (1 << m) - 1
    out = np.empty(size, dtype=np.uint8)
    for start in range(0, size, _BLOCK):
        stop = min(start + _BLOCK, size)
        idx = np.arange(start, stop, dtype=np.int64)
        state = trans[0][(idx >> (m * (n - 1))) & mask]
        for j in range(n - 2, -1, -1):
            col = ((idx >> (m * j)) & mask).astype(np.int64)
            # states that already reached full depth keep their dimension
            if trans.shape[0] < dim.shape[0]:
                live = state < trans.shape[0]
                state[live] = trans[state[live], col[live]]
            else:
                state = trans[state, col]
        out[start:stop] = dim[state]
    _table_cache[key] = out
    return out


# ----------------------------------------------------------------------
# gather passes over the packed space
# ----------------------------------------------------------------------
def _blocks(size: int, threads: int):
    starts = list(range(0, size, _BLOCK))
    return starts


def _scan(size: int, threads: int, work):
    """Apply work(start, stop) over blocks, optionally in a thread pool."""
    starts = _blocks(size, threads)
    if threads <= 1 or len(starts) <= 1:
        return [work(s, min(s + _BLOCK, size)) for s in starts]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda s: work(s, min(s + _BLOCK, size)), starts))


def covering_radius_packed(
    code: Sequence[int], m: int, n: int, *, cap: int | None = None, threads: int = 1
) -> int:
    """Exact covering radius of a packed code by full-space scan."""
    if not code:
        raise ValueError("empty code has no covering radius")
    size = 1 << (m * n)
    check_cap(size, cap)
    table = rank_table(m, n, cap)
    words = np.asarray(sorted(set(code)), dtype=np.int64)

    def work(start: int, stop: int) -> int:
        idx = np.arange(start, stop, dtype=np.int64)
        best = table[idx ^ words[0]]
        for c in words[1:]:
            np.minimum(best, table[idx ^ c], out=best)
        return int(best.max())

    return max(_scan(size, threads, work))


def farthest_point_packed(
    code: Sequence[int], m: int, n: int, *, cap: int | None = None
) -> tuple[int, int]:
    """A vector attaining the covering radius, with its distance."""
    size = 1 << (m * n)
    check_cap(size, cap)
    table = rank_table(m, n, cap)
    words = np.asarray(sorted(set(code)), dtype=np.int64)
    best_dist, best_idx = -1, 0
    for start in range(0, size, _BLOCK):
        stop = min(start + _BLOCK, size)
        idx = np.arange(start, stop, dtype=np.int64)
        dist = table[idx ^ words[0]]
        for c in words[1:]:
            np.minimum(dist, table[idx ^ c], out=dist)
        k = int(dist.argmax())
        if dist[k] > best_dist:
            best_dist, best_idx = int(dist[k]), start + k
    return best_idx, best_dist


def min_distance_packed(code: Sequence[int], m: int, n: int) -> int:
    """Minimum pairwise rank distance of a packed code (O(K^2) XOR+table)."""
    words = sorted(set(code))
    if len(words) < 2:
        raise ValueError("minimum distance needs at least two codewords")
    mn = m * n
    if mn <= 26:
        table = rank_table(m, n)
        arr = np.asarray(words, dtype=np.int64)
        best = m + n
        for i in range(len(arr) - 1):
            d = int(table[arr[i + 1 :] ^ arr[i]].min())
            if d < best:
                best = d
        return best
    best = m + n
    for i, a in enumerate(words):
        for b in words[i + 1 :]:
            r = packed_rank(a ^ b, m, n)
            if r < best:
                best = r
    return best


def intersection_count_packed(
    m: int,
    n: int,
    r: int,
    s: int,
    center: int,
    *,
    cap: int | None = None,
    threads: int = 1,
) -> int:
    """|B_r(0) ∩ B_s(center)| by scanning the packed space."""
    size = 1 << (m * n)
    check_cap(size, cap)
    table = rank_table(m, n, cap)

    def work(start: int, stop: int) -> int:
        idx = np.arange(start, stop, dtype=np.int64)
        near0 = table[idx] <= r
        nearc = table[idx ^ center] <= s
        return int(np.count_nonzero(near0 & nearc))

    return sum(_scan(size, threads, work))


def coverage_mask(code: Sequence[int], m: int, n: int, rho: int) -> np.ndarray:
    """Boolean array over the packed space: within rho of some codeword."""
    size = 1 << (m * n)
    check_cap(size)
    table = rank_table(m, n)
    ball0 = np.flatnonzero(table <= rho).astype(np.int64)
    covered = np.zeros(size, dtype=bool)
    for c in code:
        covered[ball0 ^ c] = True
    return covered
