"""Vectors of GF(q^m)^n, rank weight, support spaces, elementary subspaces.

A vector x = (x_0, ..., x_{n-1}) expands to an m x n matrix over GF(q)
whose column j holds the polynomial-basis coefficients of x_j; the rank
weight of x is the GF(q)-rank of that matrix, and equals the dimension of
the support space S(x) spanned by the coordinates inside GF(q^m).

An elementary linear subspace (ELS) is a subspace of GF(q^m)^n admitting a
basis of vectors with all entries in GF(q); it behaves like a coordinate
set does for the Hamming metric.  ELS's are stored by their canonical
reduced-echelon elementary basis, which makes equality and hashing exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from . import gf2
from .fields import Field

__all__ = [
    "RankVector",
    "Els",
    "SupportSpace",
    "rank_weight",
    "rank_distance",
    "support_space",
    "unique_els_of",
    "els_enumerate",
    "els_complements",
    "project",
]


@dataclass(frozen=True)
class RankVector:
    """An element of GF(q^m)^n, coordinates as canonical field integers."""

    field: Field
    coords: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(self.coords))
        for c in self.coords:
            self.field._check_element(c)

    @property
    def n(self) -> int:
        return len(self.coords)

    @staticmethod
    def zero(field: Field, n: int) -> "RankVector":
        return RankVector(field, (0,) * n)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other: "RankVector") -> "RankVector":
        self._check_shape(other)
        f = self.field
        return RankVector(f, tuple(f.add(a, b) for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RankVector") -> "RankVector":
        self._check_shape(other)
        f = self.field
        return RankVector(f, tuple(f.sub(a, b) for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RankVector":
        return RankVector(self.field, tuple(self.field.neg(a) for a in self.coords))

    def scale(self, c: int) -> "RankVector":
        f = self.field
        return RankVector(f, tuple(f.mul(c, a) for a in self.coords))

    def _check_shape(self, other: "RankVector") -> None:
        if self.field != other.field or self.n != other.n:
            raise ValueError("vectors live in different spaces")

    # -- expansion and indexing ----------------------------------------
    def expansion_columns(self) -> list[tuple[int, ...]]:
        """Column j = coefficient vector of coordinate j (length m)."""
        return [self.field.expand(c) for c in self.coords]

    def expansion_rows(self) -> list[tuple[int, ...]]:
        """Row i = (coefficient i of each coordinate), a vector of GF(q)^n.

        The vector equals sum_i alpha^i * row_i, so the rows generate the
        unique ELS containing the vector.
        """
        cols = self.expansion_columns()
        return [tuple(col[i] for col in cols) for i in range(self.field.m)]

    @property
    def index(self) -> int:
        """Canonical integer in [0, q^{mn}); coordinate 0 most significant."""
        out = 0
        for c in self.coords:
            out = out * self.field.order + c
        return out

    @staticmethod
    def from_index(field: Field, n: int, i: int) -> "RankVector":
        if not 0 <= i < field.order**n:
            raise ValueError(f"index {i} out of range for GF({field.q}^{field.m})^{n}")
        coords = []
        for _ in range(n):
            coords.append(i % field.order)
            i //= field.order
        return RankVector(field, tuple(reversed(coords)))

    @staticmethod
    def space(field: Field, n: int) -> Iterator["RankVector"]:
        """All q^{mn} vectors in index order."""
        for coords in itertools.product(range(field.order), repeat=n):
            yield RankVector(field, coords)

    def __repr__(self) -> str:
        return f"RankVector{self.coords}"


def rank_weight(x: RankVector) -> int:
    """Rank of the m x n expansion matrix of x over GF(q)."""
    if x.field.q == 2:
        return gf2.gf2_rank(x.coords)
    return _rank_generic(x.expansion_columns(), x.field.q)


def rank_distance(x: RankVector, y: RankVector) -> int:
    x._check_shape(y)
    return rank_weight(x - y)


def _rank_generic(columns: Sequence[Sequence[int]], q: int) -> int:
    """Gaussian elimination over GF(q) on a list of column vectors."""
    rows = [list(col) for col in columns]  # rank(A) = rank(A^T)
    rank, pivot_cols = 0, 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = None
        for r in range(rank, len(rows)):
            if rows[r][col] % q:
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], -1, q)
        rows[rank] = [v * inv % q for v in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][col] % q:
                c = rows[r][col]
                rows[r] = [(v - c * w) % q for v, w in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


def _rref_generic(rows: Sequence[Sequence[int]], q: int) -> tuple[tuple[int, ...], ...]:
    """Canonical reduced row-echelon form over GF(q), zero rows dropped."""
    work = [list(r) for r in rows]
    n = len(work[0]) if work else 0
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, len(work)):
            if work[r][col] % q:
                pivot = r
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, q)
        work[rank] = [v * inv % q for v in work[rank]]
        for r in range(len(work)):
            if r != rank and work[r][col] % q:
                c = work[r][col]
                work[r] = [(v - c * w) % q for v, w in zip(work[r], work[rank])]
        rank += 1
    return tuple(tuple(r) for r in work[:rank])


@dataclass(frozen=True)
class SupportSpace:
    """GF(q)-span of the coordinates of a vector, inside GF(q^m)."""

    field: Field
    basis: tuple[tuple[int, ...], ...]  # coefficient vectors, canonical RREF

    @property
    def dim(self) -> int:
        return len(self.basis)


def support_space(x: RankVector) -> SupportSpace:
    rows = [x.field.expand(c) for c in x.coords]
    return SupportSpace(x.field, _rref_generic(rows, x.field.q))


class Els:
    """Elementary linear subspace of GF(q^m)^n.

    Stored as the canonical reduced-echelon elementary basis: rows in
    GF(q)^n, linearly independent.  Membership over GF(q^m) is tested by
    solving against the basis; the member set has (q^m)^dim vectors.
    """

    __slots__ = ("field", "n", "basis")

    def __init__(self, field: Field, n: int, rows: Sequence[Sequence[int]]):
        for row in rows:
            if len(row) != n:
                raise ValueError("basis row length mismatch")
            for v in row:
                if not 0 <= v < field.q:
                    raise ValueError("elementary basis entries must lie in GF(q)")
        canon = _rref_generic(rows, field.q) if rows else ()
        if len(canon) != len(rows):
            raise ValueError("elementary basis rows must be linearly independent")
        self.field = field
        self.n = n
        self.basis = canon

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Els)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.basis))

    def __repr__(self) -> str:
        return f"Els(dim={self.dim}, basis={self.basis})"

    # -- membership and enumeration ------------------------------------
    def contains(self, x: RankVector) -> bool:
        try:
            self.coefficients_of(x)
            return True
        except ValueError:
            return False

    def coefficients_of(self, x: RankVector) -> tuple[int, ...]:
        """The unique c in GF(q^m)^dim with x = sum c_i * basis_i."""
        coeffs, rest = _solve_elementary(self.basis, (), x)
        if any(rest):
            raise ValueError("vector not in subspace")
        return coeffs

    def members(self) -> Iterator[RankVector]:
        """All (q^m)^dim members, as GF(q^m)-combinations of the basis."""
        f, n = self.field, self.n
        rows = self.basis
        for coeffs in itertools.product(range(f.order), repeat=len(rows)):
            coords = [0] * n
            for c, row in zip(coeffs, rows):
                if c:
                    for j, rv in enumerate(row):
                        if rv:
                            coords[j] = f.add(coords[j], f.mul(c, rv % f.order))
            yield RankVector(f, tuple(coords))

    def member_vector(self, coeffs: Sequence[int]) -> RankVector:
        f = self.field
        coords = [0] * self.n
        for c, row in zip(coeffs, self.basis):
            for j, rv in enumerate(row):
                if rv:
                    coords[j] = f.add(coords[j], f.mul(c, rv))
        return RankVector(f, tuple(coords))

    def gf_q_rowspace(self) -> set[tuple[int, ...]]:
        """All GF(q)-combinations of the basis rows (q^dim row vectors)."""
        q, n = self.field.q, self.n
        out = set()
        for coeffs in itertools.product(range(q), repeat=self.dim):
            row = [0] * n
            for c, b in zip(coeffs, self.basis):
                for j, bv in enumerate(b):
                    row[j] = (row[j] + c * bv) % q
            out.add(tuple(row))
        return out


def unique_els_of(x: RankVector) -> Els:
    """The unique ELS of dimension rk(x) containing x.

    It is the GF(q^m)-row space of the expansion matrix of x: the vector
    equals sum_i alpha^i row_i, and uniqueness is a property of the rank
    metric (any two elementary bases expressing x are GF(q)-equivalent).
    """
    rows = [r for r in x.expansion_rows() if any(r)]
    return Els(x.field, x.n, _rref_generic(rows, x.field.q))


def els_enumerate(field: Field, n: int, v: int) -> Iterator[Els]:
    """All v-dimensional ELS's of GF(q^m)^n, one canonical basis each.

    Enumerates reduced-echelon matrices directly: choose pivot columns,
    then fill the free entries; yields gaussian(n, v, q) subspaces.
    """
    q = field.q
    if v == 0:
        yield Els(field, n, ())
        return
    if v > n:
        return
    for pivots in itertools.combinations(range(n), v):
        free_positions = [
            (r, c)
            for r in range(v)
            for c in range(pivots[r] + 1, n)
            if c not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free_positions)):
            rows = [[0] * n for _ in range(v)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), val in zip(free_positions, values):
                rows[r][c] = val
            yield Els(field, n, rows)


def els_complements(inner: Els, outer: Els) -> Iterator[Els]:
    """All ELS's B with inner ⊕ B = outer.

    There are q^{a(v-a)} of them (a = dim inner, v = dim outer): extend the
    inner basis to the outer one, then shear each extension row by an
    arbitrary GF(q)-combination of the inner basis.
    """
    if inner.field != outer.field or inner.n != outer.n:
        raise ValueError("subspaces live in different spaces")
    q = inner.field.q
    outer_rows = outer.gf_q_rowspace()
    if not all(tuple(r) in outer_rows for r in inner.basis):
        raise ValueError("inner subspace is not contained in the outer one")
    a, v = inner.dim, outer.dim
    # extend inner basis to a basis of the outer GF(q)-row space
    extension: list[tuple[int, ...]] = []
    current = list(inner.basis)
    for row in sorted(outer_rows, reverse=True):
        if len(current) == v:
            break
        if len(_rref_generic(current + [row], q)) > len(current):
            current.append(row)
            extension.append(row)
    assert len(current) == v
    for shears in itertools.product(
        itertools.product(range(q), repeat=a), repeat=v - a
    ):
        rows = []
        for ext_row, shear in zip(extension, shears):
            row = list(ext_row)
            for c, inner_row in zip(shear, inner.basis):
                for j, bv in enumerate(inner_row):
                    row[j] = (row[j] + c * bv) % q
            rows.append(row)
        yield Els(inner.field, inner.n, rows)


def _solve_elementary(
    rows_a: Sequence[Sequence[int]], rows_b: Sequence[Sequence[int]], x: RankVector
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Solve x = c_A . rows_a + c_B . rows_b over GF(q^m).

    The stacked rows lie in GF(q)^n and are jointly independent; complete
    them to an invertible n x n matrix over GF(q), invert over GF(q), and
    read the coefficients off x . M^{-1}.  Completion coefficients must all
    be zero, otherwise x is outside the direct sum.
    """
    field, n = x.field, x.n
    q = field.q
    stacked = [tuple(r) for r in rows_a] + [tuple(r) for r in rows_b]
    if len(_rref_generic(stacked, q)) != len(stacked):
        raise ValueError("subspaces do not form a direct sum")
    completion: list[tuple[int, ...]] = []
    for j in range(n):
        if len(stacked) + len(completion) == n:
            break
        unit = tuple(1 if i == j else 0 for i in range(n))
        if len(_rref_generic(stacked + completion + [unit], q)) > len(stacked) + len(completion):
            completion.append(unit)
    full = stacked + completion
    inv = _invert_gfq(full, q)
    # coefficients c = x . inv  (inv entries lie in GF(q) c GF(q^m))
    coeffs = []
    for col in range(n):
        acc = 0
        for i in range(n):
            entry = inv[i][col]
            if entry:
                acc = field.add(acc, field.mul(x.coords[i], entry % q))
        coeffs.append(acc)
    na = len(rows_a)
    nb = len(rows_b)
    c_a = tuple(coeffs[:na])
    c_b = tuple(coeffs[na : na + nb])
    rest = tuple(coeffs[na + nb :])
    if any(rest):
        raise ValueError("vector not contained in the direct sum")
    return c_a, c_b


def _invert_gfq(rows: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    n = len(rows)
    work = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    rank = 0
    for col in range(n):
        pivot = None
        for r in range(rank, n):
            if work[r][col] % q:
                pivot = r
                break
        if pivot is None:
            raise ValueError("matrix is singular over GF(q)")
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, q)
        work[rank] = [v * inv % q for v in work[rank]]
        for r in range(n):
            if r != rank and work[r][col] % q:
                c = work[r][col]
                work[r] = [(v - c * w) % q for v, w in zip(work[r], work[rank])]
        rank += 1
    return [row[n:] for row in work]


def project(x: RankVector, a: Els, b: Els) -> tuple[RankVector, RankVector]:
    """Split x = x_A + x_B along the direct sum A ⊕ B.

    A and B must be independent ELS's whose sum contains x; the
    decomposition is unique.
    """
    c_a, c_b = _solve_elementary(a.basis, b.basis, x)
    return a.member_vector(c_a), b.member_vector(c_b)
