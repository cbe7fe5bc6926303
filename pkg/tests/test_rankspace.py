"""Rank weight/distance, support spaces, and the elementary-subspace
calculus, checked exhaustively on GF(4)^2 and GF(8)^3."""

import itertools

import pytest

from rankcov.fields import Field
from rankcov.qcombinatorics import gaussian
from rankcov.rankspace import (
    Els,
    RankVector,
    els_complements,
    els_enumerate,
    project,
    rank_distance,
    rank_weight,
    support_space,
    unique_els_of,
)

F4 = Field(2, 2)
F8 = Field(2, 3)


def ref_rank(field: Field, coords) -> int:
    """Test-local oracle: column elimination over GF(q) on the expansion
    matrix, independent of the library's bit-packed paths."""
    q = field.q
    cols = [list(field.expand(c)) for c in coords]
    rank = 0
    m = field.m
    pivot_rows_used = set()
    for col in cols:
        col = col[:]
        # reduce against previous pivots stored implicitly via elimination
        for r, piv in pivots:
            if col[r] % q:
                f = col[r] * pow(piv[r], -1, q) % q
                col = [(x - f * y) % q for x, y in zip(col, piv)]
        for r in range(m):
            if col[r] % q:
                pivots.append((r, col))
                rank += 1
                break
    return rank


def ref_rank(field: Field, coords) -> int:  # noqa: F811 - simple rewrite
    q = field.q
    cols = [list(field.expand(c)) for c in coords]
    basis: list[list[int]] = []
    for col in cols:
        col = col[:]
        for b in basis:
            lead = next(i for i, v in enumerate(b) if v % q)
            if col[lead] % q:
                f = col[lead] * pow(b[lead], -1, q) % q
                col = [(x - f * y) % q for x, y in zip(col, b)]
        if any(v % q for v in col):
            basis.append(col)
    return len(basis)


def test_rank_weight_examples():
    assert rank_weight(RankVector.zero(F4, 3)) == 0
    assert rank_weight(RankVector(F4, (1, 2))) == 2  # (1, alpha)
    assert rank_weight(RankVector(F4, (1, 1, 2))) == 2


@pytest.mark.parametrize("field,n", [(F4, 2), (F8, 2), (F4, 3)])
def test_rank_weight_matches_oracle(field, n):
    for x in RankVector.space(field, n):
        assert rank_weight(x) == ref_rank(field, x.coords)


def test_rank_weight_oracle_gf3():
    f9 = Field(3, 2, [2, 1, 1])
    for x in RankVector.space(f9, 2):
        assert rank_weight(x) == ref_rank(f9, x.coords)


def test_metric_axioms_exhaustive_gf4_squared():
    vecs = list(RankVector.space(F4, 2))
    for x in vecs:
        for y in vecs:
            d = rank_distance(x, y)
            assert d == rank_distance(y, x)
            assert (d == 0) == (x == y)
    for x, y, z in itertools.product(vecs[:8], vecs[:8], vecs[:8]):
        assert rank_distance(x, z) <= rank_distance(x, y) + rank_distance(y, z)


def test_support_space_dimension_equals_rank():
    for x in RankVector.space(F8, 2):
        assert support_space(x).dim == rank_weight(x)


def test_rank_distance_shape_mismatch():
    with pytest.raises(ValueError):
        rank_distance(RankVector.zero(F4, 2), RankVector.zero(F4, 3))
    with pytest.raises(ValueError):
        rank_distance(RankVector.zero(F4, 2), RankVector.zero(F8, 2))


# ----------------------------------------------------------------------
# unique ELS (Lemma-1 behaviour)
# ----------------------------------------------------------------------
def test_unique_els_basic():
    v = unique_els_of(RankVector(F4, (1, 1)))
    assert v.basis == ((1, 1),)
    assert unique_els_of(RankVector.zero(F4, 2)).dim == 0


@pytest.mark.parametrize("field,n", [(F4, 2), (F8, 3)])
def test_every_vector_in_exactly_one_els_of_its_rank(field, n):
    for x in RankVector.space(field, n):
        r = rank_weight(x)
        containing = [
            v for v in els_enumerate(field, n, r) if v.contains(x)
        ]
        assert len(containing) == 1
        assert containing[0] == unique_els_of(x)
        assert unique_els_of(x).dim == r


# ----------------------------------------------------------------------
# enumeration counts
# ----------------------------------------------------------------------
def subspace_count_oracle(n: int, v: int, q: int) -> int:
    """Distinct row spaces of all v x n matrices over GF(q) of rank v."""
    from rankcov.rankspace import _rref_generic

    spaces = set()
    rows_iter = itertools.product(itertools.product(range(q), repeat=n), repeat=v)
    for rows in rows_iter:
        r = _rref_generic(rows, q)
        if len(r) == v:
            spaces.add(r)
    return len(spaces)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_els_enumerate_counts(q, n):
    field = Field(q, 1) if q == 3 else Field(2, 2)
    for v in range(0, n + 1):
        got = list(els_enumerate(field, n, v))
        assert len(got) == gaussian(n, v, q)
        assert len(set(got)) == len(got)
        if n <= 3:
            assert len(got) == subspace_count_oracle(n, v, q)


def test_els_enumerate_examples():
    assert sum(1 for _ in els_enumerate(F4, 2, 1)) == 3
    assert sum(1 for _ in els_enumerate(F4, 4, 0)) == 1
    assert sum(1 for _ in els_enumerate(F4, 4, 2)) == 35


def test_els_counts_q3_larger():
    f3 = Field(3, 1)
    for n in (4, 5):
        for v in range(n + 1):
            assert sum(1 for _ in els_enumerate(f3, n, v)) == gaussian(n, v, 3)


# ----------------------------------------------------------------------
# complements (Lemma-2 behaviour)
# ----------------------------------------------------------------------
def test_complement_counts_gf4():
    full = Els(F4, 2, [(1, 0), (0, 1)])
    for a_dim in (0, 1, 2):
        for a in els_enumerate(F4, 2, a_dim):
            comps = list(els_complements(a, full))
            assert len(comps) == 2 ** (a_dim * (2 - a_dim))
            for b in comps:
                # direct sum: dimensions add and joint basis is independent
                assert a.dim + b.dim == 2
                joint = Els(F4, 2, a.basis + b.basis)
                assert joint.dim == 2


def test_complement_total_ordered_pairs():
    # sum over a-dim subspaces A of #complements = q^{a(v-a)} [v a]
    full = Els(F8, 3, [(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    for a_dim in range(0, 4):
        total = sum(
            sum(1 for _ in els_complements(a, full))
            for a in els_enumerate(F8, 3, a_dim)
        )
        assert total == 2 ** (a_dim * (3 - a_dim)) * gaussian(3, a_dim, 2)


def test_complements_inside_smaller_els():
    outer = Els(F8, 3, [(1, 0, 0), (0, 1, 1)])
    inner = Els(F8, 3, [(1, 0, 0)])
    comps = list(els_complements(inner, outer))
    assert len(comps) == 2
    with pytest.raises(ValueError, match="not contained"):
        next(els_complements(Els(F8, 3, [(0, 1, 0)]), outer))


def test_complement_of_equal_space_is_zero():
    v = Els(F4, 2, [(1, 1)])
    comps = list(els_complements(v, v))
    assert len(comps) == 1 and comps[0].dim == 0


# ----------------------------------------------------------------------
# projections (Lemma-3/4 behaviour)
# ----------------------------------------------------------------------
def full_space_splits(field, n):
    full = Els(field, n, [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)])
    for a_dim in range(0, n + 1):
        for a in els_enumerate(field, n, a_dim):
            for b in els_complements(a, full):
                yield a, b


def test_projection_splits_and_is_unique():
    for a, b in full_space_splits(F4, 2):
        for x in RankVector.space(F4, 2):
            xa, xb = project(x, a, b)
            assert xa + xb == x
            assert a.contains(xa) and b.contains(xb)


def test_projection_of_member_is_identity():
    a = Els(F4, 2, [(1, 0)])
    b = Els(F4, 2, [(0, 1)])
    for xa in a.members():
        got_a, got_b = project(xa, a, b)
        assert got_a == xa and rank_weight(got_b) == 0


def test_full_rank_projection_ranks():
    # rk(u_A) = dim A for every full-rank u and every split of the space
    for a, b in full_space_splits(F4, 2):
        for u in RankVector.space(F4, 2):
            if rank_weight(u) != 2:
                continue
            ua, ub = project(u, a, b)
            assert rank_weight(ua) == a.dim
            assert rank_weight(ub) == b.dim


def test_projection_injective_in_the_split():
    # distinct ordered splits give distinct u_A (and distinct u_B)
    for u in RankVector.space(F4, 2):
        if rank_weight(u) != 2:
            continue
        seen_a, seen_b = {}, {}
        for a, b in full_space_splits(F4, 2):
            ua, ub = project(u, a, b)
            key = (a, b)
            assert ua not in seen_a.values() or seen_a.get(key) == ua
            seen_a[key] = ua
            seen_b[key] = ub
        assert len(set(seen_a.values())) == len(seen_a)
        assert len(set(seen_b.values())) == len(seen_b)


def test_projection_outside_sum_rejected():
    a = Els(F4, 3, [(1, 0, 0)])
    b = Els(F4, 3, [(0, 1, 0)])
    inside = RankVector(F4, (2, 3, 0))
    xa, xb = project(inside, a, b)
    assert xa + xb == inside
    outside = RankVector(F4, (0, 0, 1))
    with pytest.raises(ValueError):
        project(outside, a, b)
    overlapping = Els(F4, 3, [(1, 0, 0)])
    with pytest.raises(ValueError, match="direct sum"):
        project(inside, a, overlapping)


def test_els_canonical_form_and_hashing():
    # two generating sets of the same subspace collapse to one basis
    e1 = Els(F4, 3, [(1, 1, 0), (0, 1, 1)])
    e2 = Els(F4, 3, [(1, 0, 1), (0, 1, 1)])
    assert e1 == e2 and hash(e1) == hash(e2)
    with pytest.raises(ValueError, match="independent"):
        Els(F4, 3, [(1, 1, 0), (1, 1, 0)])
    with pytest.raises(ValueError, match="GF\\(q\\)"):
        Els(F4, 2, [(2, 0)])


def test_member_enumeration_size():
    e = Els(F8, 3, [(1, 0, 1), (0, 1, 0)])
    members = list(e.members())
    assert len(members) == 8**2
    assert len({m.index for m in members}) == 64
    assert all(rank_weight(m) <= 2 for m in members)
