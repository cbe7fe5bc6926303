"""Exact q-combinatorics of the rank metric.

All counting functions return exact Python ints: alpha(m, u) counts ordered
u-tuples of independent vectors in GF(q)^m, gaussian(n, u, q) counts
u-dimensional subspaces of GF(q)^n, num_rank_u counts vectors of given rank
weight in GF(q^m)^n and ball_volume sums them.  Ball-intersection volumes
come either from the two closed forms (radius pair (r, 1) at distance r,
and complementary radii (s, r-s) at distance r) or from a brute-force scan
of the packed space; no closed form exists in general.

The infinite product K(q) = prod_{j>=1} (1 - q^-j) that controls ball
volumes is computed by truncation with a certified tail bound.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import gf2
from .fields import Field
from .rankspace import RankVector, rank_weight

__all__ = [
    "alpha",
    "gaussian",
    "num_rank_u",
    "ball_volume",
    "volume_bounds",
    "kq_constant",
    "log_q_kq",
    "KqApprox",
    "intersection_ball_radius1",
    "intersection_complementary",
    "intersection_bruteforce",
    "intersection_at_centers",
    "canonical_rank_vector",
    "ball_enumerate",
]


def alpha(m: int, u: int, q: int) -> int:
    """Number of ordered u-tuples of linearly independent vectors in GF(q)^m.

    alpha(m, 0) = 1; alpha(m, u) = prod_{i<u} (q^m - q^i).  Zero when u > m.
    """
    if u < 0:
        raise ValueError("u must be non-negative")
    out = 1
    qm = q**m
    for i in range(u):
        out *= qm - q**i
    return out


def gaussian(n: int, u: int, q: int) -> int:
    """Gaussian binomial: the number of u-dim subspaces of GF(q)^n."""
    if u < 0 or u > n:
        return 0
    num, den = 1, 1
    for i in range(u):
        num *= q**n - q**i
        den *= q**u - q**i
    assert num % den == 0
    return num // den


def num_rank_u(q: int, m: int, n: int, u: int) -> int:
    """Number of vectors of rank weight exactly u in GF(q^m)^n."""
    if u < 0 or u > min(m, n):
        return 0
    return gaussian(n, u, q) * alpha(m, u, q)


def ball_volume(q: int, m: int, n: int, r: int) -> int:
    """Volume of a rank-radius-r ball in GF(q^m)^n (center-independent)."""
    if r < 0:
        return 0
    return sum(num_rank_u(q, m, n, u) for u in range(0, min(r, m, n) + 1))


# ----------------------------------------------------------------------
# the K_q constant and volume brackets
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class KqApprox:
    """Certified enclosure of prod_{j>=1}(1 - q^-j)."""

    q: int
    lower: Fraction
    upper: Fraction

    @property
    def value(self) -> float:
        return float((self.lower + self.upper) / 2)

    @property
    def error_bound(self) -> float:
        return float((self.upper - self.lower) / 2)


def kq_constant(q: int, precision: float = 1e-12) -> KqApprox:
    """Truncated product with a certified tail.

    Truncating after j = J leaves a factor in (1 - q^-J/(q-1), 1), so the
    partial product brackets the limit from above.
    """
    if precision <= 0:
        raise ValueError("precision must be positive")
    partial = Fraction(1)
    j = 0
    while True:
        j += 1
        partial *= 1 - Fraction(1, q**j)
        tail = Fraction(1, q**j * (q - 1))
        if partial * tail < precision and j >= 8:
            break
    return KqApprox(q=q, lower=partial * (1 - tail), upper=partial)


def log_q_kq(q: int, precision: float = 1e-8) -> tuple[float, float]:
    """Certified enclosure of log_q K_q (a negative number)."""
    import mpmath

    enc = kq_constant(q, precision=precision / 8)
    with mpmath.workdps(40):
        lo = mpmath.log(mpmath.mpf(enc.lower.numerator) / enc.lower.denominator) / mpmath.log(q)
        hi = mpmath.log(mpmath.mpf(enc.upper.numerator) / enc.upper.denominator) / mpmath.log(q)
        pad = mpmath.mpf(precision) / 8
        return float(lo - pad), float(hi + pad)


def volume_bounds(q: int, m: int, n: int, r: int) -> tuple[int, float]:
    """Bracket q^{r(m+n-r)} <= V_r < K_q^{-1} q^{r(m+n-r)}.

    The lower bound is exact; the upper bound is a certified float upper
    bound on K_q^{-1} q^{r(m+n-r)}.
    """
    if not 0 <= r <= min(m, n):
        raise ValueError(f"need 0 <= r <= min(m, n), got r={r}")
    base = q ** (r * (m + n - r))
    enc = kq_constant(q)
    upper = base / enc.lower  # K_q >= lower, so 1/K_q <= 1/lower
    return base, float(Fraction(upper.numerator, upper.denominator))


# ----------------------------------------------------------------------
# ball intersections
# ----------------------------------------------------------------------
def intersection_ball_radius1(q: int, m: int, n: int, r: int) -> int:
    """|B_r(c1) ∩ B_1(c2)| when the centers are at rank distance exactly r.

    Closed form 1 + (q^m - q^r)[r 1] + (q^r - 1)[n 1].
    """
    if not 0 <= r <= min(m, n):
        raise ValueError(f"need 0 <= r <= min(m, n), got r={r}")
    return 1 + (q**m - q**r) * gaussian(r, 1, q) + (q**r - 1) * gaussian(n, 1, q)


def intersection_complementary(q: int, m: int, n: int, r: int, s: int) -> int:
    """|B_s(c1) ∩ B_{r-s}(c2)| when the centers are at rank distance exactly r.

    Closed form q^{s(r-s)} [r s]; the intersection sits inside the unique
    r-dim elementary subspace through c2 - c1.
    """
    if not 0 <= s <= r <= min(m, n):
        raise ValueError(f"need 0 <= s <= r <= min(m, n), got r={r}, s={s}")
    return q ** (s * (r - s)) * gaussian(r, s, q)


def canonical_rank_vector(field: Field, n: int, d: int) -> RankVector:
    """The canonical rank-d vector (1, alpha, ..., alpha^(d-1), 0, ..., 0)."""
    if not 0 <= d <= min(field.m, n):
        raise ValueError(f"need 0 <= d <= min(m, n), got d={d}")
    coords = tuple(field.pow(field.alpha, i) for i in range(d)) + (0,) * (n - d)
    return RankVector(field, coords)


def intersection_bruteforce(
    q: int,
    m: int,
    n: int,
    r: int,
    s: int,
    d: int,
    *,
    cap: int | None = None,
    threads: int = 1,
) -> int:
    """|B_r(c1) ∩ B_s(c2)| for centers at rank distance d, by enumeration.

    Independent of the choice of centers; c1 = 0 and c2 = the canonical
    rank-d vector are used.  Returns 0 immediately when d > r + s.
    """
    if not 0 <= d <= min(m, n):
        raise ValueError(f"need 0 <= d <= min(m, n), got d={d}")
    if d > r + s:
        return 0
    field = Field(q, m)
    center = canonical_rank_vector(field, n, d)
    return intersection_at_centers(
        RankVector.zero(field, n), center, r, s, cap=cap, threads=threads
    )


def intersection_at_centers(
    c1: RankVector,
    c2: RankVector,
    r: int,
    s: int,
    *,
    cap: int | None = None,
    threads: int = 1,
) -> int:
    """|B_r(c1) ∩ B_s(c2)| for explicit centers (enumeration oracle)."""
    field, n = c1.field, c1.n
    size = field.order**n
    gf2.check_cap(size, cap)
    if field.q == 2:
        shift = c1.index ^ c2.index
        return gf2.intersection_count_packed(
            field.m, n, r, s, shift, cap=cap, threads=threads
        )
    count = 0
    for x in RankVector.space(field, n):
        if rank_weight(x - c1) <= r and rank_weight(x - c2) <= s:
            count += 1
    return count


def ball_enumerate(
    center: RankVector, r: int, *, cap: int | None = None
) -> Iterator[RankVector]:
    """Yield every vector within rank distance r of the center."""
    field, n = center.field, center.n
    size = field.order**n
    gf2.check_cap(size, cap)
    if field.q == 2:
        table = gf2.rank_table(field.m, n, cap)
        import numpy as np

        for i in np.flatnonzero(table <= r):
            yield RankVector.from_index(field, n, int(i) ^ center.index)
    else:
        for x in RankVector.space(field, n):
            if rank_weight(x - center) <= r:
                yield x
