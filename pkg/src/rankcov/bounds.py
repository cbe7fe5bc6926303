"""Packing and covering bounds for rank-metric codes.

Lower bounds on the minimal covering-code size K(q^m, n, rho): the sphere
covering bound, the unconditional floor of 3, the intersection-based
family (generalized, its l = 0 corollary, and the 2*rho <= n closed form),
and the excess-counting bound with its rho = n - 1 quadratic refinement.
Upper bounds: the trivial/Hamming-comparison exponent form, embedded-MRD,
the partition-optimized product form, the probabilistic bound, and the
greedy-cover (Johnson-Stein-Lovasz) bound with its loosened logarithmic
corollary.  Linear-code dimension bounds and the asymptotic exponents
round out the catalogue.

Rounding conventions (exact rational arithmetic throughout):
  * strict lower bounds  ->  floor(x) + 1
  * non-strict lower bounds K >= x  ->  ceil(x)
  * upper bounds K <= x  ->  floor(x), K being an integer count
Real-valued bounds (logarithms, harmonic numbers) are evaluated as
certified enclosures so every floor/ceil above is provably correct.

``jsl_upper`` supports two harmonic cutoffs.  The refined cutoff
min{s, j} follows the greedy analysis with the MRD-seeded first stage;
the coarse cutoff ceil(v*(Q - v)/Q) tracks only the trivial column count
and is the evaluation the published reference tables used.  Both are
valid upper bounds; refined is never weaker.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

import mpmath

from . import gf2
from .qcombinatorics import (
    ball_volume,
    gaussian,
    intersection_bruteforce,
    kq_constant,
    num_rank_u,
)

__all__ = [
    "packing_max_cardinality",
    "sphere_covering_lower",
    "floor3_lower",
    "cohen_l0_lower",
    "cohen_halfspace_lower",
    "cohen_generalized_lower",
    "excess_epsilon",
    "excess_lower",
    "excess_quadratic_lower",
    "superadditive_upper",
    "best_partition",
    "mrd_embedding_upper",
    "trivial_upper",
    "probabilistic_upper",
    "jsl_upper",
    "jsl_loose_upper",
    "linear_dimension_bounds",
    "linear_dimension_cohen_lower",
    "linear_dimension_exact",
    "asymptotic_exponents",
    "log_q_kq_enclosure",
    "BoundEntry",
    "BoundReport",
    "BoundOptions",
    "best_bounds",
    "LOWER_BOUND_LETTERS",
    "UPPER_BOUND_LETTERS",
]


def _ceil(x: Fraction | int) -> int:
    if isinstance(x, int):
        return x
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction | int) -> int:
    if isinstance(x, int):
        return x
    return x.numerator // x.denominator


def _check_params(q: int, m: int, n: int, rho: int) -> None:
    if not (0 < rho < n <= m):
        raise ValueError(
            f"parameters must satisfy 0 < rho < n <= m (after transposition); "
            f"got q={q}, m={m}, n={n}, rho={rho}"
        )


# ----------------------------------------------------------------------
# packing
# ----------------------------------------------------------------------
def packing_max_cardinality(q: int, m: int, n: int, d: int) -> int:
    """Largest code size with minimum rank distance d (Singleton bound).

    min{q^{m(n-d+1)}, q^{n(m-d+1)}}, attained by MRD codes; 1 when
    d > min(n, m).
    """
    if d < 1:
        raise ValueError("minimum distance must be >= 1")
    if d > min(n, m):
        return 1
    return min(q ** (m * (n - d + 1)), q ** (n * (m - d + 1)))


# ----------------------------------------------------------------------
# lower bounds
# ----------------------------------------------------------------------
def sphere_covering_lower(q: int, m: int, n: int, rho: int) -> int:
    """Strict sphere covering bound: K > q^{mn} / v(rho).

    Strictness holds because nontrivial perfect rank-metric codes do not
    exist, so the integer bound is floor + 1 even on exact division.
    """
    _check_params(q, m, n, rho)
    return q ** (m * n) // ball_volume(q, m, n, rho) + 1


def floor3_lower(q: int, m: int, n: int, rho: int) -> int:
    """No two balls of radius rho < n cover the space: K >= 3."""
    _check_params(q, m, n, rho)
    return 3


def _intersection_value(
    q: int,
    m: int,
    n: int,
    rho: int,
    d: int,
    *,
    allow_bruteforce: bool = True,
    cap: int | None = None,
) -> int | None:
    """I(rho, d) = |B_rho ∩ B_rho| at center distance d, or None if
    out of reach: zero beyond 2*rho, closed form at d = 2*rho, brute
    force inside the enumeration cap otherwise."""
    if d > 2 * rho:
        return 0
    if d == 2 * rho:
        return q ** (rho * rho) * gaussian(2 * rho, rho, q)
    if not allow_bruteforce:
        return None
    limit = gf2.DEFAULT_CAP if cap is None else cap
    if (q**m) ** n > limit:
        return None
    return intersection_bruteforce(q, m, n, rho, rho, d, cap=cap)


def cohen_l0_lower(
    q: int, m: int, n: int, rho: int, *, allow_bruteforce: bool = True, cap: int | None = None
) -> int | None:
    """Two-ball overlap bound: K >= (q^{mn} - I(rho,n)) / (v(rho) - I(rho,n)).

    Needs I(rho, n); returns None when that value is out of reach.
    """
    _check_params(q, m, n, rho)
    i_n = _intersection_value(q, m, n, rho, n, allow_bruteforce=allow_bruteforce, cap=cap)
    if i_n is None:
        return None
    v = ball_volume(q, m, n, rho)
    return _ceil(Fraction(q ** (m * n) - i_n, v - i_n))


def cohen_halfspace_lower(q: int, m: int, n: int, rho: int) -> int | None:
    """Closed-form overlap bound for 2*rho <= n.

    Uses I(rho, 2*rho) = q^{rho^2} [2rho rho] together with the packing
    guarantee K >= q^{m(n-2rho)}:
    K >= (q^{mn} - q^{m(n-2rho)+rho^2} [2rho rho]) / (v(rho) - q^{rho^2} [2rho rho]).
    """
    _check_params(q, m, n, rho)
    if 2 * rho > n:
        return None
    i2 = q ** (rho * rho) * gaussian(2 * rho, rho, q)
    v = ball_volume(q, m, n, rho)
    num = q ** (m * n) - q ** (m * (n - 2 * rho)) * i2
    return _ceil(Fraction(num, v - i2))


def cohen_generalized_lower(
    q: int, m: int, n: int, rho: int, *, allow_bruteforce: bool = True, cap: int | None = None
) -> tuple[int | None, int | None]:
    """Staged overlap bound with self-certifying level selection.

    Level l charges each codeword past the q^{lm}-th with the overlap
    I(rho, n-l) it must waste:

        K >= [q^{mn} - q^{lm} I(rho, n-l)
              + sum_{a=max(1, n-2rho+1)}^{l} (q^{am} - q^{(a-1)m}) I(rho, n-a+1)]
             / [v(rho) - I(rho, n-l)]

    valid whenever q^{lm} <= K.  The level is bootstrapped: l = n - 2*rho
    is always admissible (packing gives K >= q^{m(n-2rho)}), and level
    l+1 is admitted once the bound so far certifies K >= q^{(l+1)m}.
    Levels whose I values are unavailable are dropped, which only weakens
    the result.  Returns (bound, level_used); (None, None) if even the
    seed level is unavailable.
    """
    _check_params(q, m, n, rho)
    Q = q ** (m * n)
    v = ball_volume(q, m, n, rho)

    def rhs(l: int) -> Fraction | None:
        i_nl = _intersection_value(q, m, n, rho, n - l, allow_bruteforce=allow_bruteforce, cap=cap)
        if i_nl is None:
            return None
        num = Q - q ** (l * m) * i_nl
        for a in range(max(1, n - 2 * rho + 1), l + 1):
            i_a = _intersection_value(
                q, m, n, rho, n - a + 1, allow_bruteforce=allow_bruteforce, cap=cap
            )
            if i_a is None:
                return None
            num += (q ** (a * m) - q ** ((a - 1) * m)) * i_a
        return Fraction(num, v - i_nl)

    best: int | None = None
    best_l: int | None = None
    l = max(0, n - 2 * rho)
    while True:
        val = rhs(l)
        if val is None:
            break
        iv = _ceil(val)
        if best is None or iv > best:
            best, best_l = iv, l
        if best is not None and q ** ((l + 1) * m) <= best:
            l += 1
        else:
            break
    return best, best_l


def excess_epsilon(q: int, m: int, n: int, rho: int) -> int:
    """Minimum excess forced on the radius-1 ball around a once-covered
    vector at distance exactly rho from its unique covering codeword.

    eps = ceil[(q^m - q^rho)([n 1] - [rho 1]) / (q^rho [rho+1 1])] * q^rho [rho+1 1]
          + (q^m - q^rho)([rho 1] - [n 1])
    """
    _check_params(q, m, n, rho)
    g_n = gaussian(n, 1, q)
    g_r = gaussian(rho, 1, q)
    g_r1 = gaussian(rho + 1, 1, q)
    modulus = q**rho * g_r1
    deficit = (q**m - q**rho) * (g_n - g_r)
    return -(-deficit // modulus) * modulus - deficit


def excess_lower(q: int, m: int, n: int, rho: int) -> int | None:
    """Excess-counting bound: K >= q^{mn} / (v(rho) - (eps/delta) N_rho),
    delta = v(1) - q^{rho-1} [rho 1] - 1 + 2 eps.  None when eps = 0.
    """
    _check_params(q, m, n, rho)
    eps = excess_epsilon(q, m, n, rho)
    if eps <= 0:
        return None
    delta = (
        ball_volume(q, m, n, 1) - q ** (rho - 1) * gaussian(rho, 1, q) - 1 + 2 * eps
    )
    denom = Fraction(ball_volume(q, m, n, rho)) - Fraction(eps, delta) * num_rank_u(
        q, m, n, rho
    )
    return _ceil(Fraction(q ** (m * n)) / denom)


def excess_quadratic_lower(q: int, m: int, n: int) -> int:
    """rho = n-1 refinement: the exact excess phi turns the counting
    argument into a quadratic constraint a K^2 - b K + c >= 0.

    Returns the smallest integer satisfying the quadratic that also meets
    the unconditional lower bounds (sphere covering and K >= 3), scanning
    upward from the larger real root.
    """
    if n < 2:
        raise ValueError("need n >= 2 for the rho = n-1 bound")
    rho = n - 1
    _check_params(q, m, n, rho)
    al = q ** (n - 1) * gaussian(n, 1, q)
    be = q ** (n - 1) * (q**m + gaussian(n - 1, 1, q))
    v1 = ball_volume(q, m, n, 1)
    vn1 = ball_volume(q, m, n, n - 1)
    vn2 = ball_volume(q, m, n, n - 2)
    Q = q ** (m * n)
    a = al * (vn1 + vn2)
    b = vn1 * (q ** (n - 2) * gaussian(n - 1, 1, q) - v1 + be + 1) + 2 * al * Q + be * vn2
    c = Q * (2 * be + 1 + q ** (n - 2) * gaussian(n - 1, 1, q) - v1)

    def quad(k: int) -> int:
        return a * k * k - b * k + c

    base = max(sphere_covering_lower(q, m, n, rho), 3)
    if quad(base) >= 0:
        return base
    # base sits between the roots; the first valid integer is at the
    # larger root, located by upward scan from a float estimate
    disc = b * b - 4 * a * c
    assert disc > 0
    k = max(base, int((b + mpmath.sqrt(disc)) / (2 * a)) - 2)
    while quad(k) < 0:
        k += 1
    return k


# ----------------------------------------------------------------------
# upper bounds
# ----------------------------------------------------------------------
def trivial_upper(q: int, m: int, n: int, rho: int) -> int:
    """K <= q^{m(n-rho)}: an (n, n-rho) linear code covers within rho.

    The same value also bounds K through the Hamming-metric comparison
    (any Hamming covering code covers at least as well in rank metric).
    """
    _check_params(q, m, n, rho)
    return q ** (m * (n - rho))


def mrd_embedding_upper(q: int, m: int, n: int, rho: int) -> int:
    """K <= q^{max(m-rho, n)(n-rho)}: embed an (n, n-rho) MRD code from a
    field just large enough, preserving ranks and covering radius."""
    _check_params(q, m, n, rho)
    return q ** (max(m - rho, n) * (n - rho))


@lru_cache(maxsize=None)
def _best_partition_gain(m: int, n: int, rho: int) -> tuple[int, tuple[tuple[int, int], ...]] | None:
    """Maximize sum rho_i (n_i - rho_i) over partitions of (n, rho) into
    blocks with 1 <= n_i, 0 <= rho_i <= n_i, n_i + rho_i <= m."""
    if n == 0:
        return (0, ()) if rho == 0 else None
    best: tuple[int, tuple[tuple[int, int], ...]] | None = None
    for n1 in range(1, n + 1):
        for r1 in range(0, min(n1, rho) + 1):
            if n1 + r1 > m:
                continue
            rest = _best_partition_gain(m, n - n1, rho - r1)
            if rest is None:
                continue
            val = r1 * (n1 - r1) + rest[0]
            if best is None or val > best[0]:
                best = (val, ((n1, r1),) + rest[1])
    return best


def best_partition(q: int, m: int, n: int, rho: int) -> tuple[tuple[int, int], ...]:
    """A partition attaining the minimum in superadditive_upper."""
    _check_params(q, m, n, rho)
    got = _best_partition_gain(m, n, rho)
    if got is None:
        raise ValueError("no feasible partition")
    return got[1]


def superadditive_upper(
    q: int,
    m: int,
    n: int,
    rho: int,
    partition: Sequence[tuple[int, int]] | None = None,
) -> int:
    """Product-code bound K <= q^{m(n-rho) - sum_i rho_i (n_i - rho_i)}.

    Splitting the coordinates as n = sum n_i with radii rho_i and covering
    each block by an embedded MRD code multiplies the block bounds.  With
    partition omitted the exponent is minimized exactly over all feasible
    partitions (n <= 12 guard).
    """
    _check_params(q, m, n, rho)
    if partition is None:
        if n > 12:
            raise ValueError("partition search is guarded to n <= 12; pass one explicitly")
        got = _best_partition_gain(m, n, rho)
        if got is None:
            raise ValueError("no feasible partition")
        gain = got[0]
    else:
        if sum(b[0] for b in partition) != n or sum(b[1] for b in partition) != rho:
            raise ValueError("partition must split n and rho exactly")
        for ni, ri in partition:
            if not (0 < ni and 0 <= ri <= ni and ni + ri <= m):
                raise ValueError(f"infeasible block (n_i, rho_i) = ({ni}, {ri})")
        gain = sum(ri * (ni - ri) for ni, ri in partition)
    return q ** (m * (n - rho) - gain)


def _certified_round(
    value: Callable[[], tuple[mpmath.mpf, mpmath.mpf]],
    mode: str = "floor",
    max_dps: int = 1300,
) -> int:
    """Floor or ceiling of an interval-valued quantity, escalating
    precision until the enclosure pins a single integer."""
    rnd = mpmath.floor if mode == "floor" else mpmath.ceil
    dps = 60
    while True:
        with mpmath.workdps(dps):
            lo, hi = value()
            rlo, rhi = int(rnd(lo)), int(rnd(hi))
        if rlo == rhi:
            return rlo
        if dps >= max_dps:
            raise ArithmeticError(f"cannot certify {mode} at 4096-bit precision; exact integer hit?")
        dps *= 4


def probabilistic_upper(q: int, m: int, n: int, rho: int) -> int:
    """Random-code bound: K <= 1 / (1 - log_{q^{mn}}(q^{mn} - v(rho))) + 1.

    Evaluated as floor(-1 / log_Q(1 - v/Q)) + 1, the code size for which
    the expected number of uncovered vectors drops below one.
    """
    _check_params(q, m, n, rho)
    v = ball_volume(q, m, n, rho)
    Q = q ** (m * n)

    def value() -> tuple[mpmath.mpf, mpmath.mpf]:
        x = mpmath.mpf(Q - v) / Q
        t = -mpmath.log(Q) / mpmath.log(x)
        pad = t * mpmath.mpf(2) ** (10 - mpmath.mp.prec)
        return t - pad, t + pad

    return _certified_round(value, "floor") + 1


def _harmonic_enclosure(k: int) -> tuple[mpmath.mpf, mpmath.mpf]:
    """Certified (lo, hi) on the k-th harmonic number at working precision.

    Exact rational summation for small k; Euler-Maclaurin with an explicit
    remainder sign beyond: H_k = ln k + gamma + 1/2k - 1/12k^2 + 1/120k^4 - r,
    0 < r < 1/(252 k^6).
    """
    if k < 100:
        h = Fraction(0)
        for i in range(1, k + 1):
            h += Fraction(1, i)
        x = mpmath.mpf(h.numerator) / h.denominator
        pad = x * mpmath.mpf(2) ** (8 - mpmath.mp.prec)
        return x - pad, x + pad
    kk = mpmath.mpf(k)
    hi = mpmath.log(kk) + mpmath.euler + 1 / (2 * kk) - 1 / (12 * kk**2) + 1 / (120 * kk**4)
    lo = hi - 1 / (252 * kk**6)
    pad = hi * mpmath.mpf(2) ** (10 - mpmath.mp.prec)
    return lo - pad, hi + pad


def _jsl_cutoffs(q: int, m: int, n: int, rho: int) -> tuple[int, int, int, int]:
    """(k_v, j, s, coarse_j) ingredients of the greedy-cover bound."""
    Q = q ** (m * n)
    v = ball_volume(q, m, n, rho)
    a = min(n, 2 * rho)
    k_v = Q - v * q ** (m * (n - a))
    j = _ceil(Fraction(v * k_v, Q))
    s = v - sum(q ** (i * (a - i)) * gaussian(a, i, q) for i in range(a - rho, rho + 1))
    coarse_j = _ceil(Fraction(v * (Q - v), Q))
    return k_v, j, s, coarse_j


def jsl_upper(q: int, m: int, n: int, rho: int, *, cutoff: str = "published") -> int:
    """Greedy-cover bound K <= k_v (1/t - 1/v) + (q^{mn}/v) H_t.

    Ingredients (a = min(n, 2 rho)): k_v = q^{mn} - v q^{m(n-a)} counts
    rows left uncovered by the MRD first stage, s = v - sum q^{i(a-i)}[a i]
    bounds the column weight after it, and j = ceil(v k_v / q^{mn}) is
    where the per-stage row bound overtakes k_v.

    cutoff="refined" evaluates at t = min(s, j), the tightest form.
    cutoff="published" evaluates at t = ceil(v (q^{mn} - v) / q^{mn}),
    the coarse column count the published reference tables were computed
    with; it never falls below j, so the bound stays valid, only weaker.
    """
    _check_params(q, m, n, rho)
    Q = q ** (m * n)
    v = ball_volume(q, m, n, rho)
    k_v, j, s, coarse_j = _jsl_cutoffs(q, m, n, rho)
    assert s >= 1
    if cutoff == "refined":
        t = min(s, j)
    elif cutoff == "published":
        t = coarse_j
        if t < min(s, j):  # never happens (coarse_j >= j); guard the claim
            raise ArithmeticError("coarse cutoff fell below the certified one")
    else:
        raise ValueError(f"unknown cutoff {cutoff!r}")
    lin = Fraction(k_v) * (Fraction(1, t) - Fraction(1, v))

    def value() -> tuple[mpmath.mpf, mpmath.mpf]:
        hlo, hhi = _harmonic_enclosure(t)
        base = mpmath.mpf(lin.numerator) / lin.denominator
        qv = mpmath.mpf(Q) / v
        return base + qv * hlo, base + qv * hhi

    return _certified_round(value, "floor")


def jsl_loose_upper(q: int, m: int, n: int, rho: int) -> int:
    """Logarithmic form: K <= (q^{mn}/v)(ln v + gamma + 1/(2v + 1/3))."""
    _check_params(q, m, n, rho)
    Q = q ** (m * n)
    v = ball_volume(q, m, n, rho)

    def value() -> tuple[mpmath.mpf, mpmath.mpf]:
        x = (mpmath.mpf(Q) / v) * (
            mpmath.log(v) + mpmath.euler + 1 / (2 * mpmath.mpf(v) + mpmath.mpf(1) / 3)
        )
        pad = x * mpmath.mpf(2) ** (10 - mpmath.mp.prec)
        return x - pad, x + pad

    # the expression itself is the stated bound; ceiling keeps it an
    # integer without ever tightening beyond what was proved
    return _certified_round(value, "ceil")


# ----------------------------------------------------------------------
# linear-code dimension bounds
# ----------------------------------------------------------------------
def log_q_kq_enclosure(q: int) -> tuple[Fraction, Fraction]:
    """Certified rational enclosure of log_q K_q (negative)."""
    enc = kq_constant(q, precision=Fraction(1, 10**9))
    with mpmath.workdps(50):
        lo = mpmath.log(mpmath.mpf(enc.lower.numerator) / enc.lower.denominator) / mpmath.log(q)
        hi = mpmath.log(mpmath.mpf(enc.upper.numerator) / enc.upper.denominator) / mpmath.log(q)
        pad = mpmath.mpf(10) ** -9
        flo = Fraction(str(mpmath.nstr(lo - pad, 15)))
        fhi = Fraction(str(mpmath.nstr(hi + pad, 15)))
    return flo, fhi


def linear_dimension_bounds(q: int, m: int, n: int, rho: int) -> tuple[int, int]:
    """Dimension window for an (n, k) linear code with covering radius rho:

        n - rho - (rho(n - rho) - log_q K_q)/m  <  k  <=  n - rho.

    The lower end is rounded conservatively (never overclaimed) using the
    certified enclosure of log_q K_q.
    """
    _check_params(q, m, n, rho)
    lo_log, hi_log = log_q_kq_enclosure(q)
    expr_lo = n - rho - Fraction(rho * (n - rho) - lo_log, m)
    expr_hi = n - rho - Fraction(rho * (n - rho) - hi_log, m)
    k_lo = _floor(expr_lo) + 1
    if _floor(expr_hi) != _floor(expr_lo):
        k_lo = _floor(expr_lo) + 1  # conservative side of the enclosure
    return max(k_lo, 0), n - rho


def linear_dimension_cohen_lower(q: int, m: int, n: int, rho: int) -> int | None:
    """Smallest k with q^{mk} at least the closed-form overlap bound:
    the linear-code adaptation of cohen_halfspace_lower (2*rho <= n)."""
    _check_params(q, m, n, rho)
    if 2 * rho > n:
        return None
    i2 = q ** (rho * rho) * gaussian(2 * rho, rho, q)
    v = ball_volume(q, m, n, rho)
    bound = Fraction(q ** (m * n) - q ** (m * (n - 2 * rho)) * i2, v - i2)
    k = 0
    while Fraction(q ** (m * k)) < bound:
        k += 1
    return k


def linear_dimension_exact(
    q: int, m: int, n: int, rho: int, code_class: str = "any"
) -> int | None:
    """k = n - rho whenever one of the exactness conditions holds:
    rho in {0, 1, n-1, n}, or rho(n - rho) <= m + log_q K_q, or the code
    is a generalized Gabidulin code or an elementary subspace.  Returns
    None when no condition applies.
    """
    if code_class not in ("any", "gabidulin", "els"):
        raise ValueError(f"unknown code class {code_class!r}")
    if rho in (0, n):
        return n - rho
    _check_params(q, m, n, rho)
    if rho in (1, n - 1):
        return n - rho
    if code_class in ("gabidulin", "els"):
        return n - rho
    lo_log, hi_log = log_q_kq_enclosure(q)
    if Fraction(rho * (n - rho)) <= m + lo_log:
        return n - rho
    if Fraction(rho * (n - rho)) <= m + hi_log:
        raise ArithmeticError("condition undecidable at current K_q precision")
    return None


# ----------------------------------------------------------------------
# asymptotics
# ----------------------------------------------------------------------
def asymptotic_exponents(b: float, x: float, kind: str) -> float:
    """Limit exponents for n -> infinity with n/m -> b.

    kind="volume": lim log_{q^{mn}} V_{floor(delta n)} = delta (1 + b - b delta),
    for 0 <= delta <= min(1, 1/b).
    kind="covering": the minimum code rate k(r) = (1 - r)(1 - b r) for
    relative covering radius r in [0, 1].
    """
    if b <= 0:
        raise ValueError("aspect ratio b must be positive")
    if kind == "volume":
        if not 0 <= x <= min(1.0, 1.0 / b):
            raise ValueError("delta out of range [0, min(1, 1/b)]")
        return x * (1 + b - b * x)
    if kind == "covering":
        if not 0 <= x <= 1:
            raise ValueError("relative radius out of range [0, 1]")
        return (1 - x) * (1 - b * x)
    raise ValueError(f"unknown kind {kind!r}")


# ----------------------------------------------------------------------
# combined reports
# ----------------------------------------------------------------------
LOWER_BOUND_LETTERS = {
    "sphere_covering": "a",
    "floor3": "b",
    "cohen_generalized": "c",
    "cohen_l0": "d",
    "cohen_halfspace": "e",
    "excess": "f",
    "exhaustive_search": "g",
}

UPPER_BOUND_LETTERS = {
    "trivial_linear": "A",
    "mrd_embedding": "B",
    "superadditive": "C",
    "probabilistic": "D",
    "jsl": "E",
    "jsl_construction": "F",
    "local_search": "G",
    "explicit_linear": "H",
}


@dataclass
class BoundEntry:
    name: str
    letter: str
    kind: str  # "lower" | "upper"
    value: int | None
    applicable: bool
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "letter": self.letter,
            "kind": self.kind,
            "value": self.value,
            "applicable": self.applicable,
            "note": self.note,
        }


@dataclass
class BoundReport:
    q: int
    m: int
    n: int
    rho: int
    transposed: bool
    entries: list[BoundEntry] = field(default_factory=list)

    @property
    def best_lower(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "lower" and e.applicable]
        return max(vals) if vals else None

    @property
    def best_upper(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "upper" and e.applicable]
        return min(vals) if vals else None

    def best_letters(self) -> tuple[str, str]:
        lo, hi = self.best_lower, self.best_upper
        llet = "".join(
            sorted({e.letter for e in self.entries if e.kind == "lower" and e.applicable and e.value == lo})
        )
        ulet = "".join(
            sorted({e.letter for e in self.entries if e.kind == "upper" and e.applicable and e.value == hi})
        )
        return llet, ulet

    def entry(self, name: str) -> BoundEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {
            "params": {"q": self.q, "m": self.m, "n": self.n, "rho": self.rho},
            "transposed": self.transposed,
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
            "entries": [e.to_dict() for e in self.entries],
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    def to_text(self) -> str:
        lines = [
            f"K(q={self.q}, m={self.m}, n={self.n}, rho={self.rho})"
            + ("  [transposed to n <= m]" if self.transposed else "")
        ]
        for e in self.entries:
            tag = f"({e.letter})" if e.letter else "   "
            if e.applicable:
                lines.append(f"  {e.kind:5} {tag} {e.name:20} {e.value}" + (f"   {e.note}" if e.note else ""))
            else:
                lines.append(f"  {e.kind:5} {tag} {e.name:20} not applicable" + (f"   {e.note}" if e.note else ""))
        llet, ulet = self.best_letters()
        lines.append(f"  best: {self.best_lower} ({llet})  --  {self.best_upper} ({ulet})")
        return "\n".join(lines)


@dataclass
class BoundOptions:
    """Switches for best_bounds: brute-force intersections, enumeration
    cap, the published-vs-refined greedy cutoff, registered explicit
    codes, and lifting them along (n, rho) -> (n+1, rho+1)/(n+1, rho)."""

    allow_bruteforce_intersections: bool = True
    cap: int | None = None
    jsl_cutoff: str = "published"
    use_known_codes: bool = True
    threads: int = 1


def best_bounds(
    q: int, m: int, n: int, rho: int, options: BoundOptions | None = None
) -> BoundReport:
    """Evaluate every applicable bound and combine the best pair.

    Parameters are normalized by transposition so that n <= m (the
    covering problem is invariant); rho = 0 and rho >= n are degenerate
    and reported directly.
    """
    opts = options or BoundOptions()
    transposed = False
    if n > m:
        m, n = n, m
        transposed = True
    report = BoundReport(q=q, m=m, n=n, rho=rho, transposed=transposed)
    if rho >= n:
        report.entries.append(BoundEntry("degenerate", "", "lower", 1, True, "rho >= n"))
        report.entries.append(BoundEntry("degenerate_u", "", "upper", 1, True, "rho >= n"))
        return report
    if rho == 0:
        full = q ** (m * n)
        report.entries.append(BoundEntry("degenerate", "", "lower", full, True, "rho = 0"))
        report.entries.append(BoundEntry("degenerate_u", "", "upper", full, True, "rho = 0"))
        return report

    def add(name, kind, value, note=""):
        letters = LOWER_BOUND_LETTERS if kind == "lower" else UPPER_BOUND_LETTERS
        report.entries.append(
            BoundEntry(name, letters.get(name, ""), kind, value, value is not None, note)
        )

    add("sphere_covering", "lower", sphere_covering_lower(q, m, n, rho))
    add("floor3", "lower", floor3_lower(q, m, n, rho))
    cg, cg_l = cohen_generalized_lower(
        q, m, n, rho, allow_bruteforce=opts.allow_bruteforce_intersections, cap=opts.cap
    )
    add("cohen_generalized", "lower", cg, note=f"level l={cg_l}" if cg is not None else "no reachable level")
    add(
        "cohen_l0",
        "lower",
        cohen_l0_lower(q, m, n, rho, allow_bruteforce=opts.allow_bruteforce_intersections, cap=opts.cap),
    )
    add("cohen_halfspace", "lower", cohen_halfspace_lower(q, m, n, rho))
    add("excess", "lower", excess_lower(q, m, n, rho), note="" if excess_epsilon(q, m, n, rho) else "eps = 0")

    add("trivial_linear", "upper", trivial_upper(q, m, n, rho), note="also the Hamming comparison")
    add("mrd_embedding", "upper", mrd_embedding_upper(q, m, n, rho))
    add("superadditive", "upper", superadditive_upper(q, m, n, rho))
    add("probabilistic", "upper", probabilistic_upper(q, m, n, rho))
    add("jsl", "upper", jsl_upper(q, m, n, rho, cutoff=opts.jsl_cutoff))

    if opts.use_known_codes:
        from .codes import known_code_upper_bounds

        for value, letter, note in known_code_upper_bounds(q, m, n, rho):
            report.entries.append(BoundEntry("known_code", letter, "upper", value, True, note))

    lo, hi = report.best_lower, report.best_upper
    assert lo is None or hi is None or lo <= hi, f"inconsistent bounds at {(q, m, n, rho)}"
    return report
