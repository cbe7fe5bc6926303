"""Code objects, constructions, and exact verification.

Constructions: generalized Gabidulin codes (generator rows are q^{si}-th
Frobenius powers of independent evaluation points), MRD codes for every
parameter set (Gabidulin for n <= m, transposed Gabidulin for n > m,
cartesian powers for n = l*m), the rank-preserving embedding into a larger
extension field, and decoding of the skip-vector interchange format.

Verification: exact covering radius and minimum rank distance by
full-space scans (bit-packed for q = 2), with enumeration caps.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from importlib import resources
from typing import Iterator, Sequence

from . import gf2
from .fields import Field
from .rankspace import RankVector, rank_distance, rank_weight

__all__ = [
    "Code",
    "gabidulin_generator",
    "mrd_construct",
    "cartesian_power",
    "transpose_code",
    "field_embed",
    "covering_radius",
    "min_rank_distance",
    "vector_index",
    "index_vector",
    "skip_vector_encode",
    "skip_vector_decode",
    "skip_vector_dumps",
    "skip_vector_loads",
    "known_codes",
    "known_code_upper_bounds",
    "cartesian_gabidulin_covering_radius",
]


@dataclass(frozen=True)
class Code:
    """A rank-metric code: explicit word set, optionally with a generator.

    ``generator`` rows (tuples of field ints) witness GF(q^m)-linearity;
    explicit-set codes leave it None.  Codewords are stored as sorted
    packed indices, which keeps equality, hashing and the scan kernels
    cheap.
    """

    field: Field
    n: int
    word_indices: tuple[int, ...]
    generator: tuple[tuple[int, ...], ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "word_indices", tuple(sorted(set(self.word_indices))))
        space = self.field.order**self.n
        if self.word_indices and not (0 <= self.word_indices[0] and self.word_indices[-1] < space):
            raise ValueError("codeword index out of range")

    @staticmethod
    def from_words(field: Field, words: Sequence[RankVector]) -> "Code":
        if not words:
            raise ValueError("a code needs at least one codeword")
        n = words[0].n
        return Code(field, n, tuple(w.index for w in words))

    @staticmethod
    def linear(field: Field, generator: Sequence[Sequence[int]]) -> "Code":
        """Span of the generator rows over GF(q^m) (rows need not be
        independent; duplicates collapse)."""
        gen = tuple(tuple(row) for row in generator)
        if not gen:
            raise ValueError("empty generator")
        n = len(gen[0])
        words = set()
        for coeffs in itertools.product(range(field.order), repeat=len(gen)):
            coords = [0] * n
            for c, row in zip(coeffs, gen):
                if c:
                    for j, g in enumerate(row):
                        if g:
                            coords[j] = field.add(coords[j], field.mul(c, g))
            words.add(RankVector(field, tuple(coords)).index)
        return Code(field, n, tuple(words), generator=gen)

    @property
    def size(self) -> int:
        return len(self.word_indices)

    @property
    def is_linear(self) -> bool:
        return self.generator is not None

    @property
    def dimension(self) -> int | None:
        """log_{q^m} |C| for linear codes."""
        if self.generator is None:
            return None
        k = 0
        while self.field.order**k < self.size:
            k += 1
        assert self.field.order**k == self.size
        return k

    def words(self) -> Iterator[RankVector]:
        for i in self.word_indices:
            yield RankVector.from_index(self.field, self.n, i)

    def contains(self, x: RankVector) -> bool:
        return x.index in set(self.word_indices)

    def __repr__(self) -> str:
        kind = "linear" if self.is_linear else "set"
        return (
            f"Code(GF({self.field.q}^{self.field.m})^{self.n}, |C|={self.size}, {kind})"
        )


# ----------------------------------------------------------------------
# constructions
# ----------------------------------------------------------------------
def gabidulin_generator(
    field: Field, n: int, k: int, s: int = 1, points: Sequence[int] | None = None
) -> Code:
    """Generalized Gabidulin code: generator rows (g_j^{[i]}), [i] = q^{si}.

    Needs n <= m, gcd(s, m) = 1, and evaluation points g_0..g_{n-1}
    linearly independent over GF(q); default points are 1, alpha, ...,
    alpha^{n-1}.  The result is an (n, k) linear MRD code with minimum
    rank distance n - k + 1.
    """
    m = field.m
    if not 0 <= k <= n <= m:
        raise ValueError(f"need 0 <= k <= n <= m, got n={n}, k={k}, m={m}")
    from math import gcd

    if gcd(s, m) != 1:
        raise ValueError(f"Frobenius stride s={s} must be coprime to m={m}")
    if points is None:
        points = [field.pow(field.alpha, j) for j in range(n)]
    points = list(points)
    if len(points) != n:
        raise ValueError("need n evaluation points")
    if rank_weight(RankVector(field, tuple(points))) != n:
        raise ValueError("evaluation points must be independent over GF(q)")
    if k == 0:
        return Code(field, n, (0,), generator=())
    rows = [
        tuple(field.frobenius(g, (s * i) % m) for g in points) for i in range(k)
    ]
    return Code.linear(field, rows)


def cartesian_power(code: Code, l: int) -> Code:
    """l-fold cartesian product; generator becomes block-diagonal."""
    if l < 1:
        raise ValueError("need l >= 1")
    field, n = code.field, code.n
    words = []
    for combo in itertools.product(code.word_indices, repeat=l):
        idx = 0
        for w in combo:
            idx = idx * field.order**n + w
        words.append(idx)
    gen = None
    if code.generator is not None:
        k = len(code.generator)
        gen = tuple(
            tuple(
                code.generator[r][j - b * n] if b * n <= j < (b + 1) * n else 0
                for j in range(l * n)
            )
            for b in range(l)
            for r in range(k)
        )
    return Code(field, n * l, tuple(words), generator=gen)


def transpose_code(code: Code, target_field: Field | None = None) -> Code:
    """Transpose each codeword's m x n expansion matrix, reinterpreting it
    over GF(q^n) with length m.  An isometry of the ambient spaces, so
    rank weights and the covering radius are preserved; linearity over
    the new field generally is not.
    """
    field, n = code.field, code.n
    m = field.m
    target = target_field or Field(field.q, n)
    if target.q != field.q or target.m != n:
        raise ValueError(f"target field must be GF({field.q}^{n})")
    words = []
    for w in code.words():
        cols = w.expansion_columns()  # n columns of length m
        new_coords = tuple(
            target.combine(tuple(cols[j][i] for j in range(n))) for i in range(m)
        )
        words.append(RankVector(target, new_coords).index)
    return Code(target, m, tuple(words))


def mrd_construct(q: int, m: int, n: int, d: int) -> Code:
    """An MRD code for any parameter set: size = packing_max_cardinality.

    n <= m: generalized Gabidulin directly.  n = l*m: cartesian power of
    an (m, k) Gabidulin code.  Other n > m: transpose of a Gabidulin code
    of length m over GF(q^n) (an explicit, generally nonlinear set).
    d > min(n, m) degenerates to the single zero word.
    """
    if d > min(n, m):
        return Code(Field(q, m), n, (0,), generator=())
    field = Field(q, m)
    if n <= m:
        return gabidulin_generator(field, n, n - d + 1)
    if n % m == 0:
        factor = gabidulin_generator(field, m, m - d + 1)
        return cartesian_power(factor, n // m)
    big = Field(q, n)
    return transpose_code(gabidulin_generator(big, m, m - d + 1), target_field=field)


def field_embed(code: Code, u: int) -> Code:
    """Rank-preserving embedding into GF(q^{m+u})^n.

    The polynomial basis of GF(q^m) maps to the first m basis elements of
    GF(q^{m+u}) (so 1 -> 1): coefficient vectors are zero-padded.  Ranks
    and cardinality are preserved; for an (n, n-rho) MRD code with
    0 <= u <= rho the image keeps covering radius exactly rho.
    """
    if u < 0:
        raise ValueError("u must be >= 0")
    if u == 0:
        return code
    field = code.field
    big = Field(field.q, field.m + u)
    words = []
    for w in code.words():
        coords = tuple(big.combine(field.expand(c)) for c in w.coords)
        words.append(RankVector(big, coords).index)
    return Code(big, code.n, tuple(words))


def cartesian_gabidulin_covering_radius(m: int, k: int) -> int:
    """Covering radius of any cartesian power G^l of an (m, k) Gabidulin
    code of full length n = m: exactly d - 1 = m - k, independent of l."""
    if not 0 < k <= m:
        raise ValueError("need 0 < k <= m")
    return m - k


# ----------------------------------------------------------------------
# exact verification
# ----------------------------------------------------------------------
def covering_radius(
    code: Code, *, cap: int | None = None, threads: int = 1
) -> int:
    """max over the ambient space of the distance to the code (exact)."""
    field, n = code.field, code.n
    if field.q == 2:
        return gf2.covering_radius_packed(
            code.word_indices, field.m, n, cap=cap, threads=threads
        )
    gf2.check_cap(field.order**n, cap)
    words = list(code.words())
    radius = 0
    for x in RankVector.space(field, n):
        d = min(rank_distance(x, w) for w in words)
        if d > radius:
            radius = d
    return radius


def min_rank_distance(code: Code) -> int:
    """Minimum pairwise rank distance; for linear codes this equals the
    minimum nonzero codeword weight."""
    if code.size < 2:
        raise ValueError("minimum distance needs at least two codewords")
    field = code.field
    if code.is_linear:
        return min(
            rank_weight(w) for w in code.words() if any(w.coords)
        )
    if field.q == 2:
        return gf2.min_distance_packed(code.word_indices, field.m, code.n)
    words = list(code.words())
    return min(
        rank_distance(a, b)
        for i, a in enumerate(words)
        for b in words[i + 1 :]
    )


# ----------------------------------------------------------------------
# integer indexing and the skip-vector interchange format
# ----------------------------------------------------------------------
def vector_index(x: RankVector) -> int:
    """Lexicographic integer of a vector: coordinate 0 is the most
    significant base-q^m digit, elements ordered by canonical integer."""
    return x.index


def index_vector(field: Field, n: int, i: int) -> RankVector:
    return RankVector.from_index(field, n, i)


def skip_vector_encode(code: Code) -> str:
    """Run-length difference encoding of the sorted codeword indices:
    y_0 = x'_0, y_i = x'_i - x'_{i-1} - 1, equal runs written y^k."""
    xs = code.word_indices
    ys = [xs[0]] + [xs[i] - xs[i - 1] - 1 for i in range(1, len(xs))]
    tokens = []
    run_val, run_len = ys[0], 1
    for y in ys[1:]:
        if y == run_val:
            run_len += 1
        else:
            tokens.append(f"{run_val}^{run_len}" if run_len > 1 else str(run_val))
            run_val, run_len = y, 1
    tokens.append(f"{run_val}^{run_len}" if run_len > 1 else str(run_val))
    return " ".join(tokens)


def skip_vector_decode(text: str, field: Field, n: int) -> Code:
    """Inverse of skip_vector_encode; accepts whitespace-separated tokens
    ``y`` or ``y^k``."""
    ys: list[int] = []
    for token in text.split():
        if "^" in token:
            base, _, count = token.partition("^")
            if not (base.isdigit() and count.isdigit()):
                raise ValueError(f"malformed skip-vector token: {token!r}")
            ys.extend([int(base)] * int(count))
        else:
            if not token.isdigit():
                raise ValueError(f"malformed skip-vector token: {token!r}")
            ys.append(int(token))
    if not ys:
        raise ValueError("empty skip vector")
    xs = [ys[0]]
    for y in ys[1:]:
        xs.append(xs[-1] + y + 1)
    if xs[-1] >= field.order**n:
        raise ValueError("skip vector overflows the ambient space")
    return Code(field, n, tuple(xs))


def skip_vector_dumps(code: Code) -> str:
    """Full file form: a header line identifying the space, then tokens."""
    f = code.field
    header = f"# gf({f.q}^{f.m}) n={code.n}"
    return header + "\n" + skip_vector_encode(code) + "\n"


def skip_vector_loads(text: str) -> Code:
    lines = text.strip().splitlines()
    if not lines or not lines[0].lstrip().startswith("#"):
        raise ValueError("missing '# gf(q^m) n=<n>' header line")
    header = lines[0].lstrip("# ").strip()
    parts = header.split()
    if len(parts) != 2 or not parts[1].startswith("n="):
        raise ValueError(f"malformed header: {lines[0]!r}")
    from .fields import parse_field_spec

    field = parse_field_spec(parts[0])
    n = int(parts[1][2:])
    return skip_vector_decode(" ".join(lines[1:]), field, n)


# ----------------------------------------------------------------------
# registry of published explicit codes
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class KnownCode:
    """A published search/construction result shipped as package data."""

    q: int
    m: int
    n: int
    rho: int
    size: int
    method: str  # greedy_cover | local_search | explicit_linear
    letter: str  # table letter F / G / H
    filename: str

    def load(self) -> Code:
        text = (
            resources.files("rankcov").joinpath("data", "codes", self.filename).read_text()
        )
        return skip_vector_loads(text)


_KNOWN_CODES = (
    KnownCode(2, 2, 2, 1, 3, "greedy_cover", "F", "k_2_2_1.sv"),
    KnownCode(2, 3, 3, 1, 16, "greedy_cover", "F", "k_3_3_1.sv"),
    KnownCode(2, 4, 3, 2, 7, "greedy_cover", "F", "k_4_3_2.sv"),
    KnownCode(2, 4, 4, 1, 722, "greedy_cover", "F", "k_4_4_1.sv"),
    KnownCode(2, 4, 4, 2, 48, "local_search", "G", "k_4_4_2.sv"),
    KnownCode(2, 5, 5, 3, 32, "explicit_linear", "H", "k_5_5_3.sv"),
)


def known_codes(q: int | None = None) -> tuple[KnownCode, ...]:
    if q is None:
        return _KNOWN_CODES
    return tuple(c for c in _KNOWN_CODES if c.q == q)


def known_code_upper_bounds(q: int, m: int, n: int, rho: int) -> list[tuple[int, str, str]]:
    """Upper bounds implied by the registered codes at (q, m, n, rho).

    A registered K(q^m, n0, rho0) <= K0 lifts to (n0 + t + u, rho0 + t)
    for t, u >= 0 with factor q^{m u} (appending coordinates costs q^m
    per uncovered coordinate, extending the radius with the length is
    free).  Only lift results that stay competitive: u = 0.
    """
    out = []
    for kc in _KNOWN_CODES:
        if kc.q != q or kc.m != m:
            continue
        t = rho - kc.rho
        if t >= 0 and kc.n + t == n:
            note = f"{kc.method} code for (n={kc.n}, rho={kc.rho})" + (
                f" lifted by (+{t}, +{t})" if t else ""
            )
            out.append((kc.size, kc.letter, note))
    return out
