"""Exact arithmetic in GF(q) and GF(q^m) with a polynomial basis.

Elements of GF(q^m) are canonically identified with integers in [0, q^m):
the base-q digits of the integer are the coefficients with respect to the
polynomial basis {1, alpha, ..., alpha^(m-1)}, least-significant digit =
constant term.  This integer order is the element order used everywhere a
"lexicographic" convention is needed (vector indexing, skip-vector files).

Only prime q is supported.  For q = 2 the stored default generator
polynomials (degrees 1..8) reproduce MATLAB's ``gfprimdf`` table, so codes
interchanged with MATLAB-produced data decode identically:

    m=1 : x + 1                 0b11        = 3
    m=2 : x^2 + x + 1           0b111       = 7
    m=3 : x^3 + x + 1           0b1011      = 11
    m=4 : x^4 + x + 1           0b10011     = 19
    m=5 : x^5 + x^2 + 1         0b100101    = 37
    m=6 : x^6 + x + 1           0b1000011   = 67
    m=7 : x^7 + x^3 + 1         0b10001001  = 137
    m=8 : x^8 + x^4 + x^3 + x^2 + 1  0b100011101 = 285
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "Field",
    "FieldElement",
    "MATLAB_DEFAULT_POLYS",
    "default_primitive_poly",
    "parse_field_spec",
]

# Degree-m primitive polynomials over GF(2), bit i = coefficient of x^i.
MATLAB_DEFAULT_POLYS: dict[int, int] = {
    1: 0b11,
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    5: 0b100101,
    6: 0b1000011,
    7: 0b10001001,
    8: 0b100011101,
}

# Fields larger than this have no log/antilog tables (and no exhaustive
# primitivity certificate), so we refuse to build them.
_MAX_ORDER = 1 << 20
_LOG_TABLE_MAX = 1 << 16


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _smallest_primitive_root(q: int) -> int:
    """Smallest generator of GF(q)^* for prime q (exhaustive order check)."""
    for g in range(1, q):
        x, order = g, 1
        while x != 1:
            x = x * g % q
            order += 1
        if order == q - 1:
            return g
    raise ValueError(f"no primitive root mod {q}")


def default_primitive_poly(q: int, m: int) -> tuple[int, ...]:
    """Stored default generator polynomial as a coefficient tuple.

    q=2, m in 1..8 uses the MATLAB table above; m=1 for any prime q uses
    x - g with g the smallest primitive root.  Anything else has no stored
    default and must be passed explicitly.
    """
    if q == 2 and m in MATLAB_DEFAULT_POLYS:
        mask = MATLAB_DEFAULT_POLYS[m]
        return tuple((mask >> i) & 1 for i in range(m + 1))
    if m == 1:
        g = _smallest_primitive_root(q)
        return ((-g) % q, 1)
    raise ValueError(
        f"no stored default primitive polynomial for GF({q}^{m}); pass one explicitly"
    )


class Field:
    """The finite field GF(q^m), q prime, with an explicit primitive polynomial.

    Elements are plain ints in [0, q^m).  Immutable; safe to share across
    threads.
    """

    def __init__(self, q: int, m: int, primitive_poly: Sequence[int] | int | None = None):
        if not _is_prime(q):
            raise ValueError(f"q = {q} is not prime")
        if m < 1:
            raise ValueError(f"extension degree m = {m} must be >= 1")
        if q**m > _MAX_ORDER:
            raise ValueError(f"field order {q}^{m} exceeds supported maximum 2^20")

        if primitive_poly is None:
            poly = default_primitive_poly(q, m)
        elif isinstance(primitive_poly, int):
            if q != 2:
                raise ValueError("integer polynomial masks are only defined for q = 2")
            poly = tuple((primitive_poly >> i) & 1 for i in range(primitive_poly.bit_length()))
        else:
            poly = tuple(c % q for c in primitive_poly)
        while len(poly) > 1 and poly[-1] == 0:
            poly = poly[:-1]
        if len(poly) != m + 1 or poly[-1] != 1:
            raise ValueError(f"primitive polynomial must be monic of degree {m}: {poly}")

        self.q = q
        self.m = m
        self.order = q**m
        self.poly = poly
        # alpha = residue class of x; for m = 1 the root of x - g is g itself.
        self.alpha = q % self.order if m > 1 else (-poly[0]) % q

        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        self._check_primitive()
        if self.order <= _LOG_TABLE_MAX:
            self._build_tables()

    # ------------------------------------------------------------------
    # construction helpers
    # ------------------------------------------------------------------
    def _check_primitive(self) -> None:
        """Verify the multiplicative order of alpha equals q^m - 1."""
        if self.order == 2:  # GF(2): alpha = 1, trivially primitive
            return
        x, steps = 1, 0
        seen_one_at = None
        while steps < self.order - 1:
            x = self._mul_raw(x, self.alpha)
            steps += 1
            if x == 1:
                seen_one_at = steps
                break
        if seen_one_at != self.order - 1:
            raise ValueError(
                f"polynomial {self.poly} is not primitive over GF({self.q}): "
                f"root has order {seen_one_at}, need {self.order - 1}"
            )

    def _build_tables(self) -> None:
        exp = [0] * (2 * self.order)
        log = [0] * self.order
        x = 1
        for i in range(self.order - 1):
            exp[i] = x
            log[x] = i
            x = self._mul_raw(x, self.alpha)
        for i in range(self.order - 1, 2 * self.order):
            exp[i] = exp[i - (self.order - 1)]
        self._exp, self._log = exp, log

    # ------------------------------------------------------------------
    # coefficient expansion
    # ------------------------------------------------------------------
    def expand(self, x: int) -> tuple[int, ...]:
        """Polynomial-basis coefficients of x, length m, constant term first."""
        self._check_element(x)
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(x % q)
            x //= q
        return tuple(out)

    def combine(self, coeffs: Sequence[int]) -> int:
        """Inverse of expand: base-q digits back to the canonical integer."""
        if len(coeffs) > self.m:
            raise ValueError(f"too many coefficients for GF({self.q}^{self.m})")
        x = 0
        for c in reversed(coeffs):
            x = x * self.q + (c % self.q)
        return x

    # ------------------------------------------------------------------
    # arithmetic on canonical integers
    # ------------------------------------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        q = self.q
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((a + b) % q) * mult
            a //= q
            b //= q
            mult *= q
        return out

    def neg(self, a: int) -> int:
        if self.q == 2:
            return a
        q = self.q
        out, mult = 0, 1
        for _ in range(self.m):
            out += ((q - a % q) % q) * mult
            a //= q
            mult *= q
        return out

    def sub(self, a: int, b: int) -> int:
        if self.q == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def _mul_raw(self, a: int, b: int) -> int:
        """Schoolbook polynomial product reduced modulo the field polynomial."""
        q, m = self.q, self.m
        if q == 2:
            mask = _poly_mask(self.poly)
            p = 0
            while b:
                if b & 1:
                    p ^= a
                b >>= 1
                a <<= 1
                if a >> m & 1:
                    a ^= mask
            return p
        ca, cb = self.expand_raw(a), self.expand_raw(b)
        prod = [0] * (2 * m - 1)
        for i, ai in enumerate(ca):
            if ai:
                for j, bj in enumerate(cb):
                    prod[i + j] = (prod[i + j] + ai * bj) % q
        # reduce: x^m = -(poly[0] + poly[1] x + ... + poly[m-1] x^(m-1))
        for d in range(2 * m - 2, m - 1, -1):
            c = prod[d]
            if c:
                prod[d] = 0
                for j in range(m):
                    prod[d - m + j] = (prod[d - m + j] - c * self.poly[j]) % q
        return self.combine(prod[:m])

    def expand_raw(self, x: int) -> list[int]:
        q = self.q
        out = []
        for _ in range(self.m):
            out.append(x % q)
            x //= q
        return out

    def mul(self, a: int, b: int) -> int:
        self._check_element(a)
        self._check_element(b)
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_raw(a, b)

    def inv(self, a: int) -> int:
        self._check_element(a)
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self._exp is not None:
            return self._exp[(self.order - 1) - self._log[a]]
        return self.pow(a, self.order - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check_element(a)
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.order - 1)]
        out, base = 1, a
        while e:
            if e & 1:
                out = self._mul_raw(out, base)
            base = self._mul_raw(base, base)
            e >>= 1
        return out

    def frobenius(self, a: int, s: int = 1) -> int:
        """a^(q^s), the s-fold q-power Frobenius."""
        return self.pow(a, pow(self.q, s, self.order - 1) if a else 0) if a else 0

    # ------------------------------------------------------------------
    # misc
    # ------------------------------------------------------------------
    def element(self, value: int) -> "FieldElement":
        self._check_element(value)
        return FieldElement(self, value)

    __call__ = element

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def _check_element(self, x: int) -> None:
        if not 0 <= x < self.order:
            raise ValueError(f"{x} is not an element of GF({self.q}^{self.m})")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and (self.q, self.m, self.poly) == (other.q, other.m, other.poly)
        )

    def __hash__(self) -> int:
        return hash((self.q, self.m, self.poly))

    def __repr__(self) -> str:
        return f"Field(q={self.q}, m={self.m}, poly={self.poly})"

    def spec_string(self) -> str:
        """Round-trippable CLI spec such as ``gf(2^5;poly=0b100101)``."""
        if self.q == 2:
            return f"gf(2^{self.m};poly=0b{_poly_mask(self.poly):b})"
        coeffs = ",".join(str(c) for c in self.poly)
        return f"gf({self.q}^{self.m};poly={coeffs})"


def _poly_mask(poly: tuple[int, ...]) -> int:
    return sum(c << i for i, c in enumerate(poly))


@dataclass(frozen=True)
class FieldElement:
    """A field element bound to its field, with operator sugar."""

    field: Field
    value: int

    def _coerce(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise ValueError("elements from different fields")
            return other.value
        return int(other)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._coerce(other)))

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._coerce(other)))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._coerce(other)))

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.div(self.value, self._coerce(other)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def expand(self) -> tuple[int, ...]:
        return self.field.expand(self.value)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.field.q}^{self.field.m})[{self.value}]"


_SPEC_RE = re.compile(r"^gf\((\d+)(?:\^(\d+))?(?:;poly=([0-9a-bx,]+))?\)$", re.IGNORECASE)


def parse_field_spec(spec: str) -> Field:
    """Parse a field spec string like ``gf(2^5)`` or ``gf(2^5;poly=0b100101)``.

    An omitted poly means the stored default.  For q != 2 the polynomial is
    a comma-separated coefficient list, constant term first.
    """
    match = _SPEC_RE.match(spec.strip().replace(" ", ""))
    if not match:
        raise ValueError(f"malformed field spec: {spec!r}")
    q = int(match.group(1))
    m = int(match.group(2)) if match.group(2) else 1
    poly_text = match.group(3)
    if poly_text is None:
        return Field(q, m)
    if poly_text.startswith("0b"):
        return Field(q, m, int(poly_text, 2))
    if "," in poly_text:
        return Field(q, m, [int(c) for c in poly_text.split(",")])
    return Field(q, m, int(poly_text))
