"""GF(q^m) arithmetic: defaults, primitivity, axioms, expansion."""

import pytest
from hypothesis import given, strategies as st

from rankcov.fields import Field, default_primitive_poly, parse_field_spec


def test_matlab_default_polynomials():
    # degree-m masks, bit i = coefficient of x^i
    expected = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011, 5: 0b100101,
                6: 0b1000011, 7: 0b10001001, 8: 0b100011101}
    for m, mask in expected.items():
        poly = default_primitive_poly(2, m)
        assert sum(c << i for i, c in enumerate(poly)) == mask


def test_gf2_trivial_field():
    f = Field(2, 1)
    assert f.order == 2
    assert f.add(1, 1) == 0
    assert f.mul(1, 1) == 1


def test_explicit_poly_and_alpha_order():
    f = Field(2, 4, [1, 1, 0, 0, 1])  # x^4 + x + 1
    # alpha^4 = alpha + 1
    assert f.pow(f.alpha, 4) == f.add(f.alpha, 1)
    # exhaustive order check: alpha generates all 15 nonzero elements
    seen = set()
    x = 1
    for _ in range(15):
        seen.add(x)
        x = f.mul(x, f.alpha)
    assert seen == set(range(1, 16))
    assert x == 1


def test_non_primitive_poly_rejected():
    # x^4 + x^3 + x^2 + x + 1 is irreducible but its root has order 5
    with pytest.raises(ValueError, match="not primitive"):
        Field(2, 4, [1, 1, 1, 1, 1])
    # x^2 + 1 = (x+1)^2 is not even irreducible
    with pytest.raises(ValueError):
        Field(2, 2, [1, 0, 1])


def test_nonprime_q_rejected():
    with pytest.raises(ValueError, match="not prime"):
        Field(4, 2)


def test_missing_default_rejected():
    with pytest.raises(ValueError, match="no stored default"):
        Field(3, 2)
    # but an explicit primitive polynomial works: x^2 + x + 2 over GF(3)
    f = Field(3, 2, [2, 1, 1])
    assert f.order == 9


def test_char2_addition_is_xor():
    f = Field(2, 5)
    for a in (0, 1, 17, 30):
        assert f.add(a, a) == 0


def test_gf4_multiplication_table():
    f = Field(2, 2)  # x^2 + x + 1, alpha = 2, alpha + 1 = 3
    assert f.mul(2, 2) == 3
    assert f.inv(2) == 3
    assert f.mul(2, 3) == 1
    assert f.div(1, 2) == 3


def test_inverses_exhaustive_small_fields():
    for m in range(1, 9):
        f = Field(2, m)
        for a in range(1, f.order):
            assert f.mul(a, f.inv(a)) == 1


def test_expand_linear_bijection():
    f = Field(2, 3)
    assert f.expand(0) == (0, 0, 0)
    assert f.expand(1) == (1, 0, 0)
    assert f.expand(5) == (1, 0, 1)  # alpha^2 + 1
    seen = {f.expand(x) for x in f.elements()}
    assert len(seen) == 8
    for a in f.elements():
        for b in f.elements():
            s = f.add(a, b)
            assert f.expand(s) == tuple(
                (x + y) % 2 for x, y in zip(f.expand(a), f.expand(b))
            )
    assert all(f.combine(f.expand(x)) == x for x in f.elements())


@given(st.integers(0, 31), st.integers(0, 31), st.integers(0, 31))
def test_field_axioms_gf32(a, b, c):
    f = Field(2, 5)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(a, b) == f.mul(b, a)
    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)


def test_pow_matches_repeated_multiplication():
    f = Field(2, 6)
    for a in (1, 2, 37, 63):
        acc = 1
        for e in range(10):
            assert f.pow(a, e) == acc
            acc = f.mul(acc, a)


def test_frobenius_is_additive():
    f = Field(2, 4)
    for a in f.elements():
        for b in f.elements():
            assert f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b))


def test_field_element_operators():
    f = Field(2, 3)
    a, b = f(3), f(6)
    assert int(a + b) == f.add(3, 6)
    assert int(a * b) == f.mul(3, 6)
    assert int((a / b) * b) == 3
    assert int(a**2) == f.mul(3, 3)
    with pytest.raises(ZeroDivisionError):
        a / f(0)


def test_mixed_field_elements_rejected():
    a = Field(2, 3)(1)
    b = Field(2, 4)(1)
    with pytest.raises(ValueError, match="different fields"):
        a + b


def test_parse_field_spec_round_trip():
    f = parse_field_spec("gf(2^5;poly=0b100101)")
    assert (f.q, f.m) == (2, 5)
    assert parse_field_spec("gf(2^5)") == f  # omitted poly = default
    assert parse_field_spec(f.spec_string()) == f
    g = parse_field_spec("gf(3^2;poly=2,1,1)")
    assert (g.q, g.m) == (3, 2)
    with pytest.raises(ValueError, match="malformed"):
        parse_field_spec("gf[2^5]")
