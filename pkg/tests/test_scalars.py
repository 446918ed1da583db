"""Tests for exact cyclotomic arithmetic, with independent oracles."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcenters.scalars import (
    CycField,
    cyclotomic_polynomial,
    format_scalar,
    parse_scalar,
    q_binomial,
    q_factorial,
    q_integer,
    q_root,
    validate_q,
)

F12 = CycField(12)
F5 = CycField(5)


def _poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_cyclotomic_pinned_values():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)
    assert cyclotomic_polynomial(3) == (1, 1, 1)
    assert cyclotomic_polynomial(4) == (1, 0, 1)
    assert cyclotomic_polynomial(6) == (1, -1, 1)
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    # The first conductor with a coefficient outside {-1, 0, 1} is 105.
    assert min(cyclotomic_polynomial(105)) == -2


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 8, 12, 15, 16, 21, 30])
def test_cyclotomic_product_oracle(m):
    # Independent identity: prod over d | m of Phi_d(x) equals x^m - 1.
    prod = [1]
    for d in range(1, m + 1):
        if m % d == 0:
            prod = _poly_mul(prod, list(cyclotomic_polynomial(d)))
    expect = [-1] + [0] * (m - 1) + [1]
    assert prod == expect


@pytest.mark.parametrize("m", [3, 4, 5, 8, 12, 20])
def test_root_of_unity_is_primitive(m):
    f = CycField(m)
    acc = f.one
    for k in range(1, m):
        acc = acc * f.zeta
        assert acc != f.one, "zeta_%d^%d should not be 1" % (m, k)
    assert acc * f.zeta == f.one


def _scalars(field):
    return st.builds(
        lambda coeffs, den: field.scalar(coeffs, den),
        st.lists(st.integers(-9, 9), min_size=1, max_size=field.degree),
        st.integers(1, 9),
    )


@given(_scalars(F12), _scalars(F12), _scalars(F12))
@settings(max_examples=60, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a + F12.zero == a
    assert a * F12.one == a
    assert a - a == F12.zero


@given(_scalars(F5))
@settings(max_examples=40, deadline=None)
def test_inverse_roundtrip(a):
    if not a:
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == F5.one
        assert (F5.one / a) * a == F5.one


@given(_scalars(F12), st.integers(-6, 6))
@settings(max_examples=40, deadline=None)
def test_powers(a, k):
    if not a and k < 0:
        return
    expect = F12.one
    for _ in range(abs(k)):
        expect = expect * (a if k >= 0 else a.inverse())
    assert a ** k == expect


def test_canonical_normalization():
    f = CycField(5)
    a = f.scalar([2, 4], 6)
    assert a.nums == (1, 2, 0, 0) and a.den == 3
    b = f.scalar([0, 0], 7)
    assert b is f.zero
    assert f.scalar([-3], 6) == f.from_fraction(Fraction(-1, 2))
    assert hash(f.scalar([1, 1], 2)) == hash(f.scalar([2, 2], 4))


def test_q_root_defaults_and_validation():
    field, q = q_root(3)
    assert field.m == 3 and q == field.zeta
    t = q * q
    assert t != field.one and t * t != field.one and t * t * t == field.one

    field, q = q_root(4)
    assert field.m == 8
    validate_q(q, 4)

    field, q = q_root(2)
    assert field.m == 4
    assert q * q == -field.one

    # Overridden conductor/exponent: q = zeta_12^2 is a primitive 6th root,
    # so q^2 has order 3.
    field, q = q_root(3, conductor=12, exponent=2)
    assert field.m == 12
    with pytest.raises(ValueError):
        q_root(3, conductor=12, exponent=3)
    with pytest.raises(ValueError):
        q_root(3, conductor=12, exponent=6)


def _fraction_binomial_table(t: Fraction, rows: int):
    # Independent oracle: Pascal-style table over plain Fractions.
    table = [[Fraction(1)]]
    for m in range(1, rows + 1):
        prev = table[-1]
        row = [Fraction(1)]
        for i in range(1, m):
            row.append(prev[i - 1] + t ** i * prev[i])
        row.append(Fraction(1))
        table.append(row)
    return table


def test_gaussian_binomial_rational_oracle():
    rat = CycField(1)
    for t in (Fraction(2), Fraction(3, 5), Fraction(-1, 2)):
        table = _fraction_binomial_table(t, 6)
        ts = rat.from_fraction(t)
        for m in range(7):
            for i in range(m + 1):
                got = q_binomial(m, i, ts)
                assert got.as_fraction() == table[m][i]


def test_gaussian_binomial_pinned():
    f = CycField(7)
    t = f.zeta
    assert q_binomial(2, 1, t) == f.one + t
    assert q_binomial(3, 1, t) == f.one + t + t * t
    assert q_binomial(3, 2, t) == f.one + t + t * t
    assert q_binomial(4, 2, t) == (f.one + t * t) * (f.one + t + t * t)
    assert q_binomial(5, 5, t) == f.one
    assert q_binomial(4, -1, t) == f.zero
    assert q_binomial(4, 5, t) == f.zero


@given(st.integers(1, 6), st.integers(0, 6))
@settings(max_examples=40, deadline=None)
def test_gaussian_binomial_pascal(m, i):
    if i > m:
        return
    f = CycField(11)
    t = f.zeta
    lhs = q_binomial(m, i, t)
    assert lhs == q_binomial(m - 1, i - 1, t) + t ** i * q_binomial(m - 1, i, t)
    assert lhs == t ** (m - i) * q_binomial(m - 1, i - 1, t) + q_binomial(m - 1, i, t)


def test_gaussian_binomial_at_root_of_unity():
    # At t = q^2 of order n, binom(n, i)_t vanishes for 0 < i < n.
    field, q = q_root(5)
    t = q * q
    for i in range(1, 5):
        assert q_binomial(5, i, t) == field.zero
    assert q_binomial(5, 0, t) == field.one
    assert q_binomial(5, 5, t) == field.one


def test_q_integer_and_factorial():
    f = CycField(9)
    t = f.zeta
    assert q_integer(0, t) == f.zero
    assert q_integer(1, t) == f.one
    assert q_integer(3, t) == f.one + t + t * t
    assert q_factorial(3, t) == q_integer(1, t) * q_integer(2, t) * q_integer(3, t)


def test_parser_basics():
    field, q = q_root(3)
    one = field.one
    assert parse_scalar(field, "1 - q^2", q) == one - q * q
    assert parse_scalar(field, "q^-2", q) == (q * q).inverse()
    assert parse_scalar(field, "1/(q - q^-1)", q) == (q - q.inverse()).inverse()
    assert parse_scalar(field, "(1+q)*(1-q)", q) == one - q * q
    assert parse_scalar(field, "3/4") == field.from_fraction(Fraction(3, 4))
    assert parse_scalar(field, "-2*q + 1", q) == one - q - q
    assert parse_scalar(field, "zeta^2") == field.zeta_pow(2)
    assert parse_scalar(field, "2^3") == field.from_int(8)


def test_parser_errors():
    field, q = q_root(3)
    with pytest.raises(ValueError):
        parse_scalar(field, "1 +")
    with pytest.raises(ValueError):
        parse_scalar(field, "x + 1", q)
    with pytest.raises(ValueError):
        parse_scalar(field, "q^q", q)
    with pytest.raises(ValueError):
        parse_scalar(field, "(1+q", q)
    with pytest.raises(ValueError):
        parse_scalar(field, "1 $ 2", q)


@given(_scalars(F12))
@settings(max_examples=40, deadline=None)
def test_format_parse_roundtrip(a):
    text = format_scalar(a)
    assert parse_scalar(F12, text) == a


def test_format_pinned():
    f = CycField(5)
    assert format_scalar(f.zero) == "0"
    assert format_scalar(f.one) == "1"
    assert format_scalar(-f.one) == "-1"
    assert format_scalar(f.zeta) == "zeta"
    s = f.one - f.zeta_pow(2) * Fraction(3, 2)
    assert format_scalar(s) == "1 - 3/2*zeta^2"


def test_zeta_pow_consistency():
    f = CycField(8)
    for k in range(-8, 17):
        assert f.zeta_pow(k) == f.zeta ** (k % 8)


def test_rational_detection():
    f = CycField(12)
    assert f.from_int(7).is_rational()
    assert f.from_int(7).as_fraction() == 7
    assert not f.zeta.is_rational()
    with pytest.raises(ValueError):
        f.zeta.as_fraction()
    # zeta_12^3 = i is irrational; zeta_12^6 = -1 is rational.
    assert not f.zeta_pow(3).is_rational()
    assert f.zeta_pow(6).as_fraction() == -1


def test_cross_field_mixing_rejected():
    with pytest.raises(ValueError):
        CycField(3).one + CycField(4).one
