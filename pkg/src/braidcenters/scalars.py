"""Exact arithmetic in cyclotomic number fields Q(zeta_m).

Scalars are dense polynomials in zeta_m with rational coefficients, stored as
a tuple of integer numerators plus one positive common denominator and reduced
modulo the m-th cyclotomic polynomial.  No floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache, reduce
from math import gcd

MAX_CONDUCTOR = 120


def _int_poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact division of integer polynomials (den monic, ascending coeffs)."""
    num = list(num)
    out = [0] * (len(num) - len(den) + 1)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + len(den) - 1]
        out[k] = c
        if c:
            for i, d in enumerate(den):
                num[k + i] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(m: int) -> tuple[int, ...]:
    """Coefficients (ascending, monic) of the m-th cyclotomic polynomial."""
    if m < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (m - 1) + [1]  # x^m - 1
    for d in range(1, m):
        if m % d == 0:
            poly = _int_poly_divexact(poly, list(cyclotomic_polynomial(d)))
    return tuple(poly)


class Scalar:
    """An element of a fixed cyclotomic field, in canonical reduced form."""

    __slots__ = ("field", "nums", "den")

    def __init__(self, field: "CycField", nums: tuple[int, ...], den: int):
        # Callers must pass canonical data; use CycField factories otherwise.
        self.field = field
        self.nums = nums
        self.den = den

    # -- predicates ------------------------------------------------------

    def is_zero(self) -> bool:
        return self.den == 1 and not any(self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("scalar is not rational: %s" % self)
        return Fraction(self.nums[0], self.den)

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field:
                raise ValueError("scalars from different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        if isinstance(other, Fraction):
            return self.field.from_fraction(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return Scalar(self.field, tuple(-a for a in self.nums), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._mul(self, other)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        return self.field._inverse(self)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._mul(self, other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.field._mul(other, self.inverse())

    def __pow__(self, k: int) -> "Scalar":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        acc = self.field.one
        while k:
            if k & 1:
                acc = acc * base
            base = base * base
            k >>= 1
        return acc

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self.nums == other.nums and self.den == other.den

    def __hash__(self):
        return hash((self.nums, self.den))

    def __repr__(self):
        return format_scalar(self)


class CycField:
    """The cyclotomic field Q(zeta_m) with dense exact representation."""

    def __init__(self, m: int):
        if not 1 <= m <= MAX_CONDUCTOR:
            raise ValueError("conductor must be in 1..%d" % MAX_CONDUCTOR)
        self.m = m
        self.modulus = cyclotomic_polynomial(m)
        self.degree = len(self.modulus) - 1
        # Reduction rows: x^(degree+k) expressed on the power basis (integer
        # entries, since the modulus is monic over Z).
        red = []
        top = [-c for c in self.modulus[:-1]]
        red.append(tuple(top))
        for _ in range(self.degree - 2):
            prev = red[-1]
            row = [0] * self.degree
            for i in range(self.degree - 1):
                row[i + 1] += prev[i]
            lead = prev[self.degree - 1]
            if lead:
                for i in range(self.degree):
                    row[i] += lead * top[i]
            red.append(tuple(row))
        self._red = red
        self.zero = Scalar(self, (0,) * self.degree, 1)
        one = [0] * self.degree
        one[0] = 1
        self.one = Scalar(self, tuple(one), 1)
        self.zeta = self._zeta()

    def __repr__(self):
        return "CycField(%d)" % self.m

    def __eq__(self, other):
        return isinstance(other, CycField) and other.m == self.m

    def __hash__(self):
        return hash(("CycField", self.m))

    # -- constructors ----------------------------------------------------

    def _make(self, nums: list[int], den: int) -> Scalar:
        if den < 0:
            den = -den
            nums = [-a for a in nums]
        g = den
        for a in nums:
            if a:
                g = gcd(g, a)
        if g > 1:
            den //= g
            nums = [a // g for a in nums]
        if not any(nums):
            return self.zero
        return Scalar(self, tuple(nums), den)

    def from_int(self, value: int) -> Scalar:
        nums = [0] * self.degree
        nums[0] = value
        return self._make(nums, 1)

    def from_fraction(self, value: Fraction) -> Scalar:
        nums = [0] * self.degree
        nums[0] = value.numerator
        return self._make(nums, value.denominator)

    def _zeta(self) -> Scalar:
        if self.degree == 1:
            # Q(zeta_1) = Q(zeta_2) = Q with zeta = +-1.
            return self.one if self.m == 1 else self.from_int(-1)
        nums = [0] * self.degree
        nums[1] = 1
        return Scalar(self, tuple(nums), 1)

    def zeta_pow(self, k: int) -> Scalar:
        k %= self.m
        if k < self.degree and self.m > 2:
            nums = [0] * self.degree
            nums[k] = 1
            return Scalar(self, tuple(nums), 1)
        return self.zeta ** k

    # -- arithmetic kernels ----------------------------------------------

    def _add(self, a: Scalar, b: Scalar) -> Scalar:
        da, db = a.den, b.den
        if da == db:
            nums = [x + y for x, y in zip(a.nums, b.nums)]
            return self._make(nums, da)
        nums = [x * db + y * da for x, y in zip(a.nums, b.nums)]
        return self._make(nums, da * db)

    def _mul(self, a: Scalar, b: Scalar) -> Scalar:
        d = self.degree
        if d == 1:
            return self._make([a.nums[0] * b.nums[0]], a.den * b.den)
        an, bn = a.nums, b.nums
        conv = [0] * (2 * d - 1)
        for i, x in enumerate(an):
            if x:
                for j, y in enumerate(bn):
                    if y:
                        conv[i + j] += x * y
        nums = conv[:d]
        for k in range(d, 2 * d - 1):
            c = conv[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    r = row[i]
                    if r:
                        nums[i] += c * r
        return self._make(nums, a.den * b.den)

    def _inverse(self, a: Scalar) -> Scalar:
        if not a:
            raise ZeroDivisionError("scalar inverse of zero")
        # Extended Euclid over Q[x] against the (squarefree) modulus.
        r0 = [Fraction(c) for c in self.modulus]
        r1 = [Fraction(n, a.den) for n in a.nums]
        s0 = [Fraction(0)]
        s1 = [Fraction(1)]

        def trim(p):
            while p and not p[-1]:
                p.pop()
            return p

        r0, r1 = trim(r0), trim(r1)
        while len(r1) > 1:
            # divmod r0 by r1
            q = [Fraction(0)] * (len(r0) - len(r1) + 1)
            rem = list(r0)
            for k in range(len(q) - 1, -1, -1):
                c = rem[k + len(r1) - 1] / r1[-1]
                q[k] = c
                if c:
                    for i, d_ in enumerate(r1):
                        rem[k + i] -= c * d_
            rem = trim(rem)
            # s update: s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, x in enumerate(q):
                if x:
                    for j, y in enumerate(s1):
                        prod[i + j] += x * y
            news = [Fraction(0)] * max(len(s0), len(prod))
            for i, x in enumerate(s0):
                news[i] += x
            for i, x in enumerate(prod):
                news[i] -= x
            r0, r1, s0, s1 = r1, rem, s1, trim(news)
        if not r1:
            raise ZeroDivisionError("scalar is a zero divisor (modulus not coprime)")
        lead = r1[0]
        inv = [c / lead for c in s1]
        inv += [Fraction(0)] * (self.degree - len(inv))
        den = reduce(lambda acc, f: acc * f.denominator // gcd(acc, f.denominator), inv, 1)
        nums = [int(f * den) for f in inv[: self.degree]]
        return self._make(nums, den)

    def scalar(self, coeffs, den: int = 1) -> Scalar:
        """Build a scalar from integer root-power coefficients (reduced)."""
        acc = self.zero
        for k, c in enumerate(coeffs):
            if c:
                acc = acc + self.zeta_pow(k) * c
        if den != 1:
            acc = acc * Fraction(1, den)
        return acc


# -- roots of unity and q-combinatorics -----------------------------------


def q_root(n: int, conductor: int | None = None, exponent: int = 1):
    """Return (field, q) with q = zeta_conductor^exponent and ord(q^2) = n.

    The default conductor is n for odd n and 2n for even n.  The order
    condition is validated by explicit powering.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    if conductor is None:
        conductor = n if n % 2 else 2 * n
    field = CycField(conductor)
    q = field.zeta ** exponent
    validate_q(q, n)
    return field, q


def validate_q(q: Scalar, n: int) -> None:
    """Check that q^2 has multiplicative order exactly n."""
    t = q * q
    acc = q.field.one
    for k in range(1, n):
        acc = acc * t
        if acc == q.field.one:
            raise ValueError("q^2 has order %d, expected %d" % (k, n))
    if acc * t != q.field.one:
        raise ValueError("q^2 does not have order %d" % n)


def q_integer(k: int, t: Scalar) -> Scalar:
    """The t-integer 1 + t + ... + t^(k-1)."""
    acc = t.field.zero
    p = t.field.one
    for _ in range(k):
        acc = acc + p
        p = p * t
    return acc


def q_binomial(m: int, i: int, t: Scalar) -> Scalar:
    """Gaussian binomial coefficient binom(m, i)_t.

    Computed by the product formula prod_{j=0}^{i-1} (1-t^(m-j))/(1-t^(j+1));
    raises ZeroDivisionError when a denominator factor vanishes (t a root of
    unity of too small an order for the requested window).
    """
    if i < 0 or i > m:
        return t.field.zero
    i = min(i, m - i)  # symmetric in i <-> m-i; keeps denominators small
    one = t.field.one
    acc = one
    for j in range(i):
        acc = acc * (one - t ** (m - j)) / (one - t ** (j + 1))
    return acc


def q_factorial(k: int, t: Scalar) -> Scalar:
    """The t-factorial [k]_t! = prod_{i=1..k} (1 + t + ... + t^(i-1))."""
    acc = t.field.one
    for i in range(1, k + 1):
        acc = acc * q_integer(i, t)
    return acc


# -- literal syntax ---------------------------------------------------------


def _tokenize(text: str):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(("int", int(text[i:j])))
            i = j
        elif c.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j]))
            i = j
        elif c in "+-*/^()":
            tokens.append((c, c))
            i += 1
        else:
            raise ValueError("unexpected character %r in scalar literal" % c)
    tokens.append(("end", None))
    return tokens


class _Parser:
    def __init__(self, tokens, field, symbols):
        self.tokens = tokens
        self.pos = 0
        self.field = field
        self.symbols = symbols

    def peek(self):
        return self.tokens[self.pos][0]

    def next(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def parse_expr(self):
        value = self.parse_term()
        while self.peek() in "+-":
            op = self.next()[0]
            rhs = self.parse_term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def parse_term(self):
        value = self.parse_factor()
        while self.peek() in "*/":
            op = self.next()[0]
            rhs = self.parse_factor()
            value = value * rhs if op == "*" else value / rhs
        return value

    def parse_factor(self):
        if self.peek() in "+-":
            op = self.next()[0]
            value = self.parse_factor()
            return value if op == "+" else -value
        return self.parse_power()

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() == "^":
            self.next()
            sign = 1
            if self.peek() in "+-":
                if self.next()[0] == "-":
                    sign = -1
            kind, val = self.next()
            if kind != "int":
                raise ValueError("exponent must be an integer")
            return base ** (sign * val)
        return base

    def parse_atom(self):
        kind, val = self.next()
        if kind == "int":
            return self.field.from_int(val)
        if kind == "name":
            if val not in self.symbols:
                raise ValueError("unknown symbol %r in scalar literal" % val)
            return self.symbols[val]
        if kind == "(":
            value = self.parse_expr()
            if self.next()[0] != ")":
                raise ValueError("missing closing parenthesis")
            return value
        raise ValueError("unexpected token %r" % kind)


def parse_scalar(field: CycField, text: str, q: Scalar | None = None) -> Scalar:
    """Parse a scalar literal such as '1 - q^2' or '1/(q - q^-1)' or '3/4'.

    Recognized symbols: 'q' (if supplied) and 'zeta' (the canonical root of
    the field).
    """
    symbols = {"zeta": field.zeta}
    if q is not None:
        symbols["q"] = q
    parser = _Parser(_tokenize(text), field, symbols)
    value = parser.parse_expr()
    if parser.peek() != "end":
        raise ValueError("trailing input in scalar literal %r" % text)
    return value


def format_scalar(s: Scalar, symbol: str = "zeta") -> str:
    """Deterministic human/JSON form, a polynomial in the field's root."""
    if not s:
        return "0"
    parts = []
    for k, n in enumerate(s.nums):
        if not n:
            continue
        coeff = Fraction(n, s.den)
        if k == 0:
            parts.append((coeff, ""))
        elif k == 1:
            parts.append((coeff, symbol))
        else:
            parts.append((coeff, "%s^%d" % (symbol, k)))
    out = []
    for coeff, mono in parts:
        sign = "-" if coeff < 0 else "+"
        mag = -coeff if coeff < 0 else coeff
        if mono and mag == 1:
            body = mono
        elif mono:
            body = "%s*%s" % (mag, mono)
        else:
            body = str(mag)
        out.append((sign, body))
    first_sign, first_body = out[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in out[1:]:
        text += " %s %s" % (sign, body)
    return text
