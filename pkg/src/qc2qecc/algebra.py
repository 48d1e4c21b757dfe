"""Arithmetic in F2[x], the cyclic ring R_n = F2[x]/(x^n - 1) and GF(2^m).

Polynomials are stored as Python ints: bit ``i`` is the coefficient of ``x^i``.
This gives word-level XOR/shift arithmetic for free and a canonical form
(no trailing zero coefficients) by construction.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np


class AmbientMismatchError(ValueError):
    """Operands live in different cyclic rings."""


@dataclass(frozen=True)
class BinaryPolynomial:
    """A polynomial over F2, optionally reduced into R_n.

    ``ambient_n == 0`` means a plain element of F2[x]; otherwise the
    polynomial is an element of F2[x]/(x^n - 1) and its degree is < n.
    """

    bits: int
    ambient_n: int = 0

    def __post_init__(self) -> None:
        if self.bits < 0:
            raise ValueError("coefficient bitmask must be non-negative")
        if self.ambient_n < 0:
            raise ValueError("ambient_n must be >= 0")
        if self.ambient_n and self.bits >> self.ambient_n:
            raise ValueError(
                f"degree {self.degree} does not fit ambient length {self.ambient_n}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], ambient_n: int = 0) -> BinaryPolynomial:
        bits = 0
        for i, c in enumerate(coeffs):
            if c & 1:
                bits |= 1 << i
        return cls(bits, ambient_n)

    @classmethod
    def monomial(cls, power: int, ambient_n: int = 0) -> BinaryPolynomial:
        if ambient_n:
            power %= ambient_n
        return cls(1 << power, ambient_n)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return self.bits.bit_length() - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        """Coefficients in ascending degree order, canonical (empty for zero)."""
        return tuple((self.bits >> i) & 1 for i in range(self.bits.bit_length()))

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_zero(self) -> bool:
        return self.bits == 0

    def vector(self, length: int | None = None) -> np.ndarray:
        """The coefficient vector [g(x)] as a uint8 array."""
        length = length if length is not None else (self.ambient_n or self.degree + 1)
        if self.degree >= length:
            raise ValueError(f"polynomial of degree {self.degree} needs length > {length}")
        out = np.zeros(length, dtype=np.uint8)
        b, i = self.bits, 0
        while b:
            if b & 1:
                out[i] = 1
            b >>= 1
            i += 1
        return out

    def with_ambient(self, n: int) -> BinaryPolynomial:
        """Reduce into R_n (or lift to plain F2[x] when ``n == 0``)."""
        return BinaryPolynomial(reduce_cyclic(self.bits, n) if n else self.bits, n)

    def __call__(self, x: int) -> int:
        """Evaluate at 0 or 1."""
        if x & 1:
            return self.weight & 1
        return self.bits & 1

    def __add__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        _check_same_ring(self, other)
        return BinaryPolynomial(self.bits ^ other.bits, self.ambient_n)

    __sub__ = __add__

    def __mul__(self, other: BinaryPolynomial) -> BinaryPolynomial:
        _check_same_ring(self, other)
        prod = clmul(self.bits, other.bits)
        if self.ambient_n:
            prod = reduce_cyclic(prod, self.ambient_n)
        return BinaryPolynomial(prod, self.ambient_n)

    def __str__(self) -> str:
        if not self.bits:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append("1" if i == 0 else "x" if i == 1 else f"x^{i}")
        return " + ".join(terms)


def _check_same_ring(a: BinaryPolynomial, b: BinaryPolynomial) -> None:
    if a.ambient_n != b.ambient_n:
        raise AmbientMismatchError(f"ambient {a.ambient_n} vs {b.ambient_n}")


# ---------------------------------------------------------------------------
# raw bitmask kernels


def clmul(a: int, b: int) -> int:
    """Carry-less product of two bitmasks."""
    if a.bit_length() < b.bit_length():
        a, b = b, a
    out = 0
    shift = 0
    while b:
        if b & 1:
            out ^= a << shift
        b >>= 1
        shift += 1
    return out


def reduce_cyclic(bits: int, n: int) -> int:
    """Reduce a bitmask modulo x^n - 1 by folding high words onto low ones."""
    mask = (1 << n) - 1
    while bits >> n:
        bits = (bits & mask) ^ (bits >> n)
    return bits


def divmod_bits(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        s = a.bit_length() - db
        q |= 1 << s
        a ^= b << s
    return q, a


def gcd_bits(a: int, b: int) -> int:
    while b:
        a, b = b, divmod_bits(a, b)[1]
    return a


def mulmod_bits(a: int, b: int, mod: int) -> int:
    return divmod_bits(clmul(a, b), mod)[1]


# ---------------------------------------------------------------------------
# ring operations on BinaryPolynomial


def x_n_minus_1(n: int) -> BinaryPolynomial:
    """x^n - 1 as a plain polynomial (it does not fit inside R_n)."""
    return BinaryPolynomial((1 << n) | 1)


def ring_add(a: BinaryPolynomial, b: BinaryPolynomial, n: int) -> BinaryPolynomial:
    if a.ambient_n != n or b.ambient_n != n:
        raise AmbientMismatchError(f"expected ambient {n}, got {a.ambient_n} and {b.ambient_n}")
    return a + b


def ring_mul(a: BinaryPolynomial, b: BinaryPolynomial, n: int) -> BinaryPolynomial:
    if a.ambient_n != n or b.ambient_n != n:
        raise AmbientMismatchError(f"expected ambient {n}, got {a.ambient_n} and {b.ambient_n}")
    return a * b


def poly_divmod(
    a: BinaryPolynomial, b: BinaryPolynomial
) -> tuple[BinaryPolynomial, BinaryPolynomial]:
    """Euclidean division in F2[x]; results carry the ambient of ``a``."""
    q, r = divmod_bits(a.bits, b.bits)
    return BinaryPolynomial(q, a.ambient_n), BinaryPolynomial(r, a.ambient_n)


def poly_gcd(a: BinaryPolynomial, b: BinaryPolynomial) -> BinaryPolynomial:
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    return BinaryPolynomial(gcd_bits(a.bits, b.bits))


def _as_cyclic_divisor(g: BinaryPolynomial, n: int) -> int:
    # In R_n the zero element generates the zero code, i.e. stands for x^n - 1.
    return ((1 << n) | 1) if g.bits == 0 else g.bits


def divides(a: BinaryPolynomial, b: BinaryPolynomial) -> bool:
    """True iff a | b in F2[x]. Zero in R_n is read as x^n - 1."""
    n = b.ambient_n
    bb = _as_cyclic_divisor(b, n) if n else b.bits
    if a.bits == 0:
        return bb == 0
    return divmod_bits(bb, a.bits)[1] == 0


def divides_x_n_minus_1(g: BinaryPolynomial, n: int) -> bool:
    return g.bits != 0 and divmod_bits((1 << n) | 1, g.bits)[1] == 0


def bar(g: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """The index negation g(x) -> g(x^{-1}) in R_n: coefficient i moves to n - i."""
    if g.ambient_n != n:
        raise AmbientMismatchError(f"expected ambient {n}, got {g.ambient_n}")
    out = g.bits & 1
    b = g.bits >> 1
    i = 1
    while b:
        if b & 1:
            out |= 1 << (n - i)
        b >>= 1
        i += 1
    return BinaryPolynomial(out, n)


def reverse_bits(bits: int, degree: int) -> int:
    """x^degree * p(1/x) for a polynomial of the given degree."""
    out = 0
    for i in range(degree + 1):
        if (bits >> i) & 1:
            out |= 1 << (degree - i)
    return out


def check_polynomial(g: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """h(x) = (x^n - 1) / g(x); raises if g does not divide x^n - 1."""
    if g.bits == 0:
        return BinaryPolynomial(1, n)
    q, r = divmod_bits((1 << n) | 1, g.bits)
    if r:
        raise ValueError(f"{g} does not divide x^{n} - 1")
    return BinaryPolynomial(reduce_cyclic(q, n), n)


def reciprocal_dual(g: BinaryPolynomial, n: int) -> BinaryPolynomial:
    """Generator x^{deg h} h(1/x) of the Euclidean dual of the cyclic code <g>.

    ``g = 1`` returns the zero element of R_n (the generator x^n - 1 of the
    zero code), and the zero element maps back to 1.
    """
    if g.ambient_n != n:
        raise AmbientMismatchError(f"expected ambient {n}, got {g.ambient_n}")
    if g.bits == 0:
        return BinaryPolynomial(1, n)
    q, r = divmod_bits((1 << n) | 1, g.bits)
    if r:
        raise ValueError(f"{g} does not divide x^{n} - 1")
    dual = reverse_bits(q, q.bit_length() - 1)
    if dual.bit_length() > n:
        return BinaryPolynomial(0, n)
    return BinaryPolynomial(dual, n)


# ---------------------------------------------------------------------------
# compact notation, e.g. "101^3" = 1 + x^2 + x^3 + x^4

_TOKEN = re.compile(r"\s*([01])(?:\^(?:\{\s*([1-9][0-9]*)\s*\}|([1-9][0-9]*)))?\s*")


def parse_compact(text: str, n: int = 0) -> BinaryPolynomial:
    """Parse run-length notation such as ``"1^{2}01^{2}0^{7}1^2"``.

    Exponents may be braced; whitespace is ignored but ends a bare exponent,
    so ``"1^2 01"`` and ``"1^{2}01"`` agree while ``"1^201"`` means 201 ones.
    """
    if not text or not text.strip():
        raise ValueError("empty compact polynomial")
    bits = 0
    pos = 0
    length = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"malformed compact polynomial at offset {pos}: {text!r}")
        run = int(m.group(2) or m.group(3) or 1)
        if m.group(1) == "1":
            bits |= ((1 << run) - 1) << length
        length += run
        pos = m.end()
        if n and length > n:
            raise ValueError(f"expanded length {length} exceeds n = {n}")
    return BinaryPolynomial(bits, n)


def format_compact(p: BinaryPolynomial) -> str:
    """Inverse of :func:`parse_compact`; braces only where a bare exponent would run on."""
    if p.bits == 0:
        width = p.ambient_n or 1
        return "0" if width == 1 else f"0^{width}"
    runs: list[tuple[str, int]] = []
    for c in p.coeffs:
        bit = str(c)
        if runs and runs[-1][0] == bit:
            runs[-1] = (bit, runs[-1][1] + 1)
        else:
            runs.append((bit, 1))
    parts = []
    for idx, (bit, count) in enumerate(runs):
        if count == 1:
            parts.append(bit)
        elif idx == len(runs) - 1:
            parts.append(f"{bit}^{count}")
        else:
            parts.append(f"{bit}^{{{count}}}")
    return "".join(parts)


# ---------------------------------------------------------------------------
# GF(2^m)


def multiplicative_order_of_2(n: int) -> int:
    if n < 1 or n % 2 == 0:
        raise ValueError(f"n must be odd and positive, got {n}")
    if n == 1:
        return 1
    m, t = 1, 2 % n
    while t != 1:
        t = (t * 2) % n
        m += 1
    return m


def prime_factors(value: int) -> list[int]:
    out = []
    p = 2
    while p * p <= value:
        if value % p == 0:
            out.append(p)
            while value % p == 0:
                value //= p
        p += 1
    if value > 1:
        out.append(value)
    return out


def _powmod_x(exp_bits_doublings: int, mod: int) -> int:
    """x^(2^k) mod ``mod`` by k repeated squarings."""
    r = 0b10
    for _ in range(exp_bits_doublings):
        r = mulmod_bits(r, r, mod)
    return r


def is_irreducible(f: BinaryPolynomial) -> bool:
    """Ben-Or test: gcd(x^(2^i) - x, f) = 1 for all i <= deg f / 2."""
    m = f.degree
    if m < 1:
        return False
    if m == 1:
        return True
    mod = f.bits
    r = 0b10
    for _ in range(m // 2):
        r = mulmod_bits(r, r, mod)
        if gcd_bits(mod, r ^ 0b10) != 1:
            return False
    return True


def _gf_pow(a: int, e: int, mod: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = mulmod_bits(result, a, mod)
        a = mulmod_bits(a, a, mod)
        e >>= 1
    return result


def is_primitive(f: BinaryPolynomial) -> bool:
    if not is_irreducible(f):
        return False
    m = f.degree
    order = (1 << m) - 1
    x = 0b10 if m > 1 else 0b1
    if m == 1:
        return f.bits == 0b11
    return all(_gf_pow(x, order // p, f.bits) != 1 for p in prime_factors(order))


def canonical_modulus(m: int) -> BinaryPolynomial:
    """Lexicographically smallest primitive polynomial of degree m.

    Coefficients are compared from the constant term upward.
    """
    if m == 1:
        return BinaryPolynomial(0b11)
    for t in range(1 << (m - 1)):
        bits = 1 | (1 << m)
        for j in range(1, m):
            if (t >> (m - 1 - j)) & 1:
                bits |= 1 << j
        f = BinaryPolynomial(bits)
        if is_primitive(f):
            return f
    raise RuntimeError(f"no primitive polynomial of degree {m}")  # pragma: no cover


@dataclass(frozen=True)
class FieldContext:
    """GF(2^m) = F2[x]/(modulus) together with a primitive n-th root of unity.

    Field elements are ints (polynomial basis). ``alpha = x`` generates the
    multiplicative group and ``zeta = alpha^zeta_log`` with
    ``zeta_log = (2^m - 1) / n``.
    """

    m: int
    modulus: BinaryPolynomial
    n: int
    zeta_log: int

    def mul(self, a: int, b: int) -> int:
        return mulmod_bits(a, b, self.modulus.bits)

    def pow(self, a: int, e: int) -> int:
        return _gf_pow(a, e, self.modulus.bits)

    @property
    def alpha(self) -> int:
        return 0b10 if self.m > 1 else 0b1

    @functools.cached_property
    def zeta_powers(self) -> tuple[int, ...]:
        """(zeta^0, zeta^1, ..., zeta^(n-1))."""
        zeta = self.pow(self.alpha, self.zeta_log)
        out = [1]
        for _ in range(self.n - 1):
            out.append(self.mul(out[-1], zeta))
        return tuple(out)

    @property
    def zeta(self) -> int:
        return self.zeta_powers[1 % self.n] if self.n > 1 else 1


@functools.lru_cache(maxsize=None)
def build_field(n: int) -> FieldContext:
    if n <= 0:
        raise ValueError(f"n must be positive, got {n}")
    if n % 2 == 0:
        raise ValueError(f"even n = {n} is not supported (x^n - 1 has repeated factors)")
    m = multiplicative_order_of_2(n)
    modulus = canonical_modulus(m)
    return FieldContext(m=m, modulus=modulus, n=n, zeta_log=((1 << m) - 1) // n)


def field_eval(ctx: FieldContext, g: BinaryPolynomial, i: int) -> int:
    """g(zeta^i) in GF(2^m), by Horner's rule."""
    point = ctx.zeta_powers[i % ctx.n]
    acc = 0
    for c in reversed(g.coeffs):
        acc = ctx.mul(acc, point) ^ c
    return acc


def poly_from_field_coeffs(coeffs: Sequence[int]) -> BinaryPolynomial:
    """Collapse a GF(2^m)[x] polynomial whose coefficients all lie in F2."""
    bits = 0
    for i, c in enumerate(coeffs):
        if c not in (0, 1):
            raise ArithmeticError(f"coefficient {c} of x^{i} is not in F2")
        bits |= c << i
    return BinaryPolynomial(bits)
