"""Polynomials over GF(2).

A polynomial is stored as a nonnegative Python integer whose bit ``i`` is the
coefficient of ``x**i``. :class:`Gf2Poly` wraps that integer in an immutable
value object and overloads ``+``, ``*``, ``//``, ``%`` and ``divmod``.

The zero polynomial has degree :data:`NEG_INF` (a float ``-inf``), so degree
comparisons and sums behave without special-casing a ``-1``.

Text form is an ASCII bitstring with the ``x**0`` coefficient first, e.g.
``"10011"`` is ``1 + x**3 + x**4``; the zero polynomial renders as ``"0"``.
"""

from __future__ import annotations

from .cyclotomy import prime_factors

NEG_INF = float("-inf")


class Gf2Poly:
    __slots__ = ("_v",)

    def __init__(self, value: int = 0):
        if isinstance(value, Gf2Poly):
            value = value._v
        if value < 0:
            raise ValueError("coefficient bitvector must be nonnegative")
        object.__setattr__(self, "_v", int(value))

    def __setattr__(self, name, value):
        raise AttributeError("Gf2Poly is immutable")

    def __reduce__(self):
        return (Gf2Poly, (self._v,))

    @classmethod
    def from_exponents(cls, exponents) -> Gf2Poly:
        """Polynomial with a 1 coefficient at each exponent (repeats cancel)."""
        v = 0
        for e in exponents:
            v ^= 1 << e
        return cls(v)

    @classmethod
    def from_bits(cls, bits) -> Gf2Poly:
        v = 0
        for i, b in enumerate(bits):
            if b:
                v |= 1 << i
        return cls(v)

    @classmethod
    def from_bitstring(cls, s: str) -> Gf2Poly:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise ValueError(f"not a 0/1 bitstring: {s!r}")
        return cls(int(s[::-1], 2))

    @property
    def value(self) -> int:
        return self._v

    @property
    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return self._v.bit_length() - 1 if self._v else NEG_INF

    @property
    def weight(self) -> int:
        return self._v.bit_count()

    def is_zero(self) -> bool:
        return self._v == 0

    def coeff(self, i: int) -> int:
        return (self._v >> i) & 1

    def exponents(self) -> list[int]:
        v, out, i = self._v, [], 0
        while v:
            if v & 1:
                out.append(i)
            v >>= 1
            i += 1
        return out

    def to_bitstring(self) -> str:
        if not self._v:
            return "0"
        return format(self._v, "b")[::-1]

    def __add__(self, other):
        return poly_add(self, other)

    __sub__ = __add__

    def __mul__(self, other):
        return poly_mul(self, other)

    def __floordiv__(self, other):
        return poly_divrem(self, other)[0]

    def __mod__(self, other):
        return poly_divrem(self, other)[1]

    def __divmod__(self, other):
        return poly_divrem(self, other)

    def __eq__(self, other):
        if isinstance(other, Gf2Poly):
            return self._v == other._v
        return NotImplemented

    def __hash__(self):
        return hash(("Gf2Poly", self._v))

    def __bool__(self):
        return self._v != 0

    def __repr__(self):
        return f"Gf2Poly({self.to_bitstring()!r})"

    def __str__(self):
        if not self._v:
            return "0"
        terms = []
        for e in reversed(self.exponents()):
            terms.append("1" if e == 0 else "x" if e == 1 else f"x^{e}")
        return " + ".join(terms)


ZERO = Gf2Poly(0)
ONE = Gf2Poly(1)
X = Gf2Poly(2)


def _as_int(a) -> int:
    return a._v if isinstance(a, Gf2Poly) else int(a)


def _mul(a: int, b: int) -> int:
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def _divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("division by the zero polynomial")
    n = b.bit_length()
    q = 0
    while a.bit_length() >= n:
        shift = a.bit_length() - n
        q ^= 1 << shift
        a ^= b << shift
    return q, a


def _mod(a: int, b: int) -> int:
    return _divmod(a, b)[1]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, _mod(a, b)
    return a


def _mulmod(a: int, b: int, m: int) -> int:
    """a*b mod m with interleaved reduction; operands must already be reduced."""
    n = m.bit_length() - 1
    top = 1 << n
    c = 0
    while b:
        if b & 1:
            c ^= a
        b >>= 1
        a <<= 1
        if a & top:
            a ^= m
    return c


def _powmod(a: int, e: int, m: int) -> int:
    result = 1 if m != 1 else 0
    a = _mod(a, m)
    while e:
        if e & 1:
            result = _mulmod(result, a, m)
        e >>= 1
        if e:
            a = _mulmod(a, a, m)
    return result


def poly_add(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_as_int(a) ^ _as_int(b))


def poly_mul(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    return Gf2Poly(_mul(_as_int(a), _as_int(b)))


def poly_divrem(a: Gf2Poly, b: Gf2Poly) -> tuple[Gf2Poly, Gf2Poly]:
    """Return ``(q, r)`` with ``a = q*b + r`` and ``deg r < deg b``.

    Raises ZeroDivisionError when ``b`` is zero.
    """
    q, r = _divmod(_as_int(a), _as_int(b))
    return Gf2Poly(q), Gf2Poly(r)


def poly_gcd(a: Gf2Poly, b: Gf2Poly) -> Gf2Poly:
    """Greatest common divisor; always monic over GF(2).

    ``gcd(a, 0) == a``; ``gcd(0, 0)`` raises ValueError.
    """
    a, b = _as_int(a), _as_int(b)
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    return Gf2Poly(_gcd(a, b))


def poly_powmod(a: Gf2Poly, e: int, m: Gf2Poly) -> Gf2Poly:
    """``a**e mod m`` by square-and-multiply."""
    if not m:
        raise ZeroDivisionError("modulus is the zero polynomial")
    return Gf2Poly(_powmod(_as_int(a), e, _as_int(m)))


def x_pow_n_plus_1(n: int) -> Gf2Poly:
    """The polynomial ``x**n + 1`` (equal to ``x**n - 1`` in characteristic 2)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Gf2Poly((1 << n) | 1)


def quarter_cyclotomic_quotient(p: int) -> Gf2Poly:
    """``(x**(4p) - 1) / (x**4 - 1) = 1 + x**4 + ... + x**(4(p-1))``."""
    if p < 3:
        raise ValueError(f"p must be at least 3, got {p}")
    v = 0
    for i in range(p):
        v |= 1 << (4 * i)
    return Gf2Poly(v)


def reduce_cyclic(a: Gf2Poly, n: int) -> Gf2Poly:
    """Reduce modulo ``x**n - 1`` by folding exponents mod ``n``."""
    v = _as_int(a)
    mask = (1 << n) - 1
    out = 0
    while v:
        out ^= v & mask
        v >>= n
    return Gf2Poly(out)


def substitute_power(f: Gf2Poly, k: int, n: int | None = None) -> Gf2Poly:
    """``f(x**k)``, optionally reduced modulo ``x**n - 1``.

    With ``n`` given, ``k`` may be any integer (taken mod ``n``).
    """
    if n is None:
        if k < 0:
            raise ValueError("negative exponent substitution needs a cyclic modulus")
        return Gf2Poly.from_exponents(e * k for e in f.exponents())
    return Gf2Poly.from_exponents((e * k) % n for e in f.exponents())


def is_irreducible(f: Gf2Poly) -> bool:
    """Rabin's test: ``x**(2**m) = x (mod f)`` and ``gcd(x**(2**(m/q)) - x, f) = 1``
    for every prime ``q`` dividing ``m = deg f``."""
    fv = _as_int(f)
    m = fv.bit_length() - 1
    if m < 1:
        return False
    if m == 1:
        return True

    def frob(k: int) -> int:
        # x**(2**k) mod f by k squarings
        r = 2
        for _ in range(k):
            r = _mulmod(r, r, fv)
        return r

    if frob(m) != 2:
        return False
    for q in prime_factors(m):
        if _gcd(fv, frob(m // q) ^ 2) != 1:
            return False
    return True

