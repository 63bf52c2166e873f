"""Arithmetic in GF(2^m) realized as GF(2)[x] / (irreducible modulus).

Used to get hold of a primitive p-th root of unity ``beta`` (``m`` is the
multiplicative order of 2 mod p) and to evaluate GF(2) polynomials at powers
of ``beta``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2poly import Gf2Poly, _mulmod, is_irreducible


def multiplicative_order(a: int, p: int) -> int:
    """Smallest ``t >= 1`` with ``a**t = 1 (mod p)``."""
    a %= p
    if a == 0:
        raise ValueError(f"{a} is not invertible modulo {p}")
    t, x = 1, a
    while x != 1:
        x = (x * a) % p
        t += 1
        if t > p:
            raise ValueError(f"{a} is not invertible modulo {p}")
    return t


def find_irreducible(m: int, seed: int = 0) -> Gf2Poly:
    """First irreducible ``x**m + c`` scanning ``c = seed, seed+1, ...`` (mod 2**m).

    Candidates with zero constant term are skipped, so ``m=1`` gives ``x+1``.
    """
    if m < 1:
        raise ValueError(f"degree must be positive, got {m}")
    span = 1 << m
    for i in range(span):
        c = (seed + i) % span
        if not c & 1:
            continue
        f = Gf2Poly((1 << m) | c)
        if is_irreducible(f):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {m} found")


@dataclass(frozen=True)
class FieldSpec:
    m: int
    modulus: Gf2Poly

    def __post_init__(self):
        if self.modulus.degree != self.m:
            raise ValueError(f"modulus degree {self.modulus.degree} != m={self.m}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus.to_bitstring()} is reducible")

    @property
    def order(self) -> int:
        return (1 << self.m) - 1

    def elem(self, rep) -> FieldElem:
        v = rep.value if isinstance(rep, Gf2Poly) else int(rep)
        mod = self.modulus.value
        # reduce arbitrary input representatives
        n = self.m
        while v.bit_length() > n:
            v ^= mod << (v.bit_length() - n - 1)
        return FieldElem(self, Gf2Poly(v))

    def zero(self) -> FieldElem:
        return FieldElem(self, Gf2Poly(0))

    def one(self) -> FieldElem:
        return FieldElem(self, Gf2Poly(1))


def splitting_field(p: int, seed: int = 0) -> FieldSpec:
    """FieldSpec for the smallest binary field holding the p-th roots of unity."""
    m = multiplicative_order(2, p)
    return FieldSpec(m, find_irreducible(m, seed))


@dataclass(frozen=True)
class FieldElem:
    spec: FieldSpec
    rep: Gf2Poly

    def __post_init__(self):
        if self.rep.value.bit_length() > self.spec.m:
            raise ValueError("representative not reduced")

    def _check(self, other):
        if not isinstance(other, FieldElem):
            return NotImplemented
        if other.spec != self.spec:
            raise ValueError("field elements from different fields")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is NotImplemented:
            return other
        return FieldElem(self.spec, Gf2Poly(self.rep.value ^ other.rep.value))

    __sub__ = __add__

    def __mul__(self, other):
        return field_mul(self, other)

    def __pow__(self, e: int):
        return field_pow(self, e)

    def is_zero(self) -> bool:
        return not self.rep

    def is_one(self) -> bool:
        return self.rep.value == 1


def field_mul(a: FieldElem, b: FieldElem) -> FieldElem:
    if a.spec != b.spec:
        raise ValueError("field elements from different fields")
    v = _mulmod(a.rep.value, b.rep.value, a.spec.modulus.value)
    return FieldElem(a.spec, Gf2Poly(v))


def field_pow(a: FieldElem, e: int) -> FieldElem:
    if e < 0:
        raise ValueError("negative exponent")
    mod = a.spec.modulus.value
    result, base = 1, a.rep.value
    while e:
        if e & 1:
            result = _mulmod(result, base, mod)
        e >>= 1
        if e:
            base = _mulmod(base, base, mod)
    return FieldElem(a.spec, Gf2Poly(result))


def find_root_of_unity(spec: FieldSpec, p: int) -> FieldElem:
    """Primitive p-th root of unity ``g**((2**m - 1) / p)`` for the first
    candidate ``g`` (reps 2, 3, 4, ... i.e. x, x+1, x^2, ...) giving a value != 1."""
    if spec.order % p:
        raise ValueError(f"{p} does not divide 2^{spec.m} - 1")
    cofactor = spec.order // p
    for g in range(2, 1 << spec.m):
        beta = field_pow(FieldElem(spec, Gf2Poly(g)), cofactor)
        if not beta.is_one():
            return beta
    raise AssertionError("no root of unity found")  # unreachable for valid specs


def eval_at(f: Gf2Poly, a: FieldElem) -> FieldElem:
    """Horner evaluation of ``f`` at ``a``."""
    mod = a.spec.modulus.value
    av = a.rep.value
    acc = 0
    v = f.value
    for i in range(v.bit_length() - 1, -1, -1):
        acc = _mulmod(acc, av, mod)
        if (v >> i) & 1:
            acc ^= 1
    return FieldElem(a.spec, Gf2Poly(acc))
