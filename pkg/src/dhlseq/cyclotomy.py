"""Number theory mod p: primitive roots, quartic cyclotomic classes and the
admissibility test for the optimal Ding-Helleseth-Lam sequences."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_primitive_root(g: int, p: int) -> bool:
    if g % p == 0:
        return False
    return all(pow(g, (p - 1) // q, p) != 1 for q in prime_factors(p - 1))


def primitive_roots(p: int) -> list[int]:
    return [g for g in range(1, p) if is_primitive_root(g, p)]


def find_primitive_root(p: int) -> int:
    """Smallest positive primitive root modulo the odd prime ``p``."""
    if not is_prime(p) or p == 2:
        raise ValueError(f"{p} is not an odd prime")
    for g in range(2, p):
        if is_primitive_root(g, p):
            return g
    raise AssertionError("unreachable")


def mod_inverse(a: int, p: int) -> int:
    if a % p == 0:
        raise ValueError(f"{a} is not invertible modulo {p}")
    return pow(a, -1, p)


@dataclass(frozen=True)
class CyclotomicTable:
    """Quartic cyclotomic classes ``D_i = {theta**(i+4j)}`` of Z_p^*."""

    p: int
    f: int
    theta: int
    classes: tuple[frozenset, frozenset, frozenset, frozenset]
    class_index: dict = field(compare=False, repr=False)

    def index_of(self, k: int) -> int:
        """Class index of a nonzero residue."""
        k %= self.p
        if k == 0:
            raise ValueError("0 lies in no cyclotomic class")
        return self.class_index[k]

    def union(self, *idx: int) -> frozenset:
        out = frozenset()
        for i in idx:
            out |= self.classes[i % 4]
        return out


def build_table(p: int, theta_override: int | None = None) -> CyclotomicTable:
    if not is_prime(p) or p % 4 != 1:
        raise ValueError(f"p={p} must be a prime with p = 1 (mod 4)")
    if theta_override is None:
        theta = find_primitive_root(p)
    else:
        theta = theta_override % p
        if not is_primitive_root(theta, p):
            raise ValueError(f"theta={theta_override} is not a primitive root mod {p}")
    f = (p - 1) // 4
    lookup = {}
    classes = []
    for i in range(4):
        members = frozenset(pow(theta, i + 4 * j, p) for j in range(f))
        classes.append(members)
        for k in members:
            lookup[k] = i
    return CyclotomicTable(p, f, theta, tuple(classes), lookup)


@dataclass(frozen=True)
class QuarticDecomposition:
    x: int
    y: int  # reported as |y|; the sign is unobservable downstream


def decompose_x2_4y2(p: int) -> QuarticDecomposition:
    """``p = x**2 + 4*y**2`` with ``x > 0`` and ``y >= 1`` found by scanning ``y``."""
    if p % 4 != 1:
        raise ValueError(f"p={p} is not 1 mod 4")
    y = 1
    while 4 * y * y < p:
        rest = p - 4 * y * y
        x = isqrt(rest)
        if x * x == rest:
            return QuarticDecomposition(x, y)
        y += 1
    raise ValueError(f"{p} has no representation x^2 + 4y^2")


@dataclass(frozen=True)
class Admissibility:
    p: int
    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self):
        return self.ok

    @property
    def reason(self) -> str:
        return "; ".join(self.reasons)


def dhl_admissible(p: int) -> Admissibility:
    """Whether ``p`` is a prime ``4f+1 = x**2 + 4`` with ``f`` odd.

    Failing inputs carry every violated condition in ``reasons``.
    """
    if not is_prime(p):
        return Admissibility(p, False, ("p not prime",))
    if p % 4 != 1:
        return Admissibility(p, False, ("p != 1 (mod 4)",))
    reasons = []
    f = (p - 1) // 4
    if f % 2 == 0:
        reasons.append("f even: p not admissible")
    dec = decompose_x2_4y2(p)
    if dec.y != 1:
        reasons.append(f"y=±1 fails (|y|={dec.y})")
    return Admissibility(p, not reasons, tuple(reasons))
