"""Measurements on periodic binary sequences.

Autocorrelation profiles and their optimality class, linear complexity by the
gcd formula and by Berlekamp-Massey, minimal polynomials, and an exhaustive
equivalence search (shift of a decimation, possibly complemented).
"""

from __future__ import annotations

import io
from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .gf2poly import Gf2Poly, poly_divrem, poly_gcd, x_pow_n_plus_1
from .sequences import BinarySequence, decimate

PERFECT = "perfect"
IDEAL_TWO_LEVEL = "ideal-two-level"
OPTIMAL_VALUE = "optimal-value"
OPTIMAL_MAGNITUDE = "optimal-magnitude"
TYPE_B = "type-B-optimal"
TYPE_C = "type-C-optimal"
NOT_OPTIMAL = "not-optimal"


def autocorrelation(seq: BinarySequence, tau: int) -> int:
    """Periodic autocorrelation ``N - 2 * #{i : s(i) != s(i+tau)}``."""
    n = seq.period
    bits = seq.bits
    return n - 2 * int(np.count_nonzero(bits != np.roll(bits, -(tau % n))))


@dataclass(frozen=True)
class AutocorrProfile:
    period: int
    values: tuple[int, ...]

    @property
    def offpeak(self) -> tuple[int, ...]:
        return self.values[1:]

    def offpeak_set(self) -> frozenset:
        return frozenset(self.values[1:])

    def to_csv(self) -> str:
        buf = io.StringIO()
        buf.write("tau,R\n")
        for tau, r in enumerate(self.values):
            buf.write(f"{tau},{r}\n")
        return buf.getvalue()


def autocorr_profile(seq: BinarySequence) -> AutocorrProfile:
    n = seq.period
    x = 1 - 2 * seq.bits.astype(np.int64)
    idx = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    values = x[idx] @ x
    return AutocorrProfile(n, tuple(int(v) for v in values))


@dataclass(frozen=True)
class OptimalityVerdict:
    n_mod_4: int
    verdict: str
    offpeak_value_set: frozenset = field(default_factory=frozenset)
    degenerate: bool = False

    @property
    def is_optimal(self) -> bool:
        return self.verdict != NOT_OPTIMAL


def classify(profile: AutocorrProfile) -> OptimalityVerdict:
    n = profile.period
    r = n % 4
    values = profile.offpeak_set()
    if not values:
        return OptimalityVerdict(r, NOT_OPTIMAL, values, degenerate=True)
    if n in values:
        # an off-peak value of N means a shorter true period, never optimal
        return OptimalityVerdict(r, NOT_OPTIMAL, values)
    if r == 0:
        if values == {0}:
            verdict = PERFECT
        elif values <= {0, -4}:
            verdict = OPTIMAL_VALUE
        elif values <= {0, 4, -4}:
            verdict = OPTIMAL_MAGNITUDE
        else:
            verdict = NOT_OPTIMAL
    elif r == 1:
        verdict = TYPE_B if values <= {1, -3} else NOT_OPTIMAL
    elif r == 2:
        verdict = TYPE_C if values <= {2, -2} else NOT_OPTIMAL
    else:
        verdict = IDEAL_TWO_LEVEL if values == {-1} else NOT_OPTIMAL
    return OptimalityVerdict(r, verdict, values)


def sequence_polynomial(seq: BinarySequence) -> Gf2Poly:
    return Gf2Poly(seq.to_int())


def gcd_with_period(seq: BinarySequence) -> Gf2Poly:
    """``gcd(x**N - 1, P_s(x))``."""
    return poly_gcd(x_pow_n_plus_1(seq.period), sequence_polynomial(seq))


def minimal_polynomial(seq: BinarySequence) -> Gf2Poly:
    """``(x**N - 1) / gcd(x**N - 1, P_s(x))``; the all-zero sequence gives 1."""
    q, r = poly_divrem(x_pow_n_plus_1(seq.period), gcd_with_period(seq))
    assert not r
    return q


def linear_complexity_gcd(seq: BinarySequence) -> int:
    return seq.period - gcd_with_period(seq).degree


def berlekamp_massey(seq: BinarySequence) -> tuple[int, Gf2Poly]:
    """Shortest LFSR for the periodic sequence.

    Runs over two periods, enough for any linear complexity up to ``N``.
    Returns ``(L, C)`` where ``C(0) = 1`` and ``s(i) = sum_{j=1..L} c_j s(i-j)``.
    """
    bits = [int(b) for b in seq.bits] * 2
    c, b = 1, 1
    length, gap = 0, 1
    window = 0  # bit j holds s(i - j)
    for i, s in enumerate(bits):
        window = (window << 1) | s
        if (c & window).bit_count() & 1:
            t = c
            c ^= b << gap
            if 2 * length <= i:
                length, b, gap = i + 1 - length, t, 1
                continue
        gap += 1
    return length, Gf2Poly(c)


@dataclass(frozen=True)
class LinCompReport:
    period: int
    lc_gcd: int
    lc_bm: int
    minimal_poly: Gf2Poly
    bm_connection: Gf2Poly
    gcd_poly: Gf2Poly

    @property
    def agrees(self) -> bool:
        return self.lc_gcd == self.lc_bm

    def to_dict(self) -> dict:
        return {
            "period": self.period,
            "lc_gcd": self.lc_gcd,
            "lc_bm": self.lc_bm,
            "minimal_poly": self.minimal_poly.to_bitstring(),
            "bm_connection": self.bm_connection.to_bitstring(),
            "gcd_poly": self.gcd_poly.to_bitstring(),
        }


def linear_complexity_report(seq: BinarySequence) -> LinCompReport:
    g = gcd_with_period(seq)
    m = poly_divrem(x_pow_n_plus_1(seq.period), g)[0]
    lc_bm, conn = berlekamp_massey(seq)
    return LinCompReport(seq.period, seq.period - g.degree, lc_bm, m, conn, g)


def run_recurrence(char_poly: Gf2Poly, seed_bits, count: int) -> list[int]:
    """Extend ``seed_bits`` to ``count`` terms with ``s(i) = sum_{j>=1} c_j s(i-j)``
    where ``char_poly = 1 + c_1 x + ... + c_L x^L``."""
    taps = [j for j in char_poly.exponents() if j > 0]
    out = [int(b) for b in seed_bits]
    while len(out) < count:
        i = len(out)
        v = 0
        for j in taps:
            v ^= out[i - j]
        out.append(v)
    return out[:count]


@dataclass(frozen=True)
class Equivalence:
    equivalent: bool
    r: int | None = None
    tau: int | None = None
    complemented: bool | None = None

    def __bool__(self):
        return self.equivalent

    def describe(self) -> str:
        if not self.equivalent:
            return "inequivalent"
        kind = "complement" if self.complemented else "direct"
        return f"equivalent ({kind}, shift {self.tau}, decimation {self.r})"


def equivalence_check(s: BinarySequence, v: BinarySequence) -> Equivalence:
    """Search every ``(r, tau, c)`` for ``v = L^tau(decimate(s, r)) + c``.

    Witnesses are ordered by ``r``, then ``tau``, then ``c`` (direct first).
    """
    n = s.period
    if v.period != n:
        raise ValueError(f"periods differ: {n} vs {v.period}")
    target = v.bits.tobytes()
    target_c = (v.bits ^ 1).tobytes()
    for r in range(1, max(n, 2)):
        if gcd(r, n) != 1:
            continue
        dec = decimate(s, r).bits.tobytes()
        hay = dec + dec[:-1]
        hits = [(hay.find(target), False), (hay.find(target_c), True)]
        hits = [(tau, c) for tau, c in hits if tau >= 0]
        if hits:
            tau, c = min(hits)
            return Equivalence(True, r, tau, c)
    return Equivalence(False)


def degree_gap_says_inequivalent(s: BinarySequence, v: BinarySequence) -> bool:
    """Sufficient test: minimal polynomial degrees differing by 2 or more."""
    return abs(linear_complexity_gcd(s) - linear_complexity_gcd(v)) >= 2
