"""Binary sequences and the period-4p interleaved construction.

A :class:`BinarySequence` holds one period as a read-only ``uint8`` numpy
array. Text form is one line of ``'0'``/``'1'`` characters, index 0 first.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass
from math import gcd

import numpy as np

from .cyclotomy import CyclotomicTable, build_table, dhl_admissible, is_prime, mod_inverse


class NotAdmissibleWarning(UserWarning):
    """Construction ran for a prime where optimality is not guaranteed."""


class BinarySequence:
    __slots__ = ("_bits",)

    def __init__(self, bits):
        arr = np.array(bits, dtype=np.uint8).ravel()
        if arr.size == 0:
            raise ValueError("a sequence needs a positive period")
        if np.any(arr > 1):
            raise ValueError("bits must be 0 or 1")
        arr.setflags(write=False)
        self._bits = arr

    @classmethod
    def from_support(cls, support, period: int) -> BinarySequence:
        bits = np.zeros(period, dtype=np.uint8)
        bits[[t % period for t in support]] = 1
        return cls(bits)

    @classmethod
    def from_string(cls, text: str) -> BinarySequence:
        text = text.strip()
        if not text or set(text) - {"0", "1"}:
            raise ValueError("sequence text must be a non-empty line of 0/1 characters")
        return cls(np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0"))

    @property
    def bits(self) -> np.ndarray:
        return self._bits

    @property
    def period(self) -> int:
        return int(self._bits.size)

    def support(self) -> frozenset:
        return frozenset(int(t) for t in np.flatnonzero(self._bits))

    def to_int(self) -> int:
        """Bit ``i`` of the result is ``self[i]``."""
        return int(self.to_string()[::-1], 2)

    def to_string(self) -> str:
        return (self._bits + ord("0")).tobytes().decode("ascii")

    def __len__(self):
        return self.period

    def __getitem__(self, t):
        if isinstance(t, slice):
            return self._bits[t]
        return int(self._bits[t % self.period])

    def __iter__(self):
        return (int(b) for b in self._bits)

    def __eq__(self, other):
        if not isinstance(other, BinarySequence):
            return NotImplemented
        return self.period == other.period and bool(np.array_equal(self._bits, other._bits))

    def __hash__(self):
        return hash(self._bits.tobytes())

    def __repr__(self):
        s = self.to_string()
        if len(s) > 40:
            s = s[:37] + "..."
        return f"BinarySequence({s!r}, period={self.period})"

    def __str__(self):
        return self.to_string()


def left_shift(seq: BinarySequence, tau: int) -> BinarySequence:
    """``result(t) = seq(t + tau)``."""
    return BinarySequence(np.roll(seq.bits, -(tau % seq.period)))


def complement(seq: BinarySequence) -> BinarySequence:
    return BinarySequence(seq.bits ^ 1)


def add_constant(seq: BinarySequence, c: int) -> BinarySequence:
    return complement(seq) if c & 1 else seq


def decimate(seq: BinarySequence, r: int) -> BinarySequence:
    """``result(t) = seq(r*t mod N)``; ``r`` must be coprime to ``N``."""
    n = seq.period
    if gcd(r, n) != 1:
        raise ValueError(f"decimation factor {r} is not coprime to period {n}")
    return BinarySequence(seq.bits[(r * np.arange(n)) % n])


def interleave(cols) -> BinarySequence:
    """Read the N x T matrix with columns ``cols`` row by row."""
    cols = list(cols)
    if not cols:
        raise ValueError("need at least one column")
    n = cols[0].period
    if any(c.period != n for c in cols):
        raise ValueError("all columns must share one period")
    return BinarySequence(np.stack([c.bits for c in cols], axis=1).ravel())


# Supports of the four DHL sequences as pairs of class indices.
DHL_SUPPORTS = {"s1": (0, 1), "s2": (0, 3), "s3": (1, 2), "s4": (2, 3)}


def dhl(table: CyclotomicTable, variant: str) -> BinarySequence:
    """Ding-Helleseth-Lam sequence of period p whose support is a union of two
    cyclotomic classes: s1 -> D0+D1, s2 -> D0+D3, s3 -> D1+D2, s4 -> D2+D3."""
    try:
        i, j = DHL_SUPPORTS[variant]
    except KeyError:
        raise ValueError(f"unknown DHL variant {variant!r}") from None
    return BinarySequence.from_support(table.union(i, j), table.p)


# Column tuples (a0, a1, a2, a3). T1 is the base construction; E1..E6 follow
# the order of the extended family.
TUPLES = {
    "T1": ("s3", "s2", "s1", "s1"),
    "E1": ("s2", "s3", "s1", "s1"),
    "E2": ("s4", "s1", "s2", "s2"),
    "E3": ("s1", "s4", "s2", "s2"),
    "E4": ("s4", "s1", "s3", "s3"),
    "E5": ("s1", "s4", "s3", "s3"),
    "E6": ("s2", "s3", "s4", "s4"),
}

VALID_B = ((0, 0, 0, 0), (1, 1, 1, 1), (1, 0, 1, 0), (0, 1, 0, 1))


def parse_b(b) -> tuple[int, int, int, int]:
    """Accept ``"0101"`` or any 4-element 0/1 iterable."""
    if isinstance(b, str):
        if len(b) != 4 or set(b) - {"0", "1"}:
            raise ValueError(f"b must be 4 characters of 0/1, got {b!r}")
        b = [int(c) for c in b]
    b = tuple(int(x) for x in b)
    if len(b) != 4 or any(x not in (0, 1) for x in b):
        raise ValueError(f"b must be a 4-element 0/1 vector, got {b!r}")
    if b[0] != b[2] or b[1] != b[3]:
        raise ValueError("b(0)=b(2),b(1)=b(3) required")
    return b


@dataclass(frozen=True)
class ConstructionSpec:
    p: int
    tuple_id: str
    b: tuple[int, int, int, int]
    theta_override: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "b", parse_b(self.b))
        if self.tuple_id not in TUPLES:
            raise ValueError(f"unknown tuple {self.tuple_id!r}; choose from {', '.join(TUPLES)}")
        cols = TUPLES[self.tuple_id]
        # the fourth column is shifted by 3d; every supported tuple repeats a2 there
        assert cols[2] == cols[3], cols

    @property
    def columns(self) -> tuple[str, str, str, str]:
        return TUPLES[self.tuple_id]

    def to_json(self) -> str:
        return json.dumps(
            {"p": self.p, "tuple": self.tuple_id, "b": list(self.b), "theta": self.theta_override}
        )

    @classmethod
    def from_json(cls, text: str) -> ConstructionSpec:
        d = json.loads(text)
        return cls(d["p"], d["tuple"], tuple(d["b"]), d.get("theta"))


def shift_amounts(p: int) -> tuple[int, int, int]:
    """``(d, 2d, 3d) mod p`` with ``4d = 1 (mod p)``."""
    d = mod_inverse(4, p)
    return d, (2 * d) % p, (3 * d) % p


def construct_columns(spec: ConstructionSpec, table: CyclotomicTable | None = None):
    """The four period-p columns of the interleaved sequence."""
    if table is None:
        table = build_table(spec.p, spec.theta_override)
    a = [dhl(table, name) for name in spec.columns]
    shifts = (0,) + shift_amounts(spec.p)
    return [add_constant(left_shift(a[j], shifts[j]), spec.b[j]) for j in range(4)]


def construct(spec: ConstructionSpec, strict: bool = True) -> BinarySequence:
    """Period-4p sequence interleaving shifted, offset DHL sequences.

    With ``strict`` a prime outside the optimal family raises ValueError;
    otherwise the sequence is still built and a NotAdmissibleWarning is issued.
    """
    adm = dhl_admissible(spec.p)
    if not adm:
        # without a prime p = 1 (mod 4) there are no quartic classes at all
        if strict or not is_prime(spec.p) or spec.p % 4 != 1:
            raise ValueError(f"p={spec.p}: {adm.reason}")
        warnings.warn(
            f"p={spec.p}: {adm.reason}; optimality not guaranteed",
            NotAdmissibleWarning,
            stacklevel=2,
        )
    return interleave(construct_columns(spec))


def read_sequence(path) -> BinarySequence:
    with open(path) as fh:
        return BinarySequence.from_string(fh.read())


def write_sequence(seq: BinarySequence, path) -> None:
    with open(path, "w") as fh:
        fh.write(seq.to_string() + "\n")
