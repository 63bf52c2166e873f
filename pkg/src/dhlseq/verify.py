"""Sweep harness that re-derives the autocorrelation and linear complexity
claims for the interleaved construction over admissible primes.

Everything here is deterministic: case order is (p, tuple, b) in a fixed
order and reports carry no timestamps.
"""

from __future__ import annotations

import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .analysis import (
    OPTIMAL_MAGNITUDE,
    autocorr_profile,
    classify,
    equivalence_check,
    linear_complexity_report,
    sequence_polynomial,
)
from .cyclotomy import build_table, dhl_admissible, is_prime
from .gf2ext import eval_at, field_pow, find_root_of_unity, multiplicative_order, splitting_field
from .gf2poly import Gf2Poly, poly_gcd, quarter_cyclotomic_quotient, x_pow_n_plus_1
from .sequences import TUPLES, VALID_B, ConstructionSpec, construct, parse_b

log = logging.getLogger(__name__)

DEFAULT_FIELD_CAP = 64

# b -> (epsilon, g(x)); g = gcd(x^4p - 1, P_u)
_EXPECTED = {
    (0, 0, 0, 0): (4, Gf2Poly.from_exponents([0, 4])),
    (1, 1, 1, 1): (3, Gf2Poly.from_exponents([0, 1, 2, 3])),
    (1, 0, 1, 0): (2, Gf2Poly.from_exponents([0, 2])),
    (0, 1, 0, 1): (2, Gf2Poly.from_exponents([0, 2])),
}


def enumerate_admissible_primes(bound: int) -> list[int]:
    return [p for p in range(5, bound + 1, 4) if is_prime(p) and dhl_admissible(p)]


def expected_epsilon_and_g(b) -> tuple[int, Gf2Poly]:
    return _EXPECTED[parse_b(b)]


@dataclass(frozen=True)
class CaseRecord:
    p: int
    tuple_id: str
    b: tuple[int, int, int, int]
    theta: int
    autocorr_verdict: str
    offpeak_values: tuple[int, ...]
    lc_expected: int
    lc_actual: int
    lc_bm: int
    epsilon_expected: int
    gcd_poly: Gf2Poly
    gcd_poly_expected: Gf2Poly
    bm_agrees: bool
    passed: bool

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "tuple": self.tuple_id,
            "b": list(self.b),
            "theta": self.theta,
            "lc": self.lc_actual,
            "lc_bm": self.lc_bm,
            "lc_expected": self.lc_expected,
            "epsilon": self.epsilon_expected,
            "g": self.gcd_poly.to_bitstring(),
            "g_expected": self.gcd_poly_expected.to_bitstring(),
            "autocorr": self.autocorr_verdict,
            "offpeak": sorted(self.offpeak_values),
            "bm_agrees": self.bm_agrees,
            "pass": self.passed,
        }


def verify_case(p: int, tuple_id: str, b, theta_override: int | None = None) -> CaseRecord:
    spec = ConstructionSpec(p, tuple_id, b, theta_override)
    table = build_table(p, theta_override)
    u = construct(spec)
    eps, g_expected = expected_epsilon_and_g(spec.b)
    verdict = classify(autocorr_profile(u))
    lc = linear_complexity_report(u)
    lc_expected = 4 * p - eps
    passed = (
        verdict.verdict == OPTIMAL_MAGNITUDE
        and lc.gcd_poly == g_expected
        and lc.lc_gcd == lc_expected
        and lc.agrees
    )
    return CaseRecord(
        p=p,
        tuple_id=tuple_id,
        b=spec.b,
        theta=table.theta,
        autocorr_verdict=verdict.verdict,
        offpeak_values=tuple(sorted(verdict.offpeak_value_set)),
        lc_expected=lc_expected,
        lc_actual=lc.lc_gcd,
        lc_bm=lc.lc_bm,
        epsilon_expected=eps,
        gcd_poly=lc.gcd_poly,
        gcd_poly_expected=g_expected,
        bm_agrees=lc.agrees,
        passed=passed,
    )


def _s_polynomial(table) -> Gf2Poly:
    return Gf2Poly.from_exponents(sorted(table.union(0, 1)))


def _field_too_large(p: int, field_cap: int) -> bool:
    m = multiplicative_order(2, p)
    if m > field_cap:
        log.info("p=%d: extension degree %d exceeds cap %d, field route skipped", p, m, field_cap)
        return True
    return False


def verify_root_value_pattern(
    p: int, theta_override: int | None = None, field_cap: int = DEFAULT_FIELD_CAP
) -> bool | None:
    """Check ``S(beta^k)`` takes the values s, t, s+1, t+1 on D0..D3, where
    ``s = S(beta)`` and ``t = T(beta)``. Returns None if the field is over the cap."""
    if _field_too_large(p, field_cap):
        return None
    table = build_table(p, theta_override)
    spec = splitting_field(p)
    beta = find_root_of_unity(spec, p)
    S = _s_polynomial(table)
    T = Gf2Poly.from_exponents(sorted(table.union(1, 2)))
    s_val = eval_at(S, beta)
    t_val = eval_at(T, beta)
    if eval_at(S, field_pow(beta, table.theta)) != t_val:
        return False
    one = spec.one()
    expected = (s_val, t_val, s_val + one, t_val + one)
    for k in range(1, p):
        if eval_at(S, field_pow(beta, k)) != expected[table.index_of(k)]:
            return False
    return True


@dataclass(frozen=True)
class RootCheckResult:
    p: int
    field_route: bool | None  # None when skipped by the field cap
    poly_route: bool

    @property
    def passed(self) -> bool:
        return self.poly_route and self.field_route is not False

    def __bool__(self):
        return self.passed

    def to_dict(self) -> dict:
        return {"p": self.p, "field": self.field_route, "poly": self.poly_route, "pass": self.passed}


def verify_no_nontrivial_roots(
    p: int, theta_override: int | None = None, field_cap: int = DEFAULT_FIELD_CAP
) -> RootCheckResult:
    """No ``beta^i`` (``1 <= i < p``) is a root of ``P_u``.

    Field route: ``S(beta^(4 i theta)) + S(beta^(4 i theta^3)) = 1`` for every i.
    Polynomial route: ``gcd(x^4p - 1, P_u)`` divides ``x^4 - 1`` for the base
    tuple and every valid b, i.e. ``P_u`` is coprime to ``(x^4p - 1)/(x^4 - 1)``.
    """
    table = build_table(p, theta_override)
    field_ok = None
    if not _field_too_large(p, field_cap):
        spec = splitting_field(p)
        beta = find_root_of_unity(spec, p)
        S = _s_polynomial(table)
        th = table.theta
        field_ok = all(
            (
                eval_at(S, field_pow(beta, (4 * i * th) % p))
                + eval_at(S, field_pow(beta, (4 * i * th**3) % p))
            ).is_one()
            for i in range(1, p)
        )
    quotient = quarter_cyclotomic_quotient(p)
    x4 = x_pow_n_plus_1(4)
    poly_ok = True
    for b in VALID_B:
        pu = sequence_polynomial(construct(ConstructionSpec(p, "T1", b, theta_override)))
        g = poly_gcd(x_pow_n_plus_1(4 * p), pu)
        if poly_gcd(pu, quotient) != Gf2Poly(1) or (x4 % g):
            poly_ok = False
    return RootCheckResult(p, field_ok, poly_ok)


@dataclass(frozen=True)
class EquivalenceMatrix:
    p: int
    tuple_id: str
    bs: tuple
    verdicts: tuple  # verdicts[i][j] is True when bs[i] ~ bs[j]

    def expected(self) -> tuple:
        def related(a, b):
            return a == b or all(x != y for x, y in zip(a, b))

        return tuple(tuple(related(a, b) for b in self.bs) for a in self.bs)

    @property
    def matches_expected(self) -> bool:
        return self.verdicts == self.expected()

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "tuple": self.tuple_id,
            "b": ["".join(map(str, b)) for b in self.bs],
            "equivalent": [list(row) for row in self.verdicts],
            "pass": self.matches_expected,
        }


def equivalence_matrix(p: int, tuple_id: str, theta_override: int | None = None) -> EquivalenceMatrix:
    seqs = [construct(ConstructionSpec(p, tuple_id, b, theta_override)) for b in VALID_B]
    verdicts = tuple(tuple(bool(equivalence_check(s, v)) for v in seqs) for s in seqs)
    return EquivalenceMatrix(p, tuple_id, VALID_B, verdicts)


@dataclass
class VerificationReport:
    bound: int
    cases: list = field(default_factory=list)
    value_pattern: dict = field(default_factory=dict)
    root_checks: list = field(default_factory=list)
    equivalence: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "by_family": {}}
        for c in self.cases:
            key = "pass" if c.passed else "fail"
            out[key] += 1
            fam = out["by_family"].setdefault("T1" if c.tuple_id == "T1" else "E", {"pass": 0, "fail": 0})
            fam[key] += 1
        out["root_check_fail"] = sum(v is False for v in self.value_pattern.values()) + sum(
            not r.passed for r in self.root_checks
        )
        out["equivalence_fail"] = sum(not m.matches_expected for m in self.equivalence)
        return out

    @property
    def all_passed(self) -> bool:
        s = self.summary
        return s["fail"] == 0 and s["root_check_fail"] == 0 and s["equivalence_fail"] == 0

    def to_dict(self) -> dict:
        return {
            "bound": self.bound,
            "cases": [c.to_dict() for c in self.cases],
            "root_checks": {
                "value_pattern": {str(p): v for p, v in self.value_pattern.items()},
                "no_nontrivial_roots": [r.to_dict() for r in self.root_checks],
            },
            "equivalence": [m.to_dict() for m in self.equivalence],
            "summary": self.summary,
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _case_args(primes):
    return [(p, t, b) for p in primes for t in TUPLES for b in VALID_B]


def _run_case(args):
    return verify_case(*args)


def run_all(
    bound: int,
    field_cap: int = DEFAULT_FIELD_CAP,
    equivalence: bool = True,
    workers: int = 1,
) -> VerificationReport:
    """Verify every (admissible p <= bound) x tuple x valid b, plus the
    root-of-unity checks and the equivalence matrices."""
    primes = enumerate_admissible_primes(bound) if bound >= 5 else []
    report = VerificationReport(bound)
    args = _case_args(primes)
    if workers > 1 and args:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            report.cases = list(pool.map(_run_case, args, chunksize=4))
    else:
        report.cases = [_run_case(a) for a in args]
    for p in primes:
        report.value_pattern[p] = verify_root_value_pattern(p, field_cap=field_cap)
        report.root_checks.append(verify_no_nontrivial_roots(p, field_cap=field_cap))
        if equivalence:
            report.equivalence.extend(equivalence_matrix(p, t) for t in TUPLES)
    return report
