"""Period-4p binary sequences with optimal autocorrelation magnitude built by
interleaving Ding-Helleseth-Lam sequences, with tools to measure their
autocorrelation, minimal polynomial and linear complexity."""

__version__ = "0.1.0"

from .analysis import (
    autocorr_profile,
    autocorrelation,
    berlekamp_massey,
    classify,
    equivalence_check,
    linear_complexity_gcd,
    linear_complexity_report,
    minimal_polynomial,
    sequence_polynomial,
)
from .cyclotomy import build_table, dhl_admissible, find_primitive_root
from .gf2poly import Gf2Poly
from .sequences import (
    TUPLES,
    VALID_B,
    BinarySequence,
    ConstructionSpec,
    construct,
    dhl,
    interleave,
)
from .verify import run_all, verify_case

__all__ = [
    "TUPLES",
    "VALID_B",
    "BinarySequence",
    "ConstructionSpec",
    "Gf2Poly",
    "autocorr_profile",
    "autocorrelation",
    "berlekamp_massey",
    "build_table",
    "classify",
    "construct",
    "dhl",
    "dhl_admissible",
    "equivalence_check",
    "find_primitive_root",
    "interleave",
    "linear_complexity_gcd",
    "linear_complexity_report",
    "minimal_polynomial",
    "run_all",
    "sequence_polynomial",
    "verify_case",
]
