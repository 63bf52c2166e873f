# Build the period-116 sequences for p = 29 step by step.
import numpy as np

from dhlseq import build_table, dhl
from dhlseq.analysis import autocorr_profile, classify
from dhlseq.sequences import TUPLES, ConstructionSpec, construct, construct_columns, shift_amounts

p = 29
table = build_table(p)
print("primitive root:", table.theta)
for i, cls in enumerate(table.classes):
    print(f"D{i} =", sorted(cls))

# The four DHL sequences are characteristic functions of two adjacent classes.
for name in ("s1", "s2", "s3", "s4"):
    s = dhl(table, name)
    print(name, s, "off-peak", sorted(autocorr_profile(s).offpeak_set()))

# Columns get shifted by d, 2d, 3d where 4d = 1 mod p.
print("shifts:", shift_amounts(p))
spec = ConstructionSpec(p, "T1", "0000")
cols = construct_columns(spec)
print("column tuple", TUPLES["T1"])
print(np.stack([c.bits for c in cols], axis=1)[:6])  # first rows of the 29 x 4 matrix

# Read the matrix row by row to get u.
for b in ("0000", "1111", "1010"):
    u = construct(ConstructionSpec(p, "T1", b))
    v = classify(autocorr_profile(u))
    print(b, u)
    print("   ", v.verdict, sorted(v.offpeak_value_set))
