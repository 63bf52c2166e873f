# Linear complexity of the constructed sequences two ways: gcd with x^N + 1 and
# Berlekamp-Massey. The gap 4p - LC depends only on b.
from dhlseq.analysis import berlekamp_massey, linear_complexity_report, run_recurrence
from dhlseq.sequences import TUPLES, VALID_B, ConstructionSpec, construct

p = 29
for tuple_id in TUPLES:
    row = []
    for b in VALID_B:
        u = construct(ConstructionSpec(p, tuple_id, b))
        rep = linear_complexity_report(u)
        assert rep.agrees
        row.append(f"{''.join(map(str, b))}:{rep.lc_gcd} g={rep.gcd_poly}")
    print(tuple_id, "  ".join(row))

# The minimal polynomial is enough to regenerate the whole sequence from its
# first LC bits.
u = construct(ConstructionSpec(p, "E2", "0101"))
rep = linear_complexity_report(u)
seed = list(u)[: rep.lc_gcd]
again = run_recurrence(rep.minimal_poly, seed, u.period)
print("regenerated:", again == list(u))

L, conn = berlekamp_massey(u)
print("BM length", L, "connection poly weight", conn.weight)
