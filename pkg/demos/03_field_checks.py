# Evaluate the DHL polynomial at p-th roots of unity in GF(2^m).
from dhlseq import build_table
from dhlseq.gf2ext import eval_at, field_pow, find_root_of_unity, multiplicative_order, splitting_field
from dhlseq.gf2poly import Gf2Poly

p = 13
table = build_table(p)
m = multiplicative_order(2, p)
F = splitting_field(p)
print(f"p={p}: GF(2^{m}) with modulus {F.modulus}")
beta = find_root_of_unity(F, p)
S = Gf2Poly.from_exponents(sorted(table.union(0, 1)))

# S(beta^k) only depends on which class k lies in.
values = {}
for k in range(1, p):
    values.setdefault(table.index_of(k), set()).add(eval_at(S, field_pow(beta, k)).rep.value)
for i in range(4):
    print(f"class {i}:", values[i])

# and the paired sums over 4 i theta, 4 i theta^3 are all one
th = table.theta
sums = {
    (eval_at(S, field_pow(beta, 4 * i * th % p)) + eval_at(S, field_pow(beta, 4 * i * th**3 % p))).rep.value
    for i in range(1, p)
}
print("paired sums:", sums)
