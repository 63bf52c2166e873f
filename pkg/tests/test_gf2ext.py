import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dhlseq.cyclotomy import build_table
from dhlseq.gf2ext import (
    FieldElem,
    FieldSpec,
    eval_at,
    field_mul,
    field_pow,
    find_irreducible,
    find_root_of_unity,
    multiplicative_order,
    splitting_field,
)
from dhlseq.gf2poly import Gf2Poly, x_pow_n_plus_1


def brute_order(a, p):
    return next(t for t in range(1, p) if pow(a, t, p) == 1)


@pytest.mark.parametrize("a,p,expected", [(2, 5, 4), (2, 29, 28), (1, 7, 1), (2, 13, 12)])
def test_multiplicative_order(a, p, expected):
    assert multiplicative_order(a, p) == expected == brute_order(a, p)


def test_multiplicative_order_agrees_with_brute_force():
    for p in [5, 13, 17, 29, 37, 41, 53, 173]:
        for a in range(1, p):
            assert multiplicative_order(a, p) == brute_order(a, p)


def test_multiplicative_order_zero():
    with pytest.raises(ValueError):
        multiplicative_order(29, 29)


def test_find_irreducible_small():
    assert find_irreducible(1) == Gf2Poly.from_exponents([0, 1])
    assert find_irreducible(2) == Gf2Poly.from_exponents([0, 1, 2])


@pytest.mark.parametrize("seed", [0, 1, 5, 9, 14])
def test_find_irreducible_degree4(seed):
    f = find_irreducible(4, seed)
    assert f.degree == 4
    # trial division by every polynomial of degree 1 or 2
    for d in range(2, 8):
        assert not (f % Gf2Poly(d)).is_zero()


def test_find_irreducible_deterministic():
    assert find_irreducible(28, 3) == find_irreducible(28, 3)


@pytest.fixture(scope="module")
def f16():
    return splitting_field(5)


def test_field_spec_rejects_reducible():
    with pytest.raises(ValueError):
        FieldSpec(4, Gf2Poly.from_exponents([0, 2, 4]))  # (x^2+x+1)^2


def test_field_pow_basics(f16):
    a = f16.elem(0b0110)
    assert field_pow(a, 0).is_one()
    assert field_pow(a, f16.order).is_one()


def test_root_of_unity_p5(f16):
    beta = find_root_of_unity(f16, 5)
    assert field_pow(beta, 5).is_one()
    assert not beta.is_one()
    assert field_mul(beta, field_pow(beta, 4)).is_one()
    # first candidate g whose cube is not 1; computed independently by repeated multiplication
    for g in range(2, 16):
        ge = f16.elem(g)
        cube = field_mul(ge, field_mul(ge, ge))
        if not cube.is_one():
            assert beta == cube
            break


def test_root_of_unity_needs_divisibility(f16):
    with pytest.raises(ValueError):
        find_root_of_unity(f16, 7)


def test_mismatched_fields(f16):
    other = splitting_field(13)
    with pytest.raises(ValueError):
        field_mul(f16.one(), other.one())


@pytest.mark.parametrize("p", [5, 13, 29])
def test_eval_examples(p):
    spec = splitting_field(p)
    table = build_table(p)
    S = Gf2Poly.from_exponents(sorted(table.union(0, 1)))
    beta = find_root_of_unity(spec, p)
    assert eval_at(S, spec.one()).is_zero()
    assert eval_at(Gf2Poly(0), beta).is_zero()
    assert eval_at(x_pow_n_plus_1(p), beta).is_zero()


def naive_eval(f: Gf2Poly, a: FieldElem) -> FieldElem:
    acc = a.spec.zero()
    for e in f.exponents():
        acc = acc + field_pow(a, e)
    return acc


@pytest.mark.parametrize("p", [5, 13, 29])
def test_four_value_pattern(p):
    spec = splitting_field(p)
    table = build_table(p)
    S = Gf2Poly.from_exponents(sorted(table.union(0, 1)))
    beta = find_root_of_unity(spec, p)
    s = eval_at(S, beta)
    t = eval_at(S, field_pow(beta, table.theta))
    T = Gf2Poly.from_exponents(sorted(table.union(1, 2)))
    assert t == eval_at(T, beta) == naive_eval(T, beta)
    one = spec.one()
    for k in range(1, p):
        val = eval_at(S, field_pow(beta, k))
        assert val == naive_eval(S, field_pow(beta, k))
        assert val == (s, t, s + one, t + one)[table.index_of(k)]


@pytest.mark.parametrize("p", [5, 13, 29])
def test_root_sum_is_one(p):
    spec = splitting_field(p)
    table = build_table(p)
    S = Gf2Poly.from_exponents(sorted(table.union(0, 1)))
    beta = find_root_of_unity(spec, p)
    th = table.theta
    for k in range(1, p):
        a = eval_at(S, field_pow(beta, 4 * k * th % p))
        b = eval_at(S, field_pow(beta, 4 * k * th**3 % p))
        assert (a + b).is_one()


_F = splitting_field(29)  # GF(2^28)
elems = st.integers(min_value=0, max_value=(1 << 28) - 1).map(_F.elem)


@settings(max_examples=100)
@given(elems, elems, elems)
def test_field_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a


@settings(max_examples=50)
@given(elems)
def test_nonzero_has_group_order(a):
    if not a.is_zero():
        assert field_pow(a, _F.order).is_one()
