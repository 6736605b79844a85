import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quadbent.gfcore import (IRREDUCIBLE_POLYS, BinaryField, is_irreducible, least_irreducible,
                             make_context, standard_field)


def naive_mulmod(a, b, f):
    # schoolbook product, then long division; shares nothing with BinaryField.mul
    prod = 0
    for i in range(b.bit_length()):
        if b >> i & 1:
            prod ^= a << i
    d = f.bit_length() - 1
    for k in range(prod.bit_length() - 1, d - 1, -1):
        if prod >> k & 1:
            prod ^= f << (k - d)
    return prod


def irreducible_by_trial_division(f):
    d = f.bit_length() - 1
    for g in range(2, 1 << (d // 2 + 1)):
        if g.bit_length() - 1 < 1:
            continue
        if naive_mulmod(f, 1, g) == 0:
            return False
    return True


def test_table_entries_are_irreducible():
    for d, f in IRREDUCIBLE_POLYS.items():
        assert f.bit_length() - 1 == d
        assert is_irreducible(f), d


@pytest.mark.parametrize("d", range(1, 14))
def test_table_is_lexicographically_least(d):
    f = IRREDUCIBLE_POLYS[d]
    assert irreducible_by_trial_division(f)
    assert not any(irreducible_by_trial_division(g) for g in range(1 << d, f))


def test_degree_three_entry():
    assert IRREDUCIBLE_POLYS[3] == 0b1011


def test_search_beyond_table_follows_same_rule():
    f = least_irreducible(65)
    assert f.bit_length() - 1 == 65 and is_irreducible(f)


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        BinaryField(4, 0b10101)  # (x^2+x+1)^2


@pytest.mark.parametrize("d", [2, 3, 6, 8, 17, 18, 24])
def test_mul_matches_schoolbook(d):
    F = standard_field(d)
    rng = random.Random(d)
    for _ in range(300):
        a, b = rng.randrange(F.order), rng.randrange(F.order)
        assert F.mul(a, b) == naive_mulmod(a, b, F.modulus)


@pytest.mark.parametrize("d", [6, 12, 18, 23])
def test_array_arithmetic_matches_scalar(d):
    F = standard_field(d)
    rng = np.random.default_rng(d)
    a = rng.integers(0, F.order, 500)
    b = rng.integers(0, F.order, 500)
    a[:3] = 0
    prod = F.mul_array(a, b)
    assert [int(x) for x in prod] == [F.mul(int(x), int(y)) for x, y in zip(a, b)]
    cube = F.pow_array(a, 3)
    assert [int(x) for x in cube] == [F.pow(int(x), 3) for x in a]


@pytest.mark.parametrize("d", [1, 2, 5, 8])
def test_inverse(d):
    F = standard_field(d)
    for a in range(1, F.order):
        assert F.mul(a, F.inv(a)) == 1


def test_generator_has_full_order():
    for d in (1, 4, 6, 12, 20):
        F = standard_field(d)
        assert F.order_of(F.generator) == F.order - 1


# -- make_context --------------------------------------------------------------

def test_context_e1_embedding_is_identity():
    ctx = make_context(1, 6)
    assert ctx.n == 6
    assert [ctx.embed(a) for a in (0, 1)] == [0, 1]


def test_context_e3_embedding_is_multiplicative():
    ctx = make_context(3, 6)
    assert ctx.n == 18
    for a, b in itertools.product(range(8), repeat=2):
        assert ctx.big.mul(ctx.embed(a), ctx.embed(b)) == ctx.embed(ctx.small.mul(a, b))
        assert ctx.embed(a ^ b) == ctx.embed(a) ^ ctx.embed(b)
    assert ctx.embed(1) == 1


@pytest.mark.parametrize("e,m", [(2, 4), (3, 6), (4, 4), (5, 2), (2, 10)])
def test_embed_root_is_least_root(e, m):
    ctx = make_context(e, m)
    roots = [x for x in range(ctx.big.order) if _eval(ctx.big, ctx.def_poly_e, x) == 0] \
        if ctx.n <= 16 else None
    if roots is not None:
        assert ctx.embed_root == min(roots)
        assert len(roots) == e
    assert _eval(ctx.big, ctx.def_poly_e, ctx.embed_root) == 0


def _eval(F, poly, x):
    acc = 0
    for j in range(poly.bit_length() - 1, -1, -1):
        acc = F.mul(acc, x) ^ (poly >> j & 1)
    return acc


def test_context_rejects_odd_m():
    with pytest.raises(ValueError):
        make_context(2, 5)


def test_context_rejects_out_of_range_e():
    with pytest.raises(ValueError):
        make_context(17, 2)
    with pytest.raises(ValueError):
        make_context(0, 2)


def test_unembed_round_trip():
    ctx = make_context(4, 4)
    for a in range(16):
        assert ctx.unembed(ctx.embed(a)) == a


# -- trace and Frobenius -------------------------------------------------------

def test_trace_of_zero():
    ctx = make_context(3, 4)
    for d in (1, 2, 3, 4, 6, 12):
        assert ctx.trace(0, d) == 0


def test_trace_balanced_n6():
    ctx = make_context(1, 6)
    assert sum(ctx.trace(x, 1) == 0 for x in range(64)) == 32


def test_trace_to_subfield_is_fixed_by_frobenius():
    ctx = make_context(3, 2)  # n = 6
    for x in range(64):
        r = ctx.trace(x, 3)
        assert ctx.frobenius(r, 3) == r


def test_trace_rejects_non_divisor():
    ctx = make_context(1, 6)
    with pytest.raises(ValueError):
        ctx.trace(5, 4)


def test_trace_mask_agrees_with_definition():
    F = standard_field(10)
    for x in range(F.order):
        assert F.abs_trace(x) == F.trace(x, 1)


def test_frobenius_full_cycle():
    F = standard_field(6)
    for x in range(64):
        assert F.frobenius(x, 6) == x


@given(st.integers(0, 63), st.integers(0, 63), st.integers(0, 10))
def test_frobenius_additive(x, y, j):
    F = standard_field(6)
    assert F.frobenius(x ^ y, j) == F.frobenius(x, j) ^ F.frobenius(y, j)


def test_frobenius_of_generator():
    F = standard_field(6)
    g = F.generator
    assert F.frobenius(g, 3) == F.pow(g, 8)


def test_trace_is_small_field_linear_exhaustive():
    ctx = make_context(2, 6)  # n = 12
    rng = random.Random(1)
    F = ctx.big
    for x in range(F.order):
        y = rng.randrange(F.order)
        a, b = ctx.embed(rng.randrange(4)), ctx.embed(rng.randrange(4))
        lhs = ctx.trace(F.mul(a, x) ^ F.mul(b, y), 2)
        rhs = F.mul(a, ctx.trace(x, 2)) ^ F.mul(b, ctx.trace(y, 2))
        assert lhs == rhs


@settings(max_examples=200)
@given(st.integers(0, (1 << 24) - 1), st.integers(0, (1 << 24) - 1), st.integers(0, 7), st.integers(0, 7))
def test_trace_is_small_field_linear_sampled(x, y, a, b):
    ctx = make_context(3, 8)  # n = 24
    F = ctx.big
    a, b = ctx.embed(a), ctx.embed(b)
    assert ctx.trace(F.mul(a, x) ^ F.mul(b, y), 3) == \
        F.mul(a, ctx.trace(x, 3)) ^ F.mul(b, ctx.trace(y, 3))


@pytest.mark.parametrize("n", [6, 12])
def test_trace_transitivity(n):
    F = standard_field(n)
    for x in range(0, F.order, 7):
        t = F.trace(x, 1)
        for d in (d for d in range(1, n + 1) if n % d == 0):
            assert F.subfield_trace(F.trace(x, d), d, 1) == t


def test_trace_of_embedded_multiple_lies_in_embedded_copy():
    ctx = make_context(3, 4)
    F = ctx.big
    image = {ctx.embed(a) for a in range(8)}
    rng = random.Random(0)
    for _ in range(200):
        a, x = rng.randrange(8), rng.randrange(F.order)
        assert ctx.trace(F.mul(ctx.embed(a), x), 3) in image


def test_whole_table_is_least_by_rabin_search():
    for d, f in IRREDUCIBLE_POLYS.items():
        assert next(g for g in range(1 << d, 1 << (d + 1)) if is_irreducible(g)) == f, d
