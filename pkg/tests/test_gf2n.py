"""Field construction, arithmetic identities, trace and order properties."""

import random

import pytest

from projseq import GF2n, ValidationError, field_make


def ref_mul(x, y, modulus):
    """Schoolbook carry-less multiply and reduce, independent of the tables."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    dm = modulus.bit_length()
    while r.bit_length() >= dm:
        r ^= modulus << (r.bit_length() - dm)
    return r


def ref_polmod(a, m):
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def ref_irreducible(f):
    deg = f.bit_length() - 1
    return deg >= 1 and all(
        ref_polmod(f, g) != 0 for g in range(2, 1 << (deg // 2 + 1))
    )


def test_default_modulus_examples():
    assert field_make(1).modulus == 3
    assert field_make(2).modulus == 7
    assert field_make(5).modulus == 37


def test_default_modulus_matches_exhaustive_scan():
    # first irreducible encoding with constant term 1, scanning upward
    for n in range(1, 11):
        first = next(
            enc
            for enc in range((1 << n) + 1, 1 << (n + 1), 2)
            if ref_irreducible(enc)
        )
        assert field_make(n).modulus == first


def test_construction_errors():
    with pytest.raises(ValidationError):
        field_make(0)
    with pytest.raises(ValidationError):
        field_make(17)
    with pytest.raises(ValidationError):
        field_make(3, modulus=7)  # degree 2, not 3
    with pytest.raises(ValidationError):
        field_make(3, modulus=15)  # x^3+x^2+x+1 = (x+1)(x^2+1)
    with pytest.raises(ValidationError):
        field_make(1, modulus=2)  # constant term 0


def test_add_examples():
    ctx = field_make(2)
    for x in range(4):
        assert ctx.add(x, x) == 0
        assert ctx.add(x, 0) == x
    assert ctx.add(2, 1) == 3  # w + 1


def test_mul_examples():
    gf4 = field_make(2)
    assert gf4.mul(2, 1) == 2
    assert gf4.mul(2, 2) == 3  # w^2 = w + 1
    gf8 = field_make(3)
    assert gf8.modulus == 11
    assert gf8.mul(4, 4) == 6  # x^4 = x^2 + x mod x^3+x+1


def test_inv_examples():
    assert field_make(1).inv(1) == 1
    assert field_make(2).inv(2) == 3  # w * (w+1) = 1
    assert field_make(3).inv(2) == 5  # x * (x^2+1) = 1
    with pytest.raises(ValidationError):
        field_make(3).inv(0)


def test_element_range_checked():
    ctx = field_make(2)
    with pytest.raises(ValidationError):
        ctx.mul(4, 1)
    with pytest.raises(ValidationError):
        ctx.add(1, -1)
    with pytest.raises(ValidationError):
        ctx.trace(4)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_axioms_exhaustive_small(n):
    ctx = field_make(n)
    q = ctx.q
    for x in range(q):
        for y in range(q):
            assert ctx.mul(x, y) == ctx.mul(y, x)
            assert ctx.mul(x, y) == ref_mul(x, y, ctx.modulus)
            assert ctx.sqr(x) == ctx.mul(x, x)
    for x in range(1, q):
        assert ctx.mul(x, ctx.inv(x)) == 1
    for x in range(q):
        for y in range(q):
            for z in range(q):
                assert ctx.mul(x, y ^ z) == ctx.mul(x, y) ^ ctx.mul(x, z)


def test_axioms_randomized_larger():
    rng = random.Random(1)
    for n in (6, 8, 11):
        ctx = field_make(n)
        for _ in range(300):
            x, y, z = (rng.randrange(ctx.q) for _ in range(3))
            assert ctx.mul(x, y) == ctx.mul(y, x) == ref_mul(x, y, ctx.modulus)
            assert ctx.mul(ctx.mul(x, y), z) == ctx.mul(x, ctx.mul(y, z))
            assert ctx.mul(x, y ^ z) == ctx.mul(x, y) ^ ctx.mul(x, z)
            if x:
                assert ctx.mul(x, ctx.inv(x)) == 1


def test_trace_examples():
    assert field_make(2).trace(0) == 0
    assert field_make(2).trace(2) == 1  # w + w^2 = 1
    assert field_make(3).trace(2) == 0  # x + x^2 + x^4 = 0


@pytest.mark.parametrize("n", range(1, 9))
def test_trace_properties_exhaustive(n):
    ctx = field_make(n)
    q = ctx.q
    traces = [ctx.trace(x) for x in range(q)]
    assert set(traces) <= {0, 1}
    assert traces.count(0) == q // 2
    for x in range(q):
        assert ctx.trace(ctx.sqr(x)) == traces[x]
    for x in range(q):
        for y in range(q):
            assert traces[x ^ y] == traces[x] ^ traces[y]


@pytest.mark.parametrize("n", [2, 3, 4, 6])
def test_frobenius(n):
    ctx = field_make(n)
    for x in range(ctx.q):
        for y in range(ctx.q):
            assert ctx.sqr(x ^ y) == ctx.sqr(x) ^ ctx.sqr(y)


def test_order_examples():
    assert field_make(1).is_primitive_element(1)  # q-1 = 1
    for n in (2, 3, 5):
        assert not field_make(n).is_primitive_element(1)
    gf4 = field_make(2)
    assert gf4.element_order(2) == 3
    assert gf4.is_primitive_element(2)
    assert field_make(3).element_order(2) == 7


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_order_against_brute_force(n):
    ctx = field_make(n)
    for x in range(1, ctx.q):
        acc, o = x, 1
        while acc != 1:
            acc = ctx.mul(acc, x)
            o += 1
        assert ctx.element_order(x) == o
    with pytest.raises(ValidationError):
        ctx.element_order(0)


def is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


@pytest.mark.parametrize("n", range(1, 17))
def test_factorization_of_q2_minus_1(n):
    ctx = field_make(n)
    prod = 1
    for f in ctx.factorization_q2m1:
        assert is_prime(f)
        prod *= f
    assert prod == ctx.q * ctx.q - 1


def test_context_equality():
    assert field_make(3) == field_make(3, modulus=11)
    assert field_make(3) != field_make(4)
    assert GF2n(4, 25) != GF2n(4, 19)
