"""Fractional-linear map tests: composition, order, point action, orbit."""

import random

import pytest

from projseq import (
    INFINITY,
    MobiusMap,
    QuadraticModulus,
    ValidationError,
    compose,
    field_make,
    find_primitive_quadratic,
    is_irreducible,
    is_primitive,
    place_orbit,
    power_step,
    sigma_from_modulus,
)
from projseq.mobius import identity_map


def primitive_moduli(ctx):
    out = []
    for a in range(1, ctx.q):
        for b in range(1, ctx.q):
            p = QuadraticModulus(ctx, a, b)
            if is_irreducible(p) and is_primitive(p):
                out.append(p)
    return out


def test_sigma_examples():
    gf2 = field_make(1)
    s2 = sigma_from_modulus(QuadraticModulus(gf2, 1, 1))
    assert s2.coeffs == (1, 1, 1, 0)
    assert s2.determinant() == 1
    gf4 = field_make(2)
    s4 = sigma_from_modulus(QuadraticModulus(gf4, 1, 2))
    # (w, w, 1, 1+w) up to the projective scaling
    assert s4 == MobiusMap(gf4, 2, 2, 1, 3)


def test_sigma_rejects_a_zero():
    gf4 = field_make(2)
    with pytest.raises(ValidationError):
        sigma_from_modulus(QuadraticModulus(gf4, 0, 2))


def test_singular_matrix_rejected():
    gf4 = field_make(2)
    with pytest.raises(ValidationError):
        MobiusMap(gf4, 1, 1, 1, 1)


def test_compose_examples():
    gf2 = field_make(1)
    s = sigma_from_modulus(QuadraticModulus(gf2, 1, 1))
    ident = identity_map(gf2)
    assert compose(s, ident) == s
    assert compose(ident, s) == s
    s2 = compose(s, s)
    assert s2 == MobiusMap(gf2, 0, 1, 1, 1)
    assert compose(s2, s).is_identity()


def test_power_step_is_composition():
    gf8 = field_make(3)
    p = find_primitive_quadratic(gf8)
    s = sigma_from_modulus(p)
    m = s
    for _ in range(5):
        assert power_step(m, s) == compose(m, s)
        m = power_step(m, s)


def test_compose_associative_random():
    rng = random.Random(7)
    ctx = field_make(3)
    maps = []
    while len(maps) < 6:
        try:
            maps.append(MobiusMap(ctx, *(rng.randrange(8) for _ in range(4))))
        except ValidationError:
            continue
    for f in maps:
        for g in maps:
            for h in maps:
                assert compose(compose(f, g), h) == compose(f, compose(g, h))


def test_order_examples():
    gf2 = field_make(1)
    assert identity_map(gf2).order() == 1
    assert sigma_from_modulus(QuadraticModulus(gf2, 1, 1)).order() == 3


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_sigma_order_is_q_plus_1_for_all_primitive_moduli(n):
    ctx = field_make(n)
    moduli = primitive_moduli(ctx)
    assert moduli
    for p in moduli:
        assert sigma_from_modulus(p).order() == ctx.q + 1


def test_apply_examples():
    gf2 = field_make(1)
    s = sigma_from_modulus(QuadraticModulus(gf2, 1, 1))
    ident = identity_map(gf2)
    for pt in (0, 1, INFINITY):
        assert ident.apply(pt) == pt
    assert s.apply(1) == 0  # (1+1)/1
    assert s.apply(0) is INFINITY  # denominator vanishes
    assert s.apply(INFINITY) == 1  # m00/m10


def test_apply_is_group_action():
    rng = random.Random(3)
    ctx = field_make(3)
    pts = list(range(8)) + [INFINITY]
    maps = []
    while len(maps) < 5:
        try:
            maps.append(MobiusMap(ctx, *(rng.randrange(8) for _ in range(4))))
        except ValidationError:
            continue
    for f in maps:
        for g in maps:
            for pt in pts:
                assert compose(f, g).apply(pt) == f.apply(g.apply(pt))
        for pt in pts:
            assert f.inverse().apply(f.apply(pt)) == pt


def test_place_orbit_q2():
    gf2 = field_make(1)
    orbit = place_orbit(QuadraticModulus(gf2, 1, 1))
    assert orbit == [0, 1, INFINITY]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_place_orbit_bijection_and_vanishing(n):
    ctx = field_make(n)
    for p in primitive_moduli(ctx) if n <= 3 else [find_primitive_quadratic(ctx)]:
        orbit = place_orbit(p)
        assert orbit[0] == 0
        assert set(orbit) == set(range(ctx.q)) | {INFINITY}
        # the j-th power map vanishes at orbit point j
        s = sigma_from_modulus(p)
        m = s
        for j in range(1, ctx.q + 1):
            assert m.apply(orbit[j]) == 0
            m = power_step(m, s)
        # the inverse map steps the orbit forward pointwise
        inv = s.inverse()
        for j in range(ctx.q + 1):
            assert inv.apply(orbit[j]) == orbit[(j + 1) % (ctx.q + 1)]
