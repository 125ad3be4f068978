"""Family assembly: bound, emission, pipeline, structural identities."""

import random

import pytest

from projseq import (
    BinarySequence,
    QuadraticModulus,
    ValidationError,
    autocorrelation,
    balance,
    build_family,
    crosscorrelation,
    emit_sequence,
    field_make,
    find_primitive_quadratic,
    place_orbit,
    sigma_from_modulus,
    theoretical_bound,
)
from projseq.lqspace import evaluate_v, lq_action_matrix, matrix_power
from projseq.mobius import INFINITY


def largest_odd_at_most_2sqrt(q):
    t = 1
    while (t + 2) * (t + 2) <= 4 * q:
        t += 2
    return t


def test_bound_examples():
    assert theoretical_bound(2) == 1
    assert theoretical_bound(4) == 3
    assert theoretical_bound(32) == 11
    assert theoretical_bound(64) == 15  # even floor steps down
    assert theoretical_bound(128) == 21
    assert theoretical_bound(256) == 31
    assert theoretical_bound(512) == 45


def test_bound_matches_integer_oracle():
    for n in range(1, 21):
        q = 1 << n
        assert theoretical_bound(q) == largest_odd_at_most_2sqrt(q)


def test_binary_sequence_validation():
    s = BinarySequence.from_values([-1, -1, 1])
    assert s.bits == 0b011
    assert BinarySequence.from_bits(0b011, 3) == s
    with pytest.raises(ValidationError):
        BinarySequence.from_values([2, 1, 1])
    with pytest.raises(ValidationError):
        BinarySequence((1, 1), 0b100)
    with pytest.raises(ValidationError):
        BinarySequence((1, -1), 0b01)


def test_emit_sequence_q2():
    ctx = field_make(1)
    p = QuadraticModulus(ctx, 1, 1)
    s = emit_sequence((1, 0), place_orbit(p), p)
    assert s.values == (-1, -1, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_emit_sequence_length(n):
    ctx = field_make(n)
    p = find_primitive_quadratic(ctx)
    orbit = place_orbit(p)
    assert len(emit_sequence((1, 0), orbit, p)) == ctx.q + 1


def test_family_q4_shape():
    fam = build_family(2)
    assert fam.size == 3
    assert all(len(s) == 5 for s in fam.sequences)


def test_family_micro_case():
    fam = build_family(1)
    assert fam.size == 1
    assert fam.sequences[0].values == (-1, -1, 1)
    assert fam.bound == 1
    assert autocorrelation(fam.sequences[0], 1) == 1
    assert autocorrelation(fam.sequences[0], 2) == 1


def test_family_shapes_n5_n8():
    fam5 = build_family(5)
    assert (fam5.length, fam5.size, fam5.bound) == (33, 31, 11)
    fam8 = build_family(8)
    assert (fam8.length, fam8.size, fam8.bound) == (257, 255, 31)


@pytest.mark.parametrize("n", range(1, 9))
def test_sequences_pairwise_distinct(n):
    fam = build_family(n)
    assert len({s.bits for s in fam.sequences}) == fam.size


def test_invalid_modulus_overrides():
    with pytest.raises(ValidationError):
        build_family(2, ab=(0, 2))  # reducible
    with pytest.raises(ValidationError):
        build_family(2, ab=(2, 1))  # irreducible but not primitive
    with pytest.raises(ValidationError):
        build_family(3, modulus=15)  # reducible binary modulus


def test_explicit_valid_override_matches_search():
    fam = build_family(2, ab=(1, 2))
    assert (fam.a, fam.b) == (1, 2)
    assert fam.sequences == build_family(2).sequences


def _lq_eval(gamma, z, point, p):
    if point is INFINITY:
        return gamma
    return gamma ^ evaluate_v(z, point, p)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_correlation_equals_trace_sum_of_combined_function(n):
    # correlation from the bit streams == +-1 sum of the trace of
    # z_i + (inverse power image of z_j) over the orbit
    rng = random.Random(100 + n)
    fam = build_family(n)
    ctx = fam.ctx
    q = ctx.q
    p = QuadraticModulus(ctx, fam.a, fam.b)
    base = lq_action_matrix(p, sigma_from_modulus(p))
    samples = 30 if n >= 3 else 8
    for _ in range(samples):
        i = rng.randrange(fam.size)
        j = rng.randrange(fam.size)
        t = rng.randrange(q + 1) if i != j else rng.randrange(1, q + 1)
        back = matrix_power(base, (q + 1 - t) % (q + 1))
        zj = fam.reps[j]
        gamma, w0, w1 = back.apply((0, zj[0], zj[1]))
        zi = fam.reps[i]
        combined = (zi[0] ^ w0, zi[1] ^ w1)
        total = 0
        for point in fam.orbit:
            val = _lq_eval(gamma, combined, point, p)
            total += -1 if ctx.trace(val) else 1
        if i == j:
            assert abs(total) == autocorrelation(fam.sequences[i], t)
        else:
            assert abs(total) == crosscorrelation(fam.sequences[i], fam.sequences[j], t)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_minus_one_count_equals_trace_one_count(n):
    fam = build_family(n)
    p = QuadraticModulus(fam.ctx, fam.a, fam.b)
    for z, s in zip(fam.reps, fam.sequences):
        trace_ones = sum(
            fam.ctx.trace(evaluate_v(z, point, p)) for point in fam.orbit
        )
        assert s.values.count(-1) == trace_ones
        assert balance(s) == len(s) - 2 * trace_ones
