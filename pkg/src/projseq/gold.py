"""m-sequences from LFSRs and Gold families for odd n (baseline comparator).

The Gold family of size 2^n + 1 combines a maximal-length sequence u with
its decimation v by 3 (a valid preferred-pair decimation for every odd n)
and all cyclic XOR offsets u + rot_t(v).
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .family import BinarySequence
from .gf2n import MAX_DEGREE, GF2n, gf2_poly_is_irreducible


@dataclass(frozen=True)
class LfsrSpec:
    """Fibonacci LFSR: degree n, primitive taps encoding, nonzero seed."""

    n: int
    taps: int
    seed: int = 1

    def __post_init__(self):
        if not 1 <= self.n <= MAX_DEGREE:
            raise ValidationError(f"LFSR degree must be in 1..{MAX_DEGREE}")
        if self.taps.bit_length() - 1 != self.n:
            raise ValidationError(f"taps {self.taps} do not have degree {self.n}")
        if not 0 < self.seed < (1 << self.n):
            raise ValidationError("seed must be a nonzero n-bit state")


def default_taps(n: int) -> int:
    """Smallest-encoding primitive polynomial of degree n (order test)."""
    for enc in range((1 << n) + 1, 1 << (n + 1), 2):
        if not gf2_poly_is_irreducible(enc):
            continue
        ctx = GF2n(n, enc)
        if ctx.element_order(2) == ctx.q - 1:
            return enc
    raise AssertionError(f"no primitive polynomial of degree {n}")


def m_sequence(spec: LfsrSpec) -> BinarySequence:
    """Length 2^n - 1 +-1 sequence from the LFSR bit stream (bit 1 -> -1).

    The full period is simulated; a state cycle shorter than 2^n - 1
    means the taps are not primitive and is rejected.
    """
    period = (1 << spec.n) - 1
    low = spec.taps & period  # tap coefficients c_0..c_(n-1)
    state = spec.seed
    bits = 0
    for j in range(period):
        bits |= (state & 1) << j
        feedback = (state & low).bit_count() & 1
        state = (state >> 1) | (feedback << (spec.n - 1))
        if state == spec.seed and j != period - 1:
            raise ValidationError(
                f"taps {spec.taps} are not primitive (period {j + 1} < {period})"
            )
    if state != spec.seed:
        raise ValidationError(f"taps {spec.taps} are not primitive")
    return BinarySequence.from_bits(bits, period)


def _decimate(s: BinarySequence, d: int) -> BinarySequence:
    n = len(s)
    bits = 0
    for j in range(n):
        bits |= ((s.bits >> (d * j % n)) & 1) << j
    return BinarySequence.from_bits(bits, n)


def _xor_shift(u: BinarySequence, v: BinarySequence, t: int) -> BinarySequence:
    n = len(u)
    dv = v.bits | (v.bits << n)
    rot = (dv >> t) & ((1 << n) - 1)
    return BinarySequence.from_bits(u.bits ^ rot, n)


@dataclass(frozen=True)
class GoldFamily:
    """Preferred pair (u, v = u decimated by 3) and the 2^n + 1 sequences."""

    n: int
    u: BinarySequence
    v: BinarySequence
    sequences: tuple


def gold_family(n: int, taps: int | None = None, seed: int = 1) -> GoldFamily:
    """Gold family for odd n >= 3: {u, v} plus u XOR rot_t(v) for all t."""
    if n < 3 or n % 2 == 0:
        raise ValidationError("Gold baseline is defined for odd n >= 3")
    u = m_sequence(LfsrSpec(n, taps if taps is not None else default_taps(n), seed))
    v = _decimate(u, 3)
    length = len(u)
    sequences = [u, v] + [_xor_shift(u, v, t) for t in range(length)]
    return GoldFamily(n=n, u=u, v=v, sequences=tuple(sequences))


def gold_max_correlation(n: int) -> int:
    """Three-valued peak 1 + 2^((n+1)/2) for odd n."""
    if n % 2 == 0:
        raise ValidationError("defined for odd n only")
    return 1 + (1 << ((n + 1) // 2))
