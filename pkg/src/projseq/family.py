"""Assembly of the length-(q+1) binary sequence family of size q-1.

Entry j of a sequence is (-1)**t_j where t_j is the absolute trace of the
representative function evaluated at point j of the place orbit.  The
packed trace bits (bit 1 <-> value -1) are the authoritative form; the
unpacked +-1 tuple is kept alongside for readability and the naive
correlation oracle.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import ValidationError, VerificationError
from .gf2n import GF2n, field_make
from .lqspace import enumerate_classes, evaluate_v
from .mobius import place_orbit
from .quadratic import (
    QuadraticModulus,
    find_primitive_quadratic,
    is_irreducible,
    is_primitive,
)


def theoretical_bound(q: int) -> int:
    """Largest odd integer <= floor(2*sqrt(q)), in exact integer arithmetic.

    isqrt(4q) avoids the float trap at perfect squares (e.g. q = 64)."""
    if q < 1:
        raise ValidationError("field size must be positive")
    t = isqrt(4 * q)
    return t if t & 1 else t - 1


@dataclass(frozen=True)
class BinarySequence:
    """A +-1 sequence together with its packed trace bits."""

    values: tuple
    bits: int

    def __post_init__(self):
        n = len(self.values)
        if n == 0:
            raise ValidationError("empty sequence")
        if self.bits >> n:
            raise ValidationError("stray bits beyond the sequence length")
        for j, v in enumerate(self.values):
            if v != (-1 if (self.bits >> j) & 1 else 1):
                raise ValidationError("values and packed bits disagree")

    def __len__(self):
        return len(self.values)

    @classmethod
    def from_bits(cls, bits: int, length: int) -> "BinarySequence":
        values = tuple(-1 if (bits >> j) & 1 else 1 for j in range(length))
        return cls(values, bits)

    @classmethod
    def from_values(cls, values) -> "BinarySequence":
        bits = 0
        for j, v in enumerate(values):
            if v == -1:
                bits |= 1 << j
            elif v != 1:
                raise ValidationError(f"sequence entry {v!r} is not +-1")
        return cls(tuple(values), bits)


@dataclass
class SequenceFamily:
    """A family of equal-length sequences plus its construction metadata.

    Families loaded from formats that do not store them have orbit/reps
    set to None; a and b may also be unknown for foreign files.
    """

    ctx: GF2n
    a: int | None
    b: int | None
    sequences: list
    bound: int | None
    orbit: list | None = None
    reps: list | None = None

    @property
    def n(self) -> int:
        return self.ctx.n

    @property
    def q(self) -> int:
        return self.ctx.q

    @property
    def modulus(self) -> int:
        return self.ctx.modulus

    @property
    def length(self) -> int:
        return len(self.sequences[0])

    @property
    def size(self) -> int:
        return len(self.sequences)


def emit_sequence(z: tuple, orbit: list, p: QuadraticModulus) -> BinarySequence:
    """Sequence of a representative: entry j is (-1)**Tr(z at orbit point j)."""
    ctx = p.ctx
    bits = 0
    values = []
    for j, point in enumerate(orbit):
        t = ctx.trace(evaluate_v(z, point, p))
        bits |= t << j
        values.append(-1 if t else 1)
    return BinarySequence(tuple(values), bits)


def build_family(
    n: int,
    modulus: int | None = None,
    ab: tuple | None = None,
) -> SequenceFamily:
    """Run the whole pipeline for GF(2^n): find (or validate) a primitive
    quadratic modulus, build the place orbit, partition the nonzero V
    elements, and emit one sequence per canonical representative."""
    ctx = field_make(n, modulus)
    if ab is None:
        p = find_primitive_quadratic(ctx)
    else:
        a, b = ab
        p = QuadraticModulus(ctx, a, b)
        if not is_irreducible(p):
            raise ValidationError(f"{p} is reducible")
        if not is_primitive(p):
            raise ValidationError(f"{p} is irreducible but not primitive")
    orbit = place_orbit(p)
    classes = enumerate_classes(p)
    sequences = [emit_sequence(z, orbit, p) for z in classes.reps]
    if len({s.bits for s in sequences}) != len(sequences):
        raise VerificationError("family contains duplicate sequences")
    return SequenceFamily(
        ctx=ctx,
        a=p.a,
        b=p.b,
        sequences=sequences,
        bound=theoretical_bound(ctx.q),
        orbit=orbit,
        reps=list(classes.reps),
    )
