"""Quadratic moduli x^2 + a*x + b over GF(q) and their order properties.

GF(q^2) is modeled as residues c0 + c1*xbar with the reduction
xbar^2 = a*xbar + b (characteristic 2); residues are plain (c0, c1)
tuples of field-element ints.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ValidationError
from .gf2n import GF2n


@dataclass(frozen=True)
class QuadraticModulus:
    """p(x) = x^2 + a*x + b over the context field."""

    ctx: GF2n
    a: int
    b: int

    def __post_init__(self):
        self.ctx._chk(self.a)
        self.ctx._chk(self.b)

    def __str__(self):
        return f"x^2 + {self.a}*x + {self.b} over GF(2^{self.ctx.n})"


def fq2_mul(u: tuple, v: tuple, p: QuadraticModulus) -> tuple:
    """Product of residues modulo p, using xbar^2 = a*xbar + b."""
    m = p.ctx.mul
    u0, u1 = u
    v0, v1 = v
    t = m(u1, v1)
    return (m(u0, v0) ^ m(t, p.b), m(u0, v1) ^ m(u1, v0) ^ m(t, p.a))


def fq2_pow(u: tuple, e: int, p: QuadraticModulus) -> tuple:
    """Square-and-multiply power of a residue, e >= 0."""
    r = (1, 0)
    while e:
        if e & 1:
            r = fq2_mul(r, u, p)
        u = fq2_mul(u, u, p)
        e >>= 1
    return r


def is_irreducible(p: QuadraticModulus) -> bool:
    """True iff p has no root in GF(q): a != 0 and Tr(b/a^2) = 1."""
    if p.a == 0:
        return False
    ctx = p.ctx
    return ctx.trace(ctx.mul(p.b, ctx.inv(ctx.sqr(p.a)))) == 1


def is_primitive(p: QuadraticModulus) -> bool:
    """True iff the residue of x has multiplicative order q^2 - 1.

    b must be a primitive element of GF(q) (it is the norm of the root),
    so non-primitive b short-circuits to False.
    """
    if not is_irreducible(p):
        raise ValidationError(f"{p} is reducible; primitivity is undefined")
    ctx = p.ctx
    if not ctx.is_primitive_element(p.b):
        return False
    e = ctx.q * ctx.q - 1
    xbar = (0, 1)
    return all(
        fq2_pow(xbar, e // r, p) != (1, 0)
        for r in sorted(set(ctx.factorization_q2m1))
    )


def find_primitive_quadratic(ctx: GF2n) -> QuadraticModulus:
    """First primitive irreducible x^2 + a*x + b in the fixed search order:
    b sweeps primitive elements by increasing encoding, a sweeps nonzero
    elements by increasing encoding."""
    for b in range(1, ctx.q):
        if not ctx.is_primitive_element(b):
            continue
        for a in range(1, ctx.q):
            p = QuadraticModulus(ctx, a, b)
            if is_irreducible(p) and is_primitive(p):
                return p
    raise AssertionError(f"no primitive quadratic over GF(2^{ctx.n})")
