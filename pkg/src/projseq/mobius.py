"""Fractional-linear maps over GF(q) with projective (PGL2) equality,
and the cyclic orbit of the q+1 points of the projective line.

A projective point is a field-element int for a finite point, or the
module constant INFINITY (None) for the point at infinity.
"""

from __future__ import annotations

from .errors import ValidationError, VerificationError
from .gf2n import GF2n
from .quadratic import QuadraticModulus

INFINITY = None


class MobiusMap:
    """u -> (m00*u + m01) / (m10*u + m11), canonicalized so that the first
    nonzero coefficient in (m00, m01, m10, m11) order equals 1.  Equality
    is then a plain tuple comparison."""

    __slots__ = ("ctx", "m00", "m01", "m10", "m11")

    def __init__(self, ctx: GF2n, m00: int, m01: int, m10: int, m11: int):
        if ctx.mul(m00, m11) ^ ctx.mul(m01, m10) == 0:
            raise ValidationError("coefficient matrix is singular")
        for c in (m00, m01, m10, m11):
            if c:
                s = ctx.inv(c)
                break
        if s != 1:
            m00, m01, m10, m11 = (
                ctx.mul(s, m00),
                ctx.mul(s, m01),
                ctx.mul(s, m10),
                ctx.mul(s, m11),
            )
        self.ctx = ctx
        self.m00 = m00
        self.m01 = m01
        self.m10 = m10
        self.m11 = m11

    @property
    def coeffs(self) -> tuple:
        return (self.m00, self.m01, self.m10, self.m11)

    def __repr__(self):
        return f"MobiusMap{self.coeffs}"

    def __eq__(self, other):
        return (
            isinstance(other, MobiusMap)
            and self.ctx == other.ctx
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.ctx, self.coeffs))

    def __mul__(self, other: "MobiusMap") -> "MobiusMap":
        return compose(self, other)

    def determinant(self) -> int:
        return self.ctx.mul(self.m00, self.m11) ^ self.ctx.mul(self.m01, self.m10)

    def inverse(self) -> "MobiusMap":
        # adjugate; -1 == 1 in characteristic 2
        return MobiusMap(self.ctx, self.m11, self.m01, self.m10, self.m00)

    def is_identity(self) -> bool:
        # scalar matrices canonicalize to (1, 0, 0, 1)
        return self.coeffs == (1, 0, 0, 1)

    def apply(self, point):
        """Pointwise action on a projective point."""
        ctx = self.ctx
        if point is INFINITY:
            if self.m10 == 0:
                return INFINITY
            return ctx.mul(self.m00, ctx.inv(self.m10))
        num = ctx.mul(self.m00, point) ^ self.m01
        den = ctx.mul(self.m10, point) ^ self.m11
        if den == 0:
            return INFINITY
        return ctx.mul(num, ctx.inv(den))

    def order(self) -> int:
        """Least k >= 1 with the k-th power scalar."""
        k = 1
        m = self
        limit = self.ctx.q**3  # any PGL2 element order divides q^3 - q
        while not m.is_identity():
            m = m * self
            k += 1
            if k > limit:
                raise VerificationError("order search did not terminate")
        return k


def identity_map(ctx: GF2n) -> MobiusMap:
    return MobiusMap(ctx, 1, 0, 0, 1)


def compose(m: MobiusMap, n: MobiusMap) -> MobiusMap:
    """Matrix product m*n, i.e. the map applying n first."""
    if m.ctx != n.ctx:
        raise ValidationError("maps from different contexts")
    mul = m.ctx.mul
    return MobiusMap(
        m.ctx,
        mul(m.m00, n.m00) ^ mul(m.m01, n.m10),
        mul(m.m00, n.m01) ^ mul(m.m01, n.m11),
        mul(m.m10, n.m00) ^ mul(m.m11, n.m10),
        mul(m.m10, n.m01) ^ mul(m.m11, n.m11),
    )


def power_step(m_k: MobiusMap, m_1: MobiusMap) -> MobiusMap:
    """One step of the power recursion: M_{k+1} = M_k * M_1."""
    return compose(m_k, m_1)


def sigma_from_modulus(p: QuadraticModulus) -> MobiusMap:
    """The order-(q+1) generator u -> (a^-1*b*u + b) / (u + a + a^-1*b)."""
    if p.a == 0:
        raise ValidationError("modulus with a = 0 admits no generator")
    ctx = p.ctx
    ab = ctx.mul(ctx.inv(p.a), p.b)
    return MobiusMap(ctx, ab, p.b, 1, p.a ^ ab)


def place_orbit(p: QuadraticModulus) -> list:
    """The q+1 projective points visited by the powers of the generator.

    Point 0 is the zero point; point j is b_j/a_j from the coefficients of
    the j-th power (characteristic 2 swallows the sign), or INFINITY when
    a_j = 0.  The result must be a bijection onto GF(q) plus infinity.
    """
    ctx = p.ctx
    sigma = sigma_from_modulus(p)
    orbit = [0]
    m = sigma
    for _ in range(ctx.q):
        if m.m00:
            orbit.append(ctx.mul(m.m01, ctx.inv(m.m00)))
        else:
            orbit.append(INFINITY)
        m = power_step(m, sigma)
    if len(set(orbit)) != ctx.q + 1:
        raise VerificationError(
            "place orbit is not a bijection; modulus is not primitive or "
            "arithmetic is broken"
        )
    return orbit
