"""The 3-dimensional space of rational functions whose only pole is the
degree-2 point of p(u) = u^2 + a*u + b, its generator action, and the
partition of the 2-dimensional complement into q-1 orbits of size q+1.

Basis order is (1, 1/p(u), u/p(u)); space vectors are int triples
(constant, coefficient of 1/p, coefficient of u/p).  A "V element" is the
pair (c0, c1) for (c0 + c1*u)/p(u); the zero pair is excluded from orbit
and class enumeration.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

from .errors import ValidationError, VerificationError
from .gf2n import GF2n
from .mobius import INFINITY, MobiusMap, sigma_from_modulus
from .quadratic import QuadraticModulus


@dataclass(frozen=True)
class SigmaMatrix:
    """3x3 action of a power of the generator in the (1, 1/p, u/p) basis."""

    ctx: GF2n
    rows: tuple

    def apply(self, vec: tuple) -> tuple:
        # unchecked table multiply; entries were validated at construction
        exp = self.ctx._exp
        log = self.ctx._log
        qm1 = self.ctx.q - 1
        out = []
        for row in self.rows:
            acc = 0
            for e, v in zip(row, vec):
                if e and v:
                    acc ^= exp[(log[e] + log[v]) % qm1]
            out.append(acc)
        return tuple(out)

    def __mul__(self, other: "SigmaMatrix") -> "SigmaMatrix":
        mul = self.ctx.mul
        rows = []
        for i in range(3):
            row = []
            for j in range(3):
                acc = 0
                for k in range(3):
                    acc ^= mul(self.rows[i][k], other.rows[k][j])
                row.append(acc)
            rows.append(tuple(row))
        return SigmaMatrix(self.ctx, tuple(rows))


def identity_matrix(ctx: GF2n) -> SigmaMatrix:
    return SigmaMatrix(ctx, ((1, 0, 0), (0, 1, 0), (0, 0, 1)))


def matrix_power(m: SigmaMatrix, e: int) -> SigmaMatrix:
    r = identity_matrix(m.ctx)
    for _ in range(e):
        r = r * m
    return r


def lq_action_matrix(p: QuadraticModulus, m: MobiusMap) -> SigmaMatrix:
    """Action of the map m = (a_k, b_k, c_k, d_k) on the 3-dimensional space.

    With N(u) = (a_k*u + b_k)^2 + a*(a_k*u + b_k)*(c_k*u + d_k)
    + b*(c_k*u + d_k)^2, the map fixes the degree-2 point exactly when
    N = lambda * p for a nonzero scalar lambda; the images of 1/p and u/p
    are then lambda^-1 * (c_k*u + d_k)^2 / p and
    lambda^-1 * (a_k*u + b_k)(c_k*u + d_k) / p, decomposed by division by p.
    """
    ctx, a, b = p.ctx, p.a, p.b
    if ctx != m.ctx:
        raise ValidationError("map and modulus from different contexts")
    mul, sqr = ctx.mul, ctx.sqr
    ak, bk, ck, dk = m.coeffs
    n2 = sqr(ak) ^ mul(a, mul(ak, ck)) ^ mul(b, sqr(ck))
    n1 = mul(a, mul(ak, dk) ^ mul(bk, ck))
    n0 = sqr(bk) ^ mul(a, mul(bk, dk)) ^ mul(b, sqr(dk))
    if n2 == 0 or n1 != mul(n2, a) or n0 != mul(n2, b):
        raise VerificationError("map does not stabilize the degree-2 point")
    li = ctx.inv(n2)
    # (c_k*u + d_k)^2 = ck2*p + (ck2*a)*u + (ck2*b + dk2)
    ck2, dk2 = sqr(ck), sqr(dk)
    col1 = (mul(li, ck2), mul(li, mul(ck2, b) ^ dk2), mul(li, mul(ck2, a)))
    # (a_k*u + b_k)(c_k*u + d_k) = g2*p + (e + g2*a)*u + (f + g2*b)
    g2 = mul(ak, ck)
    e = mul(ak, dk) ^ mul(bk, ck)
    f = mul(bk, dk)
    col2 = (mul(li, g2), mul(li, f ^ mul(g2, b)), mul(li, e ^ mul(g2, a)))
    return SigmaMatrix(
        ctx,
        (
            (1, col1[0], col2[0]),
            (0, col1[1], col2[1]),
            (0, col1[2], col2[2]),
        ),
    )


def sigma_orbit_of(z: tuple, p: QuadraticModulus) -> list:
    """The q+1 pairwise-distinct V elements hit by powers of the generator:
    entry i is the V part of the i-th power image of z."""
    if z == (0, 0):
        raise ValidationError("the zero element has no orbit")
    p.ctx._chk(z[0])
    p.ctx._chk(z[1])
    action = lq_action_matrix(p, sigma_from_modulus(p))
    vec = (0, z[0], z[1])
    out = []
    seen = set()
    for _ in range(p.ctx.q + 1):
        w = (vec[1], vec[2])
        if w == (0, 0) or w in seen:
            raise VerificationError(
                "degenerate orbit member; modulus is not primitive or "
                "arithmetic is broken"
            )
        seen.add(w)
        out.append(w)
        vec = action.apply(vec)
    return out


class EquivClassSet:
    """The q-1 canonical orbit representatives plus total membership lookup.

    Membership is stored as a flat int array indexed by c1*q + c0, so the
    structure stays compact for larger fields.
    """

    def __init__(self, q: int, reps: list, table: array):
        self.q = q
        self.reps = reps
        self._table = table

    def class_index(self, z: tuple) -> int:
        c0, c1 = z
        if z == (0, 0):
            raise ValidationError("the zero element belongs to no class")
        idx = self._table[c1 * self.q + c0]
        if idx < 0:
            raise ValidationError(f"{z} is not a valid nonzero V element")
        return idx


def enumerate_classes(p: QuadraticModulus) -> EquivClassSet:
    """Partition the nonzero V elements into q-1 orbits of size q+1.

    Elements are swept in increasing lexicographic order of (c1, c0)
    encodings; each unvisited element becomes the canonical representative
    of its orbit, so representatives are the lexicographic minima.
    """
    ctx = p.ctx
    q = ctx.q
    action = lq_action_matrix(p, sigma_from_modulus(p))
    apply = action.apply
    table = array("i", [-1]) * (q * q)
    reps = []
    marked = 0
    for c1 in range(q):
        for c0 in range(q):
            if c0 == 0 and c1 == 0:
                continue
            if table[c1 * q + c0] >= 0:
                continue
            idx = len(reps)
            reps.append((c0, c1))
            vec = (0, c0, c1)
            for _ in range(q + 1):
                w0, w1 = vec[1], vec[2]
                pos = w1 * q + w0
                if (w0 == 0 and w1 == 0) or table[pos] >= 0:
                    raise VerificationError(
                        "orbits overlap or hit zero; partition failed"
                    )
                table[pos] = idx
                marked += 1
                vec = apply(vec)
    if len(reps) != q - 1 or marked != q * q - 1:
        raise VerificationError(
            f"expected {q - 1} classes covering {q * q - 1} elements, "
            f"got {len(reps)} classes covering {marked}"
        )
    return EquivClassSet(q, reps, table)


def evaluate_v(z: tuple, point, p: QuadraticModulus) -> int:
    """Value of (c0 + c1*u)/p(u) at a projective point; 0 at infinity.

    The denominator cannot vanish at a finite point because p has no
    root in GF(q)."""
    if point is INFINITY:
        return 0
    ctx = p.ctx
    den = ctx.sqr(point) ^ ctx.mul(p.a, point) ^ p.b
    assert den != 0
    return ctx.mul(z[0] ^ ctx.mul(z[1], point), ctx.inv(den))


# --- independent symbolic route, used as an oracle for the matrix action ---


def _poly_trim(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_add(f: list, g: list) -> list:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] ^= c
    return _poly_trim(out)


def _poly_scale(ctx: GF2n, f: list, s: int) -> list:
    return _poly_trim([ctx.mul(c, s) for c in f])


def _poly_mul(ctx: GF2n, f: list, g: list) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] ^= ctx.mul(a, b)
    return _poly_trim(out)


def _poly_divmod(ctx: GF2n, f: list, g: list) -> tuple:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    rem = _poly_trim(list(f))
    quot = [0] * max(0, len(rem) - len(g) + 1)
    ginv = ctx.inv(g[-1])
    while len(rem) >= len(g):
        shift = len(rem) - len(g)
        coef = ctx.mul(rem[-1], ginv)
        quot[shift] = coef
        for i, c in enumerate(g):
            rem[shift + i] ^= ctx.mul(coef, c)
        _poly_trim(rem)
    return _poly_trim(quot), rem


def _poly_gcd(ctx: GF2n, f: list, g: list) -> list:
    f, g = list(f), list(g)
    while g:
        f, g = g, _poly_divmod(ctx, f, g)[1]
    if f:
        f = _poly_scale(ctx, f, ctx.inv(f[-1]))
    return f


def symbolic_sigma_image(z: tuple, p: QuadraticModulus, m: MobiusMap) -> tuple:
    """Recompute the image of z = (c0, c1) under the map m symbolically.

    Substitutes m(u) into (c0 + c1*u)/p(u), reduces the resulting rational
    function to lowest terms with a polynomial gcd, and decomposes against
    p(u).  Entirely independent of the matrix route; returns
    (constant_part, (e0, e1)).
    """
    ctx, a, b = p.ctx, p.a, p.b
    ak, bk, ck, dk = m.coeffs
    lin_top = [bk, ak]
    lin_bot = [dk, ck]
    num = _poly_mul(
        ctx,
        _poly_add(_poly_scale(ctx, lin_bot, z[0]), _poly_scale(ctx, lin_top, z[1])),
        lin_bot,
    )
    den = _poly_add(
        _poly_add(
            _poly_mul(ctx, lin_top, lin_top),
            _poly_scale(ctx, _poly_mul(ctx, lin_top, lin_bot), a),
        ),
        _poly_scale(ctx, _poly_mul(ctx, lin_bot, lin_bot), b),
    )
    g = _poly_gcd(ctx, num, den)
    if len(g) > 1:
        num = _poly_divmod(ctx, num, g)[0]
        den = _poly_divmod(ctx, den, g)[0]
    if not den:
        raise VerificationError("vanishing denominator in symbolic image")
    if len(den) == 1:
        # pole-free, so the image must be a constant
        quot = _poly_scale(ctx, num, ctx.inv(den[0]))
        if len(quot) > 1:
            raise VerificationError("symbolic image has a pole at infinity")
        return (quot[0] if quot else 0, (0, 0))
    if len(den) != 3:
        raise VerificationError("symbolic image has an unexpected pole divisor")
    num = _poly_scale(ctx, num, ctx.inv(den[-1]))
    den = _poly_scale(ctx, den, ctx.inv(den[-1]))
    if den != [b, a, 1]:
        raise VerificationError("symbolic image pole differs from p(u)")
    quot, rem = _poly_divmod(ctx, num, den)
    if len(quot) > 1:
        raise VerificationError("symbolic image has a pole at infinity")
    rem = rem + [0] * (2 - len(rem))
    return (quot[0] if quot else 0, (rem[0], rem[1]))
