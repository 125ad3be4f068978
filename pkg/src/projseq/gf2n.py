"""Arithmetic in GF(2^n) for 1 <= n <= 16.

Field elements are plain ints in [0, 2^n): bit i is the coefficient of x^i
in the polynomial basis defined by the context's modulus, so 0 and 1 are
always the additive and multiplicative identities.  All operations live on
a GF2n context object; elements carry no context themselves, and mixing
elements across contexts is caught by the range checks where sizes differ
(same-size mixing is the caller's contract).
"""

from __future__ import annotations

from .errors import ValidationError

MAX_DEGREE = 16


def gf2_polmul(a: int, b: int) -> int:
    """Carry-less product of two GF(2)[x] polynomials in integer encoding."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def gf2_polmod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def gf2_poly_is_irreducible(f: int) -> bool:
    """Irreducibility over GF(2) by trial division (degree up to 32)."""
    deg = f.bit_length() - 1
    if deg <= 0:
        return False
    for g in range(2, 1 << (deg // 2 + 1)):
        if gf2_polmod(f, g) == 0:
            return False
    return True


def default_modulus(n: int) -> int:
    """Smallest degree-n irreducible encoding with constant term 1."""
    # even encodings are divisible by x, so scan odd ones only
    for enc in range((1 << n) + 1, 1 << (n + 1), 2):
        if gf2_poly_is_irreducible(enc):
            return enc
    raise AssertionError(f"no irreducible polynomial of degree {n}")


def prime_factors(m: int) -> list[int]:
    """Ascending prime factorization with multiplicity, by trial division."""
    out = []
    d = 2
    while d * d <= m:
        while m % d == 0:
            out.append(d)
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out.append(m)
    return out


class GF2n:
    """GF(2^n) context: modulus, exp/log tables, and field operations."""

    def __init__(self, n: int, modulus: int | None = None):
        if not 1 <= n <= MAX_DEGREE:
            raise ValidationError(
                f"extension degree must be in 1..{MAX_DEGREE}, got {n}"
            )
        if modulus is None:
            modulus = default_modulus(n)
        else:
            if modulus.bit_length() - 1 != n:
                raise ValidationError(f"modulus {modulus} does not have degree {n}")
            if modulus & 1 == 0 or not gf2_poly_is_irreducible(modulus):
                raise ValidationError(
                    f"modulus {modulus} is not irreducible with constant term 1"
                )
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self.factorization_q2m1 = prime_factors(self.q * self.q - 1)
        self._factors_qm1 = sorted(set(prime_factors(self.q - 1)))
        self._build_tables()

    def __repr__(self):
        return f"GF2n(n={self.n}, modulus={self.modulus})"

    def __eq__(self, other):
        return (
            isinstance(other, GF2n)
            and self.n == other.n
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.n, self.modulus))

    def _build_tables(self):
        # generator search runs on schoolbook arithmetic; tables come after
        mod = self.modulus
        q = self.q

        def raw_mul(x, y):
            return gf2_polmod(gf2_polmul(x, y), mod)

        def raw_pow(x, e):
            r = 1
            while e:
                if e & 1:
                    r = raw_mul(r, x)
                x = raw_mul(x, x)
                e >>= 1
            return r

        gen = 1
        if q > 2:
            for cand in range(2, q):
                if all(raw_pow(cand, (q - 1) // r) != 1 for r in self._factors_qm1):
                    gen = cand
                    break
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = raw_mul(exp[i - 1], gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self._gen = gen
        self._exp = exp
        self._log = log

    def _chk(self, x: int) -> int:
        if not 0 <= x < self.q:
            raise ValidationError(f"element {x} out of range for GF(2^{self.n})")
        return x

    def add(self, x: int, y: int) -> int:
        """Coefficient-wise sum mod 2."""
        self._chk(x)
        self._chk(y)
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        """Field product, reduced modulo the context modulus."""
        self._chk(x)
        self._chk(y)
        if x == 0 or y == 0:
            return 0
        return self._exp[(self._log[x] + self._log[y]) % (self.q - 1)]

    def sqr(self, x: int) -> int:
        self._chk(x)
        if x == 0:
            return 0
        return self._exp[(2 * self._log[x]) % (self.q - 1)]

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element."""
        self._chk(x)
        if x == 0:
            raise ValidationError("zero has no multiplicative inverse")
        return self._exp[(-self._log[x]) % (self.q - 1)]

    def pow(self, x: int, e: int) -> int:
        self._chk(x)
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ValidationError("negative power of zero")
            return 0
        return self._exp[(self._log[x] * e) % (self.q - 1)]

    def trace(self, x: int) -> int:
        """Absolute trace onto GF(2): x + x^2 + ... + x^(2^(n-1))."""
        self._chk(x)
        acc = x
        t = x
        for _ in range(self.n - 1):
            t = self.sqr(t)
            acc ^= t
        assert acc in (0, 1)
        return acc

    def element_order(self, x: int) -> int:
        """Multiplicative order, dividing out prime factors of q-1."""
        self._chk(x)
        if x == 0:
            raise ValidationError("zero has no multiplicative order")
        o = self.q - 1
        for r in self._factors_qm1:
            while o % r == 0 and self.pow(x, o // r) == 1:
                o //= r
        return o

    def is_primitive_element(self, x: int) -> bool:
        return self.element_order(x) == self.q - 1


def field_make(n: int, modulus: int | None = None) -> GF2n:
    """Build a GF(2^n) context; without a modulus the smallest irreducible
    encoding (constant term 1) is chosen, which is stable across runs."""
    return GF2n(n, modulus)
