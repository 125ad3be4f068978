"""Runnable invariant suite: structural checks for a given field size.

Each check returns a CheckResult; the CLI prints one line per check and
fails with a dedicated exit code when any check is false.  Exhaustive
sweeps are capped at the sizes where they stay fast and fall back to
seeded random sampling beyond (the detail string says which ran).
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .correlation import (
    autocorrelation,
    crosscorrelation,
    family_correlation,
    pack_matrix,
    _default_kernel,
)
from .family import build_family, theoretical_bound
from .lqspace import (
    enumerate_classes,
    lq_action_matrix,
    sigma_orbit_of,
    symbolic_sigma_image,
)
from .mobius import INFINITY, identity_map, place_orbit, power_step, sigma_from_modulus
from .quadratic import find_primitive_quadratic

LEMMA_SWEEP_FULL_MAX = 5
SYMBOLIC_FULL_MAX = 3
PACKED_VS_NAIVE_FULL_MAX = 6


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def _check_orbit(p) -> CheckResult:
    ctx = p.ctx
    try:
        orbit = place_orbit(p)
    except Exception as exc:
        return CheckResult("orbit-bijection", False, str(exc))
    expected = set(range(ctx.q)) | {INFINITY}
    if set(orbit) != expected or orbit[0] != 0:
        return CheckResult("orbit-bijection", False, "orbit misses points")
    # the j-th power map must vanish at the j-th orbit point
    sigma = sigma_from_modulus(p)
    m = sigma
    for j in range(1, ctx.q + 1):
        if m.apply(orbit[j]) != 0:
            return CheckResult(
                "orbit-bijection", False, f"power {j} does not vanish at its point"
            )
        m = power_step(m, sigma)
    return CheckResult("orbit-bijection", True, f"{ctx.q + 1} points")


def _check_order(p) -> CheckResult:
    got = sigma_from_modulus(p).order()
    want = p.ctx.q + 1
    return CheckResult(
        "generator-order", got == want, f"order {got}, expected {want}"
    )


def _check_classes(p) -> CheckResult:
    q = p.ctx.q
    try:
        classes = enumerate_classes(p)
    except Exception as exc:
        return CheckResult("class-partition", False, str(exc))
    for z in classes.reps:
        orbit = sigma_orbit_of(z, p)
        if len(set(orbit)) != q + 1:
            return CheckResult("class-partition", False, f"orbit of {z} too small")
        if any(classes.class_index(w) != classes.class_index(z) for w in orbit):
            return CheckResult(
                "class-partition", False, "membership not constant on an orbit"
            )
    return CheckResult(
        "class-partition", True, f"{q - 1} classes of size {q + 1}"
    )


def _check_lemma_sweep(p, rng) -> CheckResult:
    ctx = p.ctx
    q = ctx.q
    action = lq_action_matrix(p, sigma_from_modulus(p))
    if ctx.n <= LEMMA_SWEEP_FULL_MAX:
        zs = [(c0, c1) for c1 in range(q) for c0 in range(q) if (c0, c1) != (0, 0)]
        mode = f"exhaustive over {len(zs)} elements"
    else:
        zs = [
            (rng.randrange(q), rng.randrange(q)) for _ in range(500)
        ]
        zs = [z for z in zs if z != (0, 0)]
        mode = f"sampled {len(zs)} elements"
    for z in zs:
        vec = (0, z[0], z[1])
        for _ in range(q):
            vec = action.apply(vec)
            if (vec[1], vec[2]) == z:
                return CheckResult(
                    "shifted-self-noncollision", False, f"power fixes {z} mod constants"
                )
    return CheckResult("shifted-self-noncollision", True, mode)


def _check_symbolic(p, rng) -> CheckResult:
    ctx = p.ctx
    q = ctx.q
    sigma = sigma_from_modulus(p)
    if ctx.n <= SYMBOLIC_FULL_MAX:
        zs = [(c0, c1) for c1 in range(q) for c0 in range(q) if (c0, c1) != (0, 0)]
        mode = f"exhaustive over {len(zs)} elements"
    else:
        zs = []
        while len(zs) < 25:
            z = (rng.randrange(q), rng.randrange(q))
            if z != (0, 0):
                zs.append(z)
        mode = f"sampled {len(zs)} elements"
    for z in zs:
        vec = (0, z[0], z[1])
        action = lq_action_matrix(p, sigma)
        m = identity_map(ctx)
        for _ in range(q + 1):
            gamma, w = symbolic_sigma_image(z, p, m)
            if (gamma, w[0], w[1]) != vec:
                return CheckResult(
                    "matrix-vs-symbolic", False, f"mismatch at z={z}"
                )
            vec = action.apply(vec)
            m = power_step(m, sigma)
    return CheckResult("matrix-vs-symbolic", True, mode)


def _check_packed_vs_naive(family, rng) -> CheckResult:
    seqs = family.sequences
    n = family.length
    words, doubled = pack_matrix(seqs)
    kern = _default_kernel
    count = len(seqs)
    if family.n <= PACKED_VS_NAIVE_FULL_MAX:
        pairs = [(i, j) for i in range(count) for j in range(i, count)]
        mode = f"exhaustive over {len(pairs)} pairs"
    else:
        pairs = [
            (rng.randrange(count), rng.randrange(count)) for _ in range(100)
        ]
        mode = f"sampled {len(pairs)} pairs"
    for i, j in pairs:
        for t in range(0 if i != j else 1, n):
            fast = kern.correlation_at(words[i], doubled[j], n, t)
            slow = (
                crosscorrelation(seqs[i], seqs[j], t)
                if i != j
                else autocorrelation(seqs[i], t)
            )
            if fast != slow:
                return CheckResult(
                    "packed-vs-naive", False, f"mismatch at pair ({i},{j}) delay {t}"
                )
    return CheckResult("packed-vs-naive", True, mode)


def _check_bound(family, threads) -> CheckResult:
    report = family_correlation(family, threads=threads)
    bound = theoretical_bound(family.q)
    ok = report.cor <= bound and report.max_auto % 2 == 1
    if report.max_cross is not None:
        ok = ok and report.max_cross % 2 == 1
    return CheckResult(
        "correlation-bound", ok, f"cor {report.cor} <= bound {bound}"
    )


def run_checks(n: int, threads: int = 1, seed: int = 12345) -> list:
    """All invariant checks for GF(2^n), in a fixed order."""
    rng = random.Random(seed)
    family = build_family(n)
    p = find_primitive_quadratic(family.ctx)
    results = [
        _check_orbit(p),
        _check_order(p),
        _check_classes(p),
        _check_lemma_sweep(p, rng),
        _check_symbolic(p, rng),
        _check_packed_vs_naive(family, rng),
        _check_bound(family, threads),
    ]
    return results
