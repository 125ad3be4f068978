"""Exact cyclic correlation analysis over +-1 sequence families.

Two routes compute every value:

* the naive oracle -- direct +-1 summation over the unpacked values
  (autocorrelation / crosscorrelation below);
* the packed fast path -- XOR + popcount over trace bits packed into
  64-bit words, |N - 2*weight(x XOR rot_t(y))|.

The fast path runs in a compiled extension when available, else in a
pure-Python twin; both produce identical reports, including the argmax
witness.  Autocorrelation skips delay 0, cross-correlation includes it,
and cross pairs are scanned unordered (i < j) since the reversed pair at
the complementary delay gives the same value.
"""

from __future__ import annotations

import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .family import BinarySequence, SequenceFamily

try:
    from . import _corr_kernel as _default_kernel

    BACKEND = "compiled"
except ImportError:  # extension not built; big-int twin gives identical results
    from . import _corr_kernel_py as _default_kernel

    BACKEND = "fallback"

MASK64 = (1 << 64) - 1

# fixed block sizes keep the parallel reduction order (and therefore the
# argmax witness) independent of the thread count
AUTO_CHUNK = 64
CROSS_CHUNK = 4096

# full-family analysis beyond this length needs an explicit override
MAX_PLAIN_LENGTH = (1 << 10) + 1


def backend_name() -> str:
    return BACKEND


@dataclass(frozen=True)
class PackedSequence:
    """Trace bits in 64-bit words, LSB-first; bits past length are zero."""

    length: int
    words: tuple

    def __post_init__(self):
        if self.length <= 0:
            raise ValidationError("packed sequence must have positive length")
        if len(self.words) != (self.length + 63) // 64:
            raise ValidationError("word count does not match length")
        excess = 64 * len(self.words) - self.length
        if excess and self.words[-1] >> (64 - excess):
            raise ValidationError("stray bits beyond the packed length")

    @classmethod
    def from_sequence(cls, s: BinarySequence) -> "PackedSequence":
        n = len(s)
        return cls(
            n, tuple((s.bits >> (64 * i)) & MASK64 for i in range((n + 63) // 64))
        )


@dataclass(frozen=True)
class CorrelationReport:
    """Peak correlation of a family plus balance statistics.

    argmax is (kind, i, j, t) with kind in {"auto", "cross"} (j == i for
    auto), the lexicographically smallest witness of the peak.  max_cross
    is None for single-sequence families.
    """

    length: int
    family_size: int
    max_auto: int
    max_cross: int | None
    cor: int
    bound: int | None
    argmax: tuple
    balance_per_sequence: tuple
    balanced_count: int


def autocorrelation(s: BinarySequence, t: int) -> int:
    """|sum_i s_i * s_(i+t mod N)| for 1 <= t <= N-1 (naive oracle route)."""
    n = len(s)
    if not 1 <= t <= n - 1:
        raise ValidationError(f"autocorrelation delay must be in 1..{n - 1}")
    v = s.values
    return abs(sum(v[i] * v[(i + t) % n] for i in range(n)))


def crosscorrelation(u: BinarySequence, v: BinarySequence, t: int) -> int:
    """|sum_i u_i * v_(i+t mod N)| for 0 <= t <= N-1 (naive oracle route)."""
    n = len(u)
    if len(v) != n:
        raise ValidationError("sequences have different lengths")
    if not 0 <= t <= n - 1:
        raise ValidationError(f"cross-correlation delay must be in 0..{n - 1}")
    a, b = u.values, v.values
    return abs(sum(a[i] * b[(i + t) % n] for i in range(n)))


def balance(s: BinarySequence) -> int:
    """Sum of the +-1 entries."""
    return len(s) - 2 * s.bits.bit_count()


def balanced_count(sequences) -> int:
    """Number of sequences with balance +-1 (optimal for odd length)."""
    return sum(1 for s in sequences if abs(balance(s)) == 1)


def pack_matrix(sequences) -> tuple:
    """Word matrix plus doubled-word matrix for the kernel routes."""
    n = len(sequences[0])
    w_count = (n + 63) // 64
    words = np.zeros((len(sequences), w_count), dtype=np.uint64)
    doubled = np.zeros((len(sequences), 2 * w_count + 1), dtype=np.uint64)
    for i, s in enumerate(sequences):
        b = s.bits
        d = b | (b << n)
        for j in range(w_count):
            words[i, j] = (b >> (64 * j)) & MASK64
        for j in range(2 * w_count + 1):
            doubled[i, j] = (d >> (64 * j)) & MASK64
    return words, doubled


def _scan_max(kernel, words, doubled, nbits, left, right, t_start, threads, chunk):
    """Run block_max over fixed-size chunks and merge first-max-in-order."""
    ntasks = len(left)
    starts = list(range(0, ntasks, chunk))

    def run(s):
        return kernel.block_max(
            words, doubled, nbits, left[s : s + chunk], right[s : s + chunk], t_start
        )

    if threads > 1 and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(run, starts))
    else:
        results = [run(s) for s in starts]
    best, bpos, bt = -1, -1, -1
    for s, (val, pos, t) in zip(starts, results):
        if val > best:
            best, bpos, bt = val, s + pos, t
    return best, bpos, bt


def analyze_sequences(
    sequences,
    bound: int | None = None,
    threads: int = 1,
    method: str = "packed",
    force_large: bool = False,
    kernel=None,
) -> CorrelationReport:
    """Full correlation report for a list of equal-length sequences."""
    if not sequences:
        raise ValidationError("cannot analyze an empty family")
    n = len(sequences[0])
    if any(len(s) != n for s in sequences):
        raise ValidationError("sequences have different lengths")
    if threads < 1:
        raise ValidationError("thread count must be >= 1")
    if n > MAX_PLAIN_LENGTH:
        if not force_large:
            raise ValidationError(
                f"length {n} exceeds the plain-analysis limit {MAX_PLAIN_LENGTH}; "
                "pass the large-analysis override to proceed"
            )
        warnings.warn(
            f"full correlation scan over length {n} may take a long time",
            stacklevel=2,
        )
    bal = tuple(balance(s) for s in sequences)
    bcount = sum(1 for v in bal if abs(v) == 1)
    f_count = len(sequences)

    if method == "naive":
        max_auto, auto_wit = -1, None
        for i, s in enumerate(sequences):
            for t in range(1, n):
                c = autocorrelation(s, t)
                if c > max_auto:
                    max_auto, auto_wit = c, ("auto", i, i, t)
        max_cross, cross_wit = None, None
        if f_count > 1:
            max_cross = -1
            for i in range(f_count):
                for j in range(i + 1, f_count):
                    for t in range(n):
                        c = crosscorrelation(sequences[i], sequences[j], t)
                        if c > max_cross:
                            max_cross, cross_wit = c, ("cross", i, j, t)
    elif method == "packed":
        kern = kernel if kernel is not None else _default_kernel
        words, doubled = pack_matrix(sequences)
        idx = np.arange(f_count, dtype=np.intp)
        val, pos, t = _scan_max(
            kern, words, doubled, n, idx, idx, 1, threads, AUTO_CHUNK
        )
        max_auto, auto_wit = val, ("auto", int(pos), int(pos), int(t))
        max_cross, cross_wit = None, None
        if f_count > 1:
            pi, pj = np.triu_indices(f_count, k=1)
            pi = pi.astype(np.intp)
            pj = pj.astype(np.intp)
            val, pos, t = _scan_max(
                kern, words, doubled, n, pi, pj, 0, threads, CROSS_CHUNK
            )
            max_cross = val
            cross_wit = ("cross", int(pi[pos]), int(pj[pos]), int(t))
    else:
        raise ValidationError(f"unknown analysis method {method!r}")

    if max_cross is not None and max_cross > max_auto:
        cor, argmax = max_cross, cross_wit
    else:
        cor, argmax = max_auto, auto_wit
    return CorrelationReport(
        length=n,
        family_size=f_count,
        max_auto=max_auto,
        max_cross=max_cross,
        cor=cor,
        bound=bound,
        argmax=argmax,
        balance_per_sequence=bal,
        balanced_count=bcount,
    )


def family_correlation(
    family: SequenceFamily,
    threads: int = 1,
    method: str = "packed",
    force_large: bool = False,
    kernel=None,
) -> CorrelationReport:
    """Correlation report of a family, carrying its theoretical bound."""
    return analyze_sequences(
        family.sequences,
        bound=family.bound,
        threads=threads,
        method=method,
        force_large=force_large,
        kernel=kernel,
    )
