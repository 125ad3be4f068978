"""Benchmark the correlation backends against each other.

Times the full-family correlation scan through the compiled kernel,
the pure-Python kernel, and (for small n) the naive +-1 oracle, and
prints one row per field size.  All routes must report the same peak;
this is asserted.

Usage: python benchmarks/bench_kernels.py [--sizes 5 6 7 8] [--threads K]
"""

import argparse
import time

from projseq import build_family, family_correlation
from projseq import _corr_kernel_py

try:
    from projseq import _corr_kernel
except ImportError:
    _corr_kernel = None

NAIVE_MAX_N = 6


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7, 8])
    parser.add_argument("--threads", type=int, default=1)
    args = parser.parse_args()

    header = f"{'n':>3} {'pairs*delays':>13} {'compiled':>10} {'fallback':>10} {'naive':>10} {'peak':>5}"
    print(header)
    print("-" * len(header))
    for n in args.sizes:
        fam = build_family(n)
        work = (fam.size * (fam.size - 1) // 2 + fam.size) * fam.length
        row = {"compiled": None, "fallback": None, "naive": None}
        peaks = set()

        if _corr_kernel is not None:
            rep, dt = timed(
                lambda: family_correlation(fam, threads=args.threads, kernel=_corr_kernel)
            )
            row["compiled"] = dt
            peaks.add(rep.cor)
        rep, dt = timed(
            lambda: family_correlation(fam, threads=args.threads, kernel=_corr_kernel_py)
        )
        row["fallback"] = dt
        peaks.add(rep.cor)
        if n <= NAIVE_MAX_N:
            rep, dt = timed(lambda: family_correlation(fam, method="naive"))
            row["naive"] = dt
            peaks.add(rep.cor)

        assert len(peaks) == 1, f"backends disagree at n={n}: {peaks}"
        cells = [
            f"{dt * 1e3:9.1f}ms" if dt is not None else f"{'-':>10}"
            for dt in (row["compiled"], row["fallback"], row["naive"])
        ]
        print(f"{n:>3} {work:>13} {' '.join(cells)} {peaks.pop():>5}")
    if _corr_kernel is None:
        print("note: compiled kernel not built; only the fallback was timed")


if __name__ == "__main__":
    main()
