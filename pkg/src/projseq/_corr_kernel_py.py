"""Pure-Python twin of the compiled correlation kernel.

Word rows are folded back into big ints once per block, after which a
rotation is a shift-and-mask on the doubled value and the weight comes
from int.bit_count.  Results (including scan order and therefore argmax
positions) are identical to the compiled kernel by construction.
"""

from __future__ import annotations


def _row_int(mat, i: int) -> int:
    v = 0
    row = mat[i]
    for j in range(len(row) - 1, -1, -1):
        v = (v << 64) | int(row[j])
    return v


def block_max(words, doubled, nbits, left, right, t_start):
    """Same contract as the compiled block_max."""
    mask = (1 << nbits) - 1
    u_cache: dict = {}
    v_cache: dict = {}
    best = -1
    bpos = -1
    bt = -1
    for k in range(len(left)):
        ui = int(left[k])
        vi = int(right[k])
        if ui not in u_cache:
            u_cache[ui] = _row_int(words, ui)
        if vi not in v_cache:
            v_cache[vi] = _row_int(doubled, vi)
        u = u_cache[ui]
        dv = v_cache[vi]
        for t in range(t_start, nbits):
            c = nbits - 2 * (u ^ ((dv >> t) & mask)).bit_count()
            if c < 0:
                c = -c
            if c > best:
                best = c
                bpos = k
                bt = t
    return best, bpos, bt


def correlation_at(u_words, v_doubled, nbits, t):
    """Same contract as the compiled correlation_at."""
    mask = (1 << nbits) - 1
    u = 0
    for j in range(len(u_words) - 1, -1, -1):
        u = (u << 64) | int(u_words[j])
    dv = 0
    for j in range(len(v_doubled) - 1, -1, -1):
        dv = (dv << 64) | int(v_doubled[j])
    c = nbits - 2 * (u ^ ((dv >> t) & mask)).bit_count()
    return -c if c < 0 else c
