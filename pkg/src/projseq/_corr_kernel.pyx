# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Packed correlation kernel on 64-bit words (compiled path).

Sequences arrive as zero-padded word rows plus doubled rows (the bit
stream concatenated with itself) so that any cyclic rotation is a plain
word-aligned-or-shifted window.  The pure-Python twin in _corr_kernel_py
implements the same interface and must return identical results.
"""

from libc.stdint cimport uint64_t, int64_t

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define pseq_popcnt64(x) __builtin_popcountll(x)
    #else
    static int pseq_popcnt64(unsigned long long x) {
        x = x - ((x >> 1) & 0x5555555555555555ULL);
        x = (x & 0x3333333333333333ULL) + ((x >> 2) & 0x3333333333333333ULL);
        x = (x + (x >> 4)) & 0x0F0F0F0F0F0F0F0FULL;
        return (int)((x * 0x0101010101010101ULL) >> 56);
    }
    #endif
    """
    int pseq_popcnt64(uint64_t x) nogil


def block_max(const uint64_t[:, ::1] words,
              const uint64_t[:, ::1] doubled,
              Py_ssize_t nbits,
              const Py_ssize_t[::1] left,
              const Py_ssize_t[::1] right,
              Py_ssize_t t_start):
    """Scan |N - 2*weight(u XOR rot_t(v))| over all tasks and delays.

    Tasks are (left[k], right[k]) row pairs; delays run t_start..N-1.
    Returns (best, task_pos, delay) for the first maximum in scan order,
    or (-1, -1, -1) when there are no tasks.
    """
    cdef Py_ssize_t ntasks = left.shape[0]
    cdef Py_ssize_t w_count = words.shape[1]
    cdef Py_ssize_t k, t, j, w, ui, vi
    cdef int s
    cdef int64_t best = -1, bpos = -1, bt = -1
    cdef int64_t acc, c
    cdef uint64_t r, lastmask
    if nbits & 63:
        lastmask = ((<uint64_t>1) << (nbits & 63)) - 1
    else:
        lastmask = <uint64_t>0xFFFFFFFFFFFFFFFF
    with nogil:
        for k in range(ntasks):
            ui = left[k]
            vi = right[k]
            for t in range(t_start, nbits):
                w = t >> 6
                s = t & 63
                acc = 0
                if s == 0:
                    for j in range(w_count - 1):
                        acc += pseq_popcnt64(words[ui, j] ^ doubled[vi, w + j])
                    acc += pseq_popcnt64(
                        words[ui, w_count - 1]
                        ^ (doubled[vi, w + w_count - 1] & lastmask))
                else:
                    for j in range(w_count - 1):
                        r = (doubled[vi, w + j] >> s) | (doubled[vi, w + j + 1] << (64 - s))
                        acc += pseq_popcnt64(words[ui, j] ^ r)
                    r = (doubled[vi, w + w_count - 1] >> s) | (doubled[vi, w + w_count] << (64 - s))
                    acc += pseq_popcnt64(words[ui, w_count - 1] ^ (r & lastmask))
                c = nbits - 2 * acc
                if c < 0:
                    c = -c
                if c > best:
                    best = c
                    bpos = k
                    bt = t
    return best, bpos, bt


def correlation_at(const uint64_t[::1] u_words,
                   const uint64_t[::1] v_doubled,
                   Py_ssize_t nbits,
                   Py_ssize_t t):
    """Single correlation value |N - 2*weight(u XOR rot_t(v))|."""
    cdef Py_ssize_t w_count = u_words.shape[0]
    cdef Py_ssize_t j, w
    cdef int s
    cdef int64_t acc = 0, c
    cdef uint64_t r, lastmask
    if nbits & 63:
        lastmask = ((<uint64_t>1) << (nbits & 63)) - 1
    else:
        lastmask = <uint64_t>0xFFFFFFFFFFFFFFFF
    w = t >> 6
    s = t & 63
    if s == 0:
        for j in range(w_count - 1):
            acc += pseq_popcnt64(u_words[j] ^ v_doubled[w + j])
        acc += pseq_popcnt64(u_words[w_count - 1] ^ (v_doubled[w + w_count - 1] & lastmask))
    else:
        for j in range(w_count - 1):
            r = (v_doubled[w + j] >> s) | (v_doubled[w + j + 1] << (64 - s))
            acc += pseq_popcnt64(u_words[j] ^ r)
        r = (v_doubled[w + w_count - 1] >> s) | (v_doubled[w + w_count] << (64 - s))
        acc += pseq_popcnt64(u_words[w_count - 1] ^ (r & lastmask))
    c = nbits - 2 * acc
    return -c if c < 0 else c
