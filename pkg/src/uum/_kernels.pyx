# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels on fixed-width uint64 word bitsets.

Same interface and results as :mod:`uum._pykernels`; Python ints are split
into little-endian 64-bit words on entry and reassembled on exit.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil

cdef uint64_t WORD_MASK = 0xFFFFFFFFFFFFFFFF


cdef inline Py_ssize_t _nwords(Py_ssize_t nbits):
    return (nbits + 63) // 64 if nbits > 0 else 1


cdef void _load(object value, uint64_t* out, Py_ssize_t nwords):
    cdef Py_ssize_t k
    for k in range(nwords):
        out[k] = <uint64_t>(value & 0xFFFFFFFFFFFFFFFF)
        value = value >> 64


cdef object _store(const uint64_t* words, Py_ssize_t nwords):
    cdef Py_ssize_t k
    result = 0
    for k in range(nwords - 1, -1, -1):
        result = (result << 64) | words[k]
    return result


cdef void _fill(uint64_t* out, Py_ssize_t nbits, Py_ssize_t nwords) noexcept nogil:
    cdef Py_ssize_t k
    cdef Py_ssize_t rem = nbits % 64
    for k in range(nwords):
        out[k] = WORD_MASK
    if nbits == 0:
        out[0] = 0
    elif rem:
        out[nwords - 1] = (<uint64_t>1 << rem) - 1
    for k in range((nbits + 63) // 64, nwords):
        out[k] = 0


cdef void _closure(const uint64_t* rows, const uint64_t* cols,
                   const uint64_t* full_g, const uint64_t* full_m,
                   Py_ssize_t wg, Py_ssize_t wm,
                   const uint64_t* attrs, uint64_t* ext, uint64_t* intent) noexcept nogil:
    cdef Py_ssize_t k, j, idx
    cdef uint64_t word
    cdef const uint64_t* line
    memcpy(ext, full_g, wg * sizeof(uint64_t))
    for k in range(wm):
        word = attrs[k]
        while word:
            idx = k * 64 + __builtin_ctzll(word)
            line = cols + idx * wg
            for j in range(wg):
                ext[j] &= line[j]
            word &= word - 1
    memcpy(intent, full_m, wm * sizeof(uint64_t))
    for k in range(wg):
        word = ext[k]
        while word:
            idx = k * 64 + __builtin_ctzll(word)
            line = rows + idx * wm
            for j in range(wm):
                intent[j] &= line[j]
            word &= word - 1


def closure(attrs, rows, cols, Py_ssize_t n_obj, Py_ssize_t n_attr):
    """Return ``(extent, intent)`` masks of the attribute closure of ``attrs``."""
    result, _ = _run(rows, cols, n_obj, n_attr, 0, attrs)
    return result[0]


def next_closure(rows, cols, Py_ssize_t n_obj, Py_ssize_t n_attr, Py_ssize_t cap):
    """All concepts as ``(extent, intent)`` masks, intents in increasing lectic order.

    Returns ``(concepts, overflow)``; on overflow only the first ``cap`` are returned.
    """
    return _run(rows, cols, n_obj, n_attr, cap, None)


cdef tuple _run(rows, cols, Py_ssize_t n_obj, Py_ssize_t n_attr, Py_ssize_t cap, object single):
    cdef Py_ssize_t wg = _nwords(n_obj)
    cdef Py_ssize_t wm = _nwords(n_attr)
    cdef Py_ssize_t i, k, b, kk
    cdef uint64_t low_mask
    cdef bint found, same
    cdef uint64_t* buf = <uint64_t*>calloc(
        n_obj * wm + n_attr * wg + 2 * wg + 6 * wm + 2, sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    cdef uint64_t* c_rows = buf
    cdef uint64_t* c_cols = c_rows + n_obj * wm
    cdef uint64_t* full_g = c_cols + n_attr * wg
    cdef uint64_t* ext = full_g + wg
    cdef uint64_t* full_m = ext + wg
    cdef uint64_t* current = full_m + wm
    cdef uint64_t* cand = current + wm
    cdef uint64_t* cand_int = cand + wm
    cdef uint64_t* start = cand_int + wm
    cdef uint64_t* spare = start + wm
    out = []
    try:
        for i in range(n_obj):
            _load(rows[i], c_rows + i * wm, wm)
        for i in range(n_attr):
            _load(cols[i], c_cols + i * wg, wg)
        _fill(full_g, n_obj, wg)
        _fill(full_m, n_attr, wm)

        if single is not None:
            _load(single, start, wm)
            _closure(c_rows, c_cols, full_g, full_m, wg, wm, start, ext, current)
            return [(_store(ext, wg), _store(current, wm))], False

        for k in range(wm):
            start[k] = 0
        _closure(c_rows, c_cols, full_g, full_m, wg, wm, start, ext, current)
        if cap < 1:
            return out, True
        out.append((_store(ext, wg), _store(current, wm)))

        while True:
            same = True
            for k in range(wm):
                if current[k] != full_m[k]:
                    same = False
                    break
            if same:
                break
            found = False
            with nogil:
                for i in range(n_attr - 1, -1, -1):
                    k = i // 64
                    b = i % 64
                    if (current[k] >> b) & 1:
                        continue
                    low_mask = ((<uint64_t>1) << b) - 1
                    for kk in range(wm):
                        if kk < k:
                            cand[kk] = current[kk]
                        elif kk == k:
                            cand[kk] = (current[kk] & low_mask) | ((<uint64_t>1) << b)
                        else:
                            cand[kk] = 0
                    _closure(c_rows, c_cols, full_g, full_m, wg, wm, cand, ext, cand_int)
                    same = True
                    for kk in range(k):
                        if cand_int[kk] != current[kk]:
                            same = False
                            break
                    if same and (cand_int[k] & low_mask) != (current[k] & low_mask):
                        same = False
                    if same:
                        memcpy(current, cand_int, wm * sizeof(uint64_t))
                        found = True
                        break
            if not found:
                raise RuntimeError("lectic successor not found")
            if len(out) >= cap:
                return out, True
            out.append((_store(ext, wg), _store(current, wm)))
        return out, False
    finally:
        free(buf)
