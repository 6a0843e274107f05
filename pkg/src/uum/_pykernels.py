"""Pure-Python enumeration kernels on ``int`` bitsets.

Reference implementation of the compiled ``_kernels`` module; both expose the
same functions with the same results.
"""


def closure(attrs, rows, cols, n_obj, n_attr):
    """Return ``(extent, intent)`` masks of the attribute closure of ``attrs``."""
    ext = (1 << n_obj) - 1
    while attrs and ext:
        low = attrs & -attrs
        ext &= cols[low.bit_length() - 1]
        attrs ^= low
    intent = (1 << n_attr) - 1
    e = ext
    while e and intent:
        low = e & -e
        intent &= rows[low.bit_length() - 1]
        e ^= low
    return ext, intent


def next_closure(rows, cols, n_obj, n_attr, cap):
    """All concepts as ``(extent, intent)`` masks, intents in increasing lectic order.

    Lectic order treats attribute 0 as the most significant element. Returns
    ``(concepts, overflow)``; on overflow only the first ``cap`` are returned.
    """
    full = (1 << n_attr) - 1
    ext, current = closure(0, rows, cols, n_obj, n_attr)
    out = [(ext, current)]
    if len(out) > cap:
        return out[:cap], True
    while current != full:
        for i in range(n_attr - 1, -1, -1):
            bit = 1 << i
            if current & bit:
                continue
            lower = current & (bit - 1)
            ext, candidate = closure(lower | bit, rows, cols, n_obj, n_attr)
            if candidate & (bit - 1) == lower:
                current = candidate
                break
        out.append((ext, current))
        if len(out) > cap:
            return out[:cap], True
    return out, False
