"""Pure-Python section-count kernels.

Bitsets arrive as ``uint64`` rows (little-endian word order) and are
converted once to Python ints, whose ``&`` and ``bit_count`` run in C.
"""

import numpy as np

BACKEND = "python"


def popcounts(zsets):
    return np.bitwise_count(zsets).sum(axis=1, dtype=np.int64)


def _as_ints(zsets):
    raw = np.ascontiguousarray(zsets, dtype="<u8")
    width = raw.shape[1] * 8
    buf = raw.tobytes()
    return [int.from_bytes(buf[i:i + width], "little") for i in range(0, len(buf), width)]


def max_section(zsets, full_mask, blocks, best=-1):
    """Largest ``popcount(Z[h_1] & ... & Z[h_r] & full)`` over all choices
    ``h_t`` in ``rows[t]``, for each ``rows`` in ``blocks``.

    Branches that cannot beat the running best are pruned; the result is
    the exact maximum whenever it exceeds the initial ``best``.
    """
    z = _as_ints(zsets)
    full = _as_ints(np.asarray(full_mask, dtype=np.uint64).reshape(1, -1))[0]
    for rows in blocks:
        rows = [[int(h) for h in level] for level in rows]
        best = _dfs(z, rows, 0, full, best)
    return best


def _dfs(z, rows, t, acc, best):
    last = t == len(rows) - 1
    for h in rows[t]:
        cur = acc & z[h]
        cnt = cur.bit_count()
        if cnt <= best:
            continue
        if last:
            best = cnt
        else:
            best = _dfs(z, rows, t + 1, cur, best)
    return best
