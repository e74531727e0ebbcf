"""Reference implementations of the hot loops.

Used when the compiled ``_speedups`` extension is unavailable, and as the
comparison baseline in the kernel tests and benchmark.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


def orbit_bits(x: int, y: int, a: int, b: int, denom: int, d: int, n: int) -> bytes:
    """Code ``n`` steps of the orbit of ``(x + y*sqrt(d))/denom`` under the rotation.

    The slope is ``(a + b*sqrt(d))/denom``.  Symbol 0 is emitted while the
    point lies left of the slope, 1 otherwise.
    """
    out = bytearray(n)
    shift0 = denom - a
    for i in range(n):
        p = x - a
        q = y - b
        # sign of p + q*sqrt(d), integers only
        if q == 0 or d == 0:
            below = p < 0
        elif p >= 0 and q >= 0:
            below = False
        elif p <= 0 and q <= 0:
            below = True
        elif p > 0:
            below = p * p < q * q * d
        else:
            below = p * p > q * q * d
        if below:
            x += shift0
        else:
            x -= a
            out[i] = 1
        y -= b
    return bytes(out)


def scan_prefix(bits: bytes, n: int):
    """Abelian returns to the length-``n`` prefix of ``bits``.

    Returns ``(reps, occurrences, min_ones, max_ones)`` where ``reps`` lists
    ``(start, length)`` of one occurrence of every distinct return word in
    order of first appearance, ``occurrences`` counts windows abelian
    equivalent to the prefix, and ``min_ones``/``max_ones`` bound the number
    of 1s over all length-``n`` windows.
    """
    arr = np.frombuffer(bits, dtype=np.uint8)
    m = arr.shape[0]
    if n < 1 or n > m:
        raise ValueError("window length out of range")
    cs = np.zeros(m + 1, dtype=np.int64)
    np.cumsum(arr, out=cs[1:])
    win = cs[n:] - cs[:-n]
    target = win[0]
    pos = np.flatnonzero(win == target)
    gaps = np.diff(pos)
    starts = pos[:-1]
    found = []
    for g in np.unique(gaps):
        g = int(g)
        sel = starts[gaps == g]
        rows = sliding_window_view(arr, g)[sel]
        _, first = np.unique(rows, axis=0, return_index=True)
        found.extend((int(sel[i]), g) for i in first)
    found.sort()
    return found, int(pos.shape[0]), int(win.min()), int(win.max())
