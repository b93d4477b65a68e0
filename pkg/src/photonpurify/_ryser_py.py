"""Pure-Python Ryser permanent, Gray-code subset updates. Fallback kernel.

Same algorithm as the compiled extension ``_ryser``; used when the
extension is not built or when forced via PHOTON_PURIFY_BACKEND=python.
"""

from __future__ import annotations


def permanent(m) -> complex:
    """Permanent of a square complex matrix (indexable as m[i, j]).

    per(A) = sum over non-empty column subsets S of
    (-1)^(n-|S|) * prod_i sum_{j in S} A[i, j]; subsets are visited in
    Gray-code order so each step updates the row sums by one column.
    """
    n = m.shape[0] if hasattr(m, "shape") else len(m)
    if n == 0:
        return 1.0 + 0j
    # column-major copy; plain lists beat ndarray scalar indexing here
    cols = [[complex(m[i, j]) for i in range(n)] for j in range(n)]
    sums = [0j] * n
    total = 0j
    old_gray = 0
    for k in range(1, 1 << n):
        gray = k ^ (k >> 1)
        bit = gray ^ old_gray
        j = bit.bit_length() - 1
        col = cols[j]
        if gray & bit:
            for i in range(n):
                sums[i] += col[i]
        else:
            for i in range(n):
                sums[i] -= col[i]
        prod = 1.0 + 0j
        for v in sums:
            prod *= v
        if (n - gray.bit_count()) & 1:
            total -= prod
        else:
            total += prod
        old_gray = gray
    return total
