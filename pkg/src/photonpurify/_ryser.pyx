# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled Ryser permanent, Gray-code subset updates. Hot kernel.

Mirrors _ryser_py.permanent exactly; the pure-Python module is the
fallback when this extension is unavailable.
"""


def permanent(double complex[:, :] m not None):
    """Permanent of a square complex128 matrix (C-contiguous preferred)."""
    cdef Py_ssize_t n = m.shape[0]
    if m.shape[1] != n:
        raise ValueError("permanent needs a square matrix")
    if n == 0:
        return 1.0 + 0j
    if n > 30:
        raise ValueError("permanent kernel capped at dimension 30")

    cdef double complex sums[30]
    cdef double complex prod, total
    cdef unsigned long long k, gray, old_gray, bit, tmp, limit
    cdef Py_ssize_t i, j, size

    for i in range(n):
        sums[i] = 0
    total = 0
    old_gray = 0
    size = 0
    limit = (<unsigned long long> 1) << n
    k = 1
    while k < limit:
        gray = k ^ (k >> 1)
        bit = gray ^ old_gray
        j = 0
        tmp = bit
        while not (tmp & 1):
            tmp >>= 1
            j += 1
        if gray & bit:
            size += 1
            for i in range(n):
                sums[i] = sums[i] + m[i, j]
        else:
            size -= 1
            for i in range(n):
                sums[i] = sums[i] - m[i, j]
        prod = 1
        for i in range(n):
            prod = prod * sums[i]
        if (n - size) & 1:
            total = total - prod
        else:
            total = total + prod
        old_gray = gray
        k += 1
    return total
