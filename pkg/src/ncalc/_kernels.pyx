# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot kernels in ``_kernels_py``."""

from heapq import heappush, heappop


def reduce_vector(dict vec, dict pivots):
    cdef dict out = {c: v for c, v in vec.items() if v}
    cdef list heap = [c for c in out if c in pivots]
    cdef set seen
    cdef dict row
    cdef object col, coeff, c, v, nv
    heap.sort()
    seen = set(heap)
    while heap:
        col = heappop(heap)
        seen.discard(col)
        coeff = out.get(col)
        if not coeff:
            continue
        row = <dict>pivots[col]
        for c, v in row.items():
            nv = out.get(c, 0) - coeff * v
            if nv:
                out[c] = nv
                if c in pivots and c not in seen and c != col:
                    heappush(heap, c)
                    seen.add(c)
            else:
                out.pop(c, None)
    return out


def least_rotation(tuple word):
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t j, k, i
    cdef list s
    cdef list f
    cdef object sj
    if n == 0:
        return 0, word
    s = list(word) * 2
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    k %= n
    return k, word[k:] + word[:k]
