"""Pure-Python versions of the hot kernels.

These are the reference implementations; ``_kernels.pyx`` mirrors them
line for line and the test suite checks the two agree.
"""

from heapq import heappush, heappop


def reduce_vector(vec, pivots):
    """Eliminate every pivot column from ``vec``.

    ``pivots`` maps a pivot column to its row, a dict whose entry at the
    pivot column is 1 and whose other columns are all larger.  Returns a
    fresh dict with no pivot columns and no zero entries.
    """
    out = {c: v for c, v in vec.items() if v}
    heap = [c for c in out if c in pivots]
    heap.sort()
    seen = set(heap)
    while heap:
        col = heappop(heap)
        seen.discard(col)
        coeff = out.get(col)
        if not coeff:
            continue
        for c, v in pivots[col].items():
            nv = out.get(c, 0) - coeff * v
            if nv:
                out[c] = nv
                if c in pivots and c not in seen and c != col:
                    heappush(heap, c)
                    seen.add(c)
            else:
                out.pop(c, None)
    return out


def least_rotation(word):
    """Return ``(k, word[k:] + word[:k])`` for the lexicographically least rotation.

    Booth's algorithm; ``k`` is the smallest shift achieving the minimum.
    """
    n = len(word)
    if n == 0:
        return 0, word
    s = word + word
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
