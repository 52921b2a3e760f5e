"""Exact sparse linear algebra over the rationals.

Vectors are dicts ``column -> Fraction`` with no zero entries.  Columns
are nonnegative ints; larger ints are reserved internally for bookkeeping
tags when solving systems.
"""

from fractions import Fraction

from ._backend import reduce_vector

_TAG = 1 << 62


def clean(vec):
    return {c: Fraction(v) for c, v in vec.items() if v}


def add_into(acc, vec, scale=1):
    """``acc += scale * vec`` in place, dropping zeros."""
    for c, v in vec.items():
        nv = acc.get(c, 0) + scale * v
        if nv:
            acc[c] = nv
        else:
            acc.pop(c, None)
    return acc


class Echelon:
    """Incrementally built echelon basis of a subspace.

    Each stored row has its pivot at its smallest column with entry 1, and
    has been reduced against the earlier rows.  Reducing a vector removes
    every pivot column, which yields a canonical coset representative: the
    set of pivot columns depends only on the subspace, not on insertion
    order.
    """

    def __init__(self, vectors=()):
        self.pivots = {}
        for v in vectors:
            self.add(v)

    def __len__(self):
        return len(self.pivots)

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, vec):
        return reduce_vector(vec, self.pivots)

    def contains(self, vec):
        return not self.reduce(vec)

    def add(self, vec):
        """Insert ``vec``; return its reduced form if it was new, else ``None``."""
        r = self.reduce(vec)
        if not r:
            return None
        col = min(r)
        inv = 1 / Fraction(r[col])
        row = {c: v * inv for c, v in r.items()}
        self.pivots[col] = row
        return row


def rank(vectors):
    return Echelon(vectors).rank


def _split(vec):
    real, tags = {}, {}
    for c, v in vec.items():
        if c >= _TAG:
            tags[c - _TAG] = v
        else:
            real[c] = v
    return real, tags


def kernel(columns):
    """Basis of ``{x : sum_j x_j columns[j] = 0}`` as dicts over column indices."""
    ech = Echelon()
    basis = []
    for j, col in enumerate(columns):
        tagged = dict(col)
        tagged[_TAG + j] = Fraction(1)
        r = ech.reduce(tagged)
        real, tags = _split(r)
        if real:
            c = min(real)
            inv = 1 / Fraction(real[c])
            ech.pivots[c] = {k: v * inv for k, v in r.items()}
        else:
            basis.append(tags)
    return basis


def solve(columns, target):
    """Return ``x`` with ``sum_j x_j columns[j] == target``, or ``None``."""
    ech = Echelon()
    for j, col in enumerate(columns):
        tagged = dict(col)
        tagged[_TAG + j] = Fraction(1)
        r = ech.reduce(tagged)
        real, _ = _split(r)
        if real:
            c = min(real)
            inv = 1 / Fraction(real[c])
            ech.pivots[c] = {k: v * inv for k, v in r.items()}
    r = ech.reduce(target)
    real, tags = _split(r)
    if real:
        return None
    return {j: -v for j, v in tags.items()}


def transpose(columns):
    """Columns of the transposed matrix: dict ``row -> {col: value}``."""
    rows = {}
    for j, col in enumerate(columns):
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    return rows


def left_certificate(columns, target, nrows):
    """A functional ``y`` killing every column with ``y(target) != 0``.

    This witnesses that ``target`` is outside the column span.  Returns
    ``None`` when ``target`` is in the span.
    """
    rows = transpose(columns)
    row_list = [rows.get(i, {}) for i in range(nrows)]
    for y in kernel(row_list):
        if sum(v * target.get(i, 0) for i, v in y.items()):
            return y
    return None


def apply_matrix(columns, x):
    out = {}
    for j, v in x.items():
        add_into(out, columns[j], v)
    return out


def quotient_basis(subspace, ambient):
    """Indices ``j`` such that ``ambient[j]`` extend a basis of ``subspace``.

    The chosen vectors project to a basis of ``span(ambient) / span(subspace)``
    whenever ``subspace`` lies inside ``span(ambient)``.
    """
    ech = Echelon(subspace)
    return [j for j, v in enumerate(ambient) if ech.add(v) is not None]
