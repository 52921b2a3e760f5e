"""Cyclic words, necklace brackets and the Kirillov-Kostant bracket.

The space ``A/[A,A]`` of a free algebra has a basis of cyclic words; each
class is keyed by the length-lex least rotation of any representative.
"""

from fractions import Fraction

from ._backend import least_rotation
from .core import (CPoly, FreePoly, _join_terms, _signed_term, default_names, word_key,
                   words_of_length)
from .errors import NcalcError
from .linalg import rank


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def canonical_rotation(word):
    return least_rotation(tuple(word))[1]


class NecklaceElement:
    """Linear combination of cyclic words in ``ngens`` letters."""

    __slots__ = ("terms", "ngens")

    def __init__(self, terms=None, ngens=1):
        self.ngens = ngens
        self.terms = {}
        for w, c in (terms or {}).items():
            if c:
                _acc(self.terms, canonical_rotation(w), Fraction(c) if isinstance(c, int) else c)

    @classmethod
    def word(cls, w, ngens, coeff=1):
        return cls({tuple(w): coeff}, ngens)

    def _check(self, other):
        if self.ngens != other.ngens:
            raise NcalcError("necklace elements over different generator sets")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, NecklaceElement):
            return NotImplemented
        return self.ngens == other.ngens and self.terms == other.terms

    def __hash__(self):
        return hash((self.ngens, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            _acc(out, w, c)
        return NecklaceElement._raw(out, self.ngens)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return NecklaceElement._raw({w: c * s for w, c in self.terms.items() if c * s}, self.ngens)

    def __rmul__(self, s):
        return self.scale(s)

    @classmethod
    def _raw(cls, terms, ngens):
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.ngens = ngens
        return obj

    def weights(self):
        return sorted({len(w) for w in self.terms})

    def homogeneous(self, w):
        return NecklaceElement._raw({k: c for k, c in self.terms.items() if len(k) == w}, self.ngens)

    def representative(self):
        """The free polynomial made of the canonical rotations."""
        return FreePoly(dict(self.terms), self.ngens)

    def to_str(self, names=None):
        names = names or default_names(self.ngens)
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=word_key):
            mono = "cyc(" + "*".join(names[g] for g in w) + ")" if w else ""
            parts.append(_signed_term(self.terms[w], mono))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def project_cyclic(f):
    """Image of a free polynomial in ``A/[A,A]``."""
    return NecklaceElement(f.terms, f.ngens)


def _as_necklace(f):
    return project_cyclic(f) if isinstance(f, FreePoly) else f


def cyclic_derivative(f, i):
    """Sum over occurrences of letter ``i``: the word read cyclically after it."""
    f = _as_necklace(f)
    if not 0 <= i < f.ngens:
        raise NcalcError(f"generator index {i} out of range")
    out = {}
    for w, c in f.terms.items():
        for k, g in enumerate(w):
            if g == i:
                _acc(out, w[k + 1:] + w[:k], c)
    return FreePoly(out, f.ngens)


class SymplecticLayout:
    """Generators ``0..n-1`` are ``x_1..x_n`` and ``n..2n-1`` are ``y_1..y_n``."""

    def __init__(self, n):
        if n < 1:
            raise NcalcError("a symplectic layout needs at least one pair")
        self.n = n

    @property
    def ngens(self):
        return 2 * self.n

    def names(self):
        if self.n == 1:
            return ["x", "y"]
        return [f"x{i + 1}" for i in range(self.n)] + [f"y{i + 1}" for i in range(self.n)]

    def check(self, *elems):
        for e in elems:
            if e.ngens != self.ngens:
                raise NcalcError(f"element has {e.ngens} generators, layout needs {self.ngens}")


def necklace_bracket(f, g, layout):
    """``sum_i cyc(df/dx_i dg/dy_i - df/dy_i dg/dx_i)``."""
    f, g = _as_necklace(f), _as_necklace(g)
    layout.check(f, g)
    n = layout.n
    acc = FreePoly.zero(layout.ngens)
    for i in range(n):
        fx, fy = cyclic_derivative(f, i), cyclic_derivative(f, n + i)
        gx, gy = cyclic_derivative(g, i), cyclic_derivative(g, n + i)
        acc = acc + fx * gy - fy * gx
    return project_cyclic(acc)


def hamiltonian_field(f, layout):
    """Generator images of the derivation ``x_i -> -df/dy_i``, ``y_i -> df/dx_i``."""
    f = _as_necklace(f)
    layout.check(f)
    n = layout.n
    xs = [-cyclic_derivative(f, n + i) for i in range(n)]
    ys = [cyclic_derivative(f, i) for i in range(n)]
    return xs + ys


def apply_derivation(images, f):
    """Apply the derivation with generator ``images`` to a free polynomial."""
    ngens = len(images)
    out = {}
    for w, c in f.terms.items():
        for k, g in enumerate(w):
            pre, post = w[:k], w[k + 1:]
            for v, c2 in images[g].terms.items():
                _acc(out, pre + v + post, c * c2)
    return FreePoly(out, ngens)


def apply_to_necklace(images, f):
    """Induced action on cyclic words."""
    f = _as_necklace(f)
    return project_cyclic(apply_derivation(images, f.representative()))


def derivation_commutator(a, b):
    """Generator images of ``[a, b] = a b - b a``."""
    return [apply_derivation(a, b[g]) - apply_derivation(b, a[g]) for g in range(len(a))]


def central_extension_kernel(layout, weight):
    """Dimension of the kernel of ``f -> theta_f`` on cyclic words of one weight."""
    words = sorted({canonical_rotation(w) for w in words_of_length(layout.ngens, weight)},
                   key=word_key)
    vecs = []
    index = {}
    for w in words:
        imgs = hamiltonian_field(NecklaceElement.word(w, layout.ngens), layout)
        v = {}
        for g, p in enumerate(imgs):
            for u, c in p.terms.items():
                key = index.setdefault((g, u), len(index))
                v[key] = c
        vecs.append(v)
    return len(words) - rank(vecs)


# --------------------------------------------------------------------------
# Kirillov-Kostant bracket on Sym(g)


def kirillov_kostant(f, g, glie):
    """``{f, g} = sum c_ij^k df/dx_i dg/dx_j x_k`` with commutative partials."""
    n = glie.dim
    if f.nvars != n or g.nvars != n:
        raise NcalcError("polynomial variable count must equal the Lie algebra dimension")
    out = CPoly.zero(n)
    fd = [f.diff(i) for i in range(n)]
    gd = [g.diff(j) for j in range(n)]
    for i in range(n):
        if not fd[i]:
            continue
        for j in range(n):
            if not gd[j]:
                continue
            br = glie.table[i][j]
            if not br:
                continue
            lin = CPoly.zero(n)
            for k, c in br.items():
                lin = lin + CPoly.var(k, n, c)
            out = out + fd[i] * gd[j] * lin
    return out
