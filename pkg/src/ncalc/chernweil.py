"""Weil algebras, the Gelfand-Smirnov bracket and Chern-Simons forms.

Free graded algebras here have ``2n`` letters: ``0..n-1`` are odd (degree 1)
and ``n..2n-1`` are even (degree 2).  Letter ``j`` and ``n + j`` are called
``a_j`` and ``b_j``; for the noncommutative Weil algebra of a ``k``-algebra
with basis ``e_1..e_m`` they are ``lambda_-`` and ``lambda_+`` of ``e_j^*``.

Elements carry an optional power of a commuting even parameter ``t``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .core import _join_terms, _signed_term
from .errors import NcalcError, check_dim
from .linalg import rank


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def letter_degree(letter, n):
    return 1 if letter < n else 2


def word_degree(word, n):
    return sum(1 if x < n else 2 for x in word)


def default_letter_names(n):
    return [f"a{j + 1}" for j in range(n)] + [f"b{j + 1}" for j in range(n)]


class SElem:
    """Element of the free graded algebra on ``n`` odd and ``n`` even letters, over ``Q[t]``."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for k, c in (terms or {}).items():
            if not isinstance(k[0], tuple):
                k = (tuple(k), 0)
            if c:
                _acc(self.terms, (tuple(k[0]), k[1]), Fraction(c))

    @classmethod
    def word(cls, w, n, coeff=1, tpow=0):
        return cls(n, {(tuple(w), tpow): coeff})

    @classmethod
    def one(cls, n):
        return cls(n, {((), 0): 1})

    @classmethod
    def t(cls, n, power=1):
        return cls(n, {((), power): 1})

    def _check(self, other):
        if not isinstance(other, SElem) or other.n != self.n:
            raise NcalcError("graded words over different alphabets")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, SElem) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return SElem._raw(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return SElem._raw(self.n, {k: c * s for k, c in self.terms.items() if c * s})

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    def __mul__(self, other):
        if not isinstance(other, SElem):
            return self.scale(other)
        self._check(other)
        out = {}
        for (w1, t1), c1 in self.terms.items():
            for (w2, t2), c2 in other.terms.items():
                _acc(out, (w1 + w2, t1 + t2), c1 * c2)
        return SElem._raw(self.n, out)

    def __rmul__(self, s):
        return self.scale(s)

    def __pow__(self, k):
        out = SElem.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def degrees(self):
        return sorted({word_degree(w, self.n) for w, _ in self.terms})

    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise NcalcError("element is not homogeneous")
        return ds[0] if ds else 0

    def homogeneous(self, d):
        return SElem._raw(self.n, {k: c for k, c in self.terms.items()
                                   if word_degree(k[0], self.n) == d})

    def integrate_t(self):
        """``int_0^1 dt``: ``t^m -> 1/(m+1)``."""
        out = {}
        for (w, tp), c in self.terms.items():
            _acc(out, (w, 0), c / (tp + 1))
        return SElem._raw(self.n, out)

    def at_t(self, value):
        out = {}
        for (w, tp), c in self.terms.items():
            _acc(out, (w, 0), c * Fraction(value) ** tp)
        return SElem._raw(self.n, out)

    def to_str(self, names=None):
        names = names or default_letter_names(self.n)
        if not self.terms:
            return "0"
        parts = []
        for w, tp in sorted(self.terms, key=lambda k: (k[1], len(k[0]), k[0])):
            fac = [names[x] for x in w] + (["t" if tp == 1 else f"t^{tp}"] if tp else [])
            parts.append(_signed_term(self.terms[(w, tp)], "*".join(fac)))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def super_derivation(images, u):
    """Extend letter ``images`` to an odd derivation (Koszul signs)."""
    n = u.n
    out = {}
    for (w, tp), c in u.terms.items():
        pre = 0
        for i, x in enumerate(w):
            img = images[x]
            if img is not None:
                sign = -1 if pre % 2 else 1
                head, tail = w[:i], w[i + 1:]
                for (v, tv), cv in img.terms.items():
                    _acc(out, (head + v + tail, tp + tv), sign * c * cv)
            pre += 1 if x < n else 2
    return SElem._raw(n, out)


def free_dga_d(u):
    """``d a_j = b_j``, ``d b_j = 0``; the free DGA used by the Gelfand-Smirnov and Chern-Simons parts."""
    n = u.n
    images = [SElem.word((n + j,), n) for j in range(n)] + [None] * n
    return super_derivation(images, u)


def supercommutator(x, y):
    out = SElem(x.n)
    for dx in x.degrees():
        for dy in y.degrees():
            a, b = x.homogeneous(dx), y.homogeneous(dy)
            out = out + a * b - (b * a).scale((-1) ** (dx * dy))
    return out


# --------------------------------------------------------------------------
# super-cyclic words


def super_canonical(word, n):
    """``(sign, canonical word)``, or ``(0, None)`` when the word vanishes.

    Moving a letter of degree ``d`` from the front to the back of a word of
    total degree ``D`` multiplies by ``(-1)^(d (D - d))``.
    """
    word = tuple(word)
    if not word:
        return 1, ()
    total = word_degree(word, n)
    best, best_sign, clash = None, None, False
    r, s = word, 1
    for _ in range(len(word)):
        if best is None or r < best:
            best, best_sign, clash = r, s, False
        elif r == best and s != best_sign:
            clash = True
        d = 1 if r[0] < n else 2
        if (d * (total - d)) % 2:
            s = -s
        r = r[1:] + r[:1]
    if clash:
        return 0, None
    return best_sign, best


class SuperCyclic:
    """Element of ``W / [W, W]`` (graded commutators): canonical super-cyclic words."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for k, c in (terms or {}).items():
            if not isinstance(k[0], tuple):
                k = (tuple(k), 0)
            s, w = super_canonical(k[0], n)
            if s and c:
                _acc(self.terms, (w, k[1]), s * Fraction(c))

    @classmethod
    def _raw(cls, n, terms):
        obj = cls.__new__(cls)
        obj.n = n
        obj.terms = terms
        return obj

    def _check(self, other):
        if not isinstance(other, SuperCyclic) or other.n != self.n:
            raise NcalcError("cyclic words over different alphabets")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, SuperCyclic) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return SuperCyclic._raw(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return SuperCyclic._raw(self.n, {k: c * s for k, c in self.terms.items() if c * s})

    def __rmul__(self, s):
        return self.scale(s)

    def degrees(self):
        return sorted({word_degree(w, self.n) for w, _ in self.terms})

    def homogeneous(self, d):
        return SuperCyclic._raw(self.n, {k: c for k, c in self.terms.items()
                                         if word_degree(k[0], self.n) == d})

    def representative(self):
        return SElem._raw(self.n, dict(self.terms))

    def to_str(self, names=None):
        names = names or default_letter_names(self.n)
        if not self.terms:
            return "0"
        parts = []
        for w, tp in sorted(self.terms, key=lambda k: (k[1], word_degree(k[0], self.n), k[0])):
            mono = "cyc(" + " ".join(names[x] for x in w) + ")" if w else ""
            if tp:
                tt = "t" if tp == 1 else f"t^{tp}"
                mono = f"{mono}*{tt}" if mono else tt
            parts.append(_signed_term(self.terms[(w, tp)], mono))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


GSElement = SuperCyclic


def project_super_cyclic(u):
    return SuperCyclic(u.n, u.terms)


def _as_cyclic(x):
    return project_super_cyclic(x) if isinstance(x, SElem) else x


def gs_d(P):
    """The differential induced on super-cyclic words by ``d a_j = b_j``."""
    P = _as_cyclic(P)
    return project_super_cyclic(free_dga_d(P.representative()))


def gs_partial(P, letter):
    """Sum over signed rotations that start with ``letter``, with that letter removed."""
    P = _as_cyclic(P)
    n = P.n
    out = {}
    for (w, tp), c in P.terms.items():
        total = word_degree(w, n)
        r, s = w, 1
        for _ in range(len(w)):
            if r[0] == letter:
                _acc(out, (r[1:], tp), s * c)
            d = 1 if r[0] < n else 2
            if (d * (total - d)) % 2:
                s = -s
            r = r[1:] + r[:1]
    return SElem._raw(n, out)


def _homogeneous_parts(P):
    return [(d, P.homogeneous(d)) for d in P.degrees()]


def gs_bracket_literal(P, Q):
    """``sum_j dP/da_j dQ/db_j + (-1)^(deg P deg Q) dQ/da_j dP/db_j`` as displayed."""
    P, Q = _as_cyclic(P), _as_cyclic(Q)
    P._check(Q)
    n = P.n
    out = SuperCyclic(n)
    for p, Pp in _homogeneous_parts(P):
        for q, Qq in _homogeneous_parts(Q):
            acc = SElem(n)
            for j in range(n):
                acc = acc + gs_partial(Pp, j) * gs_partial(Qq, n + j)
                acc = acc + (gs_partial(Qq, j) * gs_partial(Pp, n + j)).scale((-1) ** (p * q))
            out = out + project_super_cyclic(acc)
    return out


def gs_bracket(P, Q):
    """Gelfand-Smirnov bracket, normalized as ``(-1)^(deg P)`` times the displayed sum.

    With this sign the bracket is graded antisymmetric and satisfies the
    graded Jacobi identity for the parity ``deg + 1``.
    """
    P, Q = _as_cyclic(P), _as_cyclic(Q)
    out = SuperCyclic(P.n)
    for p, Pp in _homogeneous_parts(P):
        out = out + gs_bracket_literal(Pp, Q).scale((-1) ** p)
    return out


def gs_casimir(n):
    """``b_1^2 + ... + b_n^2``."""
    return SuperCyclic(n, {((n + j, n + j), 0): 1 for j in range(n)})


def gs_curvature(n, j=0):
    """``a_j^2 + b_j`` as a word element."""
    return SElem(n, {((j, j), 0): 1, ((n + j,), 0): 1})


def gs_chern(k, n=1):
    """``ch_k = sum_j (a_j^2 + b_j)^k``; ``ch_0`` is the unit class."""
    if k < 0:
        raise NcalcError("Chern character index must be non-negative")
    if k == 0:
        return SuperCyclic(n, {((), 0): 1})
    out = SElem(n)
    for j in range(n):
        out = out + gs_curvature(n, j) ** k
    return project_super_cyclic(out)


def sigma(k, l, x, y):
    """Sum of all products with ``k`` factors ``x`` and ``l`` factors ``y``."""
    out = SElem(x.n)
    for pos in combinations(range(k + l), k):
        term = SElem.one(x.n)
        s = set(pos)
        for i in range(k + l):
            term = term * (x if i in s else y)
        out = out + term
    return out


def gs_transgression_displayed(k, n=1):
    """``a/(k-1)! * sum_i sigma_{i,k-1-i}(a^2, b)/(k+i)``, summed over pairs.

    Its differential is ``ch_k / k!`` (the Chern-Simons normalization).
    """
    if k < 1:
        raise NcalcError("transgression needs k >= 1")
    out = SElem(n)
    for j in range(n):
        a, b = SElem.word((j,), n), SElem.word((n + j,), n)
        inner = SElem(n)
        for i in range(k):
            inner = inner + sigma(i, k - 1 - i, a * a, b).scale(Fraction(1, k + i))
        out = out + (a * inner).scale(Fraction(1, factorial(k - 1)))
    return project_super_cyclic(out)


def gs_transgression(k, n=1):
    """``ch^1_k`` with ``d ch^1_k = ch_k``: ``k!`` times the displayed formula."""
    return gs_transgression_displayed(k, n).scale(factorial(k))


def gs_chern_report(kmax=3, n=1):
    """Closedness of ``ch_k``, vanishing of ``{ch_k, ch_l}``, and ``d ch^1_k = ch_k``."""
    chs = [gs_chern(k, n) for k in range(kmax + 1)]
    closed = {k: not gs_d(chs[k]) for k in range(kmax + 1)}
    commute = {(k, l): not gs_bracket(chs[k], chs[l])
               for k in range(kmax + 1) for l in range(kmax + 1)}
    transgress = {k: gs_d(gs_transgression(k, n)) == chs[k] for k in range(1, kmax + 1)}
    return {"closed": closed, "commute": commute, "transgression": transgress,
            "ok": all(closed.values()) and all(commute.values()) and all(transgress.values())}


# --------------------------------------------------------------------------
# curvature, Bianchi identity and Chern-Simons forms


def dga_curvature(a):
    """``F = da + a^2`` for a degree-one element; asserts ``dF + [a, F] = 0``."""
    if a.degrees() not in ([], [1]):
        raise NcalcError("a connection form must have degree one")
    F = free_dga_d(a) + a * a
    bianchi = free_dga_d(F) + supercommutator(a, F)
    if bianchi:
        raise AssertionError("Bianchi identity failed")
    return F


def chern_simons_class(k):
    """``cs_{2k-1} = int_0^1 a F_t^(k-1)/(k-1)! dt`` with ``a_t = t a`` in ``k<a, da>``.

    Returns ``(cs, ok)`` where ``ok`` records ``d cs = F^k / k!`` in the
    super-cyclic quotient.
    """
    if k < 1:
        raise NcalcError("Chern-Simons classes start at k = 1")
    a = SElem.word((0,), 1)
    t = SElem.t(1)
    Ft = t * free_dga_d(a) + t * t * a * a
    integrand = (a * Ft ** (k - 1)).scale(Fraction(1, factorial(k - 1)))
    cs = project_super_cyclic(integrand.integrate_t())
    F = dga_curvature(a)
    ok = gs_d(cs) == project_super_cyclic(F ** k).scale(Fraction(1, factorial(k)))
    return cs, ok


# --------------------------------------------------------------------------
# noncommutative Weil algebra of a finite-dimensional algebra


def _coproduct(A):
    """``Delta(e_k^*) = sum c_ij^k e_i^* (x) e_j^*`` as ``{k: [(i, j, c)]}``."""
    out = {k: [] for k in range(A.dim)}
    for i in range(A.dim):
        for j in range(A.dim):
            for k, c in A.table[i][j].items():
                if c:
                    out[k].append((i, j, c))
    return out


@lru_cache(maxsize=None)
def _wnc_images_cached(key):
    A = key[1].A
    m = A.dim
    cop = _coproduct(A)
    images = []
    for k in range(m):
        img = {((m + k,), 0): 1}
        for i, j, c in cop[k]:
            _acc(img, ((i, j), 0), c)
        images.append(SElem(m, img))
    for k in range(m):
        img = {}
        for i, j, c in cop[k]:
            _acc(img, ((i, m + j), 0), c)
            _acc(img, ((m + i, j), 0), -c)
        images.append(SElem(m, img))
    return images


class _Key:
    """Hash wrapper so structure algebras can key an lru_cache."""

    def __init__(self, A):
        self.A = A
        self.h = hash((tuple(A.names), repr(A.table)))

    def __hash__(self):
        return self.h

    def __eq__(self, other):
        return self.A is other.A or (self.A.names == other.A.names and self.A.table == other.A.table)


def wnc_images(A):
    """Letter images of ``d_W``: ``lambda_- -> lambda_+ + Delta_--``, ``lambda_+ -> Delta_-+ - Delta_+-``."""
    return _wnc_images_cached(("wnc", _Key(A)))


def wnc_d(u, A):
    if u.n != A.dim:
        raise NcalcError("Weil element alphabet does not match the algebra dimension")
    return super_derivation(wnc_images(A), u)


def graded_words(n, degree):
    """All words in ``n`` odd and ``n`` even letters of total degree ``degree``."""
    if degree == 0:
        return [()]
    out = []
    for first in range(2 * n):
        d = 1 if first < n else 2
        if d <= degree:
            out.extend((first,) + w for w in graded_words(n, degree - d))
    return out


def _rank_of_map(source, target_index, f):
    vecs = []
    for w in source:
        img = f(w)
        v = {}
        for key, c in img.items():
            v[target_index.setdefault(key, len(target_index))] = c
        vecs.append(v)
    return rank(vecs)


def wnc_cohomology(A, max_degree):
    """Dimensions of ``H^j(W_nc(A), d_W)`` for ``j <= max_degree``."""
    m = A.dim
    images = wnc_images(A)
    bases = [graded_words(m, d) for d in range(max_degree + 2)]
    for b in bases:
        check_dim(len(b), "Weil algebra degree piece")
    ranks = []
    for d in range(max_degree + 1):
        def f(w):
            return {k[0]: c for k, c in super_derivation(images, SElem.word(w, m)).terms.items()}
        ranks.append(_rank_of_map(bases[d], {}, f))
    return [len(bases[d]) - ranks[d] - (ranks[d - 1] if d else 0) for d in range(max_degree + 1)]


def hodge_quotient(A, p, max_degree):
    """``R(W_nc(A) / F^p)``: super-cyclic words with fewer than ``p`` even letters.

    Returns ``{"basis": {deg: [words]}, "rank_d": {deg: r}, "cohomology": [dims]}``.
    """
    m = A.dim
    images = wnc_images(A)

    def allowed(w):
        return sum(1 for x in w if x >= m) < p

    basis = {}
    for d in range(max_degree + 2):
        words = set()
        for w in graded_words(m, d):
            if allowed(w):
                s, c = super_canonical(w, m)
                if s:
                    words.add(c)
        basis[d] = sorted(words, key=lambda w: (len(w), w))
        check_dim(len(basis[d]), "Hodge quotient piece")
    rank_d = {}
    for d in range(max_degree + 1):
        def f(w):
            img = project_super_cyclic(super_derivation(images, SElem.word(w, m)))
            return {k[0]: c for k, c in img.terms.items() if allowed(k[0])}
        rank_d[d] = _rank_of_map(basis[d], {}, f)
    coh = [len(basis[d]) - rank_d[d] - (rank_d[d - 1] if d else 0) for d in range(max_degree + 1)]
    return {"basis": {d: basis[d] for d in range(max_degree + 1)}, "rank_d": rank_d,
            "cohomology": coh}


# --------------------------------------------------------------------------
# commutative Weil algebra W(g) = Sym(g^*) (x) Lambda(g^*)


def _merge(s, t):
    if set(s) & set(t):
        return None
    inv = sum(1 for x in s for y in t if x > y)
    return (-1) ** inv, tuple(sorted(s + t))


class WeilElement:
    """``sum c u^e xi^S``: ``u`` the even copies (degree 2), ``xi`` the odd ones (degree 1)."""

    __slots__ = ("dim", "terms")

    def __init__(self, dim, terms=None):
        self.dim = dim
        self.terms = {}
        for (e, s), c in (terms or {}).items():
            s = tuple(s)
            if list(s) != sorted(set(s)):
                raise NcalcError("exterior index sets must be strictly increasing")
            if c:
                _acc(self.terms, (tuple(e), s), Fraction(c))

    @classmethod
    def u(cls, k, dim):
        e = [0] * dim
        e[k] = 1
        return cls(dim, {(tuple(e), ()): 1})

    @classmethod
    def xi(cls, k, dim):
        return cls(dim, {((0,) * dim, (k,)): 1})

    @classmethod
    def one(cls, dim):
        return cls(dim, {((0,) * dim, ()): 1})

    @classmethod
    def _raw(cls, dim, terms):
        obj = cls.__new__(cls)
        obj.dim = dim
        obj.terms = terms
        return obj

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, WeilElement) and self.dim == other.dim and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return WeilElement._raw(self.dim, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return WeilElement._raw(self.dim, {k: c * s for k, c in self.terms.items() if c * s})

    def __mul__(self, other):
        if not isinstance(other, WeilElement):
            return self.scale(other)
        out = {}
        for (e1, s1), c1 in self.terms.items():
            for (e2, s2), c2 in other.terms.items():
                m = _merge(s1, s2)
                if m:
                    _acc(out, (tuple(a + b for a, b in zip(e1, e2)), m[1]), m[0] * c1 * c2)
        return WeilElement._raw(self.dim, out)

    def __rmul__(self, s):
        return self.scale(s)

    def degrees(self):
        return sorted({2 * sum(e) + len(s) for e, s in self.terms})

    def to_str(self, names=None):
        names = names or [f"e{i + 1}" for i in range(self.dim)]
        if not self.terms:
            return "0"
        parts = []
        for e, s in sorted(self.terms, key=lambda k: (2 * sum(k[0]) + len(k[1]), k)):
            fac = []
            for i, k in enumerate(e):
                if k:
                    fac.append(f"{names[i]}+" if k == 1 else f"{names[i]}+^{k}")
            fac.extend(f"{names[i]}-" for i in s)
            parts.append(_signed_term(self.terms[(e, s)], "*".join(fac)))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def _weil_derivation(u, on_u, on_xi, odd):
    """Extend generator images to a derivation (odd: Koszul sign from preceding xi's)."""
    dim = u.dim
    out = WeilElement(dim)
    for (e, s), c in u.terms.items():
        for k, mult in enumerate(e):
            if mult and on_u[k]:
                f = list(e)
                f[k] -= 1
                rest = WeilElement(dim, {(tuple(f), s): c * mult})
                out = out + on_u[k] * rest
        for pos, k in enumerate(s):
            if on_xi[k]:
                sign = -1 if (odd and pos % 2) else 1
                before = WeilElement(dim, {(e, s[:pos]): c * sign})
                after = WeilElement(dim, {((0,) * dim, s[pos + 1:]): 1})
                out = out + before * on_xi[k] * after
    return out


def weil_d(u, g):
    """``d xi^k = u^k + sum_{i<j} c_ij^k xi^i xi^j``, ``d u^k = -sum_{i,j} c_ij^k u^i xi^j``."""
    m = g.dim
    on_xi, on_u = [], []
    for k in range(m):
        t = WeilElement.u(k, m)
        t2 = WeilElement(m)
        for i in range(m):
            for j in range(m):
                c = g.table[i][j].get(k, 0)
                if c:
                    if i < j:
                        t = t + WeilElement.xi(i, m) * WeilElement.xi(j, m) * c
                    t2 = t2 - WeilElement.u(i, m) * WeilElement.xi(j, m) * c
        on_xi.append(t)
        on_u.append(t2)
    return _weil_derivation(u, on_u, on_xi, odd=True)


def _vector(x, g):
    if isinstance(x, int):
        return {x: Fraction(1)}
    return {i: Fraction(c) for i, c in x.items() if c}


def weil_contraction(x, u, g):
    """``i_x``: zero on ``u``'s, ``xi^k -> x_k``; an odd derivation."""
    x = _vector(x, g)
    m = g.dim
    on_xi = [WeilElement.one(m).scale(x.get(k, 0)) for k in range(m)]
    return _weil_derivation(u, [WeilElement(m)] * m, on_xi, odd=True)


def weil_lie_derivative(x, u, g):
    """``L_x``: ``lambda -> lambda o ad x`` on both copies; an even derivation."""
    x = _vector(x, g)
    m = g.dim
    on_xi, on_u = [], []
    for k in range(m):
        a, b = WeilElement(m), WeilElement(m)
        for i, ci in x.items():
            for j in range(m):
                c = g.table[i][j].get(k, 0)
                if c:
                    a = a + WeilElement.xi(j, m).scale(ci * c)
                    b = b + WeilElement.u(j, m).scale(ci * c)
        on_xi.append(a)
        on_u.append(b)
    return _weil_derivation(u, on_u, on_xi, odd=False)


def weil_cartan(x, u, g):
    """Both sides of ``L_x = d i_x + i_x d`` on ``u``."""
    lhs = weil_lie_derivative(x, u, g)
    rhs = weil_d(weil_contraction(x, u, g), g) + weil_contraction(x, weil_d(u, g), g)
    return {"ok": lhs == rhs, "lie": lhs, "cartan": rhs}


def weil_basis(dim, degree):
    out = []
    for q in range(min(dim, degree) + 1):
        if (degree - q) % 2:
            continue
        p = (degree - q) // 2
        for e in _exponents(dim, p):
            for s in combinations(range(dim), q):
                out.append((e, s))
    return out


def _exponents(dim, total):
    if dim == 0:
        return [()] if total == 0 else []
    return [(k,) + rest for k in range(total, -1, -1) for rest in _exponents(dim - 1, total - k)]


def weil_cohomology(g, max_degree):
    """Dimensions of ``H^j(W(g), d_W)`` for ``j <= max_degree``."""
    m = g.dim
    ranks = []
    sizes = []
    for d in range(max_degree + 1):
        basis = weil_basis(m, d)
        check_dim(len(basis), "Weil algebra degree piece")
        sizes.append(len(basis))

        def f(key):
            return weil_d(WeilElement(m, {key: 1}), g).terms

        ranks.append(_rank_of_map(basis, {}, f))
    return [sizes[d] - ranks[d] - (ranks[d - 1] if d else 0) for d in range(max_degree + 1)]


def is_basic(u, g):
    return all(not weil_contraction(i, u, g) and not weil_lie_derivative(i, u, g)
               for i in range(g.dim))


def killing_quadratic(g):
    """``sum_{k,l} B(x_k, x_l) u^k u^l`` for the Killing form ``B``; an invariant in ``Sym^2``."""
    m = g.dim

    def ad(i):
        M = [[Fraction(0)] * m for _ in range(m)]
        for j in range(m):
            for k, c in g.table[i][j].items():
                M[k][j] += c
        return M

    ads = [ad(i) for i in range(m)]
    out = WeilElement(m)
    for k in range(m):
        for l in range(m):
            B = sum(ads[k][r][s] * ads[l][s][r] for r in range(m) for s in range(m))
            if B:
                out = out + WeilElement.u(k, m) * WeilElement.u(l, m) * B
    return out


def random_weil(g, degree, rng, nterms=3):
    basis = weil_basis(g.dim, degree)
    return WeilElement(g.dim, {basis[rng.randrange(len(basis))]: rng.randint(-3, 3)
                               for _ in range(nterms)} if basis else {})


def random_graded(n, degree, rng, nterms=3, evens=True):
    """Random homogeneous element of the free graded algebra."""
    out = SElem(n)
    for _ in range(nterms):
        w, d = [], 0
        while d < degree:
            if degree - d >= 2 and evens and rng.random() < 0.5:
                w.append(n + rng.randrange(n))
                d += 2
            else:
                w.append(rng.randrange(n))
                d += 1
        out = out + SElem.word(w, n, rng.randint(-3, 3))
    return out

