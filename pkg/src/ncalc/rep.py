"""Representation functor for free algebras and commutative polyvector calculus.

A point of ``Rep_n`` of the free algebra on ``r`` generators is an
``r``-tuple of ``n x n`` matrices.  The coordinate ``x_{g,i,j}`` (1-based in
printed names) is the ``(i, j)`` entry of the matrix of generator ``g`` and
has variable index ``g*n*n + i*n + j``.
"""

from fractions import Fraction
from itertools import product as iproduct

from .core import CPoly, FreePoly, _join_terms, _signed_term, mono_str, word_key
from .errors import NcalcError, ValidationError, check_dim


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def rep_index(g, i, j, n):
    return g * n * n + i * n + j


def rep_names(ngens, n):
    return [f"x_{{{g + 1},{i + 1},{j + 1}}}"
            for g in range(ngens) for i in range(n) for j in range(n)]


# --------------------------------------------------------------------------
# commutative differential forms


def _merge_sign(s, t):
    """Sign and sorted union of two disjoint increasing index tuples, or ``None``."""
    if set(s) & set(t):
        return None
    inversions = sum(1 for a in s for b in t if a > b)
    return (-1) ** inversions, tuple(sorted(s + t))


class ComForm:
    """Differential form ``sum c * x^e dv_{s1} ... dv_{sk}`` over ``nvars`` variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for (e, s), c in (terms or {}).items():
            if list(s) != sorted(set(s)):
                raise ValidationError("form index sets must be strictly increasing")
            if c:
                _acc(self.terms, (tuple(e), tuple(s)), Fraction(c))

    @classmethod
    def from_poly(cls, f):
        return cls(f.nvars, {(e, ()): c for e, c in f.terms.items()})

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def const(cls, c, nvars):
        return cls(nvars, {((0,) * nvars, ()): c})

    @classmethod
    def dvar(cls, v, nvars):
        return cls(nvars, {((0,) * nvars, (v,)): 1})

    def _lift(self, other):
        if isinstance(other, ComForm):
            if other.nvars != self.nvars:
                raise NcalcError("variable count mismatch")
            return other
        if isinstance(other, CPoly):
            return ComForm.from_poly(other)
        return ComForm.const(other, self.nvars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, ComForm):
            if isinstance(other, (int, Fraction, CPoly)):
                other = self._lift(other)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return ComForm._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def scale(self, s):
        return ComForm._raw(self.nvars, {k: c * s for k, c in self.terms.items() if c * s})

    @classmethod
    def _raw(cls, nvars, terms):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    def __mul__(self, other):
        """Wedge product."""
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        out = {}
        for (e1, s1), c1 in self.terms.items():
            for (e2, s2), c2 in other.terms.items():
                m = _merge_sign(s1, s2)
                if m is None:
                    continue
                sign, s = m
                _acc(out, (tuple(a + b for a, b in zip(e1, e2)), s), sign * c1 * c2)
        return ComForm._raw(self.nvars, out)

    def __rmul__(self, other):
        return self._lift(other) * self

    def d(self):
        out = {}
        for (e, s), c in self.terms.items():
            for v, k in enumerate(e):
                if not k or v in s:
                    continue
                f = list(e)
                f[v] -= 1
                pos = sum(1 for u in s if u < v)
                _acc(out, (tuple(f), tuple(sorted(s + (v,)))), (-1) ** pos * c * k)
        return ComForm._raw(self.nvars, out)

    def degrees(self):
        return sorted({len(s) for _, s in self.terms})

    def to_str(self, names):
        if not self.terms:
            return "0"
        parts = []
        order = sorted(self.terms, key=lambda k: (len(k[1]), k[1], -sum(k[0]), tuple(-a for a in k[0])))
        for e, s in order:
            fac = [mono_str(names, e)] if any(e) else []
            fac.extend(f"d({names[v]})" for v in s)
            parts.append(_signed_term(self.terms[(e, s)], "*".join(fac)))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str([f"v{i}" for i in range(self.nvars)])


# --------------------------------------------------------------------------
# matrices over a commutative ring of symbols


class SymbolicMatrix:
    """Square matrix whose entries are ``CPoly`` or ``ComForm`` objects."""

    __slots__ = ("rows",)

    def __init__(self, rows):
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ValidationError("symbolic matrices must be square")
        self.rows = [list(r) for r in rows]

    @property
    def n(self):
        return len(self.rows)

    @classmethod
    def identity(cls, n, one, zero):
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)])

    def __add__(self, other):
        return SymbolicMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return SymbolicMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c):
        return SymbolicMatrix([[a * c for a in r] for r in self.rows])

    def __mul__(self, other):
        if not isinstance(other, SymbolicMatrix):
            return self.scale(other)
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for r in self.rows:
            row = []
            for col in cols:
                acc = None
                for a, b in zip(r, col):
                    if a and b:
                        acc = a * b if acc is None else acc + a * b
                row.append(acc if acc is not None else r[0] * 0 if n else 0)
            out.append(row)
        return SymbolicMatrix(out)

    def map(self, f):
        return SymbolicMatrix([[f(a) for a in r] for r in self.rows])

    def trace(self):
        acc = self.rows[0][0]
        for i in range(1, self.n):
            acc = acc + self.rows[i][i]
        return acc

    def __eq__(self, other):
        return isinstance(other, SymbolicMatrix) and self.rows == other.rows

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


def generic_matrix(g, ngens, n):
    nv = ngens * n * n
    return SymbolicMatrix([[CPoly.var(rep_index(g, i, j, n), nv) for j in range(n)]
                           for i in range(n)])


def evaluate_word_sum(a, mats, one):
    """Value of a free polynomial at matrices ``mats``; ``one`` is the identity."""
    cache = {(): one}

    def word_value(w):
        if w not in cache:
            cache[w] = word_value(w[:-1]) * mats[w[-1]]
        return cache[w]

    total = one.scale(0)
    for w, c in sorted(a.terms.items(), key=lambda kv: word_key(kv[0])):
        total = total + word_value(w).scale(c)
    return total


def rep_evaluate(a, n):
    """The matrix ``a(X_1, ..., X_r)`` at generic ``n x n`` matrices."""
    if n < 1:
        raise NcalcError("matrix size must be positive")
    nv = a.ngens * n * n
    check_dim(nv, "representation variables")
    mats = [generic_matrix(g, a.ngens, n) for g in range(a.ngens)]
    one = SymbolicMatrix.identity(n, CPoly.const(1, nv), CPoly.zero(nv))
    return evaluate_word_sum(a, mats, one)


def trace_function(a, n):
    return rep_evaluate(a, n).trace()


def rep_point_check(relations, point):
    """True when every relation vanishes at the tuple of numeric matrices ``point``."""
    n = len(point[0])
    mats = [SymbolicMatrix([[Fraction(v) for v in row] for row in m]) for m in point]
    one = SymbolicMatrix.identity(n, Fraction(1), Fraction(0))
    for rel in relations:
        if len(mats) != rel.ngens:
            raise NcalcError("point and relation use different generator counts")
        val = evaluate_word_sum(rel, mats, one)
        if any(v for row in val.rows for v in row):
            return False
    return True


def form_to_rep(omega, n):
    """``tr(a0^ da1^ ... dak^)`` for a noncommutative form over a free algebra."""
    from .core import FreeAlgebra
    from .forms import DRClass

    if isinstance(omega, DRClass):
        omega = omega.representative
    alg = omega.alg
    if not isinstance(alg, FreeAlgebra):
        raise NcalcError("the representation map is implemented for free algebras only")
    r = alg.ngens
    nv = r * n * n
    check_dim(nv, "representation variables")
    zero = ComForm.zero(nv)
    one = SymbolicMatrix.identity(n, ComForm.const(1, nv), zero)
    gens = [generic_matrix(g, r, n).map(ComForm.from_poly) for g in range(r)]
    cache = {}

    def hat(w):
        if w not in cache:
            cache[w] = evaluate_word_sum(FreePoly.word(w, r), gens, one)
        return cache[w]

    total = zero
    for t, c in omega.terms.items():
        m = hat(t[0])
        for w in t[1:]:
            m = m * hat(w).map(ComForm.d)
        total = total + m.trace().scale(c)
    return total


# --------------------------------------------------------------------------
# polyvector fields


class PolyVector:
    """``sum f_S d_{s1} ^ ... ^ d_{sp}`` with ``CPoly`` coefficients; ``S`` increasing."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        for s, f in (terms or {}).items():
            s = tuple(s)
            if list(s) != sorted(set(s)):
                raise ValidationError("polyvector index sets must be strictly increasing")
            if not isinstance(f, CPoly):
                f = CPoly.const(f, nvars)
            if f.nvars != nvars:
                raise NcalcError("coefficient variable count mismatch")
            if f:
                self.terms[s] = self.terms[s] + f if s in self.terms else f
                if not self.terms[s]:
                    del self.terms[s]

    @classmethod
    def partial(cls, v, nvars, coeff=None):
        return cls(nvars, {(v,): coeff if coeff is not None else CPoly.const(1, nvars)})

    def degrees(self):
        return sorted({len(s) for s in self.terms})

    @property
    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise NcalcError("polyvector is not homogeneous")
        return ds[0] if ds else 0

    def _check(self, other):
        if not isinstance(other, PolyVector) or other.nvars != self.nvars:
            raise NcalcError("polyvectors over different variable sets")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, PolyVector) and self.nvars == other.nvars and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for s, f in other.terms.items():
            out[s] = out[s] + f if s in out else f
        return PolyVector(self.nvars, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return PolyVector(self.nvars, {s: f * c for s, f in self.terms.items()})

    def wedge(self, other):
        self._check(other)
        out = {}
        for s1, f1 in self.terms.items():
            for s2, f2 in other.terms.items():
                m = _merge_sign(s1, s2)
                if m is None:
                    continue
                sign, s = m
                f = f1 * f2 * sign
                out[s] = out[s] + f if s in out else f
        return PolyVector(self.nvars, out)

    def field_components(self):
        """For a vector field: ``{variable: coefficient}``."""
        if any(len(s) != 1 for s in self.terms):
            raise NcalcError("not a vector field")
        return {s[0]: f for s, f in self.terms.items()}

    def to_str(self, names):
        if not self.terms:
            return "0"
        parts = []
        for s in sorted(self.terms, key=lambda s: (len(s), s)):
            vec = "^".join(f"D({names[v]})" for v in s)
            coeff = self.terms[s]
            if len(coeff.terms) == 1:
                (e, c), = coeff.terms.items()
                mono = CPoly({e: 1}, self.nvars).to_str(names)
                mono = "" if mono == "1" else mono
                parts.append(_signed_term(c, "*".join(x for x in (mono, vec) if x)))
            else:
                parts.append((False, f"({coeff.to_str(names)})*{vec}"))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str([f"v{i}" for i in range(self.nvars)])


def apply_field(V, f):
    """The derivation ``sum_k V_k df/dv_k`` applied to a polynomial."""
    out = CPoly.zero(f.nvars)
    for v, c in V.field_components().items():
        out = out + c * f.diff(v)
    return out


def _field_bracket(a, b, nvars):
    """Bracket of vector fields given as ``{variable: coefficient}`` dicts."""
    out = {}
    for u, fu in a.items():
        for v, gv in b.items():
            t1 = fu * gv.diff(u)
            t2 = gv * fu.diff(v)
            if t1:
                out[v] = out[v] + t1 if v in out else t1
            if t2:
                out[u] = out[u] - t2 if u in out else -t2
    return out


def _wedge_fields(fields, nvars):
    acc = PolyVector(nvars, {(): CPoly.const(1, nvars)})
    for fld in fields:
        acc = acc.wedge(PolyVector(nvars, {(v,): c for v, c in fld.items()}))
    return acc


def _as_fields(s, f, nvars):
    """Write ``f d_{s1} ^ ... ^ d_{sp}`` as a wedge of vector fields, ``f`` on the first."""
    one = CPoly.const(1, nvars)
    return [{v: (f if k == 0 else one)} for k, v in enumerate(s)]


def schouten_bracket(P, Q):
    """``sum_{i,j} (-1)^(i+j) [xi_i, eta_j] ^ xi_(no i) ^ eta_(no j)`` on decomposables."""
    P._check(Q)
    nv = P.nvars
    out = PolyVector(nv)
    for s, f in P.terms.items():
        xs = _as_fields(s, f, nv)
        for t, g in Q.terms.items():
            ys = _as_fields(t, g, nv)
            if not xs or not ys:
                raise NcalcError("the Schouten bracket is implemented for degrees >= 1")
            for i, xi in enumerate(xs):
                for j, yj in enumerate(ys):
                    br = _field_bracket(xi, yj, nv)
                    if not br:
                        continue
                    rest = [br] + xs[:i] + xs[i + 1:] + ys[:j] + ys[j + 1:]
                    term = _wedge_fields(rest, nv)
                    out = out + (term if (i + j) % 2 == 0 else -term)
    return out


def poisson_from_bivector(pi, f, g):
    """``<df ^ dg, pi>``."""
    if pi and pi.degrees() != [2]:
        raise NcalcError("a Poisson bracket needs a bivector")
    out = CPoly.zero(f.nvars)
    for (a, b), c in pi.terms.items():
        out = out + c * (f.diff(a) * g.diff(b) - f.diff(b) * g.diff(a))
    return out


# Jacobiator = JACOBI_CONSTANT * <df ^ dg ^ dh, [pi, pi]>, fixed by the bracket normalization above.
JACOBI_CONSTANT = Fraction(1, 2)


def _pair3(T, f, g, h):
    out = CPoly.zero(f.nvars)
    for s, c in T.terms.items():
        cols = [(f.diff(v), g.diff(v), h.diff(v)) for v in s]
        det = CPoly.zero(f.nvars)
        for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                           ((1, 0, 2), -1), ((0, 2, 1), -1), ((2, 1, 0), -1)):
            det = det + cols[perm[0]][0] * cols[perm[1]][1] * cols[perm[2]][2] * sign
        out = out + c * det
    return out


def poisson_jacobi_check(pi, f, g, h):
    """Return ``(jacobiator, schouten_side, consistent)`` for one triple."""
    br = lambda a, b: poisson_from_bivector(pi, a, b)
    jac = br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g))
    side = _pair3(schouten_bracket(pi, pi), f, g, h).scale(JACOBI_CONSTANT)
    return jac, side, jac == side


# --------------------------------------------------------------------------
# derivations as vector fields on Rep_n


def derivation_to_vector_field(images, n):
    """``sum_{g,i,j} (theta(x_g))^_{ij} d/dx_{g,i,j}``."""
    r = len(images)
    nv = r * n * n
    out = {}
    for g, img in enumerate(images):
        m = rep_evaluate(img, n)
        for i in range(n):
            for j in range(n):
                if m[i, j]:
                    out[(rep_index(g, i, j, n),)] = m[i, j]
    return PolyVector(nv, out)


# --------------------------------------------------------------------------
# double derivations and Jacobi matrices


class Tensor2:
    """Element of ``A (x) A`` for a free algebra: ``(word, word) -> coefficient``."""

    __slots__ = ("ngens", "terms")

    def __init__(self, ngens, terms=None):
        self.ngens = ngens
        self.terms = {}
        for (u, v), c in (terms or {}).items():
            if c:
                _acc(self.terms, (tuple(u), tuple(v)), Fraction(c))

    @classmethod
    def unit(cls, ngens):
        return cls(ngens, {((), ()): 1})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, Tensor2) and self.ngens == other.ngens and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Tensor2(self.ngens, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return Tensor2(self.ngens, {k: v * c for k, v in self.terms.items()})

    def outer(self, left, right):
        """``left * (u (x) v) * right = left u (x) v right``."""
        out = {}
        for (u, v), c in self.terms.items():
            for a, ca in left.terms.items():
                for b, cb in right.terms.items():
                    _acc(out, (a + u, v + b), c * ca * cb)
        return Tensor2(self.ngens, out)

    def to_str(self, names=None):
        from .core import default_names
        names = names or default_names(self.ngens)
        if not self.terms:
            return "0"
        word = lambda w: "*".join(names[g] for g in w) if w else "1"
        parts = []
        for (u, v) in sorted(self.terms, key=lambda k: (word_key(k[0]), word_key(k[1]))):
            parts.append(_signed_term(self.terms[(u, v)], f"{word(u)}(x){word(v)}"))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def double_derivation(i, a):
    """``D_i(a)``: each occurrence of ``x_i`` splits the word into prefix (x) suffix."""
    if not 0 <= i < a.ngens:
        raise NcalcError(f"generator index {i} out of range")
    out = {}
    for w, c in a.terms.items():
        for k, g in enumerate(w):
            if g == i:
                _acc(out, (w[:k], w[k + 1:]), c)
    return Tensor2(a.ngens, out)


def jacobi_matrix(F):
    """``DF[i][j] = D_i(F_j)``."""
    r = len(F)
    if any(f.ngens != r for f in F):
        raise NcalcError("an endomorphism needs one image per generator")
    return [[double_derivation(i, F[j]) for j in range(r)] for i in range(r)]


def substitute(a, images):
    """``a(images_1, ..., images_r)``."""
    r = len(images)
    out = FreePoly.zero(r)
    for w, c in a.terms.items():
        term = FreePoly.const(c, r)
        for g in w:
            term = term * images[g]
        out = out + term
    return out


def compose(G, F):
    """Generator images of the homomorphism ``G o F``: ``x_l -> G(F_l)``."""
    return [substitute(f, G) for f in F]


def jacobi_compose(DG, DF, G):
    """``sum_i G(D'_i F_l) . DG[k][i] . G(D''_i F_l)``, the chain-rule product."""
    r = len(G)
    out = [[Tensor2(r) for _ in range(r)] for _ in range(r)]
    for k in range(r):
        for l in range(r):
            acc = Tensor2(r)
            for i in range(r):
                for (u, v), c in DF[i][l].terms.items():
                    left = substitute(FreePoly.word(u, r), G)
                    right = substitute(FreePoly.word(v, r), G)
                    acc = acc + DG[k][i].outer(left, right).scale(c)
            out[k][l] = acc
    return out


class _Dual:
    """Matrix-entry scalar ``a + eps b`` with ``CPoly`` parts and ``eps^2 = 0``."""

    __slots__ = ("a", "b")

    def __init__(self, a, b):
        self.a, self.b = a, b

    def __add__(self, o):
        return _Dual(self.a + o.a, self.b + o.b)

    def __sub__(self, o):
        return _Dual(self.a - o.a, self.b - o.b)

    def __mul__(self, o):
        if not isinstance(o, _Dual):
            return _Dual(self.a * o, self.b * o)
        return _Dual(self.a * o.a, self.a * o.b + self.b * o.a)

    def __bool__(self):
        return bool(self.a) or bool(self.b)


def jacobi_differential_check(F, n, point=None):
    """Compare the differential of ``F^`` with the action of the Jacobi matrix.

    The tangent vector ``Z`` is symbolic; the base point is generic unless a
    tuple of numeric matrices is given.  Returns a dict with ``ok``,
    ``differential`` and ``jacobi_action`` (lists of ``SymbolicMatrix``).
    """
    r = len(F)
    nv = 2 * r * n * n
    check_dim(nv, "differential-check variables")
    zero = CPoly.zero(nv)

    def base(g, i, j):
        if point is None:
            return CPoly.var(rep_index(g, i, j, n), nv)
        return CPoly.const(point[g][i][j], nv)

    X = [SymbolicMatrix([[base(g, i, j) for j in range(n)] for i in range(n)]) for g in range(r)]
    Z = [SymbolicMatrix([[CPoly.var(r * n * n + rep_index(g, i, j, n), nv) for j in range(n)]
                         for i in range(n)]) for g in range(r)]
    dual = [SymbolicMatrix([[_Dual(X[g][i, j], Z[g][i, j]) for j in range(n)] for i in range(n)])
            for g in range(r)]
    one_d = SymbolicMatrix.identity(n, _Dual(CPoly.const(1, nv), zero), _Dual(zero, zero))
    one_p = SymbolicMatrix.identity(n, CPoly.const(1, nv), zero)

    def eval_at(a, mats, one):
        total = None
        for w, c in a.terms.items():
            m = one
            for g in w:
                m = m * mats[g]
            m = m.scale(c)
            total = m if total is None else total + m
        return total if total is not None else one.scale(0)

    differential = [eval_at(f, dual, one_d).map(lambda e: e.b) for f in F]
    action = []
    for j in range(r):
        acc = one_p.scale(0)
        for i in range(r):
            for (u, v), c in double_derivation(i, F[j]).terms.items():
                left = eval_at(FreePoly.word(u, r), X, one_p)
                right = eval_at(FreePoly.word(v, r), X, one_p)
                acc = acc + (left * Z[i] * right).scale(c)
        action.append(acc)
    return {"ok": differential == action, "differential": differential, "jacobi_action": action}


def rep_vector_names(ngens, n):
    """Names for the base point and tangent variables used by the differential check."""
    return rep_names(ngens, n) + [f"z_{{{g + 1},{i + 1},{j + 1}}}"
                                  for g in range(ngens) for i in range(n) for j in range(n)]


def ad_images(a):
    """Generator images of the inner derivation ``[a, -]``."""
    return [a * FreePoly.gen(g, a.ngens) - FreePoly.gen(g, a.ngens) * a for g in range(a.ngens)]


def field_bracket(V, W):
    """Bracket of two vector fields as polyvectors."""
    V._check(W)
    return PolyVector(V.nvars, {(v,): c for v, c in
                                _field_bracket(V.field_components(), W.field_components(),
                                               V.nvars).items()})


def all_words(ngens, max_len):
    for k in range(max_len + 1):
        yield from (tuple(w) for w in iproduct(range(ngens), repeat=k))
