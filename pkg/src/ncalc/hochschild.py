"""Hochschild homology and cohomology of finite-dimensional algebras.

Algebras are unit-normalized :class:`StructureAlgebra` objects (basis slot
0 is the unit).  The reduced complexes use only the non-unit basis
elements in the bar slots; the full complexes use every basis element and
are used to cross-check dimensions and for cochain-level identities.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product as iproduct
from math import factorial

from .core import FinDimAlgebra, Report, StructureAlgebra, matrices_over
from .errors import NcalcError, ValidationError, check_dim
from .linalg import Echelon, add_into, kernel, left_certificate, solve


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def normalized(A):
    if isinstance(A, FinDimAlgebra):
        return A.A
    if not isinstance(A, StructureAlgebra):
        raise NcalcError("expected a finite-dimensional algebra")
    return A if A.normalized else A.rebased()


def _sign(n):
    return -1 if n % 2 else 1


# --------------------------------------------------------------------------
# bimodules


class Bimodule:
    """``left[i][j]`` is ``e_i . m_j`` and ``right[i][j]`` is ``m_j . e_i``."""

    def __init__(self, A, dim, left, right, names=None, validate=True):
        self.A = normalized(A)
        self.dim = dim
        self.left = [[{k: Fraction(c) for k, c in v.items() if c} for v in row] for row in left]
        self.right = [[{k: Fraction(c) for k, c in v.items() if c} for v in row] for row in right]
        self.names = names or [f"m{j}" for j in range(dim)]
        if validate:
            rep = self.validate()
            if not rep:
                raise ValidationError(rep.message)

    @classmethod
    def regular(cls, A):
        A = normalized(A)
        m = A.dim
        left = [[A.table[i][j] for j in range(m)] for i in range(m)]
        right = [[A.table[j][i] for j in range(m)] for i in range(m)]
        return cls(A, m, left, right, names=list(A.names), validate=False)

    @classmethod
    def outer_tensor(cls, A):
        """``A (x) A`` with ``a (x.y) b = ax (x) yb``; basis index ``x*m + y``."""
        A = normalized(A)
        m = A.dim
        left = [[{k * m + y: c for k, c in A.table[i][x].items()}
                 for x in range(m) for y in range(m)] for i in range(m)]
        right = [[{x * m + k: c for k, c in A.table[y][i].items()}
                  for x in range(m) for y in range(m)] for i in range(m)]
        names = [f"{A.names[x]}|{A.names[y]}" for x in range(m) for y in range(m)]
        return cls(A, m * m, left, right, names=names, validate=False)

    @classmethod
    def from_json(cls, A, data):
        A = normalized(A)
        from .core import frac
        d = int(data["dim"])
        m = A.dim

        def mat(key):
            raw = data[key]
            if len(raw) != m or any(len(r) != d for r in raw):
                raise ValidationError(f"bimodule '{key}' action has wrong shape")
            return [[{k: frac(raw[i][j][k]) for k in range(d)} for j in range(d)]
                    for i in range(m)]

        return cls(A, d, mat("left"), mat("right"), names=data.get("basis"))

    def act_left(self, a, v):
        out = {}
        for i, x in a.items():
            for j, y in v.items():
                for k, c in self.left[i][j].items():
                    _acc(out, k, x * y * c)
        return out

    def act_right(self, v, a):
        out = {}
        for i, x in a.items():
            for j, y in v.items():
                for k, c in self.right[i][j].items():
                    _acc(out, k, x * y * c)
        return out

    def validate(self):
        A, d, m = self.A, self.dim, self.A.dim
        for j in range(d):
            mj = {j: Fraction(1)}
            if self.act_left({0: Fraction(1)}, mj) != mj or self.act_right(mj, {0: Fraction(1)}) != mj:
                return Report(False, f"unit does not act as identity on m{j}", (j,))
        for i in range(m):
            for k in range(m):
                ei, ek = {i: Fraction(1)}, {k: Fraction(1)}
                for j in range(d):
                    mj = {j: Fraction(1)}
                    if self.act_left(A.mul(ei, ek), mj) != self.act_left(ei, self.act_left(ek, mj)):
                        return Report(False, f"left action not associative at ({i},{k},{j})", (i, k, j))
                    if self.act_right(mj, A.mul(ei, ek)) != self.act_right(self.act_right(mj, ei), ek):
                        return Report(False, f"right action not associative at ({i},{k},{j})", (i, k, j))
                    if self.act_right(self.act_left(ei, mj), ek) != self.act_left(ei, self.act_right(mj, ek)):
                        return Report(False, f"actions do not commute at ({i},{k},{j})", (i, k, j))
        return Report(True, "ok")


# --------------------------------------------------------------------------
# complexes


def _slots(A, reduced):
    return list(range(1, A.dim)) if reduced else list(range(A.dim))


def _tuples(keys, p, width, what):
    check_dim(width * len(keys) ** p, what)
    return list(iproduct(keys, repeat=p))


def chain_basis(A, M, p, reduced=True):
    keys = _slots(A, reduced)
    return [(j,) + t for j in range(M.dim) for t in _tuples(keys, p, M.dim, f"chains of degree {p}")]


def chain_differential(A, M, p, reduced=True):
    """Columns of ``d: C_p -> C_(p-1)`` in the bases of :func:`chain_basis`."""
    src = chain_basis(A, M, p, reduced)
    if p == 0:
        return src, [], [{} for _ in src]
    tgt = chain_basis(A, M, p - 1, reduced)
    tindex = {t: i for i, t in enumerate(tgt)}
    allowed = set(_slots(A, reduced))
    cols = []
    for key in src:
        mi, args = key[0], key[1:]
        col = {}
        for mo, c in M.right[args[0]][mi].items():
            _acc(col, tindex[(mo,) + args[1:]], c)
        for i in range(1, p):
            s = _sign(i)
            for k, c in A.table[args[i - 1]][args[i]].items():
                if k in allowed:
                    _acc(col, tindex[(mi,) + args[:i - 1] + (k,) + args[i + 1:]], s * c)
        s = _sign(p)
        for mo, c in M.left[args[-1]][mi].items():
            _acc(col, tindex[(mo,) + args[:-1]], s * c)
        cols.append(col)
    return src, tgt, cols


def cochain_basis(A, M, p, reduced=True):
    keys = _slots(A, reduced)
    return [t + (j,) for t in _tuples(keys, p, M.dim, f"cochains of degree {p}") for j in range(M.dim)]


def cochain_differential(A, M, p, reduced=True):
    """Columns of ``d: C^p -> C^(p+1)``; coordinates are ``(args..., m-index)``."""
    src = cochain_basis(A, M, p, reduced)
    tgt = cochain_basis(A, M, p + 1, reduced)
    sindex = {t: i for i, t in enumerate(src)}
    tindex = {t: i for i, t in enumerate(tgt)}
    allowed = set(_slots(A, reduced))
    cols = [dict() for _ in src]
    keys = _slots(A, reduced)
    for I in iproduct(keys, repeat=p + 1):
        for mi in range(M.dim):
            for mo, c in M.left[I[0]][mi].items():
                _acc(cols[sindex[I[1:] + (mi,)]], tindex[I + (mo,)], c)
        for i in range(1, p + 1):
            s = _sign(i)
            for k, c in A.table[I[i - 1]][I[i]].items():
                if k in allowed:
                    J = I[:i - 1] + (k,) + I[i + 1:]
                    for mi in range(M.dim):
                        _acc(cols[sindex[J + (mi,)]], tindex[I + (mi,)], s * c)
        s = _sign(p + 1)
        for mi in range(M.dim):
            for mo, c in M.right[I[p]][mi].items():
                _acc(cols[sindex[I[:p] + (mi,)]], tindex[I + (mo,)], s * c)
    return src, tgt, cols


@dataclass
class HHResult:
    """Dimensions, representatives and differential ranks per degree."""

    dims: list
    representatives: dict = field(default_factory=dict)
    ranks: dict = field(default_factory=dict)
    cohomology: bool = False

    def to_json(self):
        from .core import frac_str
        out = {}
        for p, d in enumerate(self.dims):
            out[str(p)] = {
                "dim": d,
                "representatives": [
                    {"|".join(map(str, k)): frac_str(c) for k, c in sorted(rep.items())}
                    for rep in self.representatives.get(p, [])
                ],
            }
        return out


def _homology_from(cols_by_degree, basis_by_degree, incoming, degrees):
    """Shared ker/im bookkeeping.

    ``cols_by_degree[p]`` are the columns of the differential leaving degree
    ``p``; ``incoming(p)`` returns the columns of the one arriving in ``p``.
    """
    dims, reps, ranks = [], {}, {}
    for p in degrees:
        basis = basis_by_degree[p]
        ker = kernel(cols_by_degree[p])
        ranks[p] = len(basis) - len(ker)
        ech = Echelon(incoming(p))
        out = []
        for z in ker:
            if ech.add(z) is not None:
                out.append({basis[j]: c for j, c in sorted(z.items())})
        dims.append(len(out))
        reps[p] = out
    return dims, reps, ranks


def hh_homology(A, M=None, max_degree=4, reduced=True):
    A = normalized(A)
    M = M or Bimodule.regular(A)
    bases, cols = {}, {}
    for p in range(max_degree + 2):
        src, _, c = chain_differential(A, M, p, reduced)
        bases[p], cols[p] = src, c
    dims, reps, ranks = _homology_from(cols, bases, lambda p: cols[p + 1], range(max_degree + 1))
    for p in range(max_degree + 1):
        assert dims[p] == len(bases[p]) - ranks[p] - _rank(cols[p + 1])
    return HHResult(dims, reps, ranks)


def hh_cohomology(A, M=None, max_degree=4, reduced=True):
    A = normalized(A)
    M = M or Bimodule.regular(A)
    bases, cols = {}, {}
    for p in range(max_degree + 1):
        src, _, c = cochain_differential(A, M, p, reduced)
        bases[p], cols[p] = src, c
    dims, reps, ranks = _homology_from(cols, bases, lambda p: cols[p - 1] if p > 0 else [],
                                       range(max_degree + 1))
    for p in range(max_degree + 1):
        assert dims[p] == len(bases[p]) - ranks[p] - (ranks[p - 1] if p > 0 else 0)
    if reduced and max_degree >= 0:
        z = centralizer(A, M)
        if len(z) != dims[0]:
            raise NcalcError("degree-0 cohomology disagrees with the centralizer")
    return HHResult(dims, reps, ranks, cohomology=True)


def _rank(cols):
    return Echelon(cols).rank


def centralizer(A, M):
    """Basis of ``{m : a m = m a for all a}``, by direct elimination."""
    A = normalized(A)
    cols = []
    for j in range(M.dim):
        col = {}
        for i in range(1, A.dim):
            for k, c in M.left[i][j].items():
                _acc(col, i * M.dim + k, c)
            for k, c in M.right[i][j].items():
                _acc(col, i * M.dim + k, -c)
        cols.append(col)
    return kernel(cols)


def center(A):
    return centralizer(A, Bimodule.regular(A))


# --------------------------------------------------------------------------
# derivations


def derivation_space(A):
    """Derivations, inner derivations and the quotient dimension.

    A derivation is a matrix ``D[i] = D(e_i)``; unknown ``(i, k)`` is the
    coefficient of ``e_k`` in ``D(e_i)``.
    """
    A = normalized(A)
    m = A.dim
    var = lambda i, k: i * m + k
    # rows indexed by (i, j, l): D(e_i e_j) - D(e_i) e_j - e_i D(e_j), coefficient of e_l
    cols = [dict() for _ in range(m * m)]
    for i in range(m):
        for j in range(m):
            row_base = (i * m + j) * m
            for p, c in A.table[i][j].items():
                for l in range(m):
                    _acc(cols[var(p, l)], row_base + l, c)
            for k in range(m):
                for l, c in A.table[k][j].items():
                    _acc(cols[var(i, k)], row_base + l, -c)
                for l, c in A.table[i][k].items():
                    _acc(cols[var(j, k)], row_base + l, -c)
    ders = kernel(cols)
    der_mats = [[{k: z[var(i, k)] for k in range(m) if z.get(var(i, k))} for i in range(m)]
                for z in ders]
    inner = []
    ech = Echelon()
    for a in range(m):
        vec = {}
        for i in range(m):
            for k, c in A.table[a][i].items():
                _acc(vec, var(i, k), c)
            for k, c in A.table[i][a].items():
                _acc(vec, var(i, k), -c)
        if ech.add(vec) is not None:
            inner.append([{k: vec[var(i, k)] for k in range(m) if vec.get(var(i, k))}
                          for i in range(m)])
    return {"derivations": der_mats, "inner": inner,
            "dim_der": len(der_mats), "dim_inner": len(inner),
            "outer": len(der_mats) - len(inner)}


# --------------------------------------------------------------------------
# full cochains and the Gerstenhaber structure


class Cochain:
    """Multilinear map ``A^(x)p -> A`` given on basis tuples (missing means zero)."""

    def __init__(self, A, p, values=None):
        self.A = normalized(A)
        self.p = p
        self.values = {}
        for t, v in (values or {}).items():
            v = {k: Fraction(c) for k, c in v.items() if c}
            if len(t) != p:
                raise NcalcError("argument tuple has the wrong length")
            if v:
                self.values[tuple(t)] = v

    def _check(self, other):
        if other.A is not self.A and (other.A.table != self.A.table):
            raise NcalcError("cochains over different algebras")

    @classmethod
    def zero(cls, A, p):
        return cls(A, p)

    @classmethod
    def element(cls, A, a):
        return cls(A, 0, {(): dict(a)})

    @classmethod
    def multiplication(cls, A):
        A = normalized(A)
        return cls(A, 2, {(i, j): A.table[i][j] for i in range(A.dim) for j in range(A.dim)})

    @classmethod
    def identity(cls, A):
        A = normalized(A)
        return cls(A, 1, {(i,): {i: 1} for i in range(A.dim)})

    @classmethod
    def random(cls, A, p, rng, lo=-2, hi=2, density=0.6):
        A = normalized(A)
        vals = {}
        for t in iproduct(range(A.dim), repeat=p):
            v = {k: Fraction(rng.randint(lo, hi)) for k in range(A.dim) if rng.random() < density}
            vals[t] = v
        return cls(A, p, vals)

    @classmethod
    def from_derivation(cls, A, mat):
        A = normalized(A)
        return cls(A, 1, {(i,): mat[i] for i in range(A.dim)})

    def at(self, args):
        return self.values.get(tuple(args), {})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.values
        return isinstance(other, Cochain) and self.p == other.p and self.values == other.values

    def __bool__(self):
        return bool(self.values)

    def _combine(self, other, s):
        self._check(other)
        if self.p != other.p:
            raise NcalcError("cannot add cochains of different degree")
        out = {t: dict(v) for t, v in self.values.items()}
        for t, v in other.values.items():
            add_into(out.setdefault(t, {}), v, s)
        return Cochain(self.A, self.p, out)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def scale(self, s):
        return Cochain(self.A, self.p, {t: {k: c * s for k, c in v.items()} for t, v in self.values.items()})

    def __neg__(self):
        return self.scale(-1)

    def is_reduced(self):
        return all(0 not in t for t in self.values)

    def __repr__(self):
        return f"Cochain(p={self.p}, {len(self.values)} nonzero values)"


def cochain_d(f):
    """Hochschild coboundary on full cochains with coefficients in ``A``."""
    A, p = f.A, f.p
    out = {}
    if p < 0:
        return Cochain(A, p + 1)
    for I in iproduct(range(A.dim), repeat=p + 1):
        v = A.mul({I[0]: Fraction(1)}, f.at(I[1:]))
        for i in range(1, p + 1):
            s = _sign(i)
            for k, c in A.table[I[i - 1]][I[i]].items():
                add_into(v, f.at(I[:i - 1] + (k,) + I[i + 1:]), s * c)
        add_into(v, A.mul(f.at(I[:p]), {I[p]: Fraction(1)}), _sign(p + 1))
        if v:
            out[I] = v
    return Cochain(A, p + 1, out)


def cup(f, g):
    """``(f u g)(a_1..a_(p+q)) = f(a_1..a_p) g(a_(p+1)..a_(p+q))``."""
    f._check(g)
    A, p, q = f.A, f.p, g.p
    out = {}
    for I in iproduct(range(A.dim), repeat=p + q):
        fv = f.at(I[:p])
        if not fv:
            continue
        gv = g.at(I[p:])
        if gv:
            v = A.mul(fv, gv)
            if v:
                out[I] = v
    return Cochain(A, p + q, out)


def circle_product(f, g):
    """Sum over insertion slots ``i`` of ``g`` into ``f`` with sign ``(-1)^((i-1)(q-1))``."""
    f._check(g)
    A, p, q = f.A, f.p, g.p
    n = p + q - 1
    if p == 0:
        return Cochain(A, n)
    out = {}
    for I in iproduct(range(A.dim), repeat=n):
        v = {}
        for i in range(1, p + 1):
            s = _sign((i - 1) * (q - 1))
            inner = g.at(I[i - 1:i - 1 + q])
            for k, c in inner.items():
                add_into(v, f.at(I[:i - 1] + (k,) + I[i - 1 + q:]), s * c)
        if v:
            out[I] = v
    return Cochain(A, n, out)


def gerstenhaber_bracket(f, g):
    """``{f, g} = f o g - (-1)^((p-1)(q-1)) g o f``."""
    return circle_product(f, g) - circle_product(g, f).scale(_sign((f.p - 1) * (g.p - 1)))


def g_cup_sides(f, g):
    """Both sides of the cup-commutator identity, in the form that holds.

    ``f u g - (-1)^(pq) g u f = (-1)^p d(g o f) + dg o f - (-1)^p g o df``
    for ``f`` of degree ``p`` and ``g`` of degree ``q``.
    """
    p = f.p
    lhs = cup(f, g) - cup(g, f).scale(_sign(p * g.p))
    rhs = cochain_d(circle_product(g, f)).scale(_sign(p)) + circle_product(cochain_d(g), f) \
        - circle_product(g, cochain_d(f)).scale(_sign(p))
    return lhs, rhs


def g_cup_literal_sides(f, g):
    """The variant with ``f o g`` and the signs ``d(f o g) - df o g - (-1)^p f o dg``.

    Kept for comparison; it fails in general (see the tests).
    """
    lhs = cup(f, g) - cup(g, f).scale(_sign(f.p * g.p))
    rhs = cochain_d(circle_product(f, g)) - circle_product(cochain_d(f), g) \
        - circle_product(f, cochain_d(g)).scale(_sign(f.p))
    return lhs, rhs


def bracket_differential(f):
    """``{m, f}``; equals ``(-1)^(p-1) d f`` for ``f`` of degree ``p``."""
    return gerstenhaber_bracket(Cochain.multiplication(f.A), f)


def bracket_compatibility_sides(f, g):
    """``D{f,g}`` and ``{Df,g} + (-1)^(p-1) {f,Dg}`` with ``D = {m, -}``."""
    D = bracket_differential
    lhs = D(gerstenhaber_bracket(f, g))
    rhs = gerstenhaber_bracket(D(f), g) + gerstenhaber_bracket(f, D(g)).scale(_sign(f.p - 1))
    return lhs, rhs


# --------------------------------------------------------------------------
# full chains and the operators i_c, L_c


class Chain:
    """Element of ``A^(x)(k+1)``: tuples ``(a_0, .., a_k)`` of basis indices."""

    def __init__(self, A, k, terms=None):
        self.A = normalized(A)
        self.k = k
        self.terms = {}
        for t, c in (terms or {}).items():
            if len(t) != k + 1:
                raise NcalcError("chain term of the wrong length")
            if c:
                self.terms[tuple(t)] = Fraction(c)

    @classmethod
    def random(cls, A, k, rng, lo=-3, hi=3, density=0.5):
        A = normalized(A)
        return cls(A, k, {t: rng.randint(lo, hi) for t in iproduct(range(A.dim), repeat=k + 1)
                          if rng.random() < density})

    def __eq__(self, other):
        return isinstance(other, Chain) and self.k == other.k and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            _acc(out, t, c)
        return Chain(self.A, self.k, out)

    def scale(self, s):
        return Chain(self.A, self.k, {t: c * s for t, c in self.terms.items()})

    def __repr__(self):
        return f"Chain(k={self.k}, {len(self.terms)} terms)"


def chain_d(ch):
    """``d(a_0|..|a_k) = sum_i (-1)^i (.. a_i a_(i+1) ..) + (-1)^k (a_k a_0|a_1..)``."""
    A, k = ch.A, ch.k
    out = {}
    if k == 0:
        return Chain(A, 0)
    for t, c in ch.terms.items():
        for i in range(k):
            s = _sign(i)
            for m, c2 in A.table[t[i]][t[i + 1]].items():
                _acc(out, t[:i] + (m,) + t[i + 2:], s * c * c2)
        s = _sign(k)
        for m, c2 in A.table[t[k]][t[0]].items():
            _acc(out, (m,) + t[1:k], s * c * c2)
    return Chain(A, k - 1, out)


def chain_contraction(c, ch):
    """``i_c(a_0|..|a_k) = a_0 c(a_1..a_p) | a_(p+1) | .. | a_k``."""
    A, p, k = ch.A, c.p, ch.k
    if k < p:
        raise NcalcError(f"cannot contract a degree {p} cochain with a degree {k} chain")
    out = {}
    for t, coef in ch.terms.items():
        v = A.mul({t[0]: Fraction(1)}, c.at(t[1:p + 1]))
        for m, c2 in v.items():
            _acc(out, (m,) + t[p + 1:], coef * c2)
    return Chain(A, k - p, out)


def chain_lie(c, ch):
    """Lie derivative of a chain along a cochain; ``L_m`` is the chain differential."""
    A, p, k = ch.A, c.p, ch.k
    if k < p - 1:
        raise NcalcError(f"L_c needs chain degree at least {p - 1}")
    out = {}
    for t, coef in ch.terms.items():
        for i in range(0, k - p + 1):
            s = _sign((p - 1) * (i + 1))
            for m, c2 in c.at(t[i + 1:i + 1 + p]).items():
                _acc(out, t[:i + 1] + (m,) + t[i + 1 + p:], s * coef * c2)
        for j in range(max(k - p + 1, 0), k + 1):
            s = _sign(k * (j + 1))
            cyc = t[j + 1:] + t[:p + j - k]
            for m, c2 in c.at(cyc).items():
                _acc(out, (m,) + t[p + j - k:j + 1], s * coef * c2)
    return Chain(A, k - p + 1, out)


# --------------------------------------------------------------------------
# commutative comparisons


def alt_comparison(A, p):
    """Check that ``pi o alt = p! id`` on ``A (x) Lambda^p Abar``.

    ``alt`` antisymmetrizes the bar slots; ``pi`` sends ``m|a_1..a_p`` to
    ``m (x) a_1 ^ .. ^ a_p`` (sorting with sign, zero on repeats).
    """
    A = normalized(A)
    if not A.is_commutative():
        raise NcalcError("alt/pi comparison needs a commutative algebra")
    keys = list(range(1, A.dim))
    wedge_basis = [t for t in iproduct(keys, repeat=p) if all(t[i] < t[i + 1] for i in range(p - 1))]
    scalars = set()
    for mi in range(A.dim):
        for w in wedge_basis:
            img = {}
            for perm in permutations(range(p)):
                s = _perm_sign(perm)
                chain_key = tuple(w[i] for i in perm)
                for key, c in _pi(mi, chain_key).items():
                    _acc(img, key, s * c)
            if set(img) - {(mi,) + w}:
                return Report(False, "pi o alt is not diagonal", (mi,) + w)
            scalars.add(img.get((mi,) + w, 0))
    if len(scalars) > 1:
        return Report(False, f"pi o alt is not scalar: {sorted(scalars)}")
    value = scalars.pop() if scalars else factorial(p)
    return Report(value == factorial(p), f"pi o alt = {value} * id", value)


def _perm_sign(perm):
    s, seen = 1, list(perm)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                s = -s
    return s


def _pi(mi, args):
    if len(set(args)) < len(args):
        return {}
    order = sorted(range(len(args)), key=lambda i: args[i])
    return {(mi,) + tuple(args[i] for i in order): _perm_sign(order)}


def graded_hh(alg, weight, max_degree):
    """Reduced Hochschild homology of a weight-graded algebra in one weight."""
    from .forms import piece_basis
    bases = {p: piece_basis(alg, p, weight) for p in range(max_degree + 2)}
    index = {p: {t: i for i, t in enumerate(b)} for p, b in bases.items()}
    u = alg.unit
    cols = {}
    for p in range(max_degree + 2):
        cs = []
        for t in bases[p]:
            col = {}
            if p > 0:
                tgt = index[p - 1]
                for m, c in alg.mul(t[0], t[1]).items():
                    _acc(col, tgt[(m,) + t[2:]], c)
                for i in range(1, p):
                    for m, c in alg.mul(t[i], t[i + 1]).items():
                        if m != u:
                            _acc(col, tgt[t[:i] + (m,) + t[i + 2:]], _sign(i) * c)
                for m, c in alg.mul(t[p], t[0]).items():
                    _acc(col, tgt[(m,) + t[1:p]], _sign(p) * c)
            cs.append(col)
        cols[p] = cs
    dims, reps, ranks = _homology_from(cols, bases, lambda p: cols[p + 1], range(max_degree + 1))
    return HHResult(dims, reps, ranks)


def hkr_dimension(nvars, p, weight):
    """``dim`` of ``p``-forms of weight ``weight`` on affine ``nvars``-space."""
    from math import comb
    if weight < p:
        return 0
    return comb(nvars, p) * comb(weight - p + nvars - 1, nvars - 1)


# --------------------------------------------------------------------------
# formal smoothness


def formal_smoothness_check(A):
    """Look for a bimodule splitting of ``A (x) Abar (x) A -> Omega^1``.

    Unknowns ``u_i`` (images of ``de_i``) must satisfy the Leibniz relations
    and map to ``de_i``.  Returns a dict with ``smooth`` and either the
    splitting or a functional certifying that no splitting exists, plus
    second cohomology dimensions with coefficients in ``A`` and ``A (x) A``.
    """
    A = normalized(A)
    m = A.dim
    bar = list(range(1, m))
    F = [(a, b, c) for a in range(m) for b in bar for c in range(m)]
    Findex = {f: i for i, f in enumerate(F)}
    nF = len(F)
    check_dim(len(bar) * nF, "smoothness system")
    var = {(l, f): n for n, (l, f) in enumerate((l, f) for l in bar for f in F)}
    rows = {}

    def row(key):
        r = rows.get(key)
        if r is None:
            r = rows[key] = len(rows)
        return r

    cols = [dict() for _ in var]
    for (l, (a, b, c)), vi in var.items():
        col = cols[vi]
        f = Findex[(a, b, c)]
        for i in bar:
            for j in bar:
                coef = A.table[i][j].get(l)
                if coef:
                    _acc(col, row(("rel", i, j, f)), coef)
        for i in bar:
            for k, cc in A.table[i][a].items():
                _acc(col, row(("rel", i, l, Findex[(k, b, c)])), -cc)
        for j in bar:
            for k, cc in A.table[c][j].items():
                _acc(col, row(("rel", l, j, Findex[(a, b, k)])), -cc)
        for k, cc in A.mul({b: Fraction(1)}, {c: Fraction(1)}).items():
            if k != 0:
                _acc(col, row(("pi", l, a, k)), cc)
        if c != 0:
            for k, cc in A.table[a][b].items():
                _acc(col, row(("pi", l, k, c)), -cc)
    target = {row(("pi", l, 0, l)): Fraction(1) for l in bar}
    x = solve(cols, target)
    hh2_a = hh_cohomology(A, None, 2).dims[2]
    hh2_e = hh_cohomology(A, Bimodule.outer_tensor(A), 2).dims[2]
    result = {"smooth": x is not None, "hh2_regular": hh2_a, "hh2_outer": hh2_e}
    inv = {v: k for k, v in var.items()}
    if x is not None:
        split = {l: {} for l in bar}
        for vi, c in x.items():
            l, f = inv[vi]
            split[l][f] = c
        result["splitting"] = split
        if hh2_a or hh2_e:
            raise NcalcError("splitting found but second cohomology is nonzero")
    else:
        names = {v: k for k, v in rows.items()}
        y = left_certificate(cols, target, len(rows))
        result["certificate"] = {names[r]: c for r, c in y.items()}
        if hh2_a:
            result["hh2_witness"] = hh_cohomology(A, None, 2).representatives[2][0]
    return result


# --------------------------------------------------------------------------
# Morita invariance of HH_0


def _hh0_quotient(B):
    m = B.dim
    ech = Echelon()
    for i in range(m):
        for j in range(m):
            v = dict(B.table[i][j])
            add_into(v, B.table[j][i], -1)
            ech.add(v)
    free = [k for k in range(m) if k not in ech.pivots]
    return ech, free


def morita_trace_check(A, r):
    """``HH_0(Mat_r A) -> HH_0(A)`` induced by the trace, as an explicit matrix."""
    A = normalized(A)
    m = A.dim
    check_dim(r * r * m, "Mat_r(A)")
    B = matrices_over(A, r)
    echB, freeB = _hh0_quotient(B)
    echA, freeA = _hh0_quotient(A)
    colA = {k: n for n, k in enumerate(freeA)}
    matrix = []
    for k in freeB:
        i, j, a = k // (r * m), (k // m) % r, k % m
        img = {a: Fraction(1)} if i == j else {}
        red = echA.reduce(img)
        matrix.append({colA[c]: v for c, v in red.items()})
    rank = Echelon(matrix).rank
    return {"dim_hh0_matrices": len(freeB), "dim_hh0_base": len(freeA),
            "matrix": matrix, "invertible": rank == len(freeA) == len(freeB)}
