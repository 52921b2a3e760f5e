"""Chern characters of idempotents and invertible matrices over finite-dimensional algebras.

Matrices have entries in a unit-normalized :class:`StructureAlgebra`, each
entry a coordinate dict.  Matrices of noncommutative forms are lists of
:class:`NCForm` over the matching :class:`FinDimAlgebra`; traces land in the
de Rham quotient of the algebra itself.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core import FinDimAlgebra
from .errors import NcalcError, ValidationError
from .forms import DRClass, NCForm, de_rham_d, dr_reduce, form_mul, hochschild_b
from .linalg import solve


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def _clean(v):
    return {k: Fraction(c) for k, c in v.items() if c}


class AlgMatrix:
    """``r x r`` matrix over a structure algebra; entries are coordinate dicts."""

    __slots__ = ("A", "rows")

    def __init__(self, A, rows):
        if not A.normalized:
            raise ValidationError("use a unit-normalized algebra (basis 0 = 1)")
        r = len(rows)
        if any(len(row) != r for row in rows):
            raise ValidationError("matrix must be square")
        self.A = A
        self.rows = [[_clean(x) if isinstance(x, dict) else ({0: Fraction(x)} if x else {})
                      for x in row] for row in rows]

    @property
    def size(self):
        return len(self.rows)

    @classmethod
    def identity(cls, A, r):
        return cls(A, [[1 if i == j else 0 for j in range(r)] for i in range(r)])

    @classmethod
    def unit_matrix(cls, A, r, i, j, a):
        rows = [[0] * r for _ in range(r)]
        rows[i][j] = a
        return cls(A, rows)

    def __eq__(self, other):
        return isinstance(other, AlgMatrix) and self.rows == other.rows

    def __add__(self, other):
        rows = []
        for r1, r2 in zip(self.rows, other.rows):
            row = []
            for a, b in zip(r1, r2):
                s = dict(a)
                for k, c in b.items():
                    _acc(s, k, c)
                row.append(s)
            rows.append(row)
        return AlgMatrix(self.A, rows)

    def scale(self, c):
        return AlgMatrix(self.A, [[{k: v * c for k, v in x.items()} for x in row] for row in self.rows])

    def __sub__(self, other):
        return self + other.scale(-1)

    def __mul__(self, other):
        r = self.size
        rows = []
        for i in range(r):
            row = []
            for j in range(r):
                s = {}
                for l in range(r):
                    for k, c in self.A.mul(self.rows[i][l], other.rows[l][j]).items():
                        _acc(s, k, c)
                row.append(s)
            rows.append(row)
        return AlgMatrix(self.A, rows)

    def direct_sum(self, other):
        r, s = self.size, other.size
        rows = [[self.rows[i][j] if j < r else {} for j in range(r + s)] for i in range(r)]
        rows += [[{} if j < r else other.rows[i][j - r] for j in range(r + s)] for i in range(s)]
        return AlgMatrix(self.A, rows)

    def to_json(self):
        return [[{str(k): str(c) for k, c in x.items()} for x in row] for row in self.rows]

    @classmethod
    def from_json(cls, A, data):
        rows = [[{int(k): Fraction(v) for k, v in x.items()} if isinstance(x, dict) else x
                 for x in row] for row in data]
        return cls(A, rows)

    def to_str(self):
        def entry(x):
            if not x:
                return "0"
            parts = []
            for k in sorted(x):
                c = x[k]
                name = self.A.names[k]
                parts.append(str(c) if k == 0 else (name if c == 1 else f"{c}*{name}"))
            return " + ".join(parts)
        return "[" + "; ".join(", ".join(entry(x) for x in row) for row in self.rows) + "]"

    def __repr__(self):
        return self.to_str()


class IdempotentMatrix(AlgMatrix):
    """Matrix with ``e^2 = e`` checked at construction."""

    __slots__ = ()

    def __init__(self, A, rows):
        super().__init__(A, rows)
        if AlgMatrix.__mul__(self, self) != AlgMatrix(A, self.rows):
            raise ValidationError("matrix is not idempotent")


def invert(M):
    """Exact two-sided inverse by solving ``M X = 1``; ``None`` if there is none."""
    A, r, m = M.A, M.size, M.A.dim
    # unknown X[l][j] coordinate k -> column index (l, j, k); equation index (i, j, k')
    cols = []
    for l in range(r):
        for j in range(r):
            for k in range(m):
                col = {}
                for i in range(r):
                    for k2, c in A.mul(M.rows[i][l], {k: 1}).items():
                        col[(i * r + j) * m + k2] = c
                cols.append(col)
    target = {(i * r + i) * m: Fraction(1) for i in range(r)}
    x = solve(cols, target)
    if x is None:
        return None
    rows = [[{} for _ in range(r)] for _ in range(r)]
    for idx, c in x.items():
        l, rest = divmod(idx, r * m)
        j, k = divmod(rest, m)
        rows[l][j][k] = c
    X = AlgMatrix(A, rows)
    if X * M != AlgMatrix.identity(A, r):
        return None
    return X


class InvertibleMatrix(AlgMatrix):
    """Matrix with a stored exact inverse, validated on both sides."""

    __slots__ = ("inverse",)

    def __init__(self, A, rows, inverse=None):
        super().__init__(A, rows)
        if inverse is None:
            inv = invert(AlgMatrix(A, self.rows))
            if inv is None:
                raise ValidationError("matrix is not invertible")
        else:
            inv = inverse if isinstance(inverse, AlgMatrix) else AlgMatrix(A, inverse)
        one = AlgMatrix.identity(A, self.size)
        plain = AlgMatrix(A, self.rows)
        if plain * inv != one or inv * plain != one:
            raise ValidationError("stored inverse is wrong")
        self.inverse = AlgMatrix(A, inv.rows)

    def __mul__(self, other):
        prod = AlgMatrix(self.A, self.rows) * AlgMatrix(other.A, other.rows)
        if isinstance(other, InvertibleMatrix):
            return InvertibleMatrix(self.A, prod.rows, other.inverse * self.inverse)
        return prod


def random_invertible(A, r, rng, steps=3):
    """Product of elementary matrices ``1 + a E_ij`` (``i != j``) with its exact inverse."""
    g = AlgMatrix.identity(A, r)
    ginv = AlgMatrix.identity(A, r)
    for _ in range(steps if r > 1 else 0):
        i, j = rng.sample(range(r), 2)
        E = AlgMatrix.unit_matrix(A, r, i, j, _random_elem(A, rng))
        one = AlgMatrix.identity(A, r)
        g = g * (one + E)
        ginv = (one - E) * ginv
    return InvertibleMatrix(A, g.rows, ginv)


# --------------------------------------------------------------------------
# matrices of forms


def _alg(A):
    return FinDimAlgebra(A)


def form_matrix(M):
    alg = _alg(M.A)
    return [[NCForm.from_elements(alg, x) for x in row] for row in M.rows]


def d_matrix(M):
    alg = _alg(M.A)
    return [[NCForm.from_elements(alg, 1, x) for x in row] for row in M.rows]


def fm_mul(P, Q):
    r = len(P)
    alg = P[0][0].alg
    out = []
    for i in range(r):
        row = []
        for j in range(r):
            s = NCForm.zero(alg)
            for l in range(r):
                if P[i][l] and Q[l][j]:
                    s = s + form_mul(P[i][l], Q[l][j])
            row.append(s)
        out.append(row)
    return out


def fm_add(P, Q):
    return [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(P, Q)]


def fm_sub(P, Q):
    return [[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(P, Q)]


def fm_d(P):
    return [[de_rham_d(a) for a in row] for row in P]


def fm_trace(P):
    s = NCForm.zero(P[0][0].alg)
    for i in range(len(P)):
        s = s + P[i][i]
    return s


def fm_is_zero(P):
    return all(not a for row in P for a in row)


def idempotent_identities(e):
    """``e de = de (1 - e)`` and ``(de) e = (1 - e) de`` as exact matrix identities."""
    E, dE = form_matrix(e), d_matrix(e)
    one_minus = form_matrix(AlgMatrix.identity(e.A, e.size) - e)
    first = fm_is_zero(fm_sub(fm_mul(E, dE), fm_mul(dE, one_minus)))
    second = fm_is_zero(fm_sub(fm_mul(dE, E), fm_mul(one_minus, dE)))
    return first and second


@dataclass(frozen=True)
class Character:
    """A character form, its de Rham class, and the certificate that goes with it."""

    form: NCForm
    cls: DRClass
    certified: bool


def chern_c0(e):
    """``tr e`` in DR^0; certified when ``d tr e`` vanishes in DR^1."""
    tr = fm_trace(form_matrix(e))
    return Character(tr, DRClass(tr), not dr_reduce(de_rham_d(tr)))


def chern_c1(g):
    """``tr(g^-1 dg)`` in DR^1; certified when ``b`` kills the form in ``A``."""
    if not isinstance(g, InvertibleMatrix):
        g = InvertibleMatrix(g.A, g.rows)
    form = fm_trace(fm_mul(form_matrix(g.inverse), d_matrix(g)))
    return Character(form, DRClass(form), not hochschild_b(form))


def _power(P, k, one):
    out = one
    for _ in range(k):
        out = fm_mul(out, P)
    return out


def _identity_forms(e):
    return form_matrix(AlgMatrix.identity(e.A, e.size))


def ede_form(e, k):
    """``tr(e (de)^(2k))`` as a form."""
    return fm_trace(fm_mul(form_matrix(e), _power(d_matrix(e), 2 * k, _identity_forms(e))))


def chern_ch(e, k):
    """``(1/k!) tr(e (de)^(2k))`` in DR^{2k}; certified when its ``d`` reduces to 0."""
    if k < 0:
        raise NcalcError("k must be non-negative")
    form = ede_form(e, k).scale(Fraction(1, factorial(k)))
    cls = DRClass(form)
    return Character(form, cls, not cls.d())


def _row_times(row, M):
    r = len(row)
    alg = M[0][0].alg
    return [sum((form_mul(row[l], M[l][j]) for l in range(r) if row[l] and M[l][j]),
                NCForm.zero(alg)) for j in range(r)]


class ConnectionData:
    """Grassmannian connection of an idempotent.

    On columns ``v = e v`` it is ``v -> e dv`` with curvature the matrix
    ``e de de e``.  On rows ``m = m e`` (the left module ``A^r e``) it is
    ``m -> (dm) e``, which satisfies ``nabla(a m) = a nabla(m) + da m``; there the
    square is right multiplication by ``-e de de e``.
    """

    def __init__(self, e):
        self.e = e
        self.E = form_matrix(e)
        self.dE = d_matrix(e)

    def curvature(self):
        return fm_mul(fm_mul(fm_mul(self.E, self.dE), self.dE), self.E)

    def _row(self, m):
        alg = self.E[0][0].alg
        row = [x if isinstance(x, NCForm) else NCForm.from_elements(alg, x) for x in m]
        if _row_times(row, self.E) != row:
            raise ValidationError("row is not fixed by e")
        return row

    def apply_rows(self, row):
        """``(d mu) e`` on a row of forms with ``mu = mu e``."""
        return _row_times([de_rham_d(x) for x in row], self.E)

    def apply_columns(self, col):
        """``e dv`` on a column of forms with ``v = e v``."""
        r = len(col)
        dv = [de_rham_d(x) for x in col]
        return [sum((form_mul(self.E[i][l], dv[l]) for l in range(r) if self.E[i][l] and dv[l]),
                    NCForm.zero(self.E[0][0].alg)) for i in range(r)]

    def leibniz_check(self, a, m):
        """``nabla(a m) = a nabla(m) + da m`` for ``a`` in ``A`` and a row ``m = m e``."""
        row = self._row(m)
        alg = row[0].alg
        af = NCForm.from_elements(alg, a)
        da = NCForm.from_elements(alg, 1, a)
        lhs = self.apply_rows([form_mul(af, x) for x in row])
        rhs = [form_mul(af, x) + form_mul(da, y) for x, y in zip(self.apply_rows(row), row)]
        return lhs == rhs

    def rows_curvature_check(self, m):
        """``nabla(nabla mu) = -mu (e de de e)`` on a row ``mu = mu e``."""
        row = self._row(m)
        expect = [x.scale(-1) for x in _row_times(row, self.curvature())]
        return self.apply_rows(self.apply_rows(row)) == expect

    def omega_linearity_check(self, alpha, m):
        """``nabla^2(alpha mu) = alpha nabla^2(mu)`` for a form ``alpha`` and a row ``mu = mu e``."""
        row = self._row(m)
        twice = self.apply_rows(self.apply_rows(row))
        scaled = [form_mul(alpha, x) for x in row]
        return self.apply_rows(self.apply_rows(scaled)) == [form_mul(alpha, x) for x in twice]

    def columns_curvature_check(self, v):
        """``nabla(nabla v) = (e de de e) v`` on a column ``v = e v`` over ``A``."""
        alg = self.E[0][0].alg
        col = [NCForm.from_elements(alg, x) for x in v]
        R = self.curvature()
        r = len(col)
        expect = [sum((form_mul(R[i][l], col[l]) for l in range(r) if R[i][l] and col[l]),
                      NCForm.zero(alg)) for i in range(r)]
        return self.apply_columns(self.apply_columns(col)) == expect


def grassmann_connection(e):
    return ConnectionData(e)


def connection_curvature(conn, k):
    """``tr(R^k) / k!`` as a DR^{2k} class, with ``R = e de de e``."""
    tr = fm_trace(_power(conn.curvature(), k, _identity_forms(conn.e)))
    return DRClass(tr.scale(Fraction(1, factorial(k))))


def _random_elem(A, rng):
    return {k: Fraction(rng.randint(-2, 2)) for k in range(A.dim)}


def image_rows(e, rng, count=3):
    """Random rows ``m e`` in the left module ``A^r e``."""
    A, r = e.A, e.size
    out = []
    for _ in range(count):
        v = AlgMatrix(A, [[_random_elem(A, rng) for _ in range(r)]] + [[0] * r for _ in range(r - 1)])
        out.append((v * e).rows[0])
    return out


def image_columns(e, rng, count=3):
    """Random columns ``e v`` in the right module ``e A^r``."""
    A, r = e.A, e.size
    out = []
    for _ in range(count):
        v = AlgMatrix(A, [[_random_elem(A, rng)] + [0] * (r - 1) for _ in range(r)])
        out.append([row[0] for row in (e * v).rows])
    return out
