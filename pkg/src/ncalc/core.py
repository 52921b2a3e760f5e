"""Scalars, free noncommutative polynomials and structure-constant algebras.

Everything here is exact.  Coefficients are ``Fraction`` by default, with
:class:`TPoly` (polynomials in a central parameter ``t``) and
:class:`DualScalar` (``a + b*eps`` with ``eps**2 = 0``) available where a
computation needs them.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product as iproduct

from .errors import NcalcError, ValidationError


# --------------------------------------------------------------------------
# scalars


def frac(x):
    """Coerce ints, strings like ``"3/4"`` and Fractions to ``Fraction``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


def frac_str(x):
    """Serialize a rational as ``"p/q"`` (or ``"p"`` when integral)."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def coeff_str(c):
    """Human form of a coefficient, parenthesized if it is not a plain integer."""
    if isinstance(c, Fraction) or isinstance(c, int):
        c = Fraction(c)
        if c.denominator == 1:
            return str(c.numerator)
        return f"({c.numerator}/{c.denominator})"
    return f"({c})"


class TPoly:
    """Polynomial in the central parameter ``t`` with rational coefficients."""

    __slots__ = ("c",)

    def __init__(self, coeffs=None):
        self.c = {}
        if coeffs:
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative power of t")
                v = frac(v)
                if v:
                    self.c[e] = v

    @classmethod
    def t(cls, power=1):
        return cls({power: 1})

    @staticmethod
    def lift(x):
        if isinstance(x, TPoly):
            return x
        return TPoly({0: x})

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TPoly.lift(other)
        if not isinstance(other, TPoly):
            return NotImplemented
        return self.c == other.c

    def __hash__(self):
        return hash(frozenset(self.c.items()))

    def __add__(self, other):
        other = TPoly.lift(other)
        out = dict(self.c)
        for e, v in other.c.items():
            out[e] = out.get(e, 0) + v
        return TPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return TPoly({e: -v for e, v in self.c.items()})

    def __sub__(self, other):
        return self + (-TPoly.lift(other))

    def __rsub__(self, other):
        return TPoly.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TPoly({e: v * other for e, v in self.c.items()})
        if not isinstance(other, TPoly):
            return NotImplemented
        out = {}
        for e1, v1 in self.c.items():
            for e2, v2 in other.c.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + v1 * v2
        return TPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = frac(other)
        return TPoly({e: v / other for e, v in self.c.items()})

    def __pow__(self, n):
        out = TPoly({0: 1})
        for _ in range(n):
            out = out * self
        return out

    def degree(self):
        return max(self.c) if self.c else -1

    def coeff(self, e):
        return self.c.get(e, Fraction(0))

    def at_zero(self):
        """Substitute ``t = 0``."""
        return self.coeff(0)

    def shift_down(self):
        """Divide by ``t``; raises if the constant term is nonzero."""
        if self.c.get(0):
            raise NcalcError("not divisible by t")
        return TPoly({e - 1: v for e, v in self.c.items()})

    def __repr__(self):
        if not self.c:
            return "0"
        parts = []
        for e in sorted(self.c):
            v = self.c[e]
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                parts.append(frac_str(v))
            elif v == 1:
                parts.append(mono)
            else:
                parts.append(f"{frac_str(v)}*{mono}")
        return " + ".join(parts)


class DualScalar:
    """``value + eps_part * eps`` with ``eps**2 == 0``."""

    __slots__ = ("value", "eps")

    def __init__(self, value=0, eps=0):
        self.value = frac(value) if not isinstance(value, DualScalar) else value.value
        self.eps = frac(eps)

    @staticmethod
    def lift(x):
        return x if isinstance(x, DualScalar) else DualScalar(x, 0)

    def __bool__(self):
        return bool(self.value) or bool(self.eps)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = DualScalar(other)
        if not isinstance(other, DualScalar):
            return NotImplemented
        return self.value == other.value and self.eps == other.eps

    def __hash__(self):
        return hash((self.value, self.eps))

    def __add__(self, other):
        o = DualScalar.lift(other)
        return DualScalar(self.value + o.value, self.eps + o.eps)

    __radd__ = __add__

    def __neg__(self):
        return DualScalar(-self.value, -self.eps)

    def __sub__(self, other):
        return self + (-DualScalar.lift(other))

    def __rsub__(self, other):
        return DualScalar.lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return DualScalar(self.value * other, self.eps * other)
        if not isinstance(other, DualScalar):
            return NotImplemented
        return DualScalar(self.value * other.value,
                          self.value * other.eps + self.eps * other.value)

    __rmul__ = __mul__

    def __repr__(self):
        return f"{frac_str(self.value)} + {frac_str(self.eps)}*eps"


# --------------------------------------------------------------------------
# words and free polynomials


def word_key(w):
    """Length-lexicographic sort key for words."""
    return (len(w), w)


def default_names(ngens):
    if ngens <= 3:
        return ["x", "y", "z"][:ngens]
    return [f"x{i + 1}" for i in range(ngens)]


def mono_str(names, exps):
    """``x^2*y`` style text for a commutative monomial; empty for the constant."""
    return "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, exps) if k)


def _is_zero(c):
    return not c


class FreePoly:
    """Element of the free algebra on ``ngens`` generators.

    ``terms`` maps words (tuples of generator indices) to coefficients.
    Instances are treated as immutable.
    """

    __slots__ = ("terms", "ngens")

    def __init__(self, terms=None, ngens=1):
        self.ngens = ngens
        self.terms = {}
        if terms:
            for w, c in terms.items():
                w = tuple(w)
                if any(not 0 <= g < ngens for g in w):
                    raise NcalcError(f"word {w} uses a generator outside 0..{ngens - 1}")
                if isinstance(c, int):
                    c = Fraction(c)
                if not _is_zero(c):
                    self.terms[w] = c

    @classmethod
    def gen(cls, i, ngens):
        return cls({(i,): 1}, ngens)

    @classmethod
    def word(cls, w, ngens, coeff=1):
        return cls({tuple(w): coeff}, ngens)

    @classmethod
    def const(cls, c, ngens):
        return cls({(): c}, ngens)

    @classmethod
    def zero(cls, ngens):
        return cls({}, ngens)

    def _check(self, other):
        if self.ngens != other.ngens:
            raise NcalcError(f"generator count mismatch: {self.ngens} vs {other.ngens}")

    def _lift(self, other):
        if isinstance(other, FreePoly):
            self._check(other)
            return other
        return FreePoly.const(other, self.ngens)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = FreePoly.const(other, self.ngens)
        if not isinstance(other, FreePoly):
            return NotImplemented
        return self.ngens == other.ngens and self.terms == other.terms

    def __hash__(self):
        return hash((self.ngens, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreePoly(out, self.ngens)

    __radd__ = __add__

    def __neg__(self):
        return FreePoly({w: -c for w, c in self.terms.items()}, self.ngens)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, s):
        return FreePoly({w: c * s for w, c in self.terms.items()}, self.ngens)

    def __mul__(self, other):
        if not isinstance(other, FreePoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreePoly(out, self.ngens)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = FreePoly.const(1, self.ngens)
        for _ in range(n):
            out = out * self
        return out

    def commutator(self, other):
        return self * other - other * self

    def weights(self):
        return sorted({len(w) for w in self.terms})

    def homogeneous(self, w):
        return FreePoly({u: c for u, c in self.terms.items() if len(u) == w}, self.ngens)

    def is_homogeneous(self):
        return len(self.weights()) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: word_key(kv[0]))

    def to_str(self, names=None):
        names = names or default_names(self.ngens)
        if not self.terms:
            return "0"
        parts = []
        for w, c in self.sorted_terms():
            mono = "*".join(names[g] for g in w)
            parts.append(_signed_term(c, mono))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def _signed_term(c, mono):
    """Return ``(sign, text)`` for one term of a printed sum."""
    neg = False
    if isinstance(c, (int, Fraction)):
        c = Fraction(c)
        if c < 0:
            neg, c = True, -c
        if not mono:
            return neg, frac_str(c) if c.denominator == 1 else f"({frac_str(c)})"
        if c == 1:
            return neg, mono
        return neg, f"{coeff_str(c)}*{mono}"
    if not mono:
        return neg, f"({c})"
    return neg, f"({c})*{mono}"


def _join_terms(parts):
    out = ""
    for i, (neg, text) in enumerate(parts):
        if i == 0:
            out = ("-" if neg else "") + text
        else:
            out += (" - " if neg else " + ") + text
    return out or "0"


def free_mul(a, b):
    """Concatenation product of two free polynomials."""
    if a.ngens != b.ngens:
        raise NcalcError("generator count mismatch")
    return a * b


def free_commutator(a, b):
    if a.ngens != b.ngens:
        raise NcalcError("generator count mismatch")
    return a * b - b * a


def words_of_length(ngens, n):
    return [tuple(w) for w in iproduct(range(ngens), repeat=n)]


# --------------------------------------------------------------------------
# commutative polynomials


class CPoly:
    """Commutative polynomial: exponent tuples of length ``nvars`` to coefficients."""

    __slots__ = ("terms", "nvars")

    def __init__(self, terms=None, nvars=1):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if len(e) != nvars:
                    raise NcalcError("exponent vector of wrong length")
                if isinstance(c, int):
                    c = Fraction(c)
                if not _is_zero(c):
                    self.terms[e] = c

    @classmethod
    def var(cls, i, nvars, coeff=1):
        e = [0] * nvars
        e[i] = 1
        return cls({tuple(e): coeff}, nvars)

    @classmethod
    def const(cls, c, nvars):
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def zero(cls, nvars):
        return cls({}, nvars)

    def _lift(self, other):
        if isinstance(other, CPoly):
            if other.nvars != self.nvars:
                raise NcalcError("variable count mismatch")
            return other
        return CPoly.const(other, self.nvars)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, CPoly):
            if isinstance(other, (int, Fraction, TPoly)):
                other = CPoly.const(other, self.nvars)
            else:
                return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return CPoly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return CPoly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, s):
        return CPoly({e: c * s for e, c in self.terms.items()}, self.nvars)

    def __mul__(self, other):
        if not isinstance(other, CPoly):
            return self.scale(other)
        other = self._lift(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return CPoly(out, self.nvars)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n):
        out = CPoly.const(1, self.nvars)
        for _ in range(n):
            out = out * self
        return out

    def diff(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i]:
                f = list(e)
                f[i] -= 1
                out[tuple(f)] = c * e[i]
        return CPoly(out, self.nvars)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def homogeneous(self, d):
        return CPoly({e: c for e, c in self.terms.items() if sum(e) == d}, self.nvars)

    def map_coeffs(self, f):
        return CPoly({e: f(c) for e, c in self.terms.items()}, self.nvars)

    def evaluate(self, values, one=1):
        """Evaluate at ``values`` (any ring elements supporting + and *)."""
        total = None
        for e, c in self.terms.items():
            term = c * one
            for v, k in zip(values, e):
                for _ in range(k):
                    term = term * v
            total = term if total is None else total + term
        return total if total is not None else 0 * one

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), tuple(-x for x in kv[0])))

    def to_str(self, names):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            parts.append(_signed_term(c, mono_str(names, e)))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str([f"v{i}" for i in range(self.nvars)])


# --------------------------------------------------------------------------
# finite-dimensional algebras


@dataclass
class Report:
    """Outcome of a validation: ``ok`` plus the first offending index tuple."""

    ok: bool
    message: str = ""
    witness: tuple = field(default_factory=tuple)

    def __bool__(self):
        return self.ok


def _vec(d):
    return {k: frac(v) for k, v in d.items() if frac(v)}


class StructureAlgebra:
    """Finite-dimensional unital algebra given by structure constants.

    ``table[i][j]`` is a sparse dict ``k -> c_ij^k`` with
    ``e_i e_j = sum_k c_ij^k e_k``.  Use :func:`make_algebra` to obtain a
    validated algebra whose basis element 0 is the unit.
    """

    def __init__(self, names, table, unit):
        self.dim = len(names)
        self.names = list(names)
        self.table = [[_vec(table[i][j]) for j in range(self.dim)] for i in range(self.dim)]
        self.unit = _vec(unit) if isinstance(unit, dict) else _vec(dict(enumerate(unit)))
        self._assoc_ok = None

    @property
    def normalized(self):
        return self.unit == {0: 1}

    def mul_basis(self, i, j):
        return self.table[i][j]

    def mul(self, u, v):
        """Product of two coordinate vectors (dicts index -> coefficient)."""
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.table[i][j].items():
                    nv = out.get(k, 0) + a * b * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def validate(self):
        return structure_validate(self)

    def is_commutative(self):
        return all(self.table[i][j] == self.table[j][i]
                   for i in range(self.dim) for j in range(self.dim))

    def rebased(self):
        """Change basis so that slot 0 holds the unit."""
        if self.normalized:
            return self
        p = min(k for k, v in self.unit.items() if v)
        u = self.unit
        order = [p] + [i for i in range(self.dim) if i != p]
        names = list(self.names)
        new_names = ["1" if u != {p: 1} else names[p]] + [names[i] for i in order[1:]]
        old_of_new = [dict(u)] + [{i: Fraction(1)} for i in order[1:]]
        pos = {old: k for k, old in enumerate(order)}

        def to_new(vec):
            c0 = vec.get(p, 0) / u[p]
            out = {0: c0} if c0 else {}
            for i in order[1:]:
                v = vec.get(i, 0) - c0 * u.get(i, 0)
                if v:
                    out[pos[i]] = v
            return out

        table = [[to_new(self.mul(old_of_new[a], old_of_new[b])) for b in range(self.dim)]
                 for a in range(self.dim)]
        return StructureAlgebra(new_names, table, {0: 1})

    def vec_str(self, v):
        if not v:
            return "0"
        parts = [_signed_term(c, self.names[k] if k or self.names[k] != "1" else "")
                 for k, c in sorted(v.items())]
        return _join_terms(parts)

    def to_json(self):
        return {
            "dim": self.dim,
            "basis": list(self.names),
            "unit": [frac_str(self.unit.get(i, 0)) for i in range(self.dim)],
            "table": [[[frac_str(self.table[i][j].get(k, 0)) for k in range(self.dim)]
                       for j in range(self.dim)] for i in range(self.dim)],
        }

    @classmethod
    def from_json(cls, data):
        m = int(data["dim"])
        names = data.get("basis") or [f"e{i}" for i in range(m)]
        table = data["table"]
        if len(names) != m or len(table) != m or any(len(r) != m for r in table) \
                or any(len(c) != m for r in table for c in r):
            raise ValidationError("structure table dimensions do not match dim")
        tab = [[{k: frac(table[i][j][k]) for k in range(m)} for j in range(m)] for i in range(m)]
        unit = [frac(x) for x in data["unit"]]
        if len(unit) != m:
            raise ValidationError("unit vector has wrong length")
        return cls(names, tab, unit)


def structure_validate(A):
    """Check associativity and the unit laws; report the first failure."""
    m = A.dim
    for i in range(m):
        ei = {i: Fraction(1)}
        if A.mul(A.unit, ei) != ei or A.mul(ei, A.unit) != ei:
            return Report(False, f"unit law fails for basis element {i}", (i,))
    for i in range(m):
        for j in range(m):
            eij = A.table[i][j]
            for k in range(m):
                left = A.mul(eij, {k: Fraction(1)})
                right = A.mul({i: Fraction(1)}, A.table[j][k])
                if left != right:
                    return Report(False, f"associativity fails at ({i},{j},{k})", (i, j, k))
    return Report(True, "ok")


def structure_mul(A, u, v):
    if isinstance(u, (list, tuple)):
        if len(u) != A.dim or len(v) != A.dim:
            raise NcalcError("vector length does not match algebra dimension")
        out = A.mul(_vec(dict(enumerate(u))), _vec(dict(enumerate(v))))
        return [out.get(k, Fraction(0)) for k in range(A.dim)]
    return A.mul(u, v)


def make_algebra(names, table, unit):
    """Validate then rebase; raises :class:`ValidationError` on bad input."""
    A = StructureAlgebra(names, table, unit)
    rep = structure_validate(A)
    if not rep:
        raise ValidationError(rep.message)
    return A.rebased()


def ground_field():
    return make_algebra(["1"], [[{0: 1}]], [1])


def product_field(n):
    """``k x ... x k`` (n copies) in the basis 1, e_2, ..., e_n.

    Built from orthogonal idempotents and rebased so slot 0 is the unit.
    """
    table = [[({i: 1} if i == j else {}) for j in range(n)] for i in range(n)]
    A = StructureAlgebra([f"p{i + 1}" for i in range(n)], table, [1] * n)
    return A.rebased()


def truncated_poly(n):
    """``k[x]/(x^n)`` with basis 1, x, ..., x^(n-1)."""
    names = ["1"] + ["x" if i == 1 else f"x^{i}" for i in range(1, n)]
    table = [[({i + j: 1} if i + j < n else {}) for j in range(n)] for i in range(n)]
    return make_algebra(names, table, [1] + [0] * (n - 1))


def dual_numbers():
    return truncated_poly(2)


def idempotent_algebra():
    """``k[e]/(e^2 - e)`` with basis 1, e."""
    return make_algebra(["1", "e"], [[{0: 1}, {1: 1}], [{1: 1}, {1: 1}]], [1, 0])


def matrix_algebra(n):
    """``Mat_n(k)`` on matrix units, rebased so the identity is slot 0."""
    idx = [(i, j) for i in range(n) for j in range(n)]
    pos = {ij: k for k, ij in enumerate(idx)}
    table = [[({pos[(a[0], b[1])]: 1} if a[1] == b[0] else {}) for b in idx] for a in idx]
    unit = [1 if i == j else 0 for (i, j) in idx]
    return StructureAlgebra([f"E{i + 1}{j + 1}" for i, j in idx], table, unit).rebased()


def upper_triangular(n):
    idx = [(i, j) for i in range(n) for j in range(n) if i <= j]
    pos = {ij: k for k, ij in enumerate(idx)}
    table = [[({pos[(a[0], b[1])]: 1} if a[1] == b[0] else {}) for b in idx] for a in idx]
    unit = [1 if i == j else 0 for (i, j) in idx]
    return StructureAlgebra([f"E{i + 1}{j + 1}" for i, j in idx], table, unit).rebased()


def cyclic_group_algebra(n):
    """``k[Z/n]`` with basis 1, g, ..., g^(n-1)."""
    names = ["1"] + ["g" if i == 1 else f"g^{i}" for i in range(1, n)]
    table = [[{(i + j) % n: 1} for j in range(n)] for i in range(n)]
    return make_algebra(names, table, [1] + [0] * (n - 1))


def matrices_over(A, r):
    """``Mat_r(A)`` with basis ``E_ij (x) e_k`` ordered by ``(i, j, k)``."""
    m = A.dim
    idx = [(i, j, k) for i in range(r) for j in range(r) for k in range(m)]
    pos = {t: n for n, t in enumerate(idx)}
    table = []
    for (i, j, k) in idx:
        row = []
        for (i2, j2, k2) in idx:
            if j != i2:
                row.append({})
            else:
                row.append({pos[(i, j2, kk)]: c for kk, c in A.table[k][k2].items()})
        table.append(row)
    unit = [A.unit.get(k, 0) if i == j else 0 for (i, j, k) in idx]
    names = [f"E{i + 1}{j + 1}.{A.names[k]}" for (i, j, k) in idx]
    return StructureAlgebra(names, table, unit)


# --------------------------------------------------------------------------
# Lie algebras


class LieAlgebraData:
    """Lie algebra by structure constants: ``table[i][j] = {k: c_ij^k}``."""

    def __init__(self, names, table):
        self.dim = len(names)
        self.names = list(names)
        self.table = [[_vec(table[i][j]) for j in range(self.dim)] for i in range(self.dim)]

    def bracket(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.table[i][j].items():
                    nv = out.get(k, 0) + a * b * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def validate(self):
        return lie_validate(self)


def lie_validate(g):
    n = g.dim
    for i in range(n):
        for j in range(n):
            neg = {k: -c for k, c in g.table[j][i].items()}
            if g.table[i][j] != neg:
                return Report(False, f"antisymmetry fails at ({i},{j})", (i, j))
    for i in range(n):
        for j in range(n):
            for k in range(n):
                ei, ej, ek = {i: Fraction(1)}, {j: Fraction(1)}, {k: Fraction(1)}
                total = {}
                for a, b, c in ((ei, ej, ek), (ej, ek, ei), (ek, ei, ej)):
                    for key, v in g.bracket(a, g.bracket(b, c)).items():
                        total[key] = total.get(key, 0) + v
                if any(total.values()):
                    return Report(False, f"Jacobi fails at ({i},{j},{k})", (i, j, k))
    return Report(True, "ok")


def sl2():
    """Basis e, f, h with [e,f]=h, [h,e]=2e, [h,f]=-2f."""
    t = [[{} for _ in range(3)] for _ in range(3)]
    e, f, h = 0, 1, 2
    t[e][f], t[f][e] = {h: 1}, {h: -1}
    t[h][e], t[e][h] = {e: 2}, {e: -2}
    t[h][f], t[f][h] = {f: -2}, {f: 2}
    return LieAlgebraData(["e", "f", "h"], t)


def heisenberg3():
    """Basis p, q, z with [p,q]=z central."""
    t = [[{} for _ in range(3)] for _ in range(3)]
    t[0][1], t[1][0] = {2: 1}, {2: -1}
    return LieAlgebraData(["p", "q", "z"], t)


def abelian_lie(n):
    return LieAlgebraData([f"x{i + 1}" for i in range(n)], [[{} for _ in range(n)] for _ in range(n)])


def lie_from_json(data):
    m = int(data["dim"])
    names = data.get("basis") or [f"x{i + 1}" for i in range(m)]
    table = data["table"]
    return LieAlgebraData(names, [[{k: frac(table[i][j][k]) for k in range(m)}
                                   for j in range(m)] for i in range(m)])


# --------------------------------------------------------------------------
# algebras with a distinguished basis, used by the forms and Hochschild code


class BasedAlgebra:
    """Algebra with a basis indexed by hashable keys and a weight grading.

    ``unit`` is the key of the unit.  ``basis(w)`` lists the keys of weight
    ``w`` in a deterministic order; ``complement(w)`` drops the unit.
    """

    unit = None
    graded = True

    def mul(self, a, b):
        raise NotImplementedError

    def weight(self, a):
        raise NotImplementedError

    def basis(self, w):
        raise NotImplementedError

    def complement(self, w):
        return [k for k in self.basis(w) if k != self.unit]

    def weights_upto(self, w):
        return range(w + 1) if self.graded else range(1)

    def generators(self):
        raise NotImplementedError

    def key_str(self, k):
        return str(k)

    def mul_elem(self, u, v):
        out = {}
        for a, x in u.items():
            for b, y in v.items():
                for k, c in self.mul(a, b).items():
                    nv = out.get(k, 0) + x * y * c
                    if nv:
                        out[k] = nv
                    else:
                        out.pop(k, None)
        return out

    def elem_str(self, u):
        parts = []
        for k in sorted(u, key=self.sort_key):
            parts.append(_signed_term(u[k], "" if k == self.unit else self.key_str(k)))
        return _join_terms(parts)

    def sort_key(self, k):
        return k


class FreeAlgebra(BasedAlgebra):
    """``k<x_1..x_n>`` graded by word length; keys are words."""

    def __init__(self, ngens, names=None):
        self.ngens = ngens
        self.names = list(names or default_names(ngens))
        self.unit = ()

    def __eq__(self, other):
        return isinstance(other, FreeAlgebra) and other.ngens == self.ngens

    def __hash__(self):
        return hash(("free", self.ngens))

    def mul(self, a, b):
        return {a + b: Fraction(1)}

    def weight(self, a):
        return len(a)

    def basis(self, w):
        return words_of_length(self.ngens, w)

    def generators(self):
        return [(i,) for i in range(self.ngens)]

    def key_str(self, k):
        return "*".join(self.names[g] for g in k) if k else "1"

    def sort_key(self, k):
        return word_key(k)

    def from_poly(self, f):
        return dict(f.terms)

    def to_poly(self, u):
        return FreePoly(u, self.ngens)


class PolynomialAlgebra(BasedAlgebra):
    """``k[x_1..x_n]`` graded by total degree; keys are exponent tuples."""

    def __init__(self, nvars, names=None):
        self.nvars = nvars
        self.names = list(names or default_names(nvars))
        self.unit = (0,) * nvars

    def __eq__(self, other):
        return isinstance(other, PolynomialAlgebra) and other.nvars == self.nvars

    def __hash__(self):
        return hash(("poly", self.nvars))

    def mul(self, a, b):
        return {tuple(x + y for x, y in zip(a, b)): Fraction(1)}

    def weight(self, a):
        return sum(a)

    def basis(self, w):
        return sorted(_compositions(w, self.nvars), reverse=True)

    def generators(self):
        out = []
        for i in range(self.nvars):
            e = [0] * self.nvars
            e[i] = 1
            out.append(tuple(e))
        return out

    def key_str(self, k):
        f = []
        for name, e in zip(self.names, k):
            f.extend([name] * e)
        return "*".join(f) or "1"


def _compositions(total, parts):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class FinDimAlgebra(BasedAlgebra):
    """Wrapper of a unit-normalized :class:`StructureAlgebra`; everything has weight 0."""

    graded = False

    def __init__(self, A):
        if not A.normalized:
            A = A.rebased()
        self.A = A
        self.unit = 0
        self.names = A.names

    def __eq__(self, other):
        return isinstance(other, FinDimAlgebra) and (
            other.A is self.A or (other.A.names == self.A.names and other.A.table == self.A.table))

    def __hash__(self):
        return hash(("fin", tuple(self.A.names)))

    def mul(self, a, b):
        return self.A.table[a][b]

    def weight(self, a):
        return 0

    def basis(self, w):
        return list(range(self.A.dim)) if w == 0 else []

    def generators(self):
        return list(range(1, self.A.dim))

    def key_str(self, k):
        return self.A.names[k]
