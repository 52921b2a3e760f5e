"""Moyal-Weyl star product, Weyl algebra normal forms and PBW symmetrization.

Phase-space polynomials in ``x_1..x_n, y_1..y_n`` and the central
parameter ``t`` are commutative polynomials in ``2n + 1`` variables, ``t``
being the last one.  Weyl algebra elements use the same exponent layout
read as the normal-ordered monomial ``p_1^a1 q_1^b1 ... p_n^an q_n^bn t^k``
with ``p_i q_i - q_i p_i = t``.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product as iproduct
from math import comb, factorial

from .core import CPoly, TPoly, _join_terms, _signed_term, mono_str
from .errors import NcalcError


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


def phase_names(n):
    if n == 1:
        return ["x1", "y1", "t"]
    return [f"x{i + 1}" for i in range(n)] + [f"y{i + 1}" for i in range(n)] + ["t"]


class PhasePoly:
    """Polynomial on ``2n``-dimensional phase space with coefficients in ``Q[t]``."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != 2 * n + 1:
                raise NcalcError("exponent vector must have length 2n+1")
            if c:
                _acc(self.terms, tuple(e), Fraction(c))

    @classmethod
    def x(cls, i, n):
        e = [0] * (2 * n + 1)
        e[i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def y(cls, i, n):
        e = [0] * (2 * n + 1)
        e[n + i] = 1
        return cls(n, {tuple(e): 1})

    @classmethod
    def t(cls, n, power=1):
        e = [0] * (2 * n + 1)
        e[-1] = power
        return cls(n, {tuple(e): 1})

    @classmethod
    def const(cls, c, n):
        return cls(n, {(0,) * (2 * n + 1): c})

    @classmethod
    def from_cpoly(cls, f, n):
        if f.nvars != 2 * n + 1:
            raise NcalcError("variable count does not match the layout")
        return cls(n, f.terms)

    def to_cpoly(self):
        return CPoly(self.terms, 2 * self.n + 1)

    def _check(self, other):
        if not isinstance(other, PhasePoly) or other.n != self.n:
            raise NcalcError("phase-space layout mismatch")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, PhasePoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, c)
        return PhasePoly(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return PhasePoly(self.n, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        """The commutative product."""
        if not isinstance(other, PhasePoly):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                _acc(out, tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return PhasePoly(self.n, out)

    __rmul__ = scale

    def __pow__(self, k):
        out = PhasePoly.const(1, self.n)
        for _ in range(k):
            out = out * self
        return out

    def diff(self, v):
        out = {}
        for e, c in self.terms.items():
            if e[v]:
                f = list(e)
                f[v] -= 1
                _acc(out, tuple(f), c * e[v])
        return PhasePoly(self.n, out)

    def at_t_zero(self):
        return PhasePoly(self.n, {e: c for e, c in self.terms.items() if e[-1] == 0})

    def t_coefficient(self, k):
        """Coefficient of ``t^k`` as a phase polynomial without ``t``."""
        return PhasePoly(self.n, {e[:-1] + (0,): c for e, c in self.terms.items() if e[-1] == k})

    def weight(self, e):
        return sum(e[:-1]) + 2 * e[-1]

    def weight_part(self, w):
        return PhasePoly(self.n, {e: c for e, c in self.terms.items() if self.weight(e) == w})

    def degree(self):
        return max((sum(e[:-1]) for e in self.terms), default=-1)

    def to_str(self):
        if not self.terms:
            return "0"
        names = phase_names(self.n)
        order = sorted(self.terms, key=lambda e: (e[-1], -sum(e[:-1]), tuple(-a for a in e[:-1])))
        parts = []
        for e in order:
            parts.append(_signed_term(self.terms[e], mono_str(names, e)))
        return _join_terms(parts)

    def by_t_power(self):
        """``{k: coefficient of t^k}`` for printing grouped expansions."""
        return {k: self.t_coefficient(k) for k in sorted({e[-1] for e in self.terms})}

    def __repr__(self):
        return self.to_str()


# --------------------------------------------------------------------------
# Moyal product


def _apply_pi(F, n):
    """``pi = sum_i d/dx_i (x) d/dy_i - d/dy_i (x) d/dx_i`` on bi-polynomials."""
    out = {}
    for (e1, e2), c in F.items():
        for i in range(n):
            xi, yi = i, n + i
            if e1[xi] and e2[yi]:
                f1, f2 = list(e1), list(e2)
                f1[xi] -= 1
                f2[yi] -= 1
                _acc(out, (tuple(f1), tuple(f2)), c * e1[xi] * e2[yi])
            if e1[yi] and e2[xi]:
                f1, f2 = list(e1), list(e2)
                f1[yi] -= 1
                f2[xi] -= 1
                _acc(out, (tuple(f1), tuple(f2)), -c * e1[yi] * e2[xi])
    return out


def moyal_star(f, g):
    """``m o exp(t pi / 2)(f (x) g)``; the series stops once ``pi^d`` vanishes."""
    f._check(g)
    n = f.n
    F = {(e1, e2): c1 * c2 for e1, c1 in f.terms.items() for e2, c2 in g.terms.items()}
    out = {}
    d, scale = 0, Fraction(1)
    while F:
        for (e1, e2), c in F.items():
            e = [a + b for a, b in zip(e1, e2)]
            e[-1] += d
            _acc(out, tuple(e), c * scale)
        F = _apply_pi(F, n)
        d += 1
        scale /= 2 * d
    return PhasePoly(n, out)


def poisson_bracket(f, g):
    """``sum_i df/dx_i dg/dy_i - df/dy_i dg/dx_i``."""
    f._check(g)
    n = f.n
    out = PhasePoly(n)
    for i in range(n):
        out = out + f.diff(i) * g.diff(n + i) - f.diff(n + i) * g.diff(i)
    return out


def poisson_leading_term(star, f, g):
    """``(f * g - g * f) / t`` at ``t = 0``."""
    comm = star(f, g) - star(g, f)
    if comm.t_coefficient(0):
        raise NcalcError("commutator is not divisible by t: not a deformation")
    return comm.t_coefficient(1)


# --------------------------------------------------------------------------
# Weyl algebra


class WeylElement:
    """Normal-ordered element of the Weyl algebra on ``n`` pairs."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != 2 * n + 1:
                raise NcalcError("exponent vector must have length 2n+1")
            if c:
                _acc(self.terms, tuple(e), Fraction(c))

    @classmethod
    def p(cls, i, n):
        return cls(n, {_unit_exp(n, i): 1})

    @classmethod
    def q(cls, i, n):
        return cls(n, {_unit_exp(n, n + i): 1})

    @classmethod
    def const(cls, c, n):
        return cls(n, {(0,) * (2 * n + 1): c})

    def _check(self, other):
        if not isinstance(other, WeylElement) or other.n != self.n:
            raise NcalcError("Weyl elements over different pair counts")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, WeylElement) and self.n == other.n and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            _acc(out, e, c)
        return WeylElement(self.n, out)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return WeylElement(self.n, {e: c * s for e, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, WeylElement):
            return weyl_mul(self, other)
        return self.scale(other)

    def coefficient(self, mono):
        """``TPoly`` coefficient of the normal monomial with ``p, q`` exponents ``mono``."""
        mono = tuple(mono)
        return TPoly({e[-1]: c for e, c in self.terms.items() if e[:-1] == mono})

    def to_str(self):
        if not self.terms:
            return "0"
        n = self.n
        pn = ["p"] if n == 1 else [f"p{i + 1}" for i in range(n)]
        qn = ["q"] if n == 1 else [f"q{i + 1}" for i in range(n)]
        parts = []
        for e in sorted(self.terms, key=lambda e: (e[-1], -sum(e[:-1]), tuple(-a for a in e[:-1]))):
            fac = []
            for i in range(n):
                fac += [pn[i]] * e[i] + [qn[i]] * e[n + i]
            fac += ["t"] * e[-1]
            parts.append(_signed_term(self.terms[e], "*".join(fac)))
        return _join_terms(parts)

    def __repr__(self):
        return self.to_str()


def _unit_exp(n, v):
    e = [0] * (2 * n + 1)
    e[v] = 1
    return tuple(e)


@lru_cache(maxsize=None)
def _reorder(b, c):
    """``q^b p^c`` as ``sum_j coeff_j t^j p^(c-j) q^(b-j)``."""
    return tuple((j, Fraction((-1) ** j * factorial(j) * comb(b, j) * comb(c, j)))
                 for j in range(min(b, c) + 1))


def weyl_mul(u, v):
    u._check(v)
    n = u.n
    out = {}
    for e1, c1 in u.terms.items():
        for e2, c2 in v.terms.items():
            per_pair = [_reorder(e1[n + i], e2[i]) for i in range(n)]
            for choice in iproduct(*per_pair):
                e = [0] * (2 * n + 1)
                coef = c1 * c2
                tpow = e1[-1] + e2[-1]
                for i, (j, cj) in enumerate(choice):
                    e[i] = e1[i] + e2[i] - j
                    e[n + i] = e1[n + i] + e2[n + i] - j
                    coef *= cj
                    tpow += j
                e[-1] = tpow
                _acc(out, tuple(e), coef)
    return WeylElement(n, out)


def weyl_word(letters, n):
    """Normal form of a product of letters ``('p', i)`` / ``('q', i)``."""
    out = WeylElement.const(1, n)
    for kind, i in letters:
        out = weyl_mul(out, WeylElement.p(i, n) if kind == "p" else WeylElement.q(i, n))
    return out


@lru_cache(maxsize=None)
def _sym_pair(a, b):
    """Average of all arrangements of ``a`` p's and ``b`` q's, for one pair."""
    total = {}
    count = 0
    for pos in combinations(range(a + b), a):
        letters = [("q", 0)] * (a + b)
        for k in pos:
            letters[k] = ("p", 0)
        for e, c in weyl_word(letters, 1).terms.items():
            _acc(total, e, c)
        count += 1
    return tuple((e, c / count) for e, c in total.items())


def _sym_monomial(e, n):
    out = {}
    pieces = [_sym_pair(e[i], e[n + i]) for i in range(n)]
    for choice in iproduct(*pieces):
        key = [0] * (2 * n + 1)
        coef = Fraction(1)
        tpow = e[-1]
        for i, (pe, c) in enumerate(choice):
            key[i], key[n + i] = pe[0], pe[1]
            tpow += pe[2]
            coef *= c
        key[-1] = tpow
        _acc(out, tuple(key), coef)
    return out


def pbw_symmetrize(f):
    """``sigma_W``: each monomial goes to the average of its orderings."""
    n = f.n
    out = {}
    for e, c in f.terms.items():
        for k, v in _sym_monomial(e, n).items():
            _acc(out, k, c * v)
    return WeylElement(n, out)


def pbw_unsymmetrize(u):
    """Inverse of :func:`pbw_symmetrize` by top-degree back-substitution."""
    n = u.n
    rest = dict(u.terms)
    out = {}
    while rest:
        e = max(rest, key=lambda k: (sum(k[:-1]), k))
        c = rest[e]
        _acc(out, e, c)
        for k, v in _sym_monomial(e, n).items():
            _acc(rest, k, -c * v)
    return PhasePoly(n, out)


def transported_product(f, g):
    """``sigma^-1(sigma(f) sigma(g))``."""
    return pbw_unsymmetrize(weyl_mul(pbw_symmetrize(f), pbw_symmetrize(g)))


# --------------------------------------------------------------------------
# the Heisenberg exponential identity, weight by weight


def exp_series(u, max_weight):
    """Truncated ``exp(u)`` keeping weights ``<= max_weight`` (``t`` has weight 2)."""
    n = u.n
    out = PhasePoly.const(1, n)
    power = PhasePoly.const(1, n)
    for k in range(1, max_weight + 1):
        power = _truncate(power * u, max_weight).scale(Fraction(1, k))
        if not power:
            break
        out = out + power
    return out


def _truncate(f, w):
    return PhasePoly(f.n, {e: c for e, c in f.terms.items() if f.weight(e) <= w})


def heisenberg_exponential_check(u, v, max_weight):
    """Compare ``e^u * e^v`` with ``e^(t w(u,v)/2) e^(u+v)`` for linear ``u, v``.

    Returns the list of weights at which the two sides differ (empty on success).
    """
    for h in (u, v):
        if any(sum(e[:-1]) != 1 or e[-1] for e in h.terms):
            raise NcalcError("exponents must be linear forms without t")
    lhs = _truncate(moyal_star(exp_series(u, max_weight), exp_series(v, max_weight)), max_weight)
    omega = poisson_bracket(u, v)
    tw = PhasePoly(u.n, {tuple(list(e[:-1]) + [1]): c / 2 for e, c in omega.terms.items()})
    rhs = _truncate(exp_series(tw, max_weight) * exp_series(u + v, max_weight), max_weight)
    return [w for w in range(max_weight + 1) if lhs.weight_part(w) != rhs.weight_part(w)]
