"""Noncommutative differential forms over an algebra with a basis.

A form of degree ``n`` is stored in the reduced model ``A (x) Abar^(x)n``:
``terms`` maps key tuples ``(a0, a1, ..., an)`` (basis keys of the
algebra, with ``a1..an`` never the unit) to rational coefficients, the
tuple standing for ``a0 da1 ... dan``.

The de Rham quotient by graded commutators is realized per
``(degree, weight)`` piece by an echelon basis of the commutator span.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product as iproduct

from .core import FinDimAlgebra, FreeAlgebra, FreePoly, Report
from .errors import NcalcError, check_dim
from .linalg import Echelon, add_into, kernel


def _acc(out, key, c):
    nv = out.get(key, 0) + c
    if nv:
        out[key] = nv
    else:
        out.pop(key, None)


class NCForm:
    """Linear combination of basis forms ``a0 da1 ... dan``."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = {}
        if terms:
            u = alg.unit
            for t, c in terms.items():
                if any(k == u for k in t[1:]):
                    continue
                if c:
                    self.terms[tuple(t)] = Fraction(c) if isinstance(c, int) else c

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, alg):
        return cls(alg)

    @classmethod
    def from_elements(cls, alg, a0, *rest):
        """``a0 d(rest[0]) ... d(rest[-1])`` for algebra elements given as dicts."""
        out = {}
        u = alg.unit
        slots = [list(_as_elem(alg, a0).items())] + \
            [[(k, c) for k, c in _as_elem(alg, r).items() if k != u] for r in rest]
        for combo in iproduct(*slots):
            key = tuple(k for k, _ in combo)
            c = Fraction(1)
            for _, v in combo:
                c *= v
            _acc(out, key, c)
        return cls(alg, out)

    @classmethod
    def basis_form(cls, alg, key):
        return cls(alg, {tuple(key): Fraction(1)})

    # arithmetic -----------------------------------------------------------

    def _check(self, other):
        if other.alg != self.alg:
            raise NcalcError("forms over different algebras")

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, NCForm):
            return NotImplemented
        return self.alg == other.alg and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            _acc(out, t, c)
        return NCForm(self.alg, out)

    def __neg__(self):
        return NCForm(self.alg, {t: -c for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, s):
        return NCForm(self.alg, {t: c * s for t, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCForm):
            return form_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    # grading --------------------------------------------------------------

    def degrees(self):
        return sorted({len(t) - 1 for t in self.terms})

    @property
    def degree(self):
        ds = self.degrees()
        if len(ds) > 1:
            raise NcalcError("inhomogeneous form has no single degree")
        return ds[0] if ds else 0

    def weight_of(self, t):
        return sum(self.alg.weight(k) for k in t)

    def pieces(self):
        """Split into homogeneous parts keyed by ``(degree, weight)``."""
        out = {}
        for t, c in self.terms.items():
            out.setdefault((len(t) - 1, self.weight_of(t)), {})[t] = c
        return {k: NCForm(self.alg, v) for k, v in sorted(out.items())}

    def to_str(self):
        if not self.terms:
            return "0"
        alg = self.alg
        parts = []
        for t in sorted(self.terms, key=lambda t: (len(t), [alg.sort_key(k) for k in t])):
            c = self.terms[t]
            fac = [] if t[0] == alg.unit else [alg.key_str(t[0])]
            fac += [f"d({alg.key_str(k)})" for k in t[1:]]
            mono = "*".join(fac)
            if not mono:
                parts.append((c < 0, str(abs(c)) if abs(c).denominator == 1 else f"({abs(c)})"))
            elif abs(c) == 1:
                parts.append((c < 0, mono))
            else:
                a = abs(c)
                parts.append((c < 0, f"{a if a.denominator == 1 else f'({a})'}*{mono}"))
        out = ""
        for i, (neg, text) in enumerate(parts):
            out += (("-" if neg else "") if i == 0 else (" - " if neg else " + ")) + text
        return out

    def __repr__(self):
        return self.to_str()


def _as_elem(alg, x):
    if isinstance(x, FreePoly):
        return dict(x.terms)
    if isinstance(x, dict):
        return x
    if isinstance(x, (int, Fraction)):
        return {alg.unit: Fraction(x)} if x else {}
    return {x: Fraction(1)}


# --------------------------------------------------------------------------
# term-level kernels, memoized per algebra


_right_cache = {}


def _right_mul_term(alg, term, b):
    """``(a0 da1 ... dan) * b`` for a basis key ``b``, as a dict of terms."""
    if b == alg.unit:
        return {term: Fraction(1)}
    cache = _right_cache.setdefault(alg, {})
    key = (term, b)
    hit = cache.get(key)
    if hit is not None:
        return hit
    u = alg.unit
    out = {}
    if len(term) == 1:
        for k, c in alg.mul(term[0], b).items():
            _acc(out, (k,), c)
    else:
        head, an = term[:-1], term[-1]
        for k, c in alg.mul(an, b).items():
            if k != u:
                _acc(out, head + (k,), c)
        for t, c in _right_mul_term(alg, head, an).items():
            _acc(out, t + (b,), -c)
    cache[key] = out
    return out


def _left_mul_elem(alg, a, term):
    out = {}
    for k, c in alg.mul(a, term[0]).items():
        _acc(out, (k,) + term[1:], c)
    return out


def form_mul(alpha, beta):
    """Product in the differential graded algebra of forms."""
    alpha._check(beta)
    alg = alpha.alg
    out = {}
    for t1, c1 in alpha.terms.items():
        for t2, c2 in beta.terms.items():
            for t, c in _right_mul_term(alg, t1, t2[0]).items():
                _acc(out, t + t2[1:], c * c1 * c2)
    return NCForm(alg, out)


def left_mul(a, alpha):
    """``a * alpha`` for an algebra element ``a``."""
    alg = alpha.alg
    out = {}
    for k, x in _as_elem(alg, a).items():
        for t, c in alpha.terms.items():
            for t2, c2 in _left_mul_elem(alg, k, t).items():
                _acc(out, t2, x * c * c2)
    return NCForm(alg, out)


def right_mul(alpha, a):
    alg = alpha.alg
    out = {}
    for k, x in _as_elem(alg, a).items():
        for t, c in alpha.terms.items():
            for t2, c2 in _right_mul_term(alg, t, k).items():
                _acc(out, t2, x * c * c2)
    return NCForm(alg, out)


def de_rham_d(alpha):
    alg = alpha.alg
    u = alg.unit
    return NCForm(alg, {(u,) + t: c for t, c in alpha.terms.items() if t[0] != u})


def hochschild_b(alpha):
    """``b(w da) = (-1)^deg(w) (w a - a w)``."""
    alg = alpha.alg
    out = {}
    for t, c in alpha.terms.items():
        n = len(t) - 1
        if n == 0:
            raise NcalcError("b is not defined on 0-forms")
        head, a = t[:-1], t[-1]
        s = c if (n - 1) % 2 == 0 else -c
        for t2, c2 in _right_mul_term(alg, head, a).items():
            _acc(out, t2, s * c2)
        for t2, c2 in _left_mul_elem(alg, a, head).items():
            _acc(out, t2, -s * c2)
    return NCForm(alg, out)


def karoubi(alpha):
    """``kappa(w da) = (-1)^deg(w) da w``; the identity on 0-forms."""
    alg = alpha.alg
    u = alg.unit
    out = {}
    for t, c in alpha.terms.items():
        n = len(t) - 1
        if n == 0:
            _acc(out, t, c)
            continue
        a, a0, mid = t[-1], t[0], t[1:-1]
        s = c if (n - 1) % 2 == 0 else -c
        for k, c2 in alg.mul(a, a0).items():
            if k != u:
                _acc(out, (u, k) + mid, s * c2)
        if a0 != u:
            _acc(out, (a, a0) + mid, -s)
    return NCForm(alg, out)


# --------------------------------------------------------------------------
# derivations


class Derivation:
    """A derivation of a based algebra, evaluated on basis keys."""

    def __init__(self, alg):
        self.alg = alg
        self._cache = {}

    def on_key(self, k):
        raise NotImplementedError

    def apply(self, x):
        out = {}
        for k, c in _as_elem(self.alg, x).items():
            for k2, c2 in self.on_key(k).items():
                _acc(out, k2, c * c2)
        return out


class FreeDerivation(Derivation):
    """Derivation of a free algebra fixed by generator images."""

    def __init__(self, alg, images):
        super().__init__(alg)
        if len(images) != alg.ngens:
            raise NcalcError("need one image per generator")
        self.images = [_as_elem(alg, f) for f in images]

    def on_key(self, w):
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        out = {}
        for j, g in enumerate(w):
            pre, post = w[:j], w[j + 1:]
            for v, c in self.images[g].items():
                _acc(out, pre + v + post, c)
        self._cache[w] = out
        return out

    def image_polys(self):
        return [FreePoly(im, self.alg.ngens) for im in self.images]


class MatrixDerivation(Derivation):
    """Derivation of a finite-dimensional algebra given by basis images."""

    def __init__(self, alg, images):
        super().__init__(alg)
        self.images = [dict(im) for im in images]
        if self.images[0]:
            raise NcalcError("a derivation must kill the unit")

    def on_key(self, k):
        return self.images[k]

    def validate(self):
        alg = self.alg
        n = len(self.images)
        for i in range(n):
            for j in range(n):
                lhs = self.apply(alg.mul(i, j))
                rhs = alg.mul_elem(self.images[i], {j: Fraction(1)})
                add_into(rhs, alg.mul_elem({i: Fraction(1)}, self.images[j]))
                if lhs != rhs:
                    return Report(False, f"Leibniz fails on ({i},{j})", (i, j))
        return Report(True, "ok")


def euler_derivation(alg):
    """Multiplication by the weight on each homogeneous element."""
    if not isinstance(alg, FreeAlgebra):
        raise NcalcError("the Euler derivation needs a free algebra")
    return FreeDerivation(alg, [{(i,): Fraction(1)} for i in range(alg.ngens)])


def derivation_bracket(theta, gamma):
    """``[theta, gamma] = theta gamma - gamma theta``."""
    alg = theta.alg
    if isinstance(alg, FreeAlgebra):
        imgs = []
        for g in range(alg.ngens):
            v = theta.apply(gamma.on_key((g,)))
            add_into(v, gamma.apply(theta.on_key((g,))), -1)
            imgs.append(v)
        return FreeDerivation(alg, imgs)
    imgs = []
    for k in range(len(theta.images)):
        v = theta.apply(gamma.on_key(k))
        add_into(v, gamma.apply(theta.on_key(k)), -1)
        imgs.append(v)
    return MatrixDerivation(alg, imgs)


def contraction_i(theta, alpha):
    """``i_theta(a0 da1..dan) = sum_j (-1)^(j-1) a0 da1..theta(a_j)..dan``."""
    alg = alpha.alg
    out = {}
    for t, c in alpha.terms.items():
        for j in range(1, len(t)):
            s = c if (j - 1) % 2 == 0 else -c
            pre, post = t[:j], t[j + 1:]
            for k, c2 in theta.on_key(t[j]).items():
                for t2, c3 in _right_mul_term(alg, pre, k).items():
                    _acc(out, t2 + post, s * c2 * c3)
    return NCForm(alg, out)


def lie_derivative_explicit(theta, alpha):
    """Termwise formula: theta applied to each slot, through d in slots 1..n."""
    alg = alpha.alg
    u = alg.unit
    out = {}
    for t, c in alpha.terms.items():
        for j in range(len(t)):
            for k, c2 in theta.on_key(t[j]).items():
                if j > 0 and k == u:
                    continue
                _acc(out, t[:j] + (k,) + t[j + 1:], c * c2)
    return NCForm(alg, out)


def lie_derivative(theta, alpha):
    """``L_theta``; computed both termwise and as ``d i + i d`` and compared."""
    explicit = lie_derivative_explicit(theta, alpha)
    cartan = de_rham_d(contraction_i(theta, alpha)) + contraction_i(theta, de_rham_d(alpha))
    if explicit != cartan:
        raise NcalcError("Cartan formula failed: termwise and d i + i d disagree")
    return explicit


# --------------------------------------------------------------------------
# graded pieces and the de Rham quotient


def _weight_splits(alg, n, w):
    """Weights ``(w0, .., wn)`` summing to ``w`` with nonempty complement slots."""
    if not alg.graded:
        if w == 0:
            yield (0,) * (n + 1)
        return
    if n == 0:
        yield (w,)
        return
    for w0 in range(0, w + 1):
        for rest in _tail_splits(n, w - w0):
            yield (w0,) + rest


def _tail_splits(n, w):
    if n == 0:
        if w == 0:
            yield ()
        return
    for x in range(1, w - n + 2):
        for rest in _tail_splits(n - 1, w - x):
            yield (x,) + rest


def piece_basis(alg, n, w):
    """Deterministic basis of the ``(n, w)`` piece of the forms."""
    out = []
    for ws in _weight_splits(alg, n, w):
        slots = [alg.basis(ws[0])] + [alg.complement(x) for x in ws[1:]]
        size = 1
        for s in slots:
            size *= len(s)
        check_dim(len(out) + size, f"forms piece (degree {n}, weight {w})")
        out.extend(tuple(c) for c in iproduct(*slots))
    return out


class DRPiece:
    """The ``(n, w)`` piece of the forms with the graded-commutator span."""

    def __init__(self, alg, n, w):
        self.alg, self.n, self.w = alg, n, w
        self.basis = piece_basis(alg, n, w)
        self.index = {t: i for i, t in enumerate(self.basis)}
        self.commutators = Echelon()
        for g in alg.generators():
            gw = alg.weight(g)
            if w - gw < 0:
                continue
            gform = NCForm.basis_form(alg, (g,))
            for t in piece_basis(alg, n, w - gw):
                om = NCForm.basis_form(alg, t)
                self.commutators.add(self.vector(form_mul(gform, om) - form_mul(om, gform)))
            if n >= 1:
                dg = NCForm.basis_form(alg, (alg.unit, g))
                sign = -1 if (n - 1) % 2 == 0 else 1
                for t in piece_basis(alg, n - 1, w - gw):
                    om = NCForm.basis_form(alg, t)
                    self.commutators.add(
                        self.vector(form_mul(dg, om) + form_mul(om, dg).scale(sign)))

    @property
    def dim(self):
        return len(self.basis) - self.commutators.rank

    def vector(self, form):
        out = {}
        for t, c in form.terms.items():
            i = self.index.get(t)
            if i is None:
                raise NcalcError(f"term {t} is outside piece ({self.n}, {self.w})")
            out[i] = c
        return out

    def form(self, vec):
        return NCForm(self.alg, {self.basis[i]: c for i, c in vec.items()})

    def reduce(self, form):
        return self.form(self.commutators.reduce(self.vector(form)))

    def quotient_basis(self):
        """Basis forms whose classes span the quotient (the non-pivot columns)."""
        piv = self.commutators.pivots
        return [self.basis[i] for i in range(len(self.basis)) if i not in piv]


_piece_cache = {}


def dr_piece(alg, n, w):
    key = (alg, n, w)
    hit = _piece_cache.get(key)
    if hit is None:
        hit = DRPiece(alg, n, w)
        _piece_cache[key] = hit
    return hit


def clear_caches():
    _piece_cache.clear()
    _right_cache.clear()


def dr_reduce(alpha):
    """Canonical representative of the de Rham class of ``alpha``."""
    out = NCForm.zero(alpha.alg)
    for (n, w), part in alpha.pieces().items():
        out = out + dr_piece(alpha.alg, n, w).reduce(part)
    return out


class DRClass:
    """Class of a form modulo graded commutators, with a canonical representative."""

    def __init__(self, form):
        self.alg = form.alg
        self.representative = dr_reduce(form)

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.representative
        return isinstance(other, DRClass) and self.representative == other.representative

    def __hash__(self):
        return hash(self.representative)

    def __bool__(self):
        return bool(self.representative)

    def __add__(self, other):
        return DRClass(self.representative + other.representative)

    def __sub__(self, other):
        return DRClass(self.representative - other.representative)

    def scale(self, s):
        return DRClass(self.representative.scale(s))

    def d(self):
        return DRClass(de_rham_d(self.representative))

    def __repr__(self):
        return f"[DR] {self.representative.to_str()}"


def dr_project(alpha):
    return DRClass(alpha)


def dr_cohomology(alg, max_degree, max_weight=0, reduced=True):
    """De Rham cohomology dimensions per degree, summed over weights.

    With ``reduced`` the constants are removed from degree 0, weight 0.
    Returns ``(totals, table)``; ``table[(n, w)]`` holds the piece dimension,
    the rank of ``d`` leaving it, the cohomology dimension and a list of
    representative closed forms.
    """
    table = {}
    totals = [0] * (max_degree + 1)
    for w in alg.weights_upto(max_weight):
        dmats = {}
        pieces = {n: dr_piece(alg, n, w) for n in range(max_degree + 2)}
        for n in range(0, max_degree + 1):
            P, Q = pieces[n], pieces[n + 1]
            qb = P.quotient_basis()
            if reduced and n == 0 and w == 0:
                qb = [t for t in qb if t != (alg.unit,)]
            cols = [Q.commutators.reduce(Q.vector(de_rham_d(NCForm.basis_form(alg, t))))
                    for t in qb]
            dmats[n] = (qb, cols)
        for n in range(max_degree + 1):
            qb, cols = dmats[n]
            P = pieces[n]
            exact = Echelon()
            if reduced and n == 0 and w == 0:
                exact.add(P.vector(NCForm.basis_form(alg, (alg.unit,))))
            if n > 0:
                for c in dmats[n - 1][1]:
                    exact.add(c)
            reps = []
            for z in kernel(cols):
                vec = {}
                for j, c in z.items():
                    add_into(vec, P.vector(NCForm.basis_form(alg, qb[j])), c)
                vec = P.commutators.reduce(vec)
                if exact.add(vec) is not None:
                    reps.append(P.form(vec))
            table[(n, w)] = {"dim": len(qb), "rank_d": len(cols) - len(kernel(cols)),
                             "h": len(reps), "representatives": reps}
            totals[n] += len(reps)
    return totals, table


def poincare_primitive(omega):
    """Primitive ``i_eu(omega) / w`` of a closed class of weight ``w >= 1``."""
    rep = omega.representative if isinstance(omega, DRClass) else omega
    alg = rep.alg
    if not isinstance(alg, FreeAlgebra):
        raise NcalcError("the Poincare homotopy needs a free algebra")
    pieces = rep.pieces()
    if len(pieces) > 1:
        raise NcalcError("input must be homogeneous")
    if not pieces:
        return DRClass(NCForm.zero(alg))
    (n, w), _ = next(iter(pieces.items()))
    if w == 0:
        raise NcalcError("weight 0 classes have no primitive")
    if dr_reduce(de_rham_d(rep)):
        raise NcalcError("form is not closed in the de Rham quotient")
    eta = contraction_i(euler_derivation(alg), rep).scale(Fraction(1, w))
    return DRClass(eta)


def quillen_maps(alg, max_weight):
    """Rank bookkeeping for ``0 -> DR0bar -d-> DR1 -b-> Abar -pr-> DR0bar -> 0``."""
    if not isinstance(alg, FreeAlgebra):
        raise NcalcError("Quillen's sequence check is implemented for free algebras")
    report = {}
    for w in range(max_weight + 1):
        if w == 0:
            report[w] = {"dr0": 0, "dr1": 0, "abar": 0, "rank_d": 0, "rank_b": 0,
                         "rank_pr": 0, "exact": True, "commutator_dim": 0}
            continue
        P0, P1 = dr_piece(alg, 0, w), dr_piece(alg, 1, w)
        abar = alg.basis(w)
        aidx = {k: i for i, k in enumerate(abar)}
        ech_d = Echelon()
        for t in P0.quotient_basis():
            ech_d.add(P1.commutators.reduce(P1.vector(de_rham_d(NCForm.basis_form(alg, t)))))
        ech_b = Echelon()
        for t in P1.basis:
            img = hochschild_b(NCForm.basis_form(alg, t))
            ech_b.add({aidx[s[0]]: c for s, c in img.terms.items()})
        ech_pr = Echelon()
        for k in abar:
            ech_pr.add(P0.commutators.reduce(P0.vector(NCForm.basis_form(alg, (k,)))))
        r = {"dr0": P0.dim, "dr1": P1.dim, "abar": len(abar), "rank_d": ech_d.rank,
             "rank_b": ech_b.rank, "rank_pr": ech_pr.rank,
             "commutator_dim": P0.commutators.rank}
        r["exact_at_dr0"] = r["rank_d"] == r["dr0"]
        r["exact_at_dr1"] = r["dr1"] - r["rank_b"] == r["rank_d"]
        r["exact_at_abar"] = r["abar"] - r["rank_pr"] == r["rank_b"]
        r["exact_at_end"] = r["rank_pr"] == r["dr0"]
        r["image_b_is_commutators"] = r["rank_b"] == r["commutator_dim"]
        r["exact"] = all(r[k] for k in ("exact_at_dr0", "exact_at_dr1", "exact_at_abar",
                                        "exact_at_end", "image_b_is_commutators"))
        report[w] = r
    return report


# --------------------------------------------------------------------------
# the universal square-zero extension


def square_zero_product(p1, p2):
    """``(a, w) (a', w') = (a a', a w' + w a' + da da')`` on ``A + Omega^2``."""
    (a, om), (a2, om2) = p1, p2
    alg = om.alg
    for f in (om, om2):
        if f and f.degrees() != [2]:
            raise NcalcError("second components must be 2-forms")
    prod = alg.mul_elem(_as_elem(alg, a), _as_elem(alg, a2))
    form = left_mul(a, om2) + right_mul(om, a2) + NCForm.from_elements(alg, {alg.unit: 1}, a, a2)
    return prod, form


# --------------------------------------------------------------------------
# reduced cocycles as bimodule maps


def cocycle_to_polyvector(alg, p, cochain):
    """Extend a reduced ``p``-cochain ``c`` to ``a0 da1..dap -> a0 c(a1..ap)``.

    ``cochain`` maps ``p``-tuples of complement basis indices to elements.
    Returns ``(True, matrix)`` when the extension is a bimodule map, else
    ``(False, defect)`` with the first tuple where the coboundary is nonzero.
    """
    if not isinstance(alg, FinDimAlgebra):
        raise NcalcError("polyvector extension is implemented for finite-dimensional algebras")
    for args in cochain:
        if any(a == alg.unit for a in args):
            if cochain[args]:
                raise NcalcError("cochain is not reduced: nonzero on a unit argument")

    def c_at(args):
        if any(a == alg.unit for a in args):
            return {}
        return cochain.get(tuple(args), {})

    def phi(form):
        out = {}
        for t, coef in form.terms.items():
            for k, v in alg.mul_elem({t[0]: Fraction(1)}, c_at(t[1:])).items():
                _acc(out, k, coef * v)
        return out

    basis = piece_basis(alg, p, 0)
    matrix = {t: phi(NCForm.basis_form(alg, t)) for t in basis}
    for t in basis:
        om = NCForm.basis_form(alg, t)
        for a in alg.basis(0):
            lhs = phi(right_mul(om, {a: Fraction(1)}))
            rhs = alg.mul_elem(matrix[t], {a: Fraction(1)})
            if lhs != rhs:
                return False, _first_defect(alg, p, c_at)
    return True, matrix


def _first_defect(alg, p, c_at):
    keys = alg.basis(0)
    for args in iproduct(keys, repeat=p + 1):
        val = alg.mul_elem({args[0]: Fraction(1)}, c_at(args[1:]))
        for i in range(p):
            merged = alg.mul(args[i], args[i + 1])
            s = -1 if (i + 1) % 2 else 1
            for k, c in merged.items():
                add_into(val, c_at(args[:i] + (k,) + args[i + 2:]), s * c)
        add_into(val, alg.mul_elem(c_at(args[:p]), {args[p]: Fraction(1)}),
                 -1 if (p + 1) % 2 else 1)
        if val:
            return {"arguments": args, "value": val}
    return None
