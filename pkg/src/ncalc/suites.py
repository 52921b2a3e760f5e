"""Seeded identity suites behind ``ncalc verify``.

Every check draws its inputs from a ``random.Random`` seeded from the suite
seed and the check name, so a failure is reproducible from the report alone.
A check returns ``None`` on success or a short description of the failing
input.
"""

from dataclasses import dataclass, field
from fractions import Fraction
import random
import time
import zlib

from . import chernweil as cw
from . import cyclic as cy
from . import forms as fm
from . import hochschild as hh
from . import ktheory as kt
from . import rep as rp
from . import star as st
from .core import (DualScalar, FreeAlgebra, FreePoly, TPoly, cyclic_group_algebra, dual_numbers,
                   ground_field, idempotent_algebra, matrix_algebra, product_field, sl2,
                   structure_validate, truncated_poly, upper_triangular, heisenberg3, lie_validate)
from .errors import NcalcError

CAPS = {"small": 5, "default": 20, "full": 100}


# --------------------------------------------------------------------------
# random inputs


def random_free_poly(rng, ngens, max_weight, nterms=4, min_weight=0):
    terms = {}
    for _ in range(nterms):
        w = rng.randint(min_weight, max_weight)
        terms[tuple(rng.randrange(ngens) for _ in range(w))] = rng.randint(-3, 3)
    return FreePoly(terms, ngens)


def random_form(rng, alg, n, max_weight, nterms=3):
    """Random ``n``-form over a free algebra with terms of weight ``n..max_weight``."""
    out = fm.NCForm.zero(alg)
    for _ in range(nterms):
        w = rng.randint(n, max(n, max_weight))
        basis = fm.piece_basis(alg, n, w)
        if basis:
            out = out + fm.NCForm.basis_form(alg, rng.choice(basis)).scale(rng.randint(-3, 3))
    return out


def random_derivation(rng, alg, max_weight=2):
    return fm.FreeDerivation(alg, [random_free_poly(rng, alg.ngens, max_weight, nterms=2)
                                   for _ in range(alg.ngens)])


def random_necklace(rng, ngens, max_weight, nterms=3):
    return cy.project_cyclic(random_free_poly(rng, ngens, max_weight, nterms, min_weight=1))


def random_phase(rng, n, max_degree, nterms=3):
    out = st.PhasePoly.const(0, n)
    for _ in range(nterms):
        m = st.PhasePoly.const(rng.randint(-3, 3), n)
        for _ in range(rng.randint(0, max_degree)):
            i = rng.randrange(n)
            m = m * (st.PhasePoly.x(i, n) if rng.random() < 0.5 else st.PhasePoly.y(i, n))
        out = out + m
    return out


def random_super_cyclic(rng, n, degree, nterms=3):
    return cw.project_super_cyclic(cw.random_graded(n, degree, rng, nterms))


def random_idempotent(rng, A, base):
    """Conjugate of the idempotent matrix ``base`` by a random elementary product."""
    g = kt.random_invertible(A, base.size, rng)
    return kt.IdempotentMatrix(A, (g * base * g.inverse).rows)


# --------------------------------------------------------------------------
# report types


@dataclass
class CheckResult:
    name: str
    status: str
    counterexample: object = None
    seconds: float = 0.0

    def to_json(self):
        return {"name": self.name, "status": self.status,
                "counterexample": self.counterexample, "seconds": round(self.seconds, 4)}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    results: list = field(default_factory=list)

    @property
    def ok(self):
        return all(r.status == "pass" for r in self.results)

    def to_json(self):
        return {"suite": self.suite, "seed": self.seed, "ok": self.ok,
                "checks": [r.to_json() for r in self.results]}

    def to_text(self):
        lines = []
        for r in self.results:
            line = f"{r.status.upper():5} {r.name} ({r.seconds:.2f}s)"
            if r.counterexample is not None:
                line += f"  counterexample: {r.counterexample}"
            lines.append(line)
        lines.append(f"{sum(r.status == 'pass' for r in self.results)}/{len(self.results)} checks passed")
        return "\n".join(lines)


def _trials(trials, make, test):
    """Run ``test`` on ``trials`` inputs from ``make``; describe the first failure."""
    for _ in range(trials):
        args = make()
        if not test(*args):
            return " | ".join(a.to_str() if hasattr(a, "to_str") else repr(a) for a in args)
    return None


def _expect(value, expected, what):
    return None if value == expected else f"{what}: got {value}, expected {expected}"


# --------------------------------------------------------------------------
# checks


def _core_ring(rng, n):
    mk = lambda: tuple(random_free_poly(rng, 2, 3) for _ in range(3))
    return _trials(n, mk, lambda a, b, c: (a * b) * c == a * (b * c)
                   and a * (b + c) == a * b + a * c and (a + b) * c == a * c + b * c)


def _core_structure(rng, n):
    for name, A in [("k", ground_field()), ("kxk", product_field(2)), ("k[x]/x^2", truncated_poly(2)),
                    ("k[e]/(e^2-e)", idempotent_algebra()), ("Mat2", matrix_algebra(2)),
                    ("UT2", upper_triangular(2)), ("k[Z/3]", cyclic_group_algebra(3))]:
        if not structure_validate(A):
            return name
    for name, g in [("sl2", sl2()), ("heis3", heisenberg3())]:
        if not lie_validate(g):
            return name
    return None


def _core_scalars(rng, n):
    r = lambda: Fraction(rng.randint(-5, 5), rng.randint(1, 4))
    for _ in range(n):
        a, b, c, d = r(), r(), r(), r()
        if DualScalar(a, b) * DualScalar(c, d) != DualScalar(a * c, a * d + b * c):
            return f"dual {a},{b},{c},{d}"
        p = TPoly({0: a, 1: b})
        q = TPoly({0: c, 2: d})
        if (p * q).at_zero() != p.at_zero() * q.at_zero():
            return f"tpoly {p} {q}"
    return None


_FREE2 = FreeAlgebra(2)


def _forms(rng, n, degree_max=3, weight=4):
    def mk():
        k = rng.randint(0, degree_max)
        return (random_form(rng, _FREE2, k, weight),)
    return mk


def _karoubi_identities(a):
    d, k = fm.de_rham_d, fm.karoubi
    n = a.degree
    zero = fm.NCForm.zero(a.alg)
    b = lambda x: fm.hochschild_b(x) if x.degree > 0 else zero

    def kpow(x, m):
        for _ in range(m):
            x = k(x)
        return x
    ok = d(d(a)) == zero
    ok = ok and d(b(a)) + b(d(a)) == a - k(a)
    ok = ok and kpow(a, n + 1) == a - d(b(a))
    ok = ok and kpow(d(a), n + 1) == d(a)
    u = kpow(a, n + 1) - a
    ok = ok and kpow(u, n) - u == zero
    return ok and b(b(a)) == zero


def _karoubi(rng, n):
    return _trials(n, _forms(rng, n), _karoubi_identities)


def _cartan_identities(th, ga, a):
    i, L, d = fm.contraction_i, fm.lie_derivative, fm.de_rham_d
    br = fm.derivation_bracket(th, ga)
    return (L(th, a) == d(i(th, a)) + i(th, d(a))
            and L(th, L(ga, a)) - L(ga, L(th, a)) == L(br, a)
            and L(th, i(ga, a)) - i(ga, L(th, a)) == i(br, a)
            and i(th, i(th, a)) == fm.NCForm.zero(a.alg))


def _cartan(rng, n):
    mk = lambda: (random_derivation(rng, _FREE2), random_derivation(rng, _FREE2),
                  random_form(rng, _FREE2, rng.randint(0, 2), 3))
    return _trials(n, mk, _cartan_identities)


def _d_derivation(rng, n):
    def test(a, b):
        s = 1 if a.degree % 2 == 0 else -1
        d = fm.de_rham_d
        return d(fm.form_mul(a, b)) == fm.form_mul(d(a), b) + fm.form_mul(a, d(b)).scale(s)
    mk = lambda: (random_form(rng, _FREE2, rng.randint(0, 2), 3),
                  random_form(rng, _FREE2, rng.randint(0, 2), 3))
    return _trials(n, mk, test)


def _dr_idempotent(rng, n):
    from .core import FinDimAlgebra
    return _expect(fm.dr_cohomology(FinDimAlgebra(idempotent_algebra()), 4)[0], [1, 0, 1, 0, 1],
                   "DR dims of k[e]/(e^2-e)")


def _dr_free(rng, n):
    dims = fm.dr_cohomology(_FREE2, 3, max_weight=3)[0]
    return _expect(dims[1:], [0, 0, 0], "positive-degree DR of k<x,y>")


def _poincare(rng, n):
    def mk():
        k = rng.randint(0, 2)
        return (fm.DRClass(fm.de_rham_d(random_form(rng, _FREE2, k, 3, nterms=1))),)

    def test(om):
        if not om.representative:
            return True
        return fm.poincare_primitive(om).d() == om
    return _trials(n, mk, test)


def _quillen(rng, n):
    for g, wmax in ((1, 5), (2, 5)):
        rep = fm.quillen_maps(FreeAlgebra(g), wmax)
        bad = [w for w, r in rep.items() if not r["exact"]]
        if bad:
            return f"{g} generators, weights {bad}"
    return None


_LAYOUT = cy.SymplecticLayout(1)


def _necklace_jacobi(rng, n):
    br = lambda f, g: cy.necklace_bracket(f, g, _LAYOUT)
    mk = lambda: tuple(random_necklace(rng, 2, 4) for _ in range(3))
    return _trials(n, mk, lambda f, g, h: br(f, g) == -br(g, f)
                   and br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)) == 0)


def _necklace_hamiltonian(rng, n):
    ham = lambda f: cy.hamiltonian_field(f, _LAYOUT)
    mk = lambda: tuple(random_necklace(rng, 2, 4) for _ in range(2))
    return _trials(n, mk, lambda f, g: ham(cy.necklace_bracket(f, g, _LAYOUT))
                   == cy.derivation_commutator(ham(f), ham(g)))


def _hochschild_dims(rng, n):
    A = truncated_poly(2)
    return (_expect(hh.hh_homology(A, max_degree=4).dims, [2, 1, 1, 1, 1], "HH_*(k[x]/x^2)")
            or _expect(hh.hh_cohomology(A, max_degree=1).dims, [2, 1], "HH^0,1(k[x]/x^2)")
            or _expect(hh.hh_homology(matrix_algebra(2), max_degree=3).dims, [1, 0, 0, 0], "HH_*(Mat2)")
            or _expect(hh.hh_homology(product_field(2), max_degree=3).dims, [2, 0, 0, 0], "HH_*(kxk)"))


def _morita(rng, n):
    r = hh.morita_trace_check(truncated_poly(2), 2)
    return None if r["invertible"] else "trace map on HH_0 is not an isomorphism"


def _smoothness(rng, n):
    for name, A, want in [("kxk", product_field(2), True), ("Mat2", matrix_algebra(2), True),
                          ("UT2", upper_triangular(2), True), ("k[x]/x^2", truncated_poly(2), False)]:
        if hh.formal_smoothness_check(A)["smooth"] != want:
            return name
    return None


_SMALL = [("k[e]/(e^2-e)", idempotent_algebra()), ("k[x]/x^2", truncated_poly(2))]


def _g_cup(rng, n):
    def mk():
        _, A = rng.choice(_SMALL)
        return hh.Cochain.random(A, rng.randint(0, 2), rng), hh.Cochain.random(A, rng.randint(0, 2), rng)

    def test(f, g):
        lhs, rhs = hh.g_cup_sides(f, g)
        l2, r2 = hh.bracket_compatibility_sides(f, g)
        return lhs == rhs and l2 == r2
    return _trials(n, mk, test)


def _lie_m(rng, n):
    def mk():
        _, A = rng.choice(_SMALL)
        return (hh.Chain.random(A, rng.randint(0, 3), rng),)

    def test(ch):
        m = hh.Cochain.multiplication(ch.A)
        return ch.k == 0 or hh.chain_lie(m, ch) == hh.chain_d(ch)
    return _trials(n, mk, test)


def _contraction_cup(rng, n):
    def mk():
        _, A = rng.choice(_SMALL)
        p, q = rng.randint(0, 2), rng.randint(0, 2)
        return (hh.Cochain.random(A, p, rng), hh.Cochain.random(A, q, rng),
                hh.Chain.random(A, p + q + rng.randint(0, 1), rng))
    return _trials(n, mk, lambda c, c2, ch: hh.chain_contraction(c2, hh.chain_contraction(c, ch))
                   == hh.chain_contraction(hh.cup(c, c2), ch))


def _hkr(rng, n):
    from .core import PolynomialAlgebra
    alg = PolynomialAlgebra(2)
    for w in range(1, 4):
        dims = hh.graded_hh(alg, w, 2).dims
        if dims[1] != hh.hkr_dimension(2, 1, w):
            return f"weight {w}: HH_1 = {dims[1]}"
    return None


def _moyal_assoc(rng, n):
    s = st.moyal_star
    mk = lambda: tuple(random_phase(rng, 1, 3) for _ in range(3))
    return _trials(n, mk, lambda f, g, h: s(s(f, g), h) == s(f, s(g, h)))


def _moyal_relations(rng, n):
    x, y, t = st.PhasePoly.x(0, 1), st.PhasePoly.y(0, 1), st.PhasePoly.t(1)
    if st.moyal_star(x, y) - st.moyal_star(y, x) != t:
        return "x*y - y*x != t"
    mk = lambda: tuple(random_phase(rng, 1, 3) for _ in range(2))
    return _trials(n, mk, lambda f, g: st.pbw_symmetrize(st.moyal_star(f, g))
                   == st.weyl_mul(st.pbw_symmetrize(f), st.pbw_symmetrize(g))
                   and st.poisson_leading_term(st.moyal_star, f, g) == st.poisson_bracket(f, g))


def _rep_mult(rng, n):
    mk = lambda: tuple(random_free_poly(rng, 2, 2) for _ in range(2))
    return _trials(n, mk, lambda a, b: rp.rep_evaluate(a * b, 2) == rp.rep_evaluate(a, 2) * rp.rep_evaluate(b, 2)
                   and not rp.trace_function(a * b - b * a, 2))


def _rep_fields(rng, n):
    mk = lambda: tuple([random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)] for _ in range(2))
    V = lambda im: rp.derivation_to_vector_field(im, 2)
    return _trials(max(1, n // 2), mk, lambda a, b: rp.field_bracket(V(a), V(b))
                   == V(cy.derivation_commutator(a, b)))


def _rep_chain_rule(rng, n):
    mk = lambda: tuple([random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)] for _ in range(2))

    def test(G, F):
        DG, DF = rp.jacobi_matrix(G), rp.jacobi_matrix(F)
        return rp.jacobi_matrix(rp.compose(G, F)) == rp.jacobi_compose(DG, DF, G)
    return _trials(max(1, n // 2), mk, test)


def _rep_differential(rng, n):
    mk = lambda: ([random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)],)
    return _trials(max(1, n // 4), mk, lambda F: rp.jacobi_differential_check(F, 2)["ok"])


def _gs_characters(rng, n):
    for m in (1, 2):
        if not cw.gs_chern_report(3, m)["ok"]:
            return f"character report for {m} pairs"
    return None


def _gs_bracket(rng, n):
    def mk():
        m = rng.randint(1, 2)
        return tuple(random_super_cyclic(rng, m, rng.randint(1, 3)) for _ in range(3))

    def test(P, Q, R):
        if P.n != Q.n or Q.n != R.n:
            return True
        b = cw.gs_bracket
        deg = lambda u: u.degrees()[0] if u.degrees() else 0
        sgn = lambda u, v: (-1) ** ((deg(u) + 1) * (deg(v) + 1))
        jac = b(P, b(Q, R)) - b(b(P, Q), R) - b(Q, b(P, R)).scale(sgn(P, Q))
        return (b(cw.gs_casimir(P.n), P) == cw.gs_d(P).scale(2) and not jac
                and b(P, Q) == b(Q, P).scale(-sgn(P, Q)))
    return _trials(n, mk, test)


def _wnc(rng, n):
    for name, A in [("k", ground_field()), ("kxk", product_field(2))]:
        if cw.wnc_cohomology(A, 4) != [1, 0, 0, 0, 0]:
            return name
    return None


def _weil(rng, n):
    g = sl2()
    if cw.weil_cohomology(g, 4) != [1, 0, 0, 0, 0]:
        return "sl2 Weil cohomology"

    def mk():
        return rng.randrange(g.dim), cw.random_weil(g, rng.randint(0, 4), rng)

    def test(x, u):
        return not cw.weil_d(cw.weil_d(u, g), g) and cw.weil_cartan(x, u, g)["ok"]
    return _trials(n, mk, test)


_IDEM = idempotent_algebra()
_E = kt.IdempotentMatrix(_IDEM, [[{1: 1}]])


def _kt_identities(rng, n):
    base = _E.direct_sum(kt.AlgMatrix.identity(_IDEM, 1))
    base = kt.IdempotentMatrix(_IDEM, base.rows)

    def mk():
        return (random_idempotent(rng, _IDEM, base),)

    def test(e):
        return (kt.idempotent_identities(e) and kt.chern_c0(e).certified
                and all(kt.chern_ch(e, k).certified for k in (1, 2))
                and kt.chern_c0(e).cls == kt.chern_c0(base).cls
                and kt.chern_ch(e, 1).cls == kt.chern_ch(base, 1).cls)
    return _trials(max(1, n // 2), mk, test)


def _kt_curvature(rng, n):
    conn = kt.grassmann_connection(_E)
    if kt.connection_curvature(conn, 1) != kt.chern_ch(_E, 1).cls:
        return "Tr(R) != ch_1 for k[e]/(e^2-e)"
    G = cyclic_group_algebra(3)
    g = kt.InvertibleMatrix(G, [[{1: 1}]])
    if not kt.chern_c1(g).certified:
        return "b(c_1) != 0 for the generator of k[Z/3]"
    return None


SUITES = {
    "core": {"ring-axioms": _core_ring, "structure-validate": _core_structure, "scalars": _core_scalars},
    "karoubi": {"karoubi-identities": _karoubi},
    "cartan": {"cartan-identities": _cartan, "d-derivation": _d_derivation},
    "drham": {"dr-idempotent": _dr_idempotent, "dr-free-flat": _dr_free, "poincare": _poincare,
              "quillen": _quillen},
    "necklace-jacobi": {"necklace-lie": _necklace_jacobi, "hamiltonian-homomorphism": _necklace_hamiltonian},
    "hochschild": {"hh-dims": _hochschild_dims, "morita": _morita, "smoothness": _smoothness,
                   "hkr": _hkr},
    "gerstenhaber": {"g-cup-and-compatibility": _g_cup, "lie-of-m": _lie_m,
                     "contraction-cup": _contraction_cup},
    "moyal": {"associativity": _moyal_assoc, "weyl-and-poisson": _moyal_relations},
    "rep": {"multiplicative-trace": _rep_mult, "vector-fields": _rep_fields,
            "chain-rule": _rep_chain_rule, "differential": _rep_differential},
    "gelfand-smirnov": {"characters": _gs_characters, "bracket": _gs_bracket, "wnc-poincare": _wnc},
    "weil": {"commutative-weil": _weil},
    "k-theory": {"idempotents": _kt_identities, "curvature": _kt_curvature},
}


def suite_names():
    return sorted(SUITES)


def _seeded(seed, name):
    return random.Random(seed * 1_000_003 + zlib.crc32(name.encode()))


def run_suite(name="all", seed=0, caps="default"):
    """Run one suite (or ``all``); results are sorted by check name."""
    if caps not in CAPS:
        raise NcalcError(f"unknown caps {caps!r}; choose from {sorted(CAPS)}")
    if name != "all" and name not in SUITES:
        raise NcalcError(f"unknown suite {name!r}; choose from {suite_names()} or 'all'")
    trials = CAPS[caps]
    chosen = suite_names() if name == "all" else [name]
    report = SuiteReport(name, seed)
    for sname in chosen:
        for cname, fn in SUITES[sname].items():
            full = f"{sname}/{cname}"
            t0 = time.perf_counter()
            try:
                bad = fn(_seeded(seed, full), trials)
                status = "pass" if bad is None else "fail"
            except NcalcError as exc:
                status, bad = "error", f"{type(exc).__name__}: {exc}"
            report.results.append(CheckResult(full, status, bad, time.perf_counter() - t0))
    report.results.sort(key=lambda r: r.name)
    return report
