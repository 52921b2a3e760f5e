"""The fifteen acceptance criteria, each at exact equality.

Every test carries ``@criterion(n)``; the hook in conftest.py prints one
PASS/FAIL line per criterion after the run.  Two literal subparts are known
to be false as stated and are marked ``xfail(strict=True)`` next to the
corrected statement that is asserted.
"""

import random
import time
from fractions import Fraction

import pytest

from ncalc import chernweil as cw
from ncalc import cyclic as cy
from ncalc import forms as fm
from ncalc import hochschild as hh
from ncalc import ktheory as kt
from ncalc import rep as rp
from ncalc import star as S
from ncalc.core import (FinDimAlgebra, FreeAlgebra, PolynomialAlgebra, ground_field, idempotent_algebra,
                        matrix_algebra, product_field, sl2, truncated_poly, upper_triangular)
from ncalc.suites import (random_derivation, random_form, random_free_poly, random_idempotent,
                          random_necklace, random_phase, random_super_cyclic)

criterion = pytest.mark.criterion
FREE2 = FreeAlgebra(2)


def rng_for(n):
    return random.Random(1000 + n)


@criterion(1)
def test_criterion_01_dr_idempotent():
    fm.clear_caches()
    t0 = time.perf_counter()
    dims, _ = fm.dr_cohomology(FinDimAlgebra(idempotent_algebra()), 4)
    assert dims == [1, 0, 1, 0, 1]
    assert time.perf_counter() - t0 < 5


@criterion(2)
def test_criterion_02_karoubi():
    rng = rng_for(2)
    d, k = fm.de_rham_d, fm.karoubi
    zero = fm.NCForm.zero(FREE2)
    b = lambda x: fm.hochschild_b(x) if x.degree > 0 else zero

    def kp(x, m):
        for _ in range(m):
            x = k(x)
        return x

    t0 = time.perf_counter()
    for trial in range(200):
        n = trial % 4
        a = random_form(rng, FREE2, n, 4)
        assert d(b(a)) + b(d(a)) == a - k(a)
        assert kp(a, n + 1) == a - d(b(a))
        assert kp(d(a), n + 1) == d(a)
        u = kp(a, n + 1) - a
        assert kp(u, n) == u
    assert time.perf_counter() - t0 < 30


@criterion(3)
def test_criterion_03_cartan():
    rng = rng_for(3)
    i, L, d = fm.contraction_i, fm.lie_derivative, fm.de_rham_d
    for _ in range(100):
        th, ga = random_derivation(rng, FREE2), random_derivation(rng, FREE2)
        a = random_form(rng, FREE2, rng.randint(0, 2), 4)
        br = fm.derivation_bracket(th, ga)
        assert fm.lie_derivative_explicit(th, a) == d(i(th, a)) + i(th, d(a))
        assert L(th, L(ga, a)) - L(ga, L(th, a)) == L(br, a)
        assert L(th, i(ga, a)) - i(ga, L(th, a)) == i(br, a)
        assert not i(th, i(th, a))
        assert i(th, i(ga, a)) == -i(ga, i(th, a))


@criterion(4)
def test_criterion_04_necklace():
    rng = rng_for(4)
    layout = cy.SymplecticLayout(1)
    br = lambda f, g: cy.necklace_bracket(f, g, layout)
    for _ in range(100):
        f, g, h = (random_necklace(rng, 2, 6) for _ in range(3))
        assert br(f, g) == -br(g, f)
        assert not (br(f, br(g, h)) + br(g, br(h, f)) + br(h, br(f, g)))
    ham = lambda f: cy.hamiltonian_field(f, layout)
    for _ in range(50):
        f, g = random_necklace(rng, 2, 5), random_necklace(rng, 2, 5)
        assert ham(br(f, g)) == cy.derivation_commutator(ham(f), ham(g))


@criterion(5)
def test_criterion_05_quillen():
    for g in (1, 2):
        rep = fm.quillen_maps(FreeAlgebra(g), 5)
        assert sorted(rep) == list(range(6))
        assert all(r["exact"] for r in rep.values())


@criterion(6)
def test_criterion_06_poincare():
    rng = rng_for(6)
    done = 0
    while done < 50:
        full = fm.de_rham_d(random_form(rng, FREE2, rng.randint(0, 2), 4, nterms=2))
        for part in full.pieces().values():
            om = fm.DRClass(part)
            if om and done < 50:
                eta = fm.poincare_primitive(om)
                assert eta.d() == om
                assert fm.DRClass(fm.de_rham_d(eta.representative)) == om
                done += 1


@criterion(7)
def test_criterion_07_hochschild():
    t0 = time.perf_counter()
    D = truncated_poly(2)
    assert hh.hh_homology(D, max_degree=4).dims == [2, 1, 1, 1, 1]
    assert hh.hh_cohomology(D, max_degree=4).dims[:2] == [2, 1]
    for A in (matrix_algebra(2), product_field(2)):
        dims = hh.hh_homology(A, max_degree=4).dims
        assert dims[0] >= 1 and dims[1:] == [0, 0, 0, 0]
    r = hh.morita_trace_check(D, 2)
    assert r["invertible"] and r["dim_hh0_matrices"] == r["dim_hh0_base"] == 2
    assert time.perf_counter() - t0 < 60


@criterion(8)
def test_criterion_08_gerstenhaber():
    rng = rng_for(8)
    algebras = [idempotent_algebra(), truncated_poly(2)]
    for trial in range(100):
        A = algebras[trial % 2]
        f = hh.Cochain.random(A, rng.randint(0, 2), rng)
        g = hh.Cochain.random(A, rng.randint(0, 2), rng)
        lhs, rhs = hh.g_cup_sides(f, g)
        assert lhs == rhs
        lhs, rhs = hh.bracket_compatibility_sides(f, g)
        assert lhs == rhs
    for A in algebras:
        m = hh.Cochain.multiplication(A)
        for k in range(1, 4):
            ch = hh.Chain.random(A, k, rng)
            assert hh.chain_lie(m, ch) == hh.chain_d(ch)


@criterion(8)
@pytest.mark.xfail(strict=True, reason="G_cup with f o g and d(f o g) - df o g - (-1)^p f o dg is false")
def test_criterion_08_literal_g_cup():
    rng = rng_for(80)
    for _ in range(20):
        A = truncated_poly(2)
        f, g = hh.Cochain.random(A, 1, rng), hh.Cochain.random(A, 1, rng)
        lhs, rhs = hh.g_cup_literal_sides(f, g)
        assert lhs == rhs


def _form_monomials(p, w):
    """Monomial p-forms f dx_I of weight w on the plane, counted one by one."""
    from itertools import combinations, product
    return sum(1 for I in combinations(range(2), p) for e in product(range(w + 1), repeat=2)
               if sum(e) + p == w)


@criterion(9)
def test_criterion_09_hkr():
    A = PolynomialAlgebra(2)
    for w in range(1, 4):
        dims = hh.graded_hh(A, w, 3).dims
        assert dims[1] == 2 * _form_monomials(0, w - 1)
        assert dims == [_form_monomials(p, w) for p in range(4)]


@criterion(9)
@pytest.mark.xfail(strict=True, reason="HKR: HH_2(k[x,y]) is the 2-forms, nonzero in weights 2 and 3")
def test_criterion_09_literal_higher_vanishing():
    A = PolynomialAlgebra(2)
    for w in range(1, 4):
        assert hh.graded_hh(A, w, 3).dims[2:] == [0, 0]


@criterion(10)
def test_criterion_10_moyal():
    rng = rng_for(10)
    s = S.moyal_star
    for _ in range(50):
        f, g, h = (random_phase(rng, 1, 4) for _ in range(3))
        assert s(s(f, g), h) == s(f, s(g, h))
    X, Y, T = S.PhasePoly.x(0, 1), S.PhasePoly.y(0, 1), S.PhasePoly.t(1)
    assert s(X, Y) - s(Y, X) == T
    monos = [S.PhasePoly(1, {(a, b, 0): 1}) for a in range(6) for b in range(6 - a)]
    for f in monos:
        for g in monos:
            if f.degree() + g.degree() <= 5:
                assert S.weyl_mul(S.pbw_symmetrize(f), S.pbw_symmetrize(g)) == S.pbw_symmetrize(s(f, g))
    for _ in range(50):
        f, g = random_phase(rng, 1, 3), random_phase(rng, 1, 3)
        f0, g0 = f.at_t_zero(), g.at_t_zero()
        assert S.poisson_leading_term(s, f0, g0) == S.poisson_bracket(f0, g0)


@criterion(11)
def test_criterion_11_rep():
    rng = rng_for(11)
    for _ in range(100):
        a, b = random_free_poly(rng, 2, 2), random_free_poly(rng, 2, 2)
        assert rp.rep_evaluate(a * b, 2) == rp.rep_evaluate(a, 2) * rp.rep_evaluate(b, 2)
        assert not rp.trace_function(a * b - b * a, 2)
    V = lambda im: rp.derivation_to_vector_field(im, 2)
    for _ in range(25):
        th = [random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)]
        de = [random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)]
        assert rp.field_bracket(V(th), V(de)) == V(cy.derivation_commutator(th, de))
    for _ in range(25):
        G = [random_free_poly(rng, 2, 3, nterms=2) for _ in range(2)]
        F = [random_free_poly(rng, 2, 3, nterms=2) for _ in range(2)]
        assert rp.jacobi_matrix(rp.compose(G, F)) == rp.jacobi_compose(rp.jacobi_matrix(G), rp.jacobi_matrix(F), G)
    for _ in range(25):
        F = [random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)]
        assert rp.jacobi_differential_check(F, 2)["ok"]


@criterion(12)
def test_criterion_12_gelfand_smirnov():
    for n in (1, 2):
        rep = cw.gs_chern_report(3, n)
        assert all(rep["closed"].values())
        assert all(rep["commute"].values())
        assert all(rep["transgression"].values())
    rng = rng_for(12)
    for trial in range(50):
        n = 1 + trial % 2
        P = random_super_cyclic(rng, n, rng.randint(1, 4))
        assert cw.gs_d(P) == cw.gs_bracket(cw.gs_casimir(n), P).scale(Fraction(1, 2))
    for A in (ground_field(), product_field(2)):
        assert cw.wnc_cohomology(A, 4) == [1, 0, 0, 0, 0]


@criterion(12)
@pytest.mark.xfail(strict=True, reason="dP = {b^2, P} is off by 2; dP = (1/2){sum b_j^2, P}")
def test_criterion_12_literal_d_is_bracket():
    rng = rng_for(120)
    for _ in range(50):
        P = random_super_cyclic(rng, 1, rng.randint(1, 4))
        assert cw.gs_d(P) == cw.gs_bracket(cw.gs_casimir(1), P)


@criterion(13)
def test_criterion_13_k_theory():
    A = idempotent_algebra()
    e1 = kt.IdempotentMatrix(A, [[{1: 1}]])
    diag = kt.IdempotentMatrix(A, [[{1: 1}, 0], [0, 0]])
    mat = kt.IdempotentMatrix(matrix_algebra(2), [[1]])
    rng = rng_for(13)
    tested = [e1, diag, mat] + [random_idempotent(rng, A, diag) for _ in range(5)]
    for e in tested:
        assert kt.idempotent_identities(e)
        assert kt.chern_c0(e).certified
        for k in (1, 2):
            assert kt.chern_ch(e, k).certified
    from ncalc.core import cyclic_group_algebra
    g = kt.InvertibleMatrix(cyclic_group_algebra(3), [[{1: 1}]])
    assert kt.chern_c1(g).certified
    conn = kt.grassmann_connection(e1)
    assert kt.connection_curvature(conn, 1) == kt.chern_ch(e1, 1).cls
    for _ in range(25):
        f = random_idempotent(rng, A, diag)
        for k in (0, 1, 2):
            assert kt.chern_ch(f, k).cls == kt.chern_ch(diag, k).cls


@criterion(14)
def test_criterion_14_formal_smoothness():
    for A in (product_field(2), matrix_algebra(2), upper_triangular(2)):
        r = hh.formal_smoothness_check(A)
        assert r["smooth"] and r["splitting"]
    r = hh.formal_smoothness_check(truncated_poly(2))
    assert not r["smooth"] and r["hh2_regular"] == 1 and r["hh2_witness"]


@criterion(15)
def test_criterion_15_commutative_weil():
    g = sl2()
    for p in range(5):
        for key in cw.weil_basis(g.dim, p):
            u = cw.WeilElement(g.dim, {key: 1})
            assert not cw.weil_d(cw.weil_d(u, g), g)
            for x in range(g.dim):
                assert cw.weil_cartan(x, u, g)["ok"]
    assert cw.weil_cohomology(g, 4) == [1, 0, 0, 0, 0]
