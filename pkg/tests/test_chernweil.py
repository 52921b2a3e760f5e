from fractions import Fraction
from itertools import combinations
import random

import pytest
from hypothesis import given, settings, strategies as st

from ncalc import chernweil as cw
from ncalc.core import ground_field, heisenberg3, product_field, sl2, truncated_poly, abelian_lie
from ncalc.errors import NcalcError
from ncalc.suites import random_super_cyclic

a1, b1 = cw.SElem.word((0,), 1), cw.SElem.word((1,), 1)
proj = cw.project_super_cyclic


def deg(u):
    return u.degrees()[0] if u.degrees() else 0


def test_super_cyclic_examples():
    # odd letters anticommute past an odd word: a^2 of odd degree survives, a^4 dies
    assert proj(a1 * a1 * a1 * a1).to_str() == "0"
    assert proj(a1 * a1 * a1)
    assert proj(a1 * b1) == proj(b1 * a1)
    assert cw.super_canonical((0, 0), 1) == (0, None)


@given(st.integers(1, 2), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**31))
def test_supercommutators_vanish(n, p, q, seed):
    rng = random.Random(seed)
    x, y = cw.random_graded(n, p, rng), cw.random_graded(n, q, rng)
    assert not proj(cw.supercommutator(x, y))


@given(st.integers(1, 2), st.integers(0, 4), st.integers(0, 2**31))
def test_free_dga_d_squares_to_zero(n, p, seed):
    u = cw.random_graded(n, p, random.Random(seed))
    assert not cw.free_dga_d(cw.free_dga_d(u))
    assert not cw.gs_d(cw.gs_d(proj(u)))


def test_chern_examples():
    assert cw.gs_chern(2).to_str() == "2*cyc(a1 a1 b1) + cyc(b1 b1)"
    assert cw.gs_chern(1, 2).to_str() == "cyc(b1) + cyc(b2)"
    with pytest.raises(NcalcError):
        cw.gs_chern(-1)


@pytest.mark.parametrize("n", [1, 2])
def test_chern_report(n):
    r = cw.gs_chern_report(3, n)
    assert r["ok"]
    assert all(r["closed"].values()) and all(r["commute"].values()) and all(r["transgression"].values())


def test_single_power_not_closed_for_two_pairs():
    s = cw.gs_curvature(2, 0) + cw.gs_curvature(2, 1)
    assert cw.gs_d(proj(s * s))


def test_transgression_normalization():
    # hand expansion: a (b/2 + a^2/3)
    disp = cw.gs_transgression_displayed(2)
    assert disp == proj(a1 * b1).scale(Fraction(1, 2)) + proj(a1 * a1 * a1).scale(Fraction(1, 3))
    assert cw.gs_d(disp) == cw.gs_chern(2).scale(Fraction(1, 2))
    for k in (1, 2, 3):
        assert cw.gs_d(cw.gs_transgression(k)) == cw.gs_chern(k)
    with pytest.raises(NcalcError):
        cw.gs_transgression(0)


def test_chern_simons_matches_transgression():
    for k in (1, 2, 3):
        cs, ok = cw.chern_simons_class(k)
        assert ok and cs == cw.gs_transgression_displayed(k)


def test_curvature_and_bianchi():
    assert cw.dga_curvature(a1) == b1 + a1 * a1
    with pytest.raises(NcalcError):
        cw.dga_curvature(b1)


@given(st.integers(1, 2), st.integers(1, 3), st.integers(1, 3), st.integers(1, 3), st.integers(0, 2**31))
@settings(max_examples=30)
def test_gs_bracket_graded_lie(n, p, q, r, seed):
    rng = random.Random(seed)
    P, Q, R = (random_super_cyclic(rng, n, k) for k in (p, q, r))
    b = cw.gs_bracket
    sgn = lambda u, v: (-1) ** ((deg(u) + 1) * (deg(v) + 1))
    assert b(P, Q) == b(Q, P).scale(-sgn(P, Q))
    assert not (b(P, b(Q, R)) - b(b(P, Q), R) - b(Q, b(P, R)).scale(sgn(P, Q)))


@given(st.integers(1, 2), st.integers(1, 4), st.integers(0, 2**31))
@settings(max_examples=30)
def test_casimir_generates_d(n, p, seed):
    P = random_super_cyclic(random.Random(seed), n, p)
    assert cw.gs_bracket(cw.gs_casimir(n), P) == cw.gs_d(P).scale(2)


def test_casimir_literal_relation_fails():
    P = proj(a1 * a1 * a1)
    assert cw.gs_bracket(cw.gs_casimir(1), P) != cw.gs_d(P)


def test_literal_bracket_is_graded_symmetric():
    rng = random.Random(2)
    P, Q = random_super_cyclic(rng, 1, 2), random_super_cyclic(rng, 1, 3)
    assert cw.gs_bracket_literal(P, Q) == cw.gs_bracket_literal(Q, P).scale((-1) ** (deg(P) * deg(Q)))


def test_odd_elements_self_bracket():
    rng = random.Random(5)
    for _ in range(5):
        P = random_super_cyclic(rng, 1, 3)
        assert not cw.gs_bracket(P, P)


@pytest.mark.parametrize("A", [ground_field(), product_field(2), truncated_poly(2)])
def test_wnc_poincare_lemma(A):
    d = 4 if A.dim <= 2 else 3
    assert cw.wnc_cohomology(A, d) == [1] + [0] * d


@given(st.integers(1, 4), st.integers(0, 2**31))
@settings(max_examples=20)
def test_wnc_d_squares_to_zero(p, seed):
    A = truncated_poly(2)
    u = cw.random_graded(A.dim, p, random.Random(seed))
    assert not cw.wnc_d(cw.wnc_d(u, A), A)


def test_wnc_ground_field_differential():
    A = ground_field()
    lam = cw.SElem.word((0,), 1)
    assert cw.wnc_d(lam, A) == b1 + a1 * a1
    with pytest.raises(NcalcError):
        cw.wnc_d(cw.SElem.word((0,), 2), A)


def test_hodge_quotient():
    k = ground_field()
    assert cw.hodge_quotient(k, 1, 7)["cohomology"] == [1, 1, 0, 1, 0, 1, 0, 1]
    assert cw.hodge_quotient(k, 2, 7)["cohomology"] == [1, 0, 0, 1, 0, 1, 0, 1]
    assert cw.hodge_quotient(k, 3, 7)["cohomology"] == [1, 0, 0, 0, 0, 1, 0, 1]
    assert cw.hodge_quotient(k, 2, 3)["basis"][3] == [(0, 1), (0, 0, 0)]


# commutative Weil algebra

LIE = {"sl2": sl2(), "heis": heisenberg3(), "ab2": abelian_lie(2)}


@given(st.sampled_from(sorted(LIE)), st.integers(0, 4), st.integers(0, 2**31))
@settings(max_examples=40)
def test_weil_d_squared_and_cartan(name, p, seed):
    g = LIE[name]
    rng = random.Random(seed)
    u = cw.random_weil(g, p, rng)
    x = rng.randrange(g.dim)
    assert not cw.weil_d(cw.weil_d(u, g), g)
    assert cw.weil_cartan(x, u, g)["ok"]
    assert not cw.weil_contraction(x, cw.weil_contraction(x, u, g), g)


def _ce_dims(g):
    """Chevalley-Eilenberg cohomology of g with trivial coefficients, by brute force."""
    from ncalc.linalg import rank
    m = g.dim
    basis = {q: list(combinations(range(m), q)) for q in range(m + 2)}

    dxi = lambda S: _ce_image(g, S)

    ranks = []
    for q in range(m + 1):
        idx = {t: n for n, t in enumerate(basis[q + 1])}
        ranks.append(rank([{idx[k]: v for k, v in dxi(S).items()} for S in basis[q]]))
    return [len(basis[q]) - ranks[q] - (ranks[q - 1] if q else 0) for q in range(m + 1)]


@pytest.mark.parametrize("name,expect", [("sl2", [1, 0, 0, 1]), ("heis", [1, 2, 2, 1]), ("ab2", [1, 2, 1])])
def test_exterior_part_is_chevalley_eilenberg(name, expect):
    # the u = 0 quotient of W(g) is the CE complex; its cohomology is the Lie algebra cohomology
    g = LIE[name]
    assert _ce_dims(g) == expect
    for q in range(g.dim + 1):
        for S in combinations(range(g.dim), q):
            img = cw.weil_d(cw.WeilElement(g.dim, {((0,) * g.dim, S): 1}), g)
            odd_part = {k[1]: c for k, c in img.terms.items() if not any(k[0])}
            assert odd_part == {k: Fraction(v) for k, v in _ce_image(g, S).items()}


def _ce_image(g, S):
    m = g.dim
    out = {}
    for pos, k in enumerate(S):
        for i in range(m):
            for j in range(i + 1, m):
                c = g.table[i][j].get(k, 0)
                rest = S[:pos] + S[pos + 1:]
                if not c or i in rest or j in rest:
                    continue
                new = list(S[:pos]) + [i, j] + list(S[pos + 1:])
                inv = sum(1 for a in range(len(new)) for b in range(a + 1, len(new)) if new[a] > new[b])
                key = tuple(sorted(new))
                out[key] = out.get(key, 0) + (-1) ** (inv + pos) * c
    return {k: v for k, v in out.items() if v}


@pytest.mark.parametrize("name", sorted(LIE))
def test_weil_acyclic(name):
    assert cw.weil_cohomology(LIE[name], 4) == [1, 0, 0, 0, 0]


def test_killing_quadratic_is_basic():
    g = sl2()
    q = cw.killing_quadratic(g)
    assert q and cw.is_basic(q, g)
    assert not cw.is_basic(cw.WeilElement.u(0, 3), g)
