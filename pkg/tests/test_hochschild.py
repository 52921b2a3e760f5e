from fractions import Fraction
from itertools import product
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ncalc import hochschild as hh
from ncalc.core import (PolynomialAlgebra, cyclic_group_algebra, idempotent_algebra, matrix_algebra,
                        product_field, truncated_poly, upper_triangular)
from ncalc.errors import NcalcError

SMALL = {"dual": truncated_poly(2), "idem": idempotent_algebra()}


def _oracle_hh(A, max_degree):
    """Unnormalized bar complex with dense sympy ranks; shares no code with the package."""
    m = A.dim

    def mul(i, j):
        return A.table[i][j]

    def diff(p):
        src = list(product(range(m), repeat=p + 1))
        tgt = {t: n for n, t in enumerate(product(range(m), repeat=p))}
        M = sympy.zeros(len(tgt), len(src))
        for col, t in enumerate(src):
            for i in range(p):
                for k, c in mul(t[i], t[i + 1]).items():
                    M[tgt[t[:i] + (k,) + t[i + 2:]], col] += (-1) ** i * c
            for k, c in mul(t[p], t[0]).items():
                M[tgt[(k,) + t[1:p]], col] += (-1) ** p * c
        return M

    ranks = {p: diff(p).rank() for p in range(1, max_degree + 2)}
    ranks[0] = 0
    return [m ** (p + 1) - ranks[p] - ranks[p + 1] for p in range(max_degree + 1)]


def test_dual_numbers_homology_frozen():
    # oracle value frozen from _oracle_hh(truncated_poly(2), 4)
    assert hh.hh_homology(truncated_poly(2), max_degree=4).dims == [2, 1, 1, 1, 1]


@pytest.mark.parametrize("name,A,deg", [("dual", truncated_poly(2), 3), ("idem", idempotent_algebra(), 3),
                                        ("kxk", product_field(2), 3), ("z3", cyclic_group_algebra(3), 2)])
def test_homology_matches_unnormalized_oracle(name, A, deg):
    assert hh.hh_homology(A, max_degree=deg).dims == _oracle_hh(A, deg)
    assert hh.hh_homology(A, max_degree=deg, reduced=False).dims == _oracle_hh(A, deg)


def test_cohomology_dual_numbers():
    assert hh.hh_cohomology(truncated_poly(2), max_degree=4).dims[:2] == [2, 1]


@pytest.mark.parametrize("A", [matrix_algebra(2), product_field(2), upper_triangular(2)])
def test_separable_and_hereditary_vanishing(A):
    assert hh.hh_homology(A, max_degree=3).dims[1:] == [0, 0, 0]


def test_center_and_derivations():
    assert len(hh.center(matrix_algebra(2))) == 1
    assert len(hh.center(truncated_poly(2))) == 2
    ds = hh.derivation_space(truncated_poly(2))
    assert (ds["dim_der"], ds["dim_inner"], ds["outer"]) == (1, 0, 1)
    ds = hh.derivation_space(matrix_algebra(2))
    assert ds["outer"] == 0 and ds["dim_der"] == 3


def test_bimodule_validation():
    A = hh.normalized(truncated_poly(2))
    M = hh.Bimodule.regular(A)
    assert M.validate()
    # x acting as the identity on the left breaks x*x = 0
    bad = [{0: Fraction(1)}, {1: Fraction(1)}]
    with pytest.raises(NcalcError):
        hh.Bimodule(A, 2, [M.left[0], bad], M.right)


@given(st.sampled_from(sorted(SMALL)), st.integers(0, 3), st.integers(0, 2**31))
def test_coboundary_squares_to_zero(name, p, seed):
    f = hh.Cochain.random(SMALL[name], p, random.Random(seed))
    assert not hh.cochain_d(hh.cochain_d(f))


@given(st.sampled_from(sorted(SMALL)), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**31))
def test_g_cup_identity(name, p, q, seed):
    rng = random.Random(seed)
    f, g = hh.Cochain.random(SMALL[name], p, rng), hh.Cochain.random(SMALL[name], q, rng)
    lhs, rhs = hh.g_cup_sides(f, g)
    assert lhs == rhs


def test_g_cup_literal_form_fails():
    rng = random.Random(3)
    A = SMALL["dual"]
    failures = 0
    for _ in range(10):
        f, g = hh.Cochain.random(A, 1, rng), hh.Cochain.random(A, 1, rng)
        lhs, rhs = hh.g_cup_literal_sides(f, g)
        failures += lhs != rhs
    assert failures > 0


@given(st.sampled_from(sorted(SMALL)), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**31))
def test_bracket_compatibility(name, p, q, seed):
    rng = random.Random(seed)
    f, g = hh.Cochain.random(SMALL[name], p, rng), hh.Cochain.random(SMALL[name], q, rng)
    lhs, rhs = hh.bracket_compatibility_sides(f, g)
    assert lhs == rhs
    sign = 1 if (p - 1) % 2 == 0 else -1
    assert hh.bracket_differential(f) == hh.cochain_d(f).scale(sign)


@given(st.sampled_from(sorted(SMALL)), st.integers(1, 2), st.integers(1, 2), st.integers(1, 2),
       st.integers(0, 2**31))
@settings(max_examples=15)
def test_bracket_graded_jacobi(name, p, q, r, seed):
    rng = random.Random(seed)
    f, g, h = (hh.Cochain.random(SMALL[name], k, rng) for k in (p, q, r))
    B = hh.gerstenhaber_bracket
    s = lambda k: 1 if k % 2 == 0 else -1
    total = (B(f, B(g, h)).scale(s((p - 1) * (r - 1))) + B(g, B(h, f)).scale(s((q - 1) * (p - 1)))
             + B(h, B(f, g)).scale(s((r - 1) * (q - 1))))
    assert not total


def test_multiplication_is_maurer_cartan():
    for A in SMALL.values():
        m = hh.Cochain.multiplication(A)
        assert not hh.gerstenhaber_bracket(m, m)


@given(st.sampled_from(sorted(SMALL)), st.integers(1, 4), st.integers(0, 2**31))
def test_lie_of_multiplication_is_chain_differential(name, k, seed):
    ch = hh.Chain.random(SMALL[name], k, random.Random(seed))
    assert hh.chain_lie(hh.Cochain.multiplication(ch.A), ch) == hh.chain_d(ch)


@given(st.sampled_from(sorted(SMALL)), st.integers(0, 2), st.integers(0, 2), st.integers(0, 2**31))
def test_contraction_composes_to_cup(name, p, q, seed):
    rng = random.Random(seed)
    A = SMALL[name]
    c, c2 = hh.Cochain.random(A, p, rng), hh.Cochain.random(A, q, rng)
    ch = hh.Chain.random(A, p + q + rng.randint(0, 1), rng)
    assert hh.chain_contraction(c2, hh.chain_contraction(c, ch)) == hh.chain_contraction(hh.cup(c, c2), ch)


def test_contraction_by_central_element():
    A = SMALL["dual"]
    z = hh.Cochain.element(A, {1: 1})
    ch = hh.Chain(A, 1, {(1, 0): Fraction(2), (0, 1): Fraction(1)})
    assert hh.chain_contraction(z, ch) == hh.Chain(A, 1, {(1, 1): Fraction(1)})


@given(st.sampled_from(sorted(SMALL)), st.integers(1, 3), st.integers(0, 2**31))
def test_derivation_lie_is_termwise(name, k, seed):
    rng = random.Random(seed)
    A = SMALL[name]
    mats = hh.derivation_space(A)["derivations"]
    D = hh.Cochain.from_derivation(A, mats[0]) if mats else hh.Cochain.zero(A, 1)
    ch = hh.Chain.random(A, k, rng)
    expect = hh.Chain(A, k, {})
    for t, c in ch.terms.items():
        for i in range(k + 1):
            for m, c2 in D.at((t[i],)).items():
                expect = expect + hh.Chain(A, k, {t[:i] + (m,) + t[i + 1:]: c * c2})
    assert hh.chain_lie(D, ch) == expect


def _form_monomials(nvars, p, w):
    """Count f dx_I with |I| = p, f a monomial, by listing them."""
    count = 0
    for I in product(range(nvars), repeat=p):
        if list(I) != sorted(set(I)):
            continue
        for exps in product(range(w + 1), repeat=nvars):
            count += sum(exps) + p == w
    return count


@pytest.mark.parametrize("w", [0, 1, 2, 3])
def test_hkr_graded(w):
    dims = hh.graded_hh(PolynomialAlgebra(2), w, 3).dims
    assert dims == [_form_monomials(2, p, w) for p in range(4)]
    assert dims == [hh.hkr_dimension(2, p, w) for p in range(4)]


@pytest.mark.parametrize("p", [1, 2, 3])
def test_alt_pi(p):
    assert hh.alt_comparison(truncated_poly(3), p).ok


def test_formal_smoothness_verdicts():
    for A in (product_field(2), matrix_algebra(2), upper_triangular(2)):
        r = hh.formal_smoothness_check(A)
        assert r["smooth"] and "splitting" in r and r["hh2_regular"] == 0
    r = hh.formal_smoothness_check(truncated_poly(2))
    assert not r["smooth"] and r["hh2_regular"] == 1 and r["hh2_witness"] and r["certificate"]


def test_morita_trace():
    r = hh.morita_trace_check(truncated_poly(2), 2)
    assert r["invertible"] and r["dim_hh0_matrices"] == r["dim_hh0_base"] == 2


# --------------------------------------------------------------------------
# epsilon-extension: chains as a module over cochains via L and i


def _cocycles_and_cycles(A, coh_degree, hom_degree):
    A = hh.normalized(A)
    cocs, cycs = [], []
    for p, reps in hh.hh_cohomology(A, max_degree=coh_degree, reduced=False).representatives.items():
        for r in reps:
            vals = {}
            for key, c in r.items():
                vals.setdefault(key[:-1], {})[key[-1]] = c
            cocs.append(hh.Cochain(A, p, vals))
    for k, reps in hh.hh_homology(A, max_degree=hom_degree, reduced=False).representatives.items():
        cycs.extend(hh.Chain(A, k, r) for r in reps)
    return A, cocs, cycs


class _Boundaries:
    def __init__(self, A):
        self.A, self.cache = A, {}

    def contains(self, ch):
        from ncalc.linalg import Echelon
        k, dim = ch.k, self.A.dim
        if k not in self.cache:
            idx = {t: i for i, t in enumerate(product(range(dim), repeat=k + 1))}
            ech = Echelon()
            for t in product(range(dim), repeat=k + 2):
                ech.add({idx[u]: c for u, c in hh.chain_d(hh.Chain(self.A, k + 1, {t: 1})).terms.items()})
            self.cache[k] = (ech, idx)
        ech, idx = self.cache[k]
        return not ech.reduce({idx[u]: c for u, c in ch.terms.items()})


@given(st.sampled_from(sorted(SMALL)), st.integers(1, 2), st.integers(1, 2), st.integers(2, 4),
       st.integers(0, 2**31))
@settings(max_examples=20)
def test_lie_action_exact(name, p, q, k, seed):
    rng = random.Random(seed)
    A = SMALL[name]
    b, c = hh.Cochain.random(A, p, rng), hh.Cochain.random(A, q, rng)
    ch = hh.Chain.random(A, k + p + q, rng)
    L = hh.chain_lie
    s = 1 if (p - 1) * (q - 1) % 2 == 0 else -1
    assert L(hh.gerstenhaber_bracket(b, c), ch) == L(b, L(c, ch)) + L(c, L(b, ch)).scale(-s)


@given(st.sampled_from(sorted(SMALL)), st.integers(0, 3), st.integers(0, 2**31))
@settings(max_examples=25)
def test_contraction_commutes_with_differential(name, q, seed):
    rng = random.Random(seed)
    A = SMALL[name]
    c = hh.Cochain.random(A, q, rng)
    ch = hh.Chain.random(A, q + 2, rng)
    I, d = hh.chain_contraction, hh.chain_d
    sign = -1 if q % 2 == 0 else 1
    assert d(I(c, ch)) + I(c, d(ch)).scale(sign) == I(hh.cochain_d(c), ch).scale(sign)


def test_epsilon_extension_cartan_on_homology():
    # {b + eps c, a}_eps = L_b a + eps i_c a; the eps-part of the module Jacobi
    # identity is [L_b, i_c] = i_{b,c}, which holds modulo boundaries
    A, cocs, cycs = _cocycles_and_cycles(truncated_poly(2), 3, 5)
    bd = _Boundaries(A)
    L, I, B = hh.chain_lie, hh.chain_contraction, hh.gerstenhaber_bracket
    checked = 0
    for b in cocs:
        for c in cocs:
            for a in cycs:
                p, q = b.p, c.p
                if a.k < p + q or a.k - q < p - 1:
                    continue
                s = 1 if (p - 1) * q % 2 == 0 else -1
                defect = L(b, I(c, a)) + I(c, L(b, a)).scale(-s) + I(B(b, c), a).scale(-1)
                assert bd.contains(defect), (p, q, a.k)
                checked += 1
    assert checked == 94
