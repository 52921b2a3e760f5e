from fractions import Fraction
import random

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ncalc import rep as rp
from ncalc.core import CPoly, FreeAlgebra, FreePoly
from ncalc.cyclic import derivation_commutator
from ncalc.errors import NcalcError
from ncalc.forms import DRClass, NCForm, de_rham_d, form_mul
from ncalc.suites import random_form, random_free_poly

X, Y = FreePoly.gen(0, 2), FreePoly.gen(1, 2)
x1 = FreePoly.gen(0, 1)


def cpoly_to_sympy(f, syms):
    return sum((sympy.Rational(c.numerator, c.denominator) * sympy.prod([s ** k for s, k in zip(syms, e)])
                for e, c in f.terms.items()), sympy.Integer(0))


def _oracle_matrix(a, n):
    """``a`` at sympy matrix symbols laid out as x_{g,i,j} -> index g*n^2 + i*n + j."""
    syms = sympy.symbols(f"v0:{a.ngens * n * n}")
    mats = [sympy.Matrix(n, n, lambda i, j, g=g: syms[g * n * n + i * n + j]) for g in range(a.ngens)]
    total = sympy.zeros(n, n)
    for w, c in a.terms.items():
        m = sympy.eye(n)
        for g in w:
            m = m * mats[g]
        total += sympy.Rational(c.numerator, c.denominator) * m
    return total.applyfunc(sympy.expand), syms


def test_rep_examples():
    m = rp.rep_evaluate(X, 2)
    assert m[0, 1] == CPoly.var(rp.rep_index(0, 0, 1, 2), 8)
    assert rp.rep_evaluate(FreePoly.const(1, 2), 2) == rp.SymbolicMatrix.identity(2, CPoly.const(1, 8), CPoly.zero(8))
    assert not rp.trace_function(X * Y - Y * X, 2)
    v = lambda i, j: CPoly.var(rp.rep_index(0, i, j, 2), 4)
    assert rp.trace_function(x1, 2) == v(0, 0) + v(1, 1)
    assert rp.trace_function(x1 * x1, 2) == v(0, 0) * v(0, 0) + (v(0, 1) * v(1, 0)).scale(2) + v(1, 1) * v(1, 1)
    assert rp.rep_names(1, 2)[:2] == ["x_{1,1,1}", "x_{1,1,2}"]
    with pytest.raises(NcalcError):
        rp.rep_evaluate(X, 0)


@given(st.integers(0, 2**31))
@settings(max_examples=15)
def test_rep_matches_sympy_oracle(seed):
    a = random_free_poly(random.Random(seed), 2, 3)
    expect, syms = _oracle_matrix(a, 2)
    got = rp.rep_evaluate(a, 2)
    for i in range(2):
        for j in range(2):
            assert sympy.expand(cpoly_to_sympy(got[i, j], syms) - expect[i, j]) == 0


@given(st.integers(0, 2**31))
def test_rep_multiplicative_and_trace(seed):
    rng = random.Random(seed)
    a, b = random_free_poly(rng, 2, 2), random_free_poly(rng, 2, 2)
    assert rp.rep_evaluate(a * b, 2) == rp.rep_evaluate(a, 2) * rp.rep_evaluate(b, 2)
    assert not rp.trace_function(a * b - b * a, 2)


def test_rep_point_check():
    rel = [X * Y - Y * X]
    assert rp.rep_point_check(rel, [[[1, 0], [0, 2]], [[3, 0], [0, 4]]])
    assert not rp.rep_point_check(rel, [[[0, 1], [0, 0]], [[0, 0], [1, 0]]])


def test_form_to_rep_examples():
    A = FreeAlgebra(2)
    om = DRClass(NCForm.from_elements(A, X, Y))
    img = rp.form_to_rep(om, 1)
    assert img == rp.ComForm.from_poly(CPoly.var(0, 2)) * rp.ComForm.dvar(1, 2)


@given(st.integers(0, 2), st.integers(0, 2**31))
@settings(max_examples=20)
def test_form_to_rep_intertwines_and_kills_commutators(n, seed):
    rng = random.Random(seed)
    A = FreeAlgebra(2)
    a = random_form(rng, A, n, 3, 2)
    c = random_form(rng, A, rng.randint(0, 1), 2, 2)
    s = -1 if a.degree * c.degree % 2 else 1
    comm = form_mul(a, c) - form_mul(c, a).scale(s)
    assert rp.form_to_rep(a + comm, 2) == rp.form_to_rep(a, 2)
    assert rp.form_to_rep(de_rham_d(a), 2) == rp.form_to_rep(a, 2).d()


def test_vector_field_examples():
    V = rp.derivation_to_vector_field([x1 * x1], 1)
    assert V == rp.PolyVector(1, {(0,): CPoly({(2,): 1}, 1)})


def test_inner_derivation_kills_trace_functions():
    a = X * X - Y
    V = rp.derivation_to_vector_field(rp.ad_images(a), 2)
    for w in rp.all_words(2, 3):
        assert not rp.apply_field(V, rp.trace_function(FreePoly.word(w, 2), 2))


@given(st.integers(0, 2**31))
@settings(max_examples=15)
def test_vector_field_bracket_homomorphism(seed):
    rng = random.Random(seed)
    th = [random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)]
    de = [random_free_poly(rng, 2, 2, nterms=2) for _ in range(2)]
    V = lambda im: rp.derivation_to_vector_field(im, 2)
    assert rp.field_bracket(V(th), V(de)) == V(derivation_commutator(th, de))


def test_double_derivation_examples():
    x = FreePoly.gen(0, 2)
    assert rp.double_derivation(0, x) == rp.Tensor2.unit(2)
    assert not rp.double_derivation(0, Y)
    assert rp.double_derivation(0, x * x) == rp.Tensor2(2, {((0,), ()): 1, ((), (0,)): 1})
    with pytest.raises(NcalcError):
        rp.double_derivation(3, x)


def test_jacobi_examples():
    DF = rp.jacobi_matrix([X, Y])
    assert DF[0][0] == DF[1][1] == rp.Tensor2.unit(2) and not DF[0][1] and not DF[1][0]
    F = [x1 * x1]
    assert rp.jacobi_matrix(F)[0][0] == rp.Tensor2(1, {((0,), ()): 1, ((), (0,)): 1})
    lhs = rp.jacobi_matrix(rp.compose(F, F))[0][0]
    rhs = rp.jacobi_compose(rp.jacobi_matrix(F), rp.jacobi_matrix(F), F)[0][0]
    expect = rp.Tensor2(1, {((0,) * i, (0,) * (3 - i)): 1 for i in range(4)})
    assert lhs == rhs == expect


@given(st.integers(0, 2**31))
@settings(max_examples=20)
def test_chain_rule(seed):
    rng = random.Random(seed)
    G = [random_free_poly(rng, 2, 3, nterms=2) for _ in range(2)]
    F = [random_free_poly(rng, 2, 3, nterms=2) for _ in range(2)]
    DG, DF = rp.jacobi_matrix(G), rp.jacobi_matrix(F)
    assert rp.jacobi_matrix(rp.compose(G, F)) == rp.jacobi_compose(DG, DF, G)


def test_differential_examples():
    r = rp.jacobi_differential_check([X, Y], 2)
    assert r["ok"]
    nv = 16
    Z = [rp.SymbolicMatrix([[CPoly.var(8 + rp.rep_index(g, i, j, 2), nv) for j in range(2)] for i in range(2)])
         for g in range(2)]
    assert r["differential"] == Z
    r = rp.jacobi_differential_check([x1 * x1], 2)
    Xm = rp.SymbolicMatrix([[CPoly.var(rp.rep_index(0, i, j, 2), 8) for j in range(2)] for i in range(2)])
    Zm = rp.SymbolicMatrix([[CPoly.var(4 + rp.rep_index(0, i, j, 2), 8) for j in range(2)] for i in range(2)])
    assert r["ok"] and r["differential"][0] == Xm * Zm + Zm * Xm
    assert rp.jacobi_differential_check([x1 * x1 * x1], 2, point=[[[1, 2], [0, 1]]])["ok"]


@given(st.integers(0, 2**31))
@settings(max_examples=10)
def test_differential_random(seed):
    rng = random.Random(seed)
    F = [random_free_poly(rng, 2, 3, nterms=2) for _ in range(2)]
    assert rp.jacobi_differential_check(F, 2)["ok"]


# polyvectors on k[x, y] (and a third variable z where needed)

def cp(terms, nv=2):
    return CPoly(terms, nv)


def test_schouten_examples():
    dx = rp.PolyVector.partial(0, 2)
    xdy = rp.PolyVector(2, {(1,): cp({(1, 0): 1})})
    assert rp.schouten_bracket(dx, xdy) == rp.PolyVector.partial(1, 2)
    const = rp.PolyVector(2, {(0, 1): cp({(0, 0): 1})})
    assert not rp.schouten_bracket(const, const)
    B = rp.PolyVector(2, {(0, 1): cp({(1, 0): 1})})
    assert rp.schouten_bracket(B, dx) == rp.PolyVector(2, {(0, 1): cp({(0, 0): -1})})


def _random_pv(rng, nv, p):
    from itertools import combinations
    terms = {}
    for s in rng.sample(list(combinations(range(nv), p)), k=min(2, len(list(combinations(range(nv), p))))):
        e = tuple(rng.randint(0, 1) for _ in range(nv))
        terms[s] = CPoly({e: rng.randint(1, 3), (0,) * nv: rng.randint(-2, 2)}, nv)
    return rp.PolyVector(nv, terms)


@given(st.integers(1, 2), st.integers(1, 2), st.integers(1, 2), st.integers(0, 2**31))
@settings(max_examples=25)
def test_schouten_graded_lie(p, q, r, seed):
    rng = random.Random(seed)
    P, Q, R = _random_pv(rng, 3, p), _random_pv(rng, 3, q), _random_pv(rng, 3, r)
    S = rp.schouten_bracket
    sg = lambda k: 1 if k % 2 == 0 else -1
    assert S(P, Q) == S(Q, P).scale(-sg((p - 1) * (q - 1)))
    jac = (S(P, S(Q, R)).scale(sg((p - 1) * (r - 1))) + S(Q, S(R, P)).scale(sg((q - 1) * (p - 1)))
           + S(R, S(P, Q)).scale(sg((r - 1) * (q - 1))))
    assert not jac


def test_poisson_examples():
    x, y = cp({(1, 0): 1}), cp({(0, 1): 1})
    assert rp.poisson_from_bivector(rp.PolyVector(2, {(0, 1): cp({(0, 0): 1})}), x, y) == cp({(0, 0): 1})
    assert rp.poisson_from_bivector(rp.PolyVector(2, {(0, 1): x}), x, y) == x
    with pytest.raises(NcalcError):
        rp.poisson_from_bivector(rp.PolyVector.partial(0, 2), x, y)


def test_jacobi_defect_flagged():
    v = [CPoly.var(i, 3) for i in range(3)]
    pi = rp.PolyVector(3, {(0, 1): v[2], (1, 2): CPoly.const(1, 3)})
    jac, side, ok = rp.poisson_jacobi_check(pi, *v)
    assert ok
    one = CPoly.const(1, 3)
    pi2 = rp.PolyVector(3, {(0, 1): one, (1, 2): one, (0, 2): v[0]})
    jac, side, ok = rp.poisson_jacobi_check(pi2, *v)
    assert ok and jac == side == one


@given(st.integers(0, 2**31))
@settings(max_examples=20)
def test_jacobi_constant(seed):
    rng = random.Random(seed)
    pi = _random_pv(rng, 3, 2)
    fs = [CPoly({tuple(rng.randint(0, 1) for _ in range(3)): rng.randint(1, 2)}, 3) + CPoly.var(k, 3)
          for k in range(3)]
    assert rp.poisson_jacobi_check(pi, *fs)[2]
