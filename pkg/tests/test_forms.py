import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, strategies as st

from conftest import fractions
from symquartic.forms import (Domain, QuarticForm, decide, evaluate, expand, restrict_diag,
                              restrict_edge, w_basis)
from symquartic.oracle import f_values

x, y, z = sympy.symbols("x y z")


def sympy_form(a, b, c):
    w4 = x**4 + y**4 + z**4
    w3 = sum(u**3 * v for u, v in itertools.permutations((x, y, z), 2))
    w2 = x**2 * y**2 + y**2 * z**2 + z**2 * x**2
    w1 = x * y * z * (x + y + z)
    R = lambda q: sympy.Rational(q.numerator, q.denominator)  # noqa: E731
    return sympy.expand(w4 + R(a) * w3 + R(b) * w2 + R(c) * w1)


forms = st.builds(QuarticForm, fractions(), fractions(), fractions())
points = st.tuples(fractions(-3, 3), fractions(-3, 3), fractions(-3, 3))


def test_basis_shapes():
    w = w_basis()
    assert all(p.is_homogeneous(4) for p in w.values())
    assert len(list(w["w3"])) == 6


def test_rejects_floats():
    with pytest.raises(TypeError):
        QuarticForm(1.5, 0, 0)
    assert QuarticForm("2.09", 0, "-1/2").b == 0
    assert QuarticForm("2.09", 0, 0).a == Fraction(209, 100)


@given(forms)
def test_expand_matches_sympy(form):
    ours = expand(form)
    ref = sympy.Poly(sympy_form(form.a, form.b, form.c), x, y, z)
    got = {e: c for e, c in ours}
    want = {e: Fraction(int(c.p), int(c.q)) for e, c in zip(ref.monoms(), ref.coeffs())}
    assert got == want


@given(forms, points)
def test_evaluate_agrees_with_expansion(form, pt):
    assert evaluate(form, *pt) == expand(form).eval(*pt)


@given(forms, points, st.permutations(range(3)))
def test_symmetry(form, pt, perm):
    assert evaluate(form, *pt) == evaluate(form, *(pt[i] for i in perm))


@given(forms, points, fractions(-4, 4))
def test_homogeneity(form, pt, lam):
    assert evaluate(form, *(lam * v for v in pt)) == lam**4 * evaluate(form, *pt)


@given(forms, fractions())
def test_restrictions(form, t):
    assert restrict_diag(form)(t) == evaluate(form, t, Fraction(1), Fraction(1))
    assert restrict_edge(form)(t) == evaluate(form, t, Fraction(1), Fraction(0))


def test_restriction_coefficients():
    a, b, c = Fraction(2), Fraction(3), Fraction(5)
    f = QuarticForm(a, b, c)
    assert restrict_diag(f).coeffs == (2 + 2 * a + b, 2 * a + 2 * c, 2 * b + c, 2 * a, 1)
    assert restrict_edge(f).coeffs == (1, a, b, a, 1)


@given(forms)
def test_reals_implies_orthant(form):
    if decide(form, certify=False).holds:
        assert decide(form.with_domain(Domain.NONNEG), certify=False).holds


@given(forms.map(lambda f: f.with_domain(Domain.NONNEG)) | forms)
def test_counterexample_exact(form):
    res = decide(form, certify=False)
    if not res.holds:
        pt = res.counterexample
        assert evaluate(form, *pt) == res.value < 0
        if form.domain is Domain.NONNEG:
            assert min(pt) >= 0


@given(forms, st.sampled_from(list(Domain)), fractions(0, 3))
def test_monotone_in_b_and_c(form, dom, d):
    form = form.with_domain(dom)
    if decide(form, certify=False).holds:
        assert decide(QuarticForm(form.a, form.b + d, form.c, dom), certify=False).holds
        if dom is Domain.NONNEG:
            assert decide(QuarticForm(form.a, form.b, form.c + d, dom), certify=False).holds


def _dense_min(form, n=121):
    g = np.linspace(-1, 1, n)
    abc = (float(form.a), float(form.b), float(form.c))
    best = np.inf
    for i in range(3):
        for sgn in (-1.0, 1.0):
            u, v = np.meshgrid(g, g)
            pts = np.zeros(u.shape + (3,))
            pts[..., i] = sgn
            pts[..., (i + 1) % 3] = u
            pts[..., (i + 2) % 3] = v
            if form.domain is Domain.NONNEG:
                pts = np.abs(pts)
            best = min(best, f_values(abc, pts).min())
    return best


def test_decide_against_dense_scan():
    rng = random.Random(3)
    for _ in range(150):
        a, b, c = (Fraction(rng.randint(-12, 12), 2) for _ in range(3))
        for dom in Domain:
            form = QuarticForm(a, b, c, dom)
            res = decide(form, certify=False)
            m = _dense_min(form)
            if res.holds:
                assert m >= -1e-9
            elif m > 1e-6:
                # the scan missed the dip; the exact witness is authoritative
                assert evaluate(form, *res.counterexample) < 0


@pytest.mark.parametrize("abc,dom,holds", [
    ((-1, 0, 1), Domain.NONNEG, True),   # Schur
    ((-1, 0, 1), Domain.REALS, True),    # even-degree Schur holds on all reals
    ((-1, Fraction(-1, 10), 1), Domain.REALS, False),
    ((0, 0, -4), Domain.REALS, False),
    ((0, 0, 0), Domain.REALS, True),
    ((2, 3, 8), Domain.REALS, True),
    ((2, Fraction(52, 25), 4), Domain.REALS, False),
])
def test_known_cases(abc, dom, holds):
    assert decide(QuarticForm(*abc, dom), certify=False).holds is holds


def test_trivial_counterexample():
    res = decide(QuarticForm(0, 0, -4), certify=False)
    assert res.counterexample == (1, 1, 1) and res.value == -9


@given(fractions(), fractions(), fractions())
def test_point_values(a, b, c):
    f = QuarticForm(a, b, c)
    one, zero = Fraction(1), Fraction(0)
    assert evaluate(f, one, one, one) == 3 + 6 * a + 3 * b + 3 * c
    assert evaluate(f, one, zero, zero) == 1
    g = QuarticForm(Fraction(-1, 2), b, c)
    assert evaluate(g, Fraction(2), Fraction(2), Fraction(-1)) == 24 * b - 12 * c + 27


def test_restriction_examples():
    assert restrict_diag(QuarticForm(0, 0, 0)).coeffs == (2, 0, 0, 0, 1)
    assert restrict_diag(QuarticForm(2, 3, 8))(Fraction(-1)) == 0
    assert restrict_edge(QuarticForm(-4, 6, 0))(Fraction(1)) == 0
    assert restrict_edge(QuarticForm(0, 0, 0)).coeffs == (1, 0, 0, 0, 1)


def test_straddle_example():
    assert not decide(QuarticForm(2, "2.09", 4), certify=False).holds
    assert decide(QuarticForm(2, "2.0902", 4), certify=False).holds
