from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from kmss.scalars import (
    GaussianRational,
    LaurentScalar,
    conjugate_bar,
    laurent_derivative,
    residue,
    substitute_sign,
)

t = sp.Symbol("t")

fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussianRational, fracs, fracs)
laurent = st.dictionaries(st.integers(-4, 4), gauss, max_size=4).map(LaurentScalar)


def to_sympy(p: LaurentScalar):
    return sum((sp.Rational(g.re.numerator, g.re.denominator)
                + sp.I * sp.Rational(g.im.numerator, g.im.denominator)) * t**n
               for n, g in p.items()) + sp.Integer(0)


@given(gauss, gauss, gauss)
def test_gaussian_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == GaussianRational(0)


@given(gauss)
def test_gaussian_inverse_and_conjugate(a):
    if a:
        assert a * (1 / a) == GaussianRational(1)
    assert a * a.conjugate() == GaussianRational(a.norm())
    assert GaussianRational.parse(str(a)) == a


@settings(max_examples=60, deadline=None)
@given(laurent, laurent, laurent)
def test_laurent_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p - p).is_zero()


@settings(max_examples=60, deadline=None)
@given(laurent, laurent)
def test_laurent_product_matches_sympy(p, q):
    assert sp.expand(to_sympy(p * q) - to_sympy(p) * to_sympy(q)) == 0


@settings(deadline=None)
@given(laurent)
def test_derivative_sign_and_bar_match_sympy(p):
    e = to_sympy(p)
    assert sp.expand(to_sympy(laurent_derivative(p)) - sp.diff(e, t)) == 0
    assert sp.expand(to_sympy(substitute_sign(p, -1)) - e.subs(t, -t)) == 0
    bar = sp.conjugate(e).subs(sp.conjugate(t), 1 / t)
    assert sp.expand(to_sympy(conjugate_bar(p, invert_t=True)) - bar) == 0


@given(laurent)
def test_json_roundtrip(p):
    assert LaurentScalar.from_json(p.to_json()) == p


def test_residue_picks_t_inverse():
    p = LaurentScalar({-1: 5, 0: 2, 3: 1})
    assert residue(p) == GaussianRational(5)
    assert residue(laurent_derivative(p)) == GaussianRational(0)


def test_text_rendering():
    g = GaussianRational(Fraction(1, 2), Fraction(-3, 4))
    assert str(g) == "1/2 - 3/4 i"
    assert str(LaurentScalar({-1: g, 2: 3})) == "(1/2 - 3/4 i) t^-1 + 3 t^2"


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(1) / GaussianRational(0)
