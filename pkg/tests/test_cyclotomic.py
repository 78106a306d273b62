from __future__ import annotations

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from braidcleft.config import Evaluator, parse_expression
from braidcleft.cyclotomic import cyclotomic_poly, format_cyc, is_root_of_unity, make_field, mult_order

FIELDS = [1, 2, 3, 4, 6, 8, 12]


@pytest.mark.parametrize("m", range(1, 31))
def test_cyclotomic_poly_matches_sympy(m):
    x = sympy.Symbol("x")
    expect = [int(c) for c in reversed(sympy.Poly(sympy.cyclotomic_poly(m, x), x).all_coeffs())]
    assert list(cyclotomic_poly(m)) == expect


def elements(m):
    F = make_field(m)
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=4)
    return st.lists(coeff, min_size=F.deg, max_size=F.deg).map(
        lambda cs: sum((F(c) * F.zeta(k) for k, c in enumerate(cs)), F.zero))


@pytest.mark.parametrize("m", FIELDS)
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_field_axioms(m, data):
    a, b, c = (data.draw(elements(m)) for _ in range(3))
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@pytest.mark.parametrize("m", FIELDS)
def test_zeta_has_order_m(m):
    F = make_field(m)
    z = F.zeta(1)
    assert z ** m == 1
    assert mult_order(z) == m
    assert F.zeta(m + 1) == z


def test_mult_order_rejects_non_roots():
    F = make_field(6)
    with pytest.raises(ValueError, match="not a root of unity"):
        mult_order(F(2))
    assert not is_root_of_unity(F(0))
    assert is_root_of_unity(-F.one)


def test_negative_powers_and_rational_coercion():
    F = make_field(3)
    w = F.zeta(1)
    assert w ** -1 == w ** 2
    assert F(Fraction(1, 2)) * 2 == 1
    assert (F.one + w + w ** 2) == 0


def test_format_grammar():
    F = make_field(6)
    assert format_cyc(F(Fraction(-3, 4))) == "rat(-3/4)"
    assert format_cyc(F.zeta(1)) == "zeta(1)"
    assert format_cyc(F.zero) == "rat(0)"


@pytest.mark.parametrize("m", [3, 4, 6, 12])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_format_parses_back(m, data):
    a = data.draw(elements(m))
    F = make_field(m)
    got = Evaluator(F)(parse_expression(format_cyc(a)))
    assert F(got) == a
