from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_polys, polys, rationals, words
from freealg.core import (
    DEGLEX,
    MonomialOrder,
    NcPoly,
    commutator,
    compose,
    degree_split,
    format_word,
    weighted_degree,
)

P = NcPoly.word


def test_deglex_compares_degree_then_letters():
    assert DEGLEX.less("yy", "xyx")
    assert DEGLEX.less("yx", "xy")
    assert DEGLEX.max(["xyx", "yxx", "xxy"]) == "xxy"
    assert MonomialOrder("yx").less("xy", "yx")


def test_leading_word_of_example_polynomial():
    assert (P("xyx") + P("yxx")).leading_word() == "xyx"
    assert ((P("xy") + P("yx")) * P("yxx")).leading_word() == "xyyxx"


def test_printing_is_canonical():
    p = P("xxy", Fraction(3, 2)) - P("yx") + 2
    assert str(p) == "3/2 x^2y - yx + 2"
    assert str(NcPoly.zero()) == "0"
    assert str(-P("x")) == "-x"
    assert format_word("xxyxxx") == "x^2yx^3"
    assert format_word("") == ""
    assert str(NcPoly.constant(Fraction(-1, 3))) == "-1/3"


def test_constructor_drops_zeros_and_rejects_floats():
    assert NcPoly({"x": 0, "y": 1}) == P("y")
    with pytest.raises(TypeError):
        NcPoly({"x": 0.5})
    with pytest.raises(ValueError):
        NcPoly.zero().degree


def test_commutator_of_letters():
    assert commutator(P("x"), P("y")) == P("xy") - P("yx")


def test_components_and_split():
    p = P("xyx") + P("yxx") - P("x") + 4
    assert p.components().keys() == {0, 1, 3}
    s = degree_split(p)
    assert s.degree == 3
    assert s.leading_component == P("xyx") + P("yxx")
    assert s.leading_term == ("xyx", 1)


def test_compose_and_weighted_degree():
    p = P("xy") - P("yx")
    f, g = P("x") + P("yyy"), P("y")
    assert compose(p, f, g) == P("xy") - P("yx")
    assert weighted_degree(p, {"x": 3, "y": 1}) == 4
    with pytest.raises(ValueError):
        compose(P("z"), f, g)


@given(nonzero_polys, nonzero_polys)
def test_no_zero_divisors_and_degree_additive(p, q):
    pq = p * q
    assert pq
    assert pq.degree == p.degree + q.degree


@given(nonzero_polys, nonzero_polys)
def test_leading_words_multiply(p, q):
    assert (p * q).leading_word() == p.leading_word() + q.leading_word()


@given(polys(), polys(), polys())
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert (p + q) * r == p * r + q * r
    assert p - p == NcPoly.zero()
    assert p * 1 == p == 1 * p


@given(polys(), polys(), polys())
def test_commutator_identities(a, b, c):
    assert commutator(a, b) == -commutator(b, a)
    assert commutator(a, b * c) == commutator(a, b) * c + b * commutator(a, c)
    jacobi = commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) + commutator(c, commutator(a, b))
    assert not jacobi


@given(polys(), rationals)
def test_scalars_are_central(p, c):
    assert p * NcPoly.constant(c) == NcPoly.constant(c) * p == p.scale(c)


@given(words(), words())
def test_monomial_product_is_concatenation(v, w):
    assert P(v) * P(w) == P(v + w)


@given(nonzero_polys, st.integers(min_value=0, max_value=3))
def test_power_degree(p, e):
    assert (p ** e).degree == e * p.degree
