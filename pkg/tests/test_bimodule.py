import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import polys, primitive_words, words
from freealg.bimodule import (
    GeneratorKind,
    UPoly2,
    basis_count,
    classify_generator,
    factor_monomial,
    free_generator_counts,
    from_bimodule_form,
    to_canonical_bimodule_form,
)
from freealg.core import NcPoly

P = NcPoly.word


def brute_factor(v, u):
    """Largest a, then largest b, with v = u^a t u^b and t not bordered by u."""
    n, best = len(u), None
    for a in range(len(v) // n + 1):
        if v[: a * n] != u * a:
            break
        rest = v[a * n:]
        for b in range(len(rest) // n + 1):
            if b and rest[len(rest) - b * n:] != u * b:
                break
            t = rest[: len(rest) - b * n]
            if not (t.startswith(u) or t.endswith(u)):
                best = (a, t, b)
    return best


def test_factor_examples():
    assert factor_monomial("xyxyyxyx", "xyx") == (1, "yy", 1)
    assert factor_monomial("xyxyx", "xyx") == (1, "yx", 0)
    assert factor_monomial("xyxxyx", "xyx") == (2, "", 0)
    with pytest.raises(ValueError):
        factor_monomial("xy", "xyxy")


@pytest.mark.parametrize("u", ["xyx", "xxy", "xyy", "xyxyx"])
def test_factor_matches_brute_force(u):
    for d in range(0, 3 * len(u) + 1):
        for letters in itertools.product("xy", repeat=d):
            v = "".join(letters)
            assert factor_monomial(v, u) == brute_factor(v, u)


def test_classification():
    u = "xyxyx"
    assert classify_generator("", u).kind is GeneratorKind.UNIT
    assert classify_generator("xy", u).kind is GeneratorKind.OVERLAP_FIRST
    g = classify_generator("yxyx", u)
    assert g.kind is GeneratorKind.OVERLAP_SECOND and g.pair_id == 4
    assert classify_generator("yy", u).kind is GeneratorKind.FREE
    with pytest.raises(ValueError):
        classify_generator("xyxyxy", u)


def test_upoly_action_and_printing():
    c = UPoly2.u1(2) * UPoly2.u2() + 3
    assert str(c) == "u1^2 u2 + 3"
    assert c.act("yy", "x") == P("xxyyx") + P("yy", 3)


def test_decomposition_example():
    u = "xyx"
    bf = to_canonical_bimodule_form(P("xyxyyxyx") + P("yy"), u)
    assert str(bf.free_part["yy"]) == "u1 u2 + 1"
    assert bf.is_normal()
    # u^a t1 u^b with b > 0 is rewritten through t1 u = u t2
    bf = to_canonical_bimodule_form(P("xy" + u), u)
    c1, c2 = bf.overlap_part[2]
    assert not c1 and c2 == UPoly2.u1()


@given(polys(max_len=8), primitive_words)
def test_decomposition_round_trip(p, u):
    bf = to_canonical_bimodule_form(p, u)
    assert bf.is_normal()
    assert from_bimodule_form(bf) == p


@pytest.mark.parametrize("u", ["xyx", "xxy", "xyy", "xyxyx", "x", "xy"])
def test_basis_count_is_total_word_count(u):
    for d in range(0, 3 * len(u) + 1):
        assert basis_count(u, d) == 2 ** d


def test_free_generator_counts_small():
    # u = xyx: length 2 loses the overlap pair xy/yx, length 3 loses u itself
    assert free_generator_counts("xyx", 3) == (0, 2, 2, 7)


@given(primitive_words, st.integers(min_value=0, max_value=3), words(max_size=4), st.integers(min_value=0, max_value=3))
def test_factorization_reconstructs(u, a, t, b):
    v = u * a + t + u * b
    a2, t2, b2 = factor_monomial(v, u)
    assert u * a2 + t2 + u * b2 == v
    assert a2 >= a
    assert not t2.startswith(u) and not t2.endswith(u)
