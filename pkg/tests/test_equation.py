import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from freealg.bimodule import UPoly2
from freealg.core import NcPoly, commutator
from freealg.equation import (
    EquationSpec,
    FreeFamilyParams,
    OverlapFamilyParams,
    assemble_and_verify,
    completeness_check,
    enumerate_solution_space,
    family_basis,
    free_generators,
    overlap_coefficients,
    phi,
    solve_free_part,
    solve_overlap_part,
)
from freealg.verify import overlap_a_range, random_family_trial
from freealg.words import overlap_pairs

P = NcPoly.word
u1, u2 = UPoly2.u1, UPoly2.u2


def test_spec_validation():
    EquationSpec("xyx", 1, 3, 2)
    with pytest.raises(ValueError, match="coprime"):
        EquationSpec("xyx", 1, 4, 2)
    with pytest.raises(ValueError):
        EquationSpec("xyx", 1, 2, 3)
    with pytest.raises(ValueError, match="primitive"):
        EquationSpec("xyxy", 1, 3, 2)
    with pytest.raises(ValueError):
        EquationSpec("xyx", 0, 3, 2)


def test_phi_small_values():
    assert phi(0, 1) == UPoly2.zero()
    assert phi(1, 2) == UPoly2.constant(1)
    assert phi(3, 1) == u1(2) + u1() * u2() + u2(2)


@given(st.integers(min_value=0, max_value=7), st.integers(min_value=1, max_value=3))
def test_phi_is_a_quotient(b, l):
    assert phi(b, l) * (u1(l) - u2(l)) == u1(l * b) - u2(l * b)


@given(st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=6), st.integers(min_value=1, max_value=2))
def test_phi_addition(b, c, l):
    assert phi(b + c, l) == phi(b, l) * u1(l * c) + u2(l * b) * phi(c, l)


def test_free_family_solves():
    spec = EquationSpec("xyx", 1, 3, 2)
    r, s = solve_free_part(spec, FreeFamilyParams("yy", u1() + 2))
    assert not spec.defect(r, s)
    with pytest.raises(ValueError):
        solve_free_part(spec, FreeFamilyParams("xy", UPoly2.constant(1)))


def test_overlap_family_small_example():
    spec = EquationSpec("xyx", 1, 5, 2)
    pair = overlap_pairs("xyx")[0]
    params = OverlapFamilyParams(pair, 1, Fraction(1), UPoly2.constant(1))
    p1, p2, q1, q2 = overlap_coefficients(spec, params)
    assert p1 == u1(4) and q1 == u1()
    assert not p1.involves_u2() and not q1.involves_u2()
    r, s = solve_overlap_part(spec, params)
    assert commutator(spec.left, s) == commutator(spec.right, r)


def test_overlap_family_gives_counterexample_pair():
    # a = 0, xi = 1 with u = (xy)^2 x and l = 1, (m, n) = (3, 2) gives r = uv + uw + wu
    u = "xyxyx"
    spec = EquationSpec(u, 1, 3, 2)
    r, s = solve_overlap_part(spec, OverlapFamilyParams(overlap_pairs(u)[0], 0, Fraction(1)))
    assert r == P(u + "xy") + P(u + "yx") + P("yx" + u)
    assert s == P("xy") + P("yx")


def test_overlap_parameter_errors():
    spec = EquationSpec("xyx", 2, 3, 2)
    pair = overlap_pairs("xyx")[0]
    with pytest.raises(ValueError, match="a\\+1 < l\\(n-1\\)"):
        overlap_coefficients(spec, OverlapFamilyParams(pair, 0, Fraction(1)))
    with pytest.raises(ValueError):
        overlap_coefficients(spec, OverlapFamilyParams(pair, 3, Fraction(1), u1(2)))


def test_assembled_solution():
    spec = EquationSpec("xyx", 1, 3, 2)
    sol = assemble_and_verify(
        spec, [1, 2], [Fraction(1, 2)],
        [FreeFamilyParams("yy", u1() + u2())],
        [OverlapFamilyParams(overlap_pairs("xyx")[0], 0, Fraction(1))],
    )
    assert not spec.defect(sol.r, sol.s)
    assert sol.r.coeff("") == 1 and sol.s.coeff("") == Fraction(1, 2)


def test_free_generators_exclude_borders():
    gens = free_generators("xyx", 4)
    assert "xy" not in gens and "yx" not in gens
    assert all(not t.startswith("xyx") and not t.endswith("xyx") for t in gens)


SMALL_SPECS = [
    EquationSpec("xyx", 1, 3, 2),
    EquationSpec("xyx", 1, 2, 1),
    EquationSpec("xxy", 1, 3, 2),
    EquationSpec("xy", 1, 3, 2),
    EquationSpec("x", 1, 3, 2),
    EquationSpec("xyx", 2, 3, 2),
]


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=lambda s: f"{s.u}-{s.l}-{s.m}-{s.n}")
def test_completeness_to_degree_six(spec):
    rep = completeness_check(spec, 6)
    assert rep.families_are_solutions
    assert rep.agrees, rep


def test_completeness_dimensions_for_xyx():
    rep = completeness_check(EquationSpec("xyx", 1, 3, 2), 6)
    assert (rep.oracle_dimension, rep.family_dimension, rep.joint_dimension) == (7, 7, 7)


def test_oracle_vectors_are_solutions():
    spec = EquationSpec("xyx", 1, 3, 2)
    for r, s in enumerate_solution_space(spec, 5):
        assert not spec.defect(r, s)
    for r, s in family_basis(spec, 5):
        assert not spec.defect(r, s)


@pytest.mark.parametrize("u", ["xyx", "xyxyx", "xxy"])
@given(seed=st.integers(min_value=0, max_value=10 ** 6))
def test_random_family_combinations(u, seed):
    rng = random.Random(seed)
    spec = EquationSpec(u, rng.choice([1, 2]), *rng.choice([(3, 2), (5, 2), (5, 3), (4, 3)]))
    a = rng.choice(list(overlap_a_range(spec, 4)))
    random_family_trial(spec, rng, a, free_generators(u, 3))
