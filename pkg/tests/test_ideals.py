import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import D, SIMPLEX2, T, complexes, int_facets
from expanse import SimplicialComplex, Vertex
from expanse.complex import alexander_dual, complement
from expanse.harness import ideal_identities
from expanse.ideals import (
    Monomial, MonomialIdeal, alexander_dual_ideal, colon_ideal, colon_split, complex_of,
    facet_ideal, format_ideal, is_componentwise_linear, is_k_decomposable_ideal,
    is_shedding_monomial, k_decomposition_tree, linear_quotients_order, linear_resolution_check,
    parse_ideal, squarefree_component, stanley_reisner_ideal,
)
from expanse.linalg import GF2, QQ


def I(*gens):
    return MonomialIdeal(gens)


def test_monomial_parsing_and_printing():
    m = Monomial.parse("x1*x2^2")
    assert m.exponent(Vertex(2)) == 2 and m.degree == 3
    assert str(m) == "x1*x2^2"
    assert str(Monomial.parse("x1_2*x3")) == "x1_2*x3"
    assert Monomial.parse("1").is_one()


def test_minimal_generators():
    assert I("x1*x2", "x1", "x3").generators == I("x1", "x3").generators


def test_ideal_text_round_trip():
    ideal = I("x1*x3", "x2^2")
    assert parse_ideal(format_ideal(ideal)) == ideal
    assert parse_ideal("0\n").is_zero


def test_stanley_reisner_examples():
    assert stanley_reisner_ideal(T) == I("x1*x2*x3")
    assert stanley_reisner_ideal(D) == I("x1*x3", "x1*x4", "x2*x3", "x2*x4")
    assert stanley_reisner_ideal(SIMPLEX2).is_zero


def test_stanley_reisner_of_d_against_brute_force():
    non = oracles.minimal_nonfaces(int_facets(D), range(1, 5))
    assert {frozenset(v.base for v in g.support) for g in stanley_reisner_ideal(D).generators} == non


def test_facet_ideal_examples():
    assert facet_ideal(T) == I("x1*x2", "x1*x3", "x2*x3")
    assert facet_ideal(SimplicialComplex.irrelevant()).is_unit
    assert facet_ideal(D) == I("x1*x2", "x3*x4")


def test_alexander_dual_ideal_examples():
    assert alexander_dual_ideal(I("x1*x2*x3")) == I("x1", "x2", "x3")
    assert alexander_dual_ideal(stanley_reisner_ideal(D)) == I("x1*x2", "x3*x4")
    assert alexander_dual_ideal(I("x1")) == I("x1")
    with pytest.raises(ValueError):
        alexander_dual_ideal(I("x1^2"))


def test_colon_split_examples():
    low, up = colon_split(I("x1*x2", "x2*x3"), "x1")
    assert low == I("x2*x3") and up == I("x1*x2")
    low, up = colon_split(I("x1", "x2", "x3"), "x1")
    assert low == I("x2", "x3") and up == I("x1")
    low, up = colon_split(I("x1^2*x2"), "x1")
    assert low.is_zero and up == I("x1^2*x2")
    with pytest.raises(ValueError):
        colon_split(I("x1"), "1")


def test_shedding_monomial_examples():
    assert is_shedding_monomial(I("x1", "x2", "x3"), "x1")
    for u in ("x1", "x2", "x1*x2", "x3"):
        assert not is_shedding_monomial(I("x1*x2"), u)
    assert not is_shedding_monomial(I("x1*x2", "x3*x4"), "x1")


def test_k_decomposable_ideal_examples():
    assert is_k_decomposable_ideal(I("x1", "x2", "x3"), 0)
    assert is_k_decomposable_ideal(I("x1*x2^3*x5"), 0)
    assert not is_k_decomposable_ideal(I("x1*x2", "x3*x4"), 0)
    assert is_k_decomposable_ideal(MonomialIdeal.zero(), 0)
    tree = k_decomposition_tree(I("x1", "x2", "x3"), 0)
    assert tree[0] == "x1"


def test_k_decomposable_non_squarefree():
    # (x1^2, x1 x2) sheds x2: I_u = (x1^2), I^u = (x1 x2) and x1 x2 : x1^2 = x2
    assert is_k_decomposable_ideal(I("x1^2", "x1*x2"), 0)


def test_linear_quotients_examples():
    order = linear_quotients_order(I("x1*x2", "x1*x3"))
    assert [str(g) for g, _ in order] == ["x1*x2", "x1*x3"]
    assert order[1][1] == frozenset({Vertex(2)})
    assert linear_quotients_order(I("x1*x2", "x3*x4")) is None
    assert linear_quotients_order(I("x1")) == [(Monomial.parse("x1"), frozenset())]
    with pytest.raises(ValueError):
        linear_quotients_order(MonomialIdeal.zero())


def test_linear_resolution_examples():
    assert linear_resolution_check(I("x1", "x2", "x3"), 1)
    assert linear_resolution_check(stanley_reisner_ideal(alexander_dual(T)), 1)
    assert not linear_resolution_check(I("x1*x2", "x3*x4"), 2)
    with pytest.raises(ValueError):
        linear_resolution_check(I("x1", "x2*x3"), 1)


def test_componentwise_linear():
    assert is_componentwise_linear(I("x1", "x2*x3"), QQ)
    assert not is_componentwise_linear(I("x1*x2", "x3*x4"), QQ)
    assert squarefree_component(I("x1", "x2*x3"), 2) == I("x1*x2", "x1*x3", "x2*x3")


def test_duplication_identities_on_examples():
    for c in (T, D):
        for v in c.vertices:
            assert all(ideal_identities(c, v).values())


@given(complexes())
def test_round_trip_through_complex(c):
    assert complex_of(stanley_reisner_ideal(c)) == c


@given(complexes())
def test_dual_ideal_commutes(c):
    ideal = stanley_reisner_ideal(c)
    if ideal.is_zero:
        return
    assert alexander_dual_ideal(ideal) == stanley_reisner_ideal(alexander_dual(c))
    assert alexander_dual_ideal(alexander_dual_ideal(ideal)) == ideal
    assert facet_ideal(complement(c)) == alexander_dual_ideal(ideal)


@given(complexes(max_vertices=4), st.data())
def test_duplication_identities(c, data):
    v = data.draw(st.sampled_from(c.vertices))
    res = ideal_identities(c, v)
    assert all(res.values()), res


@given(complexes(max_vertices=5))
def test_linear_quotients_replay(c):
    ideal = facet_ideal(c)
    order = linear_quotients_order(ideal)
    if order is None:
        return
    placed = []
    for g, label in order:
        col = colon_ideal(placed, g) if placed else MonomialIdeal()
        assert all(m.degree == 1 for m in col.generators)
        assert frozenset(v for m in col.generators for v in m.support) == label
        placed.append(g)


@given(complexes(max_vertices=4))
def test_k_monotone(c):
    ideal = stanley_reisner_ideal(alexander_dual(c))
    verdicts = [is_k_decomposable_ideal(ideal, k) for k in range(4)]
    assert verdicts == sorted(verdicts)


@given(complexes(max_vertices=5))
def test_componentwise_linear_field_agreement(c):
    ideal = stanley_reisner_ideal(alexander_dual(c))
    assert is_componentwise_linear(ideal, QQ) == is_componentwise_linear(ideal, GF2)
