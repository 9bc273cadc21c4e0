import pytest
from hypothesis import given

import oracles
from conftest import D, P, SIMPLEX2, T, complexes, cx, int_facets
from expanse import SimplicialComplex, Vertex
from expanse.complex import (
    alexander_dual, complement, core, deletion, f_vector, face, format_facet_list, intersection,
    join, link, omega, parse_facet_list, pure_skeleton, reduced_euler_characteristic, skeleton,
    star, union,
)
from expanse.homology import reduced_homology
from expanse.ideals import facet_ideal, stanley_reisner_ideal
from expanse.linalg import QQ


def test_vertex_names_round_trip():
    assert str(Vertex(3)) == "x3"
    assert str(Vertex(1, 2)) == "x1_2"
    assert Vertex.parse("x1_2") == Vertex(1, 2)
    assert Vertex.parse("4") == Vertex(4)
    with pytest.raises(ValueError):
        Vertex.parse("y1")


def test_dim_and_purity():
    assert T.dim() == 1 and T.is_pure()
    assert P.dim() == 1 and not P.is_pure()
    irr = SimplicialComplex.irrelevant()
    assert irr.dim() == -1 and irr.is_pure()
    with pytest.raises(ValueError, match="void"):
        SimplicialComplex.void().dim()


def test_void_and_irrelevant_differ():
    assert SimplicialComplex.void() != SimplicialComplex.irrelevant()
    assert SimplicialComplex.void().faces() == set()
    assert SimplicialComplex.irrelevant().faces() == {frozenset()}


def test_non_maximal_generators_are_dropped():
    assert cx({1, 2}, {1}, {2}) == cx({1, 2})


def test_universe_must_contain_facets():
    with pytest.raises(ValueError):
        cx({1, 5}, universe=[1, 2])


def test_link_deletion_star():
    assert link(T, [2]) == cx({1}, {3})
    assert link(T, []) == T
    assert deletion(T, [1]) == cx({2, 3})
    assert star(T, [1]) == cx({1, 2}, {1, 3})
    with pytest.raises(ValueError):
        link(T, [1, 2, 3])


def test_alexander_dual_examples():
    assert alexander_dual(T) == SimplicialComplex.irrelevant()
    assert alexander_dual(D) == cx({1, 3}, {1, 4}, {2, 3}, {2, 4})
    assert alexander_dual(SIMPLEX2).is_void


def test_alexander_dual_of_d_against_brute_force():
    assert int_facets(alexander_dual(D)) == oracles.alexander_dual(int_facets(D), range(1, 5))


def test_complement_examples():
    assert complement(T) == cx({3}, {2}, {1})
    assert complement(D) == cx({3, 4}, {1, 2})
    assert complement(SIMPLEX2) == SimplicialComplex.irrelevant()


def test_core_examples():
    assert core(T) == T
    assert core(SIMPLEX2) == SimplicialComplex.irrelevant()
    cone = join(cx({4}), T)
    assert core(cone) == T


def test_skeletons():
    assert pure_skeleton(P, 1) == cx({1, 2})
    assert pure_skeleton(P, 0) == cx({1}, {2}, {3})
    assert skeleton(T, 0) == cx({1}, {2}, {3})
    with pytest.raises(ValueError):
        skeleton(T, 2)


def test_omega_examples():
    om = omega(P, 1)
    assert om.ambient == cx({1, 2})
    assert om.sub.is_void
    assert om.member_faces == cx({1, 2}).faces()
    assert omega(P, 0).member_faces == {face([3])}
    assert omega(T, 1).member_faces == T.faces()
    with pytest.raises(ValueError):
        omega(T, 0)


def test_f_vector_and_euler():
    assert f_vector(T) == [3, 3] and reduced_euler_characteristic(T) == -1
    assert f_vector(SIMPLEX2) == [3, 3, 1] and reduced_euler_characteristic(SIMPLEX2) == 0
    assert reduced_euler_characteristic(SimplicialComplex.irrelevant()) == -1


def test_join_examples():
    # the cone decomposition used for duplication: <x, x'> * <F - x>
    j = join(cx({1}, {5}), cx({2, 3}))
    assert j == cx({1, 2, 3}, {5, 2, 3})
    assert join(cx({1}), SimplicialComplex.irrelevant()) == cx({1})
    assert join(cx({1}), SimplicialComplex.void()).is_void
    with pytest.raises(ValueError):
        join(T, T)


def test_facet_list_round_trip():
    text = "x1 x2\nx1 x3  # comment\n\nx2 x3\n"
    parsed = parse_facet_list(text)
    assert parsed == T
    assert parse_facet_list(format_facet_list(parsed)) == parsed
    assert parse_facet_list("VOID\n").is_void
    assert parse_facet_list("EMPTYFACE\n") == SimplicialComplex.irrelevant()
    with pytest.raises(ValueError):
        parse_facet_list("# nothing\n")


@given(complexes())
def test_faces_match_brute_force(c):
    assert {frozenset(v.base for v in f) for f in c.faces()} == oracles.all_faces(int_facets(c))


@given(complexes())
def test_link_and_deletion_match_brute_force(c):
    for f in c.faces():
        fi = frozenset(v.base for v in f)
        assert int_facets(link(c, f).with_universe(c.universe)) == oracles.link(int_facets(c), fi)
        assert int_facets(deletion(c, f).with_universe(c.universe)) == \
            oracles.deletion(int_facets(c), fi)


@given(complexes())
def test_double_dual(c):
    assert alexander_dual(alexander_dual(c), c.universe) == c


@given(complexes())
def test_facet_ideal_of_complement_is_dual_ideal(c):
    assert facet_ideal(complement(c)) == stanley_reisner_ideal(alexander_dual(c))


@given(complexes())
def test_euler_poincare(c):
    ranks = reduced_homology(c, QQ).ranks
    assert reduced_euler_characteristic(c) == sum((-1) ** q * r for q, r in enumerate(ranks, start=-1))


@given(complexes(), complexes())
def test_union_and_intersection_faces(a, b):
    assert union(a, b).faces() == a.faces() | b.faces()
    assert intersection(a, b).faces() == a.faces() & b.faces()
