import pytest
from hypothesis import given

from conftest import D, P, T, complex_and_alpha, cx
from expanse import SimplicialComplex, Vertex
from expanse.complex import core, intersection, link, omega, union
from expanse.expansion import (
    ExpansionVector, as_alpha, contract_face, duplicate_vertex, expand, homology_epimorphism_check,
    iterated_duplication_decomposition, restrict_alpha,
)
from expanse.homology import reduced_homology
from expanse.linalg import GF2, QQ

V = Vertex


def test_expansion_vector_parsing():
    a = ExpansionVector.parse("2, 1,1")
    assert a.s == (2, 1, 1) and a.total() == 4 and a.r() == 1
    assert str(a) == "2,1,1"
    with pytest.raises(ValueError):
        ExpansionVector((0, 1))


def test_triangle_expansion_facets():
    big = expand(T, (2, 1, 1))
    want = SimplicialComplex([
        [V(1, 1), V(2, 1)], [V(1, 2), V(2, 1)], [V(1, 1), V(3, 1)], [V(1, 2), V(3, 1)],
        [V(2, 1), V(3, 1)],
    ])
    assert big == want


def test_trivial_expansion_is_identity():
    for c in (T, D, P):
        assert expand(c, (1,) * len(c.universe)) == c


def test_point_expansion():
    assert expand(cx({1}), (3,)) == SimplicialComplex([[V(1, 1)], [V(1, 2)], [V(1, 3)]])


def test_length_mismatch():
    with pytest.raises(ValueError):
        expand(T, (2, 1))


def test_duplicate_vertex_examples():
    assert duplicate_vertex(P, 3) == SimplicialComplex([[1, 2], [V(3, 1)], [V(3, 2)]])
    assert duplicate_vertex(T, 1) == expand(T, (2, 1, 1))
    assert duplicate_vertex(cx({1}), 1) == SimplicialComplex([[V(1, 1)], [V(1, 2)]])
    with pytest.raises(ValueError):
        duplicate_vertex(T, 7)


def test_contract_face():
    assert contract_face([V(1, 1), V(1, 2), V(2, 1)]) == frozenset({V(1), V(2)})
    assert contract_face([]) == frozenset()
    assert contract_face([V(3, 1)]) == frozenset({V(3)})


def test_iterated_duplication():
    steps = iterated_duplication_decomposition(T, (2, 1, 1))
    assert [v for _, v in steps] == [V(1)]
    assert iterated_duplication_decomposition(T, (1, 1, 1)) == []
    steps = iterated_duplication_decomposition(cx({1}), (3,))
    assert len(steps) == 2
    by_hand = duplicate_vertex(duplicate_vertex(cx({1}), 1), 1)
    assert steps[-1][0] == by_hand == SimplicialComplex([[V(1, 1)], [V(1, 2)], [V(1, 3)]])


def test_epimorphism_examples():
    assert homology_epimorphism_check(T, (2, 1, 1), 1, QQ)
    assert homology_epimorphism_check(D, (2, 1, 1, 1), 0, QQ)
    for i in range(-1, 2):
        assert homology_epimorphism_check(T, (1, 1, 1), i, QQ)
    with pytest.raises(ValueError):
        homology_epimorphism_check(T, (2, 1, 1), 3)


@given(complex_and_alpha())
def test_dimension_and_purity_preserved(pair):
    c, alpha = pair
    big = expand(c, alpha)
    assert big.dim() == c.dim()
    assert big.is_pure() == c.is_pure()


@given(complex_and_alpha())
def test_iterated_duplication_reaches_expansion(pair):
    c, alpha = pair
    steps = iterated_duplication_decomposition(c, alpha)
    assert len(steps) == sum(alpha) - len(alpha)
    end = steps[-1][0] if steps else c
    assert end == expand(c, alpha)


@given(complex_and_alpha())
def test_link_identity_on_expanded_facets(pair):
    c, alpha = pair
    big = expand(c, alpha)
    for f in c.faces():
        for g in expand(SimplicialComplex([f], universe=c.universe), alpha).facets:
            lk = link(c, f)
            sub_alpha = restrict_alpha(alpha, c.universe, lk.universe) if lk.universe else ()
            want = expand(lk, sub_alpha) if lk.universe else lk
            assert link(big, g) == want


@given(complex_and_alpha(), complex_and_alpha())
def test_expansion_distributes(p1, p2):
    a, alpha = p1
    b = p2[0]
    n = max(len(a.universe), len(b.universe))
    uni = range(1, n + 1)
    a, b = a.with_universe(uni), b.with_universe(uni)
    alpha = tuple(alpha) + (2,) * (n - len(alpha))
    assert expand(union(a, b), alpha) == union(expand(a, alpha), expand(b, alpha))
    meet = intersection(a, b).with_universe(uni)
    assert expand(meet, alpha) == intersection(expand(a, alpha), expand(b, alpha))


@given(complex_and_alpha())
def test_homology_ranks_do_not_drop(pair):
    c, alpha = pair
    big = expand(c, alpha)
    for field in (QQ, GF2):
        small = reduced_homology(c, field).ranks
        large = reduced_homology(big, field).ranks
        assert all(x >= y for x, y in zip(large, small))


@given(complex_and_alpha(max_vertices=4))
def test_epimorphism_in_every_degree(pair):
    c, alpha = pair
    for i in range(-1, c.dim() + 1):
        assert homology_epimorphism_check(c, alpha, i, QQ)


@given(complex_and_alpha())
def test_core_commutes_with_expansion(pair):
    c, alpha = pair
    if core(c) != c:
        return
    assert core(expand(c, alpha)) == expand(c, alpha)


@given(complex_and_alpha())
def test_omega_member_faces_expand(pair):
    c, alpha = pair
    big = expand(c, alpha)
    for i in {len(f) - 1 for f in c.facets}:
        om = omega(c, i)
        amb = expand(om.ambient.with_universe(c.universe), alpha).faces()
        sub = set() if om.sub.is_void else expand(om.sub.with_universe(c.universe), alpha).faces()
        assert amb - sub == omega(big, i).member_faces


def test_as_alpha_accepts_strings_and_tuples():
    assert as_alpha("2,1") == as_alpha((2, 1)) == ExpansionVector((2, 1))
