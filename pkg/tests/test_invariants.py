import pytest
from hypothesis import given

import oracles
from conftest import D, P, SIMPLEX2, T, complexes, cx, int_facets
from expanse import SimplicialComplex
from expanse.complex import alexander_dual, link
from expanse.errors import InconsistencyError
from expanse.expansion import expand
from expanse.ideals import MonomialIdeal, linear_resolution_check, stanley_reisner_ideal
from expanse.invariants import (
    betti_table, big_height, block_contraction, depth, local_cohomology_dim, projective_dimension,
    regularity,
)
from expanse.linalg import GF2, QQ
from expanse.properties import is_cohen_macaulay

T_ALPHA = expand(T, (2, 1, 1))


def test_betti_table_examples():
    assert betti_table(T).entries == {(0, 0): 1, (1, 3): 1}
    table = betti_table(D)
    assert table.projective_dimension() == 3
    assert table.entries[(3, 4)] == 1
    irr = betti_table(SimplicialComplex.irrelevant([1]))
    assert irr.entries == {(0, 0): 1, (1, 1): 1}


def test_betti_table_of_d_against_hochster_brute_force():
    want = oracles.hochster(int_facets(D), range(1, 5))
    assert betti_table(D).entries == want


def test_regularity_and_pd_examples():
    assert regularity(T) == 3
    assert projective_dimension(D) == 3
    assert regularity(D) == 2
    assert regularity(alexander_dual(D)) == 3
    assert regularity(SIMPLEX2) == 0 and projective_dimension(SIMPLEX2) == 0
    with pytest.raises(ValueError):
        regularity(T, module="bogus")


def test_depth_examples():
    assert depth(T) == 2
    assert depth(D) == 1
    assert depth(SIMPLEX2) == 3
    with pytest.raises(ValueError):
        depth(SimplicialComplex.void())


def test_big_height_examples():
    assert big_height(T) == 1
    assert big_height(P) == 2
    assert big_height(T_ALPHA) == 2


def test_local_cohomology_examples():
    assert local_cohomology_dim(T, 2, (0, 0, 0)) == 1
    assert local_cohomology_dim(T, 1, (0, 0, 0)) == 0
    assert local_cohomology_dim(T, 2, (1, 0, 0)) == 0
    # supp(a) = {x1, x2, x3} is not a face
    assert local_cohomology_dim(T, 0, (-1, -1, -1)) == 0
    # F = {x1}: lk is two points, H̃_0 = 1 sits in degree i = 0 + 1 + 1
    assert local_cohomology_dim(T, 2, (-1, 0, 0)) == 1


def test_block_contraction_examples():
    assert block_contraction((-1, -1, 0, 0), (2, 1, 1)) == (-2, 0, 0)
    assert block_contraction((0, 0, 0, 0), (2, 1, 1)) == (0, 0, 0)
    assert block_contraction((3, -1, 2), (1, 1, 1)) == (3, -1, 2)
    with pytest.raises(ValueError):
        block_contraction((0, 0), (2, 1, 1))


def test_zero_ideal_conventions():
    zero = MonomialIdeal.zero([1, 2])
    assert regularity(zero) == 0 and projective_dimension(zero, module="ideal") == 0


def test_pd_on_expanded_triangle():
    assert projective_dimension(T_ALPHA) == 2 and depth(T_ALPHA) == 2


@given(complexes())
def test_betti_table_matches_brute_force(c):
    for f, p in ((QQ, 0), (GF2, 2)):
        assert betti_table(c, f).entries == oracles.hochster(int_facets(c), range(1, len(c.universe) + 1), p)


@given(complexes())
def test_depth_routes_agree(c):
    for f in (QQ, GF2):
        lc = depth(c, f, method="local_cohomology")
        ab = depth(c, f, method="auslander_buchsbaum")
        assert lc == ab == depth(c, f, method="both")


@given(complexes())
def test_auslander_buchsbaum(c):
    assert depth(c) + projective_dimension(c) == len(c.universe)


@given(complexes(max_vertices=5))
def test_eagon_reiner(c):
    n, d = len(c.universe), c.dim()
    dual = stanley_reisner_ideal(alexander_dual(c))
    cm = is_cohen_macaulay(c, QQ).result
    if dual.degrees() == {n - d - 1}:
        assert cm == linear_resolution_check(dual, n - d - 1, QQ)
    else:
        assert not cm


@given(complexes())
def test_regularity_does_not_grow_on_links(c):
    r = regularity(c, module="quotient")
    for v in c.vertices:
        assert regularity(link(c, [v]), module="quotient") <= r


@given(complexes())
def test_pd_is_big_height_for_cm(c):
    if is_cohen_macaulay(c).result:
        assert projective_dimension(c) == big_height(c)


def test_depth_inconsistency_is_reported(monkeypatch):
    import expanse.invariants as inv

    monkeypatch.setattr(inv, "depth_by_local_cohomology", lambda *a, **k: 99)
    with pytest.raises(InconsistencyError):
        inv.depth(cx({1, 2}), QQ, method="both")
