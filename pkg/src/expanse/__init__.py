"""Expansions of simplicial complexes, their Stanley-Reisner ideals and invariants."""

from expanse.complex import (
    RelativeComplex, SimplicialComplex, Vertex, alexander_dual, core, deletion, induced_subcomplex,
    link, omega, parse_facet_list, pure_skeleton, read_complex, reduced_euler_characteristic, star,
)
from expanse.errors import InconsistencyError, SearchLimitExceeded
from expanse.expansion import (
    ExpansionVector, duplicate_vertex, expand, homology_epimorphism_check,
    iterated_duplication_decomposition,
)
from expanse.homology import HomologyProfile, chain_map_matrix, reduced_homology, relative_homology
from expanse.ideals import (
    Monomial, MonomialIdeal, alexander_dual_ideal, colon_split, complex_of, facet_ideal,
    is_k_decomposable_ideal, is_shedding_monomial, linear_quotients_order, linear_resolution_check,
    parse_ideal, stanley_reisner_ideal,
)
from expanse.invariants import (
    BettiTable, FineDegree, betti_table, big_height, block_contraction, depth, local_cohomology_dim,
    projective_dimension, regularity,
)
from expanse.linalg import GF2, QQ, Field
from expanse.properties import (
    PropertyVerdict, is_buchsbaum, is_clean, is_cohen_macaulay, is_euler, is_gorenstein,
    is_k_decomposable, is_sequentially_cm, is_shellable,
)

__version__ = "0.1.0"

__all__ = [
    "RelativeComplex", "SimplicialComplex", "Vertex", "alexander_dual", "core", "deletion",
    "induced_subcomplex", "link", "omega", "parse_facet_list", "pure_skeleton", "read_complex",
    "reduced_euler_characteristic", "star", "InconsistencyError", "SearchLimitExceeded",
    "ExpansionVector", "duplicate_vertex", "expand", "homology_epimorphism_check",
    "iterated_duplication_decomposition", "HomologyProfile", "chain_map_matrix",
    "reduced_homology", "relative_homology", "Monomial", "MonomialIdeal", "alexander_dual_ideal",
    "colon_split", "complex_of", "facet_ideal", "is_k_decomposable_ideal", "is_shedding_monomial",
    "linear_quotients_order", "linear_resolution_check", "parse_ideal", "stanley_reisner_ideal",
    "BettiTable", "FineDegree", "betti_table", "big_height", "block_contraction", "depth",
    "local_cohomology_dim", "projective_dimension", "regularity", "PropertyVerdict",
    "is_buchsbaum", "is_clean", "is_cohen_macaulay", "is_euler", "is_gorenstein",
    "is_k_decomposable", "is_sequentially_cm", "is_shellable", "GF2", "QQ", "Field",
]
