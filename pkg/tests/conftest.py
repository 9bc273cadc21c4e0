from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from expanse import SimplicialComplex

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


def cx(*facets, universe=None):
    return SimplicialComplex([list(f) for f in facets], universe=universe)


T = cx({1, 2}, {1, 3}, {2, 3})
D = cx({1, 2}, {3, 4})
P = cx({1, 2}, {3})
SIMPLEX2 = cx({1, 2, 3})


def int_facets(c):
    """Facets as frozensets of 1-based positions in the universe (oracle format)."""
    pos = {v: i + 1 for i, v in enumerate(c.universe)}
    return {frozenset(pos[v] for v in f) for f in c.facets}


@st.composite
def complexes(draw, min_vertices=1, max_vertices=5, max_facets=6):
    n = draw(st.integers(min_vertices, max_vertices))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), min_size=1, max_size=max_facets))
    covered = 0
    for m in masks:
        covered |= m
    masks[0] |= ((1 << n) - 1) & ~covered
    facets = [[v + 1 for v in range(n) if m >> v & 1] for m in masks]
    return SimplicialComplex(facets, universe=range(1, n + 1))


@st.composite
def complex_and_alpha(draw, max_vertices=4, max_copies=2, **kw):
    c = draw(complexes(max_vertices=max_vertices, **kw))
    alpha = tuple(draw(st.lists(st.integers(1, max_copies), min_size=len(c.universe),
                                max_size=len(c.universe))))
    return c, alpha

