"""The expansion functor ``Δ ↦ Δ^α`` and its single-vertex building block."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable

from expanse._bits import bits
from expanse.complex import SimplicialComplex, Vertex, as_vertex, face
from expanse.homology import chain_map_matrix, induced_map_is_surjective
from expanse.linalg import QQ


@dataclass(frozen=True)
class ExpansionVector:
    """Copy counts ``(s_1, ..., s_n)``, one per universe vertex, each ``>= 1``."""

    s: tuple

    def __post_init__(self):
        s = tuple(int(x) for x in self.s)
        if any(x < 1 for x in s):
            raise ValueError(f"expansion entries must be >= 1: {s}")
        object.__setattr__(self, "s", s)

    @classmethod
    def parse(cls, text: str) -> "ExpansionVector":
        parts = [p for p in text.replace(" ", "").split(",") if p]
        if not parts:
            raise ValueError("empty expansion vector")
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def ones(cls, n: int) -> "ExpansionVector":
        return cls((1,) * n)

    def __len__(self) -> int:
        return len(self.s)

    def __iter__(self):
        return iter(self.s)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.s)

    def total(self) -> int:
        return sum(self.s)

    def r(self) -> int:
        return sum(1 for x in self.s if x > 1)


def as_alpha(alpha) -> ExpansionVector:
    if isinstance(alpha, ExpansionVector):
        return alpha
    if isinstance(alpha, str):
        return ExpansionVector.parse(alpha)
    return ExpansionVector(tuple(alpha))


def _copies(cx: SimplicialComplex, alpha: ExpansionVector) -> dict:
    if len(alpha) != len(cx.universe):
        raise ValueError(f"expansion vector has length {len(alpha)}, universe has {len(cx.universe)}")
    if any(v.copy != 1 for v in cx.universe):
        raise ValueError("expand() needs an unexpanded complex (all copy indices 1)")
    return {v: s for v, s in zip(cx.universe, alpha)}


def expanded_universe(cx: SimplicialComplex, alpha) -> tuple:
    alpha = as_alpha(alpha)
    copies = _copies(cx, alpha)
    return tuple(Vertex(v.base, j) for v in cx.universe for j in range(1, copies[v] + 1))


def expand(cx: SimplicialComplex, alpha) -> SimplicialComplex:
    """``Δ^α``: every facet replaced by all of its copy selections."""
    alpha = as_alpha(alpha)
    if cx.is_void:
        raise ValueError("cannot expand the void complex")
    copies = _copies(cx, alpha)
    uni = expanded_universe(cx, alpha)
    index = {v: i for i, v in enumerate(uni)}
    masks = []
    for f in cx.facet_masks:
        verts = [cx.universe[i] for i in bits(f)]
        choices = [[1 << index[Vertex(v.base, j)] for j in range(1, copies[v] + 1)] for v in verts]
        for pick in product(*choices):
            masks.append(sum(pick))
    # facets of distinct facets never nest, so the selections form an antichain
    return SimplicialComplex.from_masks(uni, masks, antichain=True)


def restrict_alpha(alpha, universe: Iterable, sub_universe: Iterable) -> ExpansionVector:
    """Entries of ``alpha`` (indexed by ``universe``) for the vertices of ``sub_universe``."""
    alpha = as_alpha(alpha)
    table = dict(zip(universe, alpha))
    return ExpansionVector(tuple(table[v] for v in sub_universe))


def next_copy(cx: SimplicialComplex, base: int) -> Vertex:
    used = [v.copy for v in cx.universe if v.base == base]
    return Vertex(base, max(used, default=0) + 1)


def duplicate_vertex(cx: SimplicialComplex, vertex) -> SimplicialComplex:
    """``Δ ∪ ⟨(F ∖ {x}) ∪ {x'} : x ∈ F⟩`` with ``x'`` the next free copy of ``x``."""
    x = as_vertex(vertex)
    if x not in cx.vertices:
        raise ValueError(f"{x} is not a vertex of the complex")
    new = next_copy(cx, x.base)
    uni = tuple(sorted(cx.universe + (new,)))
    index = {v: i for i, v in enumerate(uni)}
    bx, bn = 1 << index[x], 1 << index[new]
    masks = []
    for f in cx.facets:
        m = sum(1 << index[v] for v in f)
        masks.append(m)
        if m & bx:
            masks.append((m & ~bx) | bn)
    return SimplicialComplex.from_masks(uni, masks, antichain=True)


def contract_face(f) -> frozenset:
    """Forget copy indices: ``{x_{ij}} ↦ {x_i}``."""
    return frozenset(Vertex(v.base) for v in face(f))


def contract_vertex(v) -> Vertex:
    return Vertex(as_vertex(v).base)


def iterated_duplication_decomposition(cx: SimplicialComplex, alpha) -> list:
    """Chain of single duplications ending at ``Δ^α``.

    Returns ``[(Δ_1, x_1), ..., (Δ_m, x_m)]`` where ``Δ_t`` is obtained from
    ``Δ_{t-1}`` by duplicating ``x_t`` (``Δ_0 = Δ``) and ``m = Σ s_i - n``.
    """
    alpha = as_alpha(alpha)
    copies = _copies(cx, alpha)
    steps = []
    cur = cx
    for v in cx.universe:
        for _ in range(copies[v] - 1):
            cur = duplicate_vertex(cur, v)
            steps.append((cur, v))
    return steps


def homology_epimorphism_check(cx: SimplicialComplex, alpha, i: int, field=QQ) -> bool:
    """Check that contraction ``Δ^α → Δ`` induces a surjection on ``H̃_i``.

    The chain map is verified to commute with the boundary in degrees ``i``
    and ``i + 1`` first (``ArithmeticError`` otherwise).
    """
    d = cx.dim()
    if not -1 <= i <= d:
        raise ValueError(f"degree {i} outside [-1, {d}]")
    big = expand(cx, alpha)
    for q in (i, i + 1):
        chain_map_matrix(big, cx, contract_vertex, q)
    return induced_map_is_surjective(big, cx, contract_vertex, i, field)
