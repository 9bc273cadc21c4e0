"""Reduced and relative simplicial homology with field coefficients.

Chains live on faces oriented by the universe order; the boundary of
``[v_0 < ... < v_q]`` is ``Σ (-1)^k [.. v_k omitted ..]`` and the augmentation
sends every vertex to the empty face, so ``H̃_{-1}({∅}) = K``.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from expanse._bits import bits, faces_of, maximal as maximal_masks
from expanse.complex import RelativeComplex, SimplicialComplex, as_vertex
from expanse.linalg import QQ, Field, as_field, rank


@dataclass(frozen=True)
class HomologyProfile:
    """Ranks of ``H̃_q`` for ``q = -1 .. top``; ``ranks[0]`` is degree -1."""

    ranks: tuple
    field: Field = QQ

    def rank(self, q: int) -> int:
        i = q + 1
        if 0 <= i < len(self.ranks):
            return self.ranks[i]
        return 0

    __getitem__ = rank

    @property
    def top(self) -> int:
        return len(self.ranks) - 2

    def as_dict(self) -> dict[int, int]:
        return {q - 1: r for q, r in enumerate(self.ranks)}

    def euler_characteristic(self) -> int:
        return sum((-1) ** (q - 1) * r for q, r in enumerate(self.ranks))

    def is_acyclic(self) -> bool:
        return not any(self.ranks)

    def first_nonzero(self):
        for q, r in enumerate(self.ranks):
            if r:
                return q - 1
        return None


# -- chain complexes -------------------------------------------------------------

@lru_cache(maxsize=1 << 15)
def graded_faces(facets: tuple) -> tuple:
    """Faces of the complex generated by ``facets``, grouped by size (index 0 = ∅)."""
    fs = faces_of(facets)
    top = max((m.bit_count() for m in fs), default=-1)
    groups: list[list[int]] = [[] for _ in range(top + 1)]
    for m in fs:
        groups[m.bit_count()].append(m)
    return tuple(tuple(sorted(g)) for g in groups)


def boundary_vector(mask: int, index: Mapping[int, int]) -> dict:
    vec = {}
    for k, v in enumerate(bits(mask)):
        sub = mask ^ (1 << v)
        j = index.get(sub)
        if j is not None:
            vec[j] = -1 if k & 1 else 1
    return vec


def _boundary_vectors(upper: Iterable[int], lower: tuple) -> list[dict]:
    index = {m: i for i, m in enumerate(lower)}
    return [boundary_vector(m, index) for m in upper]


@lru_cache(maxsize=1 << 17)
def boundary_rank(facets: tuple, p: int, q: int) -> int:
    """Rank of ``∂_q : C̃_q → C̃_{q-1}`` (``q >= 0``) for the complex on ``facets``."""
    groups = graded_faces(facets)
    if q < 0 or q + 1 >= len(groups):
        return 0
    return rank(_boundary_vectors(groups[q + 1], groups[q]), p)


def _twin_to_drop(facets: tuple):
    """A vertex ``v`` with a twin ``u < v`` (their swap fixes the facets), or ``None``."""
    support = 0
    for f in facets:
        support |= f
    verts = list(bits(support))
    by_degree: dict[int, list[int]] = {}
    for v in verts:
        bit = 1 << v
        by_degree.setdefault(sum(1 for f in facets if f & bit), []).append(v)
    for group in by_degree.values():
        for i, u in enumerate(group):
            bu = 1 << u
            for v in group[i + 1:]:
                bv = 1 << v
                only_u = {f ^ bu for f in facets if f & bu and not f & bv}
                only_v = {f ^ bv for f in facets if f & bv and not f & bu}
                if only_u == only_v:
                    return v
    return None


def _is_cone(facets: tuple) -> bool:
    common = -1
    for f in facets:
        common &= f
    return bool(common) and bool(facets)


def _elimination_ranks(facets: tuple, p: int) -> tuple:
    groups = graded_faces(facets)
    out = []
    for size in range(len(groups)):
        q = size - 1
        out.append(len(groups[size]) - boundary_rank(facets, p, q) - boundary_rank(facets, p, q + 1))
    return tuple(out)


@lru_cache(maxsize=1 << 16)
def reduced_ranks(facets: tuple, p: int = 0) -> tuple:
    """``(rank H̃_{-1}, ..., rank H̃_dim)`` for a non-void facet tuple.

    Twin vertices are split off first: if ``u`` and ``v`` are twins then
    ``lk v`` lies in the cone ``star(u)`` of ``Δ ∖ v``, so Mayer-Vietoris gives
    ``H̃_i(Δ) = H̃_i(Δ ∖ v) ⊕ H̃_{i-1}(lk v)`` over any field.
    """
    if not facets:
        raise ValueError("void complex has no reduced homology")
    size = max(f.bit_count() for f in facets) + 1
    if _is_cone(facets):
        return (0,) * size
    v = _twin_to_drop(facets)
    if v is None:
        return _elimination_ranks(facets, p)
    bit = 1 << v
    rest = reduced_ranks(tuple(sorted(set(maximal_masks(f & ~bit for f in facets)))), p)
    lk = reduced_ranks(tuple(sorted(f ^ bit for f in facets if f & bit)), p)
    out = [0] * size
    for i, r in enumerate(rest):
        out[i] += r
    for i, r in enumerate(lk):
        out[i + 1] += r
    return tuple(out)


def first_nonzero_degree(facets: tuple, p: int = 0, below: int | None = None):
    """Least ``q`` (``q < below`` when given) with ``H̃_q ≠ 0``, else ``None``."""
    if not facets:
        raise ValueError("void complex has no reduced homology")
    stop = max(f.bit_count() for f in facets) + 1
    if below is not None:
        stop = min(stop, below + 1)
    if _is_cone(facets):
        return None
    if _twin_to_drop(facets) is not None:
        ranks = reduced_ranks(facets, p)
        return next((size - 1 for size in range(stop) if ranks[size]), None)
    groups = graded_faces(facets)
    for size in range(stop):
        q = size - 1
        r = len(groups[size]) - boundary_rank(facets, p, q) - boundary_rank(facets, p, q + 1)
        if r:
            return q
    return None


@dataclass(frozen=True)
class ChainComplexData:
    """Oriented reduced chain complex: bases by dimension plus boundary maps."""

    universe: tuple
    bases: tuple  # bases[q + 1] = sorted masks of the q-faces

    @classmethod
    def of(cls, cx: SimplicialComplex) -> "ChainComplexData":
        if cx.is_void:
            raise ValueError("void complex has no chain complex")
        return cls(cx.universe, graded_faces(tuple(cx.facet_masks)))

    def basis(self, q: int) -> tuple:
        i = q + 1
        return self.bases[i] if 0 <= i < len(self.bases) else ()

    def boundary(self, q: int) -> list[dict]:
        """Columns of ``∂_q`` as sparse vectors over the basis of ``C̃_{q-1}``."""
        if q < 0:
            return [{} for _ in self.basis(q)]
        return _boundary_vectors(self.basis(q), self.basis(q - 1))

    def check_boundary_squared(self) -> bool:
        for q in range(1, len(self.bases) - 1):
            lower = self.boundary(q - 1)
            for col in self.boundary(q):
                acc: dict[int, int] = {}
                for j, c in col.items():
                    for k, d in lower[j].items():
                        acc[k] = acc.get(k, 0) + c * d
                if any(acc.values()):
                    return False
        return True


def reduced_homology(cx: SimplicialComplex, field=QQ) -> HomologyProfile:
    f = as_field(field)
    return HomologyProfile(reduced_ranks(tuple(cx.facet_masks), f.characteristic), f)


def relative_homology(rel: RelativeComplex, field=QQ) -> HomologyProfile:
    """Homology of ``C̃(ambient) / C̃(sub)``, chains spanned by the member faces."""
    f = as_field(field)
    amb = rel.ambient
    if amb.is_void:
        return HomologyProfile((), f)
    sub = rel.sub.with_universe(amb.universe) if not rel.sub.is_void else None
    groups = graded_faces(tuple(amb.facet_masks))
    sub_faces = faces_of(sub.facet_masks) if sub is not None else set()
    members = [tuple(m for m in g if m not in sub_faces) for g in groups]
    ranks = []
    for size in range(len(members)):
        ranks.append(rank(_boundary_vectors(members[size], members[size - 1]), f)
                     if size > 0 else 0)
    out = []
    for size in range(len(members)):
        nxt = ranks[size + 1] if size + 1 < len(members) else 0
        out.append(len(members[size]) - ranks[size] - nxt)
    return HomologyProfile(tuple(out), f)


# -- chain maps --------------------------------------------------------------------

@dataclass(frozen=True)
class ChainMap:
    """Matrix of a simplicial chain map in degree ``q``.

    ``columns[j]`` is the image of ``src_basis[j]`` as a sparse vector over
    ``dst_basis``.
    """

    q: int
    src_basis: tuple
    dst_basis: tuple
    columns: tuple = dc_field(repr=False)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.dst_basis), len(self.src_basis)

    def to_dense(self) -> list[list[int]]:
        rows = [[0] * len(self.src_basis) for _ in self.dst_basis]
        for j, col in enumerate(self.columns):
            for i, c in col.items():
                rows[i][j] = c
        return rows


def _perm_sign(seq: list) -> int:
    sign = 1
    seq = list(seq)
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _image_columns(src: SimplicialComplex, dst: SimplicialComplex, vmap: Callable, q: int):
    src_basis = graded_faces(tuple(src.facet_masks))
    dst_basis = graded_faces(tuple(dst.facet_masks))
    s = src_basis[q + 1] if 0 <= q + 1 < len(src_basis) else ()
    d = dst_basis[q + 1] if 0 <= q + 1 < len(dst_basis) else ()
    d_index = {m: i for i, m in enumerate(d)}
    pos = {}
    for i, v in enumerate(src.universe):
        w = vmap(v)
        if w not in dst._index:
            raise ValueError(f"vertex map sends {v} outside the target")
        pos[i] = dst._index[w]
    cols = []
    for m in s:
        images = [pos[i] for i in bits(m)]
        if len(set(images)) < len(images):
            cols.append({})
            continue
        target = sum(1 << i for i in images)
        if target not in d_index:
            raise ValueError("vertex map is not simplicial")
        cols.append({d_index[target]: _perm_sign(images)})
    return s, d, cols


def _as_callable(vertex_map) -> Callable:
    if callable(vertex_map):
        return lambda v: as_vertex(vertex_map(v))
    table = {as_vertex(k): as_vertex(v) for k, v in dict(vertex_map).items()}

    def lookup(v):
        if v not in table:
            raise ValueError(f"vertex map undefined on {v}")
        return table[v]
    return lookup


def chain_map_matrix(src: SimplicialComplex, dst: SimplicialComplex, vertex_map, q: int) -> ChainMap:
    """Matrix of ``φ_#`` on oriented ``q``-simplices; degenerate images map to 0.

    Raises ``ArithmeticError`` if the square with the boundary maps in degrees
    ``q``/``q-1`` fails to commute.
    """
    vmap = _as_callable(vertex_map)
    s, d, cols = _image_columns(src, dst, vmap, q)
    if q >= 0 and not _commutes(src, dst, vmap, q, s, cols):
        raise ArithmeticError(f"chain map does not commute with the boundary in degree {q}")
    return ChainMap(q, tuple(src.face_of(m) for m in s), tuple(dst.face_of(m) for m in d), tuple(cols))


def _commutes(src, dst, vmap, q, s, cols) -> bool:
    s_lo, d_lo, cols_lo = _image_columns(src, dst, vmap, q - 1)
    d_faces = graded_faces(tuple(dst.facet_masks))
    d_hi = d_faces[q + 1] if q + 1 < len(d_faces) else ()
    d_lo_index = {m: i for i, m in enumerate(d_lo)}
    s_lo_index = {m: i for i, m in enumerate(s_lo)}
    for m, col in zip(s, cols):
        # φ(∂σ)
        left: dict[int, int] = {}
        for j, c in boundary_vector(m, s_lo_index).items():
            for i, e in cols_lo[j].items():
                left[i] = left.get(i, 0) + c * e
        # ∂(φσ)
        right: dict[int, int] = {}
        for j, c in col.items():
            for i, e in boundary_vector(d_hi[j], d_lo_index).items():
                right[i] = right.get(i, 0) + c * e
        left = {k: v for k, v in left.items() if v}
        right = {k: v for k, v in right.items() if v}
        if left != right:
            return False
    return True


def induced_map_is_surjective(src: SimplicialComplex, dst: SimplicialComplex, vertex_map,
                              q: int, field=QQ) -> bool:
    """Whether ``φ_* : H̃_q(src) → H̃_q(dst)`` is onto.

    Uses ``dim(φ(Z^src) + B^dst) = rank[[∂^src_q, 0], [φ_q, ∂^dst_{q+1}]] - rank ∂^src_q``
    and compares it with ``dim Z_q(dst)``.
    """
    f = as_field(field)
    vmap = _as_callable(vertex_map)
    s, d, cols = _image_columns(src, dst, vmap, q)
    src_g = graded_faces(tuple(src.facet_masks))
    dst_g = graded_faces(tuple(dst.facet_masks))
    s_lo = src_g[q] if 0 <= q < len(src_g) else ()
    d_hi = dst_g[q + 2] if q + 2 < len(dst_g) else ()
    shift = len(s_lo)
    s_lo_index = {m: i for i, m in enumerate(s_lo)}
    d_index = {m: i for i, m in enumerate(d)}
    stacked = []
    bd_src = []
    for m, col in zip(s, cols):
        top = boundary_vector(m, s_lo_index) if q >= 0 else {}
        bd_src.append(top)
        vec = dict(top)
        for i, c in col.items():
            vec[shift + i] = c
        stacked.append(vec)
    for m in d_hi:
        stacked.append({shift + i: c for i, c in boundary_vector(m, d_index).items()})
    image_dim = rank(stacked, f) - rank(bd_src, f)
    cycles = len(d) - boundary_rank(tuple(dst.facet_masks), f.characteristic, q)
    return image_dim == cycles
