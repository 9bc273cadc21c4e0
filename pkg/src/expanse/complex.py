"""Finite simplicial complexes on named vertices.

Faces are handled as ``frozenset`` objects of :class:`Vertex` at the public
surface and as bitmasks over the complex's ordered universe internally.  A
complex is stored by its facets (an inclusion antichain).  The *void* complex
``{}`` has no faces at all; the *irrelevant* complex ``{∅}`` has exactly the
empty face.  They are different values.

The universe defaults to the union of the facets.  Passing an explicit
universe keeps unused ("ghost") vertices around, which matters for Alexander
duality and Stanley-Reisner ideals.  Equality ignores ghost vertices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Union

from expanse._bits import bits, faces_of, maximal, minimal_transversals


class Vertex(NamedTuple):
    """Vertex ``x_{base,copy}``; unexpanded vertices have ``copy == 1``."""

    base: int
    copy: int = 1

    def __str__(self) -> str:
        if self.copy == 1:
            return f"x{self.base}"
        return f"x{self.base}_{self.copy}"

    @classmethod
    def parse(cls, text: str) -> "Vertex":
        m = _VERTEX_RE.fullmatch(text.strip())
        if m is None:
            raise ValueError(f"not a vertex name: {text!r}")
        base = int(m.group(1))
        copy = int(m.group(2)) if m.group(2) else 1
        if base < 1 or copy < 1:
            raise ValueError(f"vertex indices must be >= 1: {text!r}")
        return cls(base, copy)


_VERTEX_RE = re.compile(r"x?(\d+)(?:_(\d+))?")

VertexLike = Union[Vertex, int, str, tuple]
Face = frozenset


def as_vertex(v: VertexLike) -> Vertex:
    if isinstance(v, Vertex):
        return v
    if isinstance(v, bool):
        raise TypeError("bool is not a vertex")
    if isinstance(v, int):
        if v < 1:
            raise ValueError("vertex indices must be >= 1")
        return Vertex(v)
    if isinstance(v, str):
        return Vertex.parse(v)
    if isinstance(v, tuple) and len(v) == 2:
        b, c = int(v[0]), int(v[1])
        if b < 1 or c < 1:
            raise ValueError("vertex indices must be >= 1")
        return Vertex(b, c)
    raise TypeError(f"cannot interpret {v!r} as a vertex")


def face(vertices: Iterable[VertexLike] = ()) -> frozenset:
    """Build a face from anything vertex-like: ``face([1, "x2_3"])``."""
    return frozenset(as_vertex(v) for v in vertices)


def _face_key(f: frozenset) -> tuple:
    return tuple(sorted(f))


class SimplicialComplex:
    """An immutable simplicial complex given by its facets.

    Parameters
    ----------
    facets : iterable of iterables of vertex-like values
        Generating faces; non-maximal ones are discarded.  Pass ``[[]]`` for
        the irrelevant complex and ``[]`` for the void complex.
    universe : iterable of vertex-like values, optional
        Ambient vertex set.  Must contain every vertex of every facet.
    """

    def __init__(self, facets: Iterable[Iterable[VertexLike]] = (), universe=None):
        fs = [face(f) for f in facets]
        used = set().union(*fs) if fs else set()
        if universe is None:
            uni = tuple(sorted(used))
        else:
            uni = tuple(sorted({as_vertex(v) for v in universe}))
            missing = used.difference(uni)
            if missing:
                raise ValueError(f"facet vertices outside universe: {sorted(missing)}")
        index = {v: i for i, v in enumerate(uni)}
        masks = [sum(1 << index[v] for v in f) for f in fs]
        self._set(uni, maximal(masks))

    def _set(self, universe: tuple, masks: list[int]) -> None:
        self._universe = universe
        self._index = {v: i for i, v in enumerate(universe)}
        self._facets = tuple(masks)
        self._key = frozenset(frozenset(universe[i] for i in bits(m)) for m in masks)

    @classmethod
    def from_masks(cls, universe: tuple, masks: Iterable[int], *, antichain: bool = False):
        """Fast constructor over an already sorted universe."""
        obj = cls.__new__(cls)
        obj._set(tuple(universe), sorted(set(masks)) if antichain else maximal(masks))
        return obj

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls([])

    @classmethod
    def irrelevant(cls, universe=()) -> "SimplicialComplex":
        return cls([[]], universe=universe)

    @classmethod
    def simplex(cls, vertices: Iterable[VertexLike]) -> "SimplicialComplex":
        return cls([list(vertices)])

    # -- basic accessors -------------------------------------------------
    @property
    def universe(self) -> tuple:
        return self._universe

    @property
    def facet_masks(self) -> tuple:
        return self._facets

    @cached_property
    def vertices(self) -> tuple:
        used = 0
        for m in self._facets:
            used |= m
        return tuple(self._universe[i] for i in bits(used))

    @cached_property
    def facets(self) -> tuple:
        return tuple(sorted(self._key, key=_face_key))

    @property
    def is_void(self) -> bool:
        return not self._facets

    @property
    def is_irrelevant(self) -> bool:
        return self._facets == (0,)

    @property
    def is_simplex(self) -> bool:
        return len(self._facets) == 1

    def mask_of(self, f: Iterable[VertexLike]) -> int:
        m = 0
        for v in f:
            v = as_vertex(v)
            if v not in self._index:
                raise KeyError(f"{v} is not in the universe")
            m |= 1 << self._index[v]
        return m

    def face_of(self, mask: int) -> frozenset:
        return frozenset(self._universe[i] for i in bits(mask))

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self._facets)

    def __contains__(self, f) -> bool:
        try:
            m = self.mask_of(f)
        except KeyError:
            return False
        return self.contains_mask(m)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(VOID)"
        body = ", ".join("{" + ",".join(str(v) for v in sorted(f)) + "}" for f in self.facets)
        return f"SimplicialComplex(<{body}>)"

    def with_universe(self, universe: Iterable[VertexLike]) -> "SimplicialComplex":
        return SimplicialComplex(self.facets, universe=universe)

    def normalized(self) -> "SimplicialComplex":
        """Same complex with ghost vertices dropped from the universe."""
        return SimplicialComplex(self.facets)

    # -- size data ---------------------------------------------------------
    def dim(self) -> int:
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return max(m.bit_count() for m in self._facets) - 1

    def is_pure(self) -> bool:
        if self.is_void:
            raise ValueError("void complex has no dimension")
        return len({m.bit_count() for m in self._facets}) == 1

    def face_masks(self) -> set[int]:
        return faces_of(self._facets)

    def faces(self, dim: int | None = None) -> set[frozenset]:
        """All faces, or only those of dimension ``dim``; includes ∅ unless void."""
        out = set()
        for m in self.face_masks():
            if dim is None or m.bit_count() == dim + 1:
                out.add(self.face_of(m))
        return out

    def f_vector(self) -> list[int]:
        d = self.dim()
        counts = [0] * (d + 1)
        for m in self.face_masks():
            if m:
                counts[m.bit_count() - 1] += 1
        return counts

    def to_text(self) -> str:
        return format_facet_list(self)


# -- mask-level constructions (shared with the deciders) ----------------------

def link_masks(facets: Iterable[int], f: int) -> list[int]:
    """Facets of the link of face ``f``; ``[]`` if ``f`` is not a face."""
    return sorted({g & ~f for g in facets if g & f == f})


def deletion_masks(facets: Iterable[int], f: int) -> list[int]:
    cand = []
    for g in facets:
        if g & f != f:
            cand.append(g)
        else:
            cand.extend(g & ~(1 << v) for v in bits(f))
    return maximal(cand)


def induced_masks(facets: Iterable[int], w: int) -> list[int]:
    return maximal(g & w for g in facets)


def star_masks(facets: Iterable[int], f: int) -> list[int]:
    return sorted(g for g in facets if g & f == f)


# -- public operations ----------------------------------------------------------

def _require_face(cx: SimplicialComplex, f) -> int:
    f = face(f)
    if f not in cx:
        raise ValueError(f"{sorted(f)} is not a face of the complex")
    return cx.mask_of(f)


def faces(cx: SimplicialComplex, dim: int | None = None) -> set[frozenset]:
    return cx.faces(dim)


def dim(cx: SimplicialComplex) -> int:
    return cx.dim()


def is_pure(cx: SimplicialComplex) -> bool:
    return cx.is_pure()


def _shrink(cx: SimplicialComplex, masks: list[int]) -> SimplicialComplex:
    """Wrap masks over ``cx``'s universe as a complex without ghost vertices."""
    used = 0
    for m in masks:
        used |= m
    if used == (1 << len(cx.universe)) - 1:
        return SimplicialComplex.from_masks(cx.universe, masks, antichain=True)
    keep = list(bits(used))
    remap = {old: new for new, old in enumerate(keep)}
    new = [sum(1 << remap[b] for b in bits(m)) for m in masks]
    return SimplicialComplex.from_masks(tuple(cx.universe[i] for i in keep), new, antichain=True)


def link(cx: SimplicialComplex, f) -> SimplicialComplex:
    """``lk(F) = {G : G ∩ F = ∅, G ∪ F ∈ Δ}``; ``link(Δ, ∅) == Δ``."""
    return _shrink(cx, link_masks(cx.facet_masks, _require_face(cx, f)))


def deletion(cx: SimplicialComplex, f) -> SimplicialComplex:
    """``Δ ∖ F = {G ∈ Δ : F ⊄ G}``.  Vertices outside the universe are allowed."""
    f = face(f)
    if not f.issubset(cx.universe):
        return cx.normalized()
    return _shrink(cx, deletion_masks(cx.facet_masks, cx.mask_of(f)))


def star(cx: SimplicialComplex, f) -> SimplicialComplex:
    return _shrink(cx, star_masks(cx.facet_masks, _require_face(cx, f)))


def induced_subcomplex(cx: SimplicialComplex, vertices) -> SimplicialComplex:
    w = cx.mask_of(v for v in face(vertices) if v in cx._index)
    if cx.is_void:
        return cx
    return _shrink(cx, induced_masks(cx.facet_masks, w))


def minimal_nonface_masks(cx: SimplicialComplex) -> list[int]:
    full = (1 << len(cx.universe)) - 1
    return minimal_transversals(full & ~g for g in cx.facet_masks)


def alexander_dual(cx: SimplicialComplex, universe=None) -> SimplicialComplex:
    """``Δ^∨ = {X ∖ F : F ∉ Δ}`` over the complex's universe (or ``universe``)."""
    if universe is not None:
        cx = cx.with_universe(universe)
    full = (1 << len(cx.universe)) - 1
    dual = [full & ~n for n in minimal_nonface_masks(cx)]
    return SimplicialComplex.from_masks(cx.universe, dual, antichain=True)


def complement(cx: SimplicialComplex, universe=None) -> SimplicialComplex:
    """Facet-wise complement ``⟨X ∖ F⟩`` over the universe."""
    if universe is not None:
        cx = cx.with_universe(universe)
    full = (1 << len(cx.universe)) - 1
    return SimplicialComplex.from_masks(cx.universe, [full & ~g for g in cx.facet_masks])


def core_vertex_mask(facets: Iterable[int]) -> int:
    """Vertices whose star is a proper subcomplex (some facet misses them)."""
    facets = list(facets)
    used = 0
    for g in facets:
        used |= g
    common = used
    for g in facets:
        common &= g
    return used & ~common


def core(cx: SimplicialComplex) -> SimplicialComplex:
    """Induced subcomplex on the vertices that are not cone points."""
    if cx.is_void:
        raise ValueError("void complex has no core")
    w = core_vertex_mask(cx.facet_masks)
    return _shrink(cx, induced_masks(cx.facet_masks, w))


def skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    _check_skeleton_range(cx, i)
    return _shrink(cx, maximal(m for m in cx.face_masks() if m.bit_count() <= i + 1))


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """Subcomplex generated by all ``i``-dimensional faces."""
    _check_skeleton_range(cx, i)
    return _shrink(cx, pure_skeleton_masks(cx.facet_masks, i))


def pure_skeleton_masks(facets: Iterable[int], i: int) -> list[int]:
    return sorted({m for m in faces_of(facets) if m.bit_count() == i + 1})


def _check_skeleton_range(cx: SimplicialComplex, i: int) -> None:
    d = cx.dim()
    if not -1 <= i <= d:
        raise ValueError(f"skeleton index {i} outside [-1, {d}]")


def union(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex(list(a.facets) + list(b.facets))


def intersection(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    return SimplicialComplex([fa & fb for fa in a.facets for fb in b.facets])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if set(a.universe) & set(b.universe):
        raise ValueError("join needs disjoint vertex sets")
    return SimplicialComplex([fa | fb for fa in a.facets for fb in b.facets],
                             universe=a.universe + b.universe)


def f_vector(cx: SimplicialComplex) -> list[int]:
    return cx.f_vector()


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """``χ̃ = Σ_i (-1)^i f_i - 1`` summed over every dimension of ``cx``."""
    return sum((-1) ** i * f for i, f in enumerate(cx.f_vector())) - 1


def euler_from_masks(facets: Iterable[int]) -> int:
    """``χ̃ = Σ_F (-1)^{dim F}``, the empty face counting ``-1``."""
    return sum(1 if m.bit_count() % 2 else -1 for m in faces_of(facets))


@dataclass(frozen=True)
class RelativeComplex:
    """Pair ``Δ/Γ``: the faces of ``ambient`` that are not faces of ``sub``."""

    ambient: SimplicialComplex
    sub: SimplicialComplex

    def __post_init__(self):
        amb = self.ambient.faces()
        if not self.sub.faces() <= amb:
            raise ValueError("sub is not a subcomplex of ambient")

    @property
    def member_faces(self) -> set[frozenset]:
        return self.ambient.faces() - self.sub.faces()


def _facets_of_dim(cx: SimplicialComplex, pred) -> SimplicialComplex:
    return SimplicialComplex([f for f in cx.facets if pred(len(f) - 1)])


def omega(cx: SimplicialComplex, i: int) -> RelativeComplex:
    """``Δ_i / (Δ_i ∩ ⋃_{j>i} Δ_j)`` where ``Δ_j`` is generated by the ``j``-dim facets."""
    layer = _facets_of_dim(cx, lambda d: d == i)
    if layer.is_void:
        raise ValueError(f"no facet of dimension {i}")
    higher = _facets_of_dim(cx, lambda d: d > i)
    return RelativeComplex(layer, intersection(layer, higher))


# -- text format ---------------------------------------------------------------

def parse_facet_list(text: str) -> SimplicialComplex:
    """Parse the facet-list format (one facet per line, ``#`` comments)."""
    facets: list[list[Vertex]] = []
    void = False
    seen = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        seen = True
        if line == "VOID":
            void = True
        elif line == "EMPTYFACE":
            facets.append([])
        else:
            facets.append([Vertex.parse(tok) for tok in line.split()])
    if not seen:
        raise ValueError("no facets given (write VOID for the void complex)")
    if void and facets:
        raise ValueError("VOID cannot be combined with facets")
    return SimplicialComplex(facets)


def format_facet_list(cx: SimplicialComplex) -> str:
    if cx.is_void:
        return "VOID\n"
    lines = []
    for f in cx.facets:
        lines.append(" ".join(str(v) for v in sorted(f)) if f else "EMPTYFACE")
    return "\n".join(lines) + "\n"


def read_complex(path) -> SimplicialComplex:
    with open(path, encoding="utf-8") as fh:
        return parse_facet_list(fh.read())
