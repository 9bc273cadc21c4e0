"""Graded Betti numbers by Hochster's formula and the invariants read off them.

``β_{i,j}(S/I_Δ) = Σ_{|W| = j} dim H̃_{j-i-1}(Δ|_W)``.  Vertices that can be
swapped without changing the facet set ("twins") give isomorphic induced
subcomplexes, so the sum runs over one representative ``W`` per orbit of
such swaps, weighted by the orbit size.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from math import comb
from typing import Iterable, Sequence

from expanse._bits import bits, faces_of
from expanse.complex import SimplicialComplex, as_vertex, induced_masks, link_masks
from expanse.errors import InconsistencyError
from expanse.expansion import as_alpha
from expanse.homology import first_nonzero_degree, reduced_ranks
from expanse.ideals import MonomialIdeal, complex_of, stanley_reisner_ideal
from expanse.linalg import QQ, as_field



# -- symmetry --------------------------------------------------------------------

def _are_twins(facets: Sequence[int], u: int, v: int) -> bool:
    bu, bv = 1 << u, 1 << v
    left = {f & ~bu for f in facets if f & bu and not f & bv}
    right = {f & ~bv for f in facets if f & bv and not f & bu}
    return left == right


def twin_classes(facets: Sequence[int], n: int) -> list[list[int]]:
    """Partition ``range(n)`` into classes of pairwise swappable vertices."""
    classes: list[list[int]] = []
    for v in range(n):
        for cls in classes:
            if _are_twins(facets, cls[0], v):
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def canonical_faces(facets: Sequence[int], classes: list[list[int]]) -> list[tuple[int, int]]:
    """One face per twin orbit, as ``(mask, orbit size)``, sorted by size."""
    out = []
    for m in faces_of(facets):
        size = 1
        for cls in classes:
            c = sum(m >> v & 1 for v in cls)
            if any(not m >> v & 1 for v in cls[:c]):
                break
            size *= comb(len(cls), c)
        else:
            out.append((m, size))
    out.sort(key=lambda t: (t[0].bit_count(), t[0]))
    return out


def _compact(masks: Iterable[int], w: int) -> tuple:
    pos = {b: i for i, b in enumerate(bits(w))}
    return tuple(sorted(sum(1 << pos[b] for b in bits(m)) for m in masks))


# -- Betti tables ---------------------------------------------------------------------

@dataclass(frozen=True)
class BettiTable:
    """Graded Betti numbers ``{(i, j): β_{i,j}}`` (nonzero entries only)."""

    entries: dict = dc_field(default_factory=dict)
    n: int = 0

    def __getitem__(self, key) -> int:
        return self.entries.get(tuple(key), 0)

    def is_zero(self) -> bool:
        return not self.entries

    def regularity(self) -> int:
        return max(j - i for i, j in self.entries)

    def projective_dimension(self) -> int:
        return max(i for i, _ in self.entries)

    def shifted(self, by: int) -> "BettiTable":
        """Homological shift ``(i, j) ↦ (i + by, j)``; drops negative ``i``."""
        return BettiTable({(i + by, j): b for (i, j), b in self.entries.items() if i + by >= 0}, self.n)

    def rows(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self.entries.items())

    def to_text(self) -> str:
        return "".join(f"{i} {j} {b}\n" for i, j, b in self.rows())


def _hochster(facets: Sequence[int], n: int, p: int) -> dict:
    facets = list(facets)
    if not facets:
        return {}
    classes = twin_classes(facets, n)
    table: dict = {}
    for counts in product(*(range(len(c) + 1) for c in classes)):
        w = 0
        mult = 1
        for cls, c in zip(classes, counts):
            for v in cls[:c]:
                w |= 1 << v
            mult *= comb(len(cls), c)
        j = w.bit_count()
        sub = _compact(induced_masks(facets, w), w)
        for k, r in enumerate(reduced_ranks(sub, p)):
            if r:
                q = k - 1
                key = (j - q - 1, j)
                table[key] = table.get(key, 0) + mult * r
    return table


def betti_table(cx: SimplicialComplex, field=QQ, universe=None) -> BettiTable:
    """Betti table of ``S / I_Δ`` over the complex's universe."""
    if universe is not None:
        cx = cx.with_universe(universe)
    p = as_field(field).characteristic
    n = len(cx.universe)
    return BettiTable(_hochster(cx.facet_masks, n, p), n)


def ideal_betti_table(ideal: MonomialIdeal, field=QQ) -> BettiTable:
    """Betti table of a squarefree ideal ``I`` (that of ``S/I`` shifted by one)."""
    if ideal.is_zero:
        return BettiTable({}, len(ideal.universe))
    return betti_table(complex_of(ideal), field).shifted(-1)


def _as_ideal(obj, universe=None) -> MonomialIdeal:
    if isinstance(obj, MonomialIdeal):
        return obj
    if isinstance(obj, SimplicialComplex):
        return stanley_reisner_ideal(obj, universe)
    raise TypeError("expected a SimplicialComplex or MonomialIdeal")


def _quotient_table(obj, field) -> BettiTable:
    if isinstance(obj, SimplicialComplex):
        if obj.is_void:
            raise ValueError("S/I is the zero module for the void complex")
        return betti_table(obj, field)
    ideal = _as_ideal(obj)
    if ideal.is_unit:
        raise ValueError("S/I is the zero module for the unit ideal")
    if ideal.is_zero:
        return BettiTable({(0, 0): 1}, len(ideal.universe))
    return betti_table(complex_of(ideal), field)


def regularity(obj, field=QQ, module: str = "ideal") -> int:
    """``reg`` of ``I`` (``module="ideal"``) or of ``S/I`` (``module="quotient"``).

    ``obj`` is a complex (meaning its Stanley-Reisner ideal) or a squarefree
    ideal.  The zero ideal takes the conventions of ``S``: regularity 0.
    """
    table = _quotient_table(obj, field)
    if module == "quotient":
        return table.regularity()
    if module != "ideal":
        raise ValueError("module must be 'ideal' or 'quotient'")
    if table.entries == {(0, 0): 1}:
        return 0
    return table.shifted(-1).regularity()


def projective_dimension(obj, field=QQ, module: str = "quotient") -> int:
    """``pd`` of ``S/I`` (default) or of ``I``; the zero ideal gives 0."""
    table = _quotient_table(obj, field)
    if module == "quotient":
        return table.projective_dimension()
    if module != "ideal":
        raise ValueError("module must be 'ideal' or 'quotient'")
    if table.entries == {(0, 0): 1}:
        return 0
    return table.projective_dimension() - 1


def ideal_regularity(ideal: MonomialIdeal, field=QQ) -> int:
    return regularity(ideal, field, module="ideal")


# -- depth -----------------------------------------------------------------------------

def depth_by_local_cohomology(facets: Sequence[int], n: int, p: int = 0) -> int:
    """``min_F (|F| + 1 + min{i : H̃_i(lk F) ≠ 0})`` over the faces ``F``."""
    facets = list(facets)
    if not facets:
        raise ValueError("void complex")
    best = min(f.bit_count() for f in facets)  # a facet has link {∅}
    for m, _ in canonical_faces(facets, twin_classes(facets, n)):
        s = m.bit_count()
        if s >= best:
            break
        q = first_nonzero_degree(tuple(link_masks(facets, m)), p, below=best - s - 1)
        if q is not None:
            best = min(best, s + 1 + q)
    return best


def depth(cx: SimplicialComplex, field=QQ, method: str = "both") -> int:
    """Depth of ``K[Δ]``.

    ``method`` is ``"local_cohomology"`` (least ``i`` with ``H^i_m ≠ 0`` by
    Hochster's theorem), ``"auslander_buchsbaum"`` (``n - pd``) or ``"both"``,
    which computes both and raises :class:`InconsistencyError` on mismatch.
    """
    if cx.is_void:
        raise ValueError("void complex")
    p = as_field(field).characteristic
    n = len(cx.universe)
    if method == "local_cohomology":
        return depth_by_local_cohomology(cx.facet_masks, n, p)
    ab = n - betti_table(cx, field).projective_dimension()
    if method == "auslander_buchsbaum":
        return ab
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    lc = depth_by_local_cohomology(cx.facet_masks, n, p)
    if lc != ab:
        raise InconsistencyError(f"depth: local cohomology {lc} != Auslander-Buchsbaum {ab}")
    return lc


def big_height(cx: SimplicialComplex) -> int:
    """``bight(I_Δ) = n - min |F|`` over the facets."""
    if cx.is_void:
        raise ValueError("void complex")
    return len(cx.universe) - min(f.bit_count() for f in cx.facet_masks)


# -- local cohomology ---------------------------------------------------------------

@dataclass(frozen=True)
class FineDegree:
    """Integer vector ``a`` indexed by an ordered universe."""

    universe: tuple
    values: tuple

    def __post_init__(self):
        if len(self.universe) != len(self.values):
            raise ValueError("degree length does not match the universe")

    @classmethod
    def of(cls, cx: SimplicialComplex, a) -> "FineDegree":
        if isinstance(a, FineDegree):
            return a
        if isinstance(a, dict):
            table = {as_vertex(k): int(v) for k, v in a.items()}
            return cls(cx.universe, tuple(table.get(v, 0) for v in cx.universe))
        return cls(cx.universe, tuple(int(x) for x in a))

    def negative_support(self) -> frozenset:
        return frozenset(v for v, x in zip(self.universe, self.values) if x < 0)

    def is_nonpositive(self) -> bool:
        return all(x <= 0 for x in self.values)


def local_cohomology_dim(cx: SimplicialComplex, i: int, a, field=QQ) -> int:
    """``dim_K H^i_m(K[Δ])_a`` by Hochster's formula.

    Zero unless every coordinate of ``a`` is ``<= 0``; otherwise
    ``dim H̃_{i-|F|-1}(lk F)`` with ``F`` the negative support of ``a``, and 0
    when ``F`` is not a face.
    """
    deg = FineDegree.of(cx, a)
    if not deg.is_nonpositive():
        return 0
    f = deg.negative_support()
    if f not in cx:
        return 0
    m = cx.mask_of(f)
    ranks = reduced_ranks(tuple(link_masks(cx.facet_masks, m)), as_field(field).characteristic)
    k = i - len(f) - 1
    return ranks[k + 1] if 0 <= k + 1 < len(ranks) else 0


def block_contraction(a: Sequence[int], alpha) -> tuple:
    """Sum each block of ``s_i`` consecutive coordinates into one."""
    alpha = as_alpha(alpha)
    a = tuple(int(x) for x in a)
    if len(a) != alpha.total():
        raise ValueError(f"degree has length {len(a)}, expected {alpha.total()}")
    out, pos = [], 0
    for s in alpha:
        out.append(sum(a[pos:pos + s]))
        pos += s
    return tuple(out)
