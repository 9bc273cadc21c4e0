"""Bitmask helpers shared by the combinatorial modules.

A face over an ordered universe of ``n`` vertices is an ``int`` whose bit ``i``
is set when the ``i``-th vertex belongs to the face.
"""

from __future__ import annotations

from typing import Iterable, Iterator


def popcount(mask: int) -> int:
    return mask.bit_count()


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    """Yield every submask of ``mask``, including ``mask`` and 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal elements of a family of masks, sorted."""
    ordered = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(m & k == m for k in kept):
            kept.append(m)
    return sorted(kept)


def minimal(masks: Iterable[int]) -> list[int]:
    """Inclusion-minimal elements of a family of masks, sorted."""
    ordered = sorted(set(masks), key=lambda m: m.bit_count())
    kept: list[int] = []
    for m in ordered:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return sorted(kept)


def minimal_transversals(edges: Iterable[int]) -> list[int]:
    """Minimal sets meeting every edge of a hypergraph (Berge's method).

    An empty edge admits no transversal, so the result is ``[]``; an empty
    hypergraph has the single transversal ``0``.
    """
    trans = [0]
    for edge in minimal(edges):
        if edge == 0:
            return []
        nxt = []
        for t in trans:
            if t & edge:
                nxt.append(t)
            else:
                nxt.extend(t | (1 << v) for v in bits(edge))
        trans = minimal(nxt)
    return trans


def faces_of(facets: Iterable[int]) -> set[int]:
    """All faces generated by a family of facet masks (empty face included)."""
    out: set[int] = set()
    for f in facets:
        if f in out:
            continue
        out.update(submasks(f))
    return out
