"""Decision procedures for combinatorial and homological properties of complexes.

Every decider returns a :class:`PropertyVerdict` whose witness can be replayed
by :func:`replay`.  Link-based checks only visit one face per orbit of twin
swaps (see :func:`expanse.invariants.twin_classes`), which matters a lot on
expanded complexes where all copies of a vertex are twins.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any

from expanse._bits import bits
from expanse.complex import (
    SimplicialComplex, alexander_dual, core_vertex_mask, deletion_masks, euler_from_masks,
    face, induced_masks, link_masks, pure_skeleton_masks,
)
from expanse.errors import InconsistencyError, SearchLimitExceeded
from expanse.homology import first_nonzero_degree, reduced_ranks
from expanse.invariants import canonical_faces, twin_classes
from expanse.linalg import QQ, Field, as_field

SHELLING_BUDGET = 200_000
DECOMPOSITION_BUDGET = 200_000
# nodes tried before the cheaper sequential-CM obstruction is consulted
FIRST_PASS_BUDGET = 1_000


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a decider.

    ``witness`` is the certificate (shelling order, shedding tree) for a true
    verdict or the failing face / reason for a false one.  ``exhaustive`` is
    true when a false verdict came from a search that covered everything.
    """

    name: str
    result: bool
    field: Field | None = None
    witness: Any = None
    exhaustive: bool = True
    method: str = ""

    def __bool__(self) -> bool:
        return self.result


def _require_nonvoid(cx: SimplicialComplex) -> None:
    if cx.is_void:
        raise ValueError("property undefined for the void complex")


def _ctx(cx: SimplicialComplex):
    return tuple(cx.facet_masks), len(cx.universe)


def _face_key(m: int) -> tuple:
    return tuple(bits(m))


# -- Cohen-Macaulay (Reisner) -------------------------------------------------------

@lru_cache(maxsize=1 << 14)
def _cm_failure(facets: tuple, n: int, p: int):
    """First ``(F, i)`` with ``H̃_i(lk F) ≠ 0`` and ``i < dim lk F``, or ``None``."""
    for m, _ in canonical_faces(facets, twin_classes(facets, n)):
        lk = tuple(link_masks(facets, m))
        top = max(g.bit_count() for g in lk) - 1
        q = first_nonzero_degree(lk, p, below=top)
        if q is not None:
            return m, q
    return None


def is_cohen_macaulay(cx: SimplicialComplex, field=QQ) -> PropertyVerdict:
    _require_nonvoid(cx)
    f = as_field(field)
    fail = _cm_failure(*_ctx(cx), f.characteristic)
    if fail is None:
        return PropertyVerdict("cohen_macaulay", True, f, None, method="reisner")
    m, q = fail
    return PropertyVerdict("cohen_macaulay", False, f, (cx.face_of(m), q), method="reisner")


def is_buchsbaum(cx: SimplicialComplex, field=QQ) -> PropertyVerdict:
    _require_nonvoid(cx)
    f = as_field(field)
    if not cx.is_pure():
        return PropertyVerdict("buchsbaum", False, f, "not pure", method="vertex links")
    facets, n = _ctx(cx)
    for m, _ in canonical_faces(facets, twin_classes(facets, n)):
        if m.bit_count() != 1:
            continue
        fail = _cm_failure(tuple(link_masks(facets, m)), n, f.characteristic)
        if fail is not None:
            g, q = fail
            return PropertyVerdict("buchsbaum", False, f, (cx.face_of(m), cx.face_of(g), q),
                                   method="vertex links")
    return PropertyVerdict("buchsbaum", True, f, None, method="vertex links")


# -- sequentially Cohen-Macaulay ---------------------------------------------------

@lru_cache(maxsize=1 << 12)
def _scm_failure(facets: tuple, n: int, p: int):
    top = max(g.bit_count() for g in facets) - 1
    for i in range(top + 1):
        sk = tuple(pure_skeleton_masks(facets, i))
        fail = _cm_failure(sk, n, p)
        if fail is not None:
            return i, fail
    return None


def sequentially_cm_by_dual(cx: SimplicialComplex, field=QQ) -> bool:
    """Whether ``I_{Δ^∨}`` is componentwise linear.

    A squarefree ideal is componentwise linear iff each of its squarefree
    components ``I_[j]`` has a linear resolution; this holds iff ``Δ`` is
    sequentially Cohen-Macaulay.
    """
    from expanse.ideals import is_componentwise_linear, stanley_reisner_ideal

    _require_nonvoid(cx)
    return is_componentwise_linear(stanley_reisner_ideal(alexander_dual(cx)), field)


def is_sequentially_cm(cx: SimplicialComplex, field=QQ, cross_check: bool = False) -> PropertyVerdict:
    """Every pure ``i``-skeleton is Cohen-Macaulay.

    With ``cross_check`` the componentwise linearity of the dual ideal is
    computed too and a disagreement raises :class:`InconsistencyError`.
    """
    _require_nonvoid(cx)
    f = as_field(field)
    fail = _scm_failure(*_ctx(cx), f.characteristic)
    result = fail is None
    if cross_check and sequentially_cm_by_dual(cx, f) != result:
        raise InconsistencyError(f"sequential CM routes disagree on {cx!r} over {f}")
    witness = None
    if fail is not None:
        i, (m, q) = fail
        witness = (i, cx.face_of(m), q)
    return PropertyVerdict("sequentially_cm", result, f, witness, method="pure skeletons")


# -- Euler and Gorenstein --------------------------------------------------------------

def _euler_failure(facets: tuple, n: int):
    if len({g.bit_count() for g in facets}) > 1:
        return "not pure"
    faces = canonical_faces(facets, twin_classes(facets, n))
    for m, _ in sorted(faces, key=lambda t: (-t[0].bit_count(), _face_key(t[0]))):
        lk = link_masks(facets, m)
        d = max(g.bit_count() for g in lk) - 1
        chi = euler_from_masks(lk)
        if chi != (-1) ** (d % 2):
            return m, chi, (-1) ** (d % 2)
    return None


def is_euler(cx: SimplicialComplex) -> PropertyVerdict:
    """Pure with ``χ̃(lk F) = (-1)^{dim lk F}`` for every face; scans from the top dimension."""
    _require_nonvoid(cx)
    fail = _euler_failure(*_ctx(cx))
    if fail is None:
        return PropertyVerdict("euler", True, None, None, method="face scan")
    if fail == "not pure":
        return PropertyVerdict("euler", False, None, fail, method="face scan")
    m, chi, want = fail
    return PropertyVerdict("euler", False, None,
                           {"face": cx.face_of(m), "euler": chi, "expected": want},
                           method="face scan")


def _gorenstein_failure(facets: tuple, n: int, p: int):
    g = tuple(induced_masks(facets, core_vertex_mask(facets)))
    for m, _ in canonical_faces(g, twin_classes(g, n)):
        ranks = reduced_ranks(tuple(link_masks(g, m)), p)
        if any(ranks[:-1]) or ranks[-1] != 1:
            return m
    return None


def is_gorenstein(cx: SimplicialComplex, field=QQ, cross_check: bool = True) -> PropertyVerdict:
    """Homological criterion on every link of the core ``Γ_Δ``.

    When ``Δ`` has no cone points (``Δ = Γ_Δ``) and ``cross_check`` is set,
    the verdict is compared with "Euler and Cohen-Macaulay".
    """
    _require_nonvoid(cx)
    f = as_field(field)
    facets, n = _ctx(cx)
    fail = _gorenstein_failure(facets, n, f.characteristic)
    result = fail is None
    used = 0
    for g in facets:
        used |= g
    if cross_check and core_vertex_mask(facets) == used:
        if gorenstein_by_euler(cx, f) != result:
            raise InconsistencyError(f"Gorenstein routes disagree on {cx!r} over {f}")
    witness = None if result else {"core_face": cx.face_of(fail)}
    return PropertyVerdict("gorenstein", result, f, witness, method="core links")


def gorenstein_by_euler(cx: SimplicialComplex, field=QQ) -> bool:
    """``Euler ∧ CM``; agrees with Gorenstein-ness when ``Δ`` has no cone points."""
    facets, n = _ctx(cx)
    return _euler_failure(facets, n) is None and _cm_failure(facets, n, as_field(field).characteristic) is None


# -- shellability ---------------------------------------------------------------------

def _add_diff(diffs: tuple, d: int) -> tuple:
    if any(e & d == e for e in diffs):
        return diffs
    return tuple(e for e in diffs if e & d != d) + (d,)


def _shelling_search(facets: tuple, budget: int):
    """DFS over facet orders of non-increasing size.

    Returns ``(order, nodes)`` with ``order`` a list of masks or ``None``;
    raises :class:`SearchLimitExceeded` after ``budget`` nodes.

    For a candidate ``F`` we keep ``V_F`` (vertices ``v`` with ``F∖v`` inside a
    placed facet) and the minimal differences ``F∖G`` over placed ``G``;
    ``F`` can be attached iff every difference meets ``V_F``.
    """
    order = sorted(facets, key=lambda m: (-m.bit_count(), _face_key(m)))
    m = len(order)
    full = (1 << m) - 1
    dead: set[int] = set()
    nodes = 0

    def place(state, j):
        vs, diffs = state
        g = order[j]
        nv, nd = list(vs), list(diffs)
        for i in range(m):
            d = order[i] & ~g
            if d.bit_count() == 1:
                nv[i] |= d
            nd[i] = _add_diff(nd[i], d)
        return nv, nd

    def search(used: int, state, path: list):
        nonlocal nodes
        if used == full:
            return True
        if used in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise SearchLimitExceeded(f"shelling search exceeded {budget} nodes")
        vs, diffs = state
        size = max(order[i].bit_count() for i in range(m) if not used >> i & 1)
        for i in range(m):
            if used >> i & 1 or order[i].bit_count() != size:
                continue
            if used and not all(d & vs[i] for d in diffs[i]):
                continue
            path.append(order[i])
            if search(used | 1 << i, place(state, i), path):
                return True
            path.pop()
        dead.add(used)
        return False

    path: list[int] = []
    start = ([0] * m, [()] * m)
    found = search(0, start, path)
    return (path if found else None), nodes


@lru_cache(maxsize=1 << 12)
def _shellable(facets: tuple, n: int):
    """``(order or None, exhaustive, method)``."""
    if len(facets) <= 1:
        return list(facets), True, "trivial"
    try:
        order, _ = _shelling_search(facets, FIRST_PASS_BUDGET)
        return order, True, "search"
    except SearchLimitExceeded:
        pass
    # shellable complexes are sequentially CM over every field
    for p in (0, 2):
        if _scm_failure(facets, n, p) is not None:
            return None, True, f"not sequentially CM over {'QQ' if p == 0 else 'GF(2)'}"
    order, _ = _shelling_search(facets, SHELLING_BUDGET)
    return order, True, "search"


def is_shellable(cx: SimplicialComplex) -> PropertyVerdict:
    """Search for a (nonpure) shelling; the witness is the facet order."""
    _require_nonvoid(cx)
    order, exhaustive, method = _shellable(*_ctx(cx))
    witness = None if order is None else [cx.face_of(m) for m in order]
    return PropertyVerdict("shellable", order is not None, None, witness, exhaustive, method)


def is_clean(cx: SimplicialComplex) -> PropertyVerdict:
    """Cleanness of ``K[Δ]``, which holds iff ``Δ`` is (nonpure) shellable."""
    v = is_shellable(cx)
    return PropertyVerdict("clean", v.result, None, v.witness, v.exhaustive, v.method)


def is_shelling(cx: SimplicialComplex, order) -> bool:
    """Replay the shelling condition literally on a facet order.

    For all ``i < j`` there must be ``v ∈ F_j ∖ F_i`` and ``ℓ < j`` with
    ``F_j ∖ F_ℓ = {v}``.
    """
    order = [face(f) for f in order]
    if sorted(order, key=sorted) != sorted(cx.facets, key=sorted):
        return False
    for j, fj in enumerate(order):
        singles = {next(iter(fj - fl)) for fl in order[:j] if len(fj - fl) == 1}
        for fi in order[:j]:
            if not (fj - fi) & singles:
                return False
    return True


# -- k-decomposability --------------------------------------------------------------

def _is_shedding(facets: tuple, sigma: int) -> bool:
    for f in facets:
        if f & sigma != sigma:
            continue
        for v in bits(sigma):
            b = 1 << v
            rest = f & ~b
            if not any(g & rest == rest and not g & b for g in facets):
                return False
    return True


class _Decomposer:
    def __init__(self, n: int, budget: int):
        self.n = n
        self.budget = budget
        self.nodes = 0
        self.memo: dict = {}

    def run(self, facets: tuple, k: int):
        key = (facets, k)
        if key in self.memo:
            return self.memo[key]
        if len(facets) <= 1:
            self.memo[key] = ()
            return ()
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchLimitExceeded(f"decomposition search exceeded {self.budget} nodes")
        out = None
        for m, _ in canonical_faces(facets, twin_classes(facets, self.n)):
            if m == 0:
                continue
            if m.bit_count() > k + 1:
                break
            if not _is_shedding(facets, m):
                continue
            dl = tuple(deletion_masks(facets, m))
            sub = self.run(dl, k)
            if sub is None:
                continue
            lk = tuple(link_masks(facets, m))
            sub2 = self.run(lk, k)
            if sub2 is None:
                continue
            out = (m, sub, sub2)
            break
        self.memo[key] = out
        return out


@lru_cache(maxsize=1 << 12)
def _k_decomposable(facets: tuple, n: int, k: int):
    try:
        return _Decomposer(n, FIRST_PASS_BUDGET).run(facets, k), "search"
    except SearchLimitExceeded:
        pass
    # k-decomposable complexes are shellable, hence sequentially CM
    for p in (0, 2):
        if _scm_failure(facets, n, p) is not None:
            return None, f"not sequentially CM over {'QQ' if p == 0 else 'GF(2)'}"
    return _Decomposer(n, DECOMPOSITION_BUDGET).run(facets, k), "search"


def _tree_faces(cx: SimplicialComplex, tree):
    if tree == ():
        return ()
    m, a, b = tree
    return (cx.face_of(m), _tree_faces(cx, a), _tree_faces(cx, b))


def is_k_decomposable(cx: SimplicialComplex, k: int) -> PropertyVerdict:
    """Recursive shedding-face search with memoisation.

    The witness is a tree ``(σ, tree(Δ∖σ), tree(lk σ))`` with ``()`` marking a
    simplex (or ``{}`` / ``{∅}``).
    """
    if k < -1:
        raise ValueError("k must be >= -1")
    if cx.is_void:
        return PropertyVerdict("k_decomposable", True, None, (), method="trivial")
    tree, method = _k_decomposable(*_ctx(cx), k)
    witness = None if tree is None else _tree_faces(cx, tree)
    return PropertyVerdict("k_decomposable", tree is not None, None, witness, True, method)


def is_shedding_face(cx: SimplicialComplex, sigma) -> bool:
    """Literal test: for every ``τ ⊇ σ`` in ``Δ`` and ``v ∈ σ`` some ``w ∉ τ``
    has ``(τ ∪ {w}) ∖ {v} ∈ Δ``."""
    sigma = face(sigma)
    if not sigma or sigma not in cx:
        return False
    verts = cx.vertices
    for tau in cx.faces():
        if not sigma <= tau:
            continue
        for v in sigma:
            if not any(((tau | {w}) - {v}) in cx for w in verts if w not in tau):
                return False
    return True


def replay_decomposition(cx: SimplicialComplex, k: int, tree) -> bool:
    """Check a shedding tree against the definition, using :func:`is_shedding_face`."""
    from expanse.complex import deletion, link

    if tree == ():
        return cx.is_void or len(cx.facets) <= 1
    sigma, left, right = tree
    if len(sigma) - 1 > k or not is_shedding_face(cx, sigma):
        return False
    return replay_decomposition(deletion(cx, sigma), k, left) and \
        replay_decomposition(link(cx, sigma), k, right)


# -- replay ---------------------------------------------------------------------------

def _link_ranks(cx: SimplicialComplex, f, field) -> tuple:
    m = cx.mask_of(f)
    return reduced_ranks(tuple(link_masks(cx.facet_masks, m)), as_field(field).characteristic)


def _nonvanishing_below_top(cx, f, q, field) -> bool:
    ranks = _link_ranks(cx, f, field)
    return q < len(ranks) - 2 and ranks[q + 1] != 0


def replay(cx: SimplicialComplex, verdict: PropertyVerdict, k: int | None = None) -> bool:
    """Whether ``verdict``'s witness certifies its result on ``cx``."""
    name, w = verdict.name, verdict.witness
    if name in ("shellable", "clean"):
        if verdict.result:
            return is_shelling(cx, w)
        return verdict.exhaustive
    if name == "k_decomposable":
        if k is None:
            raise ValueError("k is required to replay a decomposition")
        return replay_decomposition(cx, k, w) if verdict.result else verdict.exhaustive
    if name == "cohen_macaulay":
        if verdict.result:
            return _cm_failure(*_ctx(cx), verdict.field.characteristic) is None
        f, q = w
        return _nonvanishing_below_top(cx, f, q, verdict.field)
    if name == "buchsbaum":
        if verdict.result:
            return is_buchsbaum(cx, verdict.field).result
        if w == "not pure":
            return not cx.is_pure()
        from expanse.complex import link
        v, f, q = w
        return _nonvanishing_below_top(link(cx, v).with_universe(cx.universe), f, q, verdict.field)
    if name == "sequentially_cm":
        if verdict.result:
            return _scm_failure(*_ctx(cx), verdict.field.characteristic) is None
        i, f, q = w
        sk = SimplicialComplex.from_masks(cx.universe, pure_skeleton_masks(cx.facet_masks, i))
        return _nonvanishing_below_top(sk, f, q, verdict.field)
    if name == "euler":
        if verdict.result:
            return _euler_failure(*_ctx(cx)) is None
        if w == "not pure":
            return not cx.is_pure()
        m = cx.mask_of(w["face"])
        return euler_from_masks(link_masks(cx.facet_masks, m)) == w["euler"] != w["expected"]
    if name == "gorenstein":
        if verdict.result:
            return _gorenstein_failure(*_ctx(cx), verdict.field.characteristic) is None
        facets = cx.facet_masks
        g = induced_masks(facets, core_vertex_mask(facets))
        ranks = reduced_ranks(tuple(link_masks(g, cx.mask_of(w["core_face"]))),
                              verdict.field.characteristic)
        return any(ranks[:-1]) or ranks[-1] != 1
    raise ValueError(f"unknown property {name!r}")


PROPERTIES = {
    "cm": is_cohen_macaulay,
    "buchsbaum": is_buchsbaum,
    "scm": is_sequentially_cm,
    "gorenstein": is_gorenstein,
    "euler": is_euler,
    "shellable": is_shellable,
    "clean": is_clean,
    "k-decomposable": is_k_decomposable,
}
