"""Monomial ideals: Stanley-Reisner and facet ideals, Alexander duality,
colon splits, k-decomposability and linear quotients."""

from __future__ import annotations

import re
from functools import lru_cache
from itertools import combinations, product
from typing import Iterable

from expanse._bits import bits, minimal_transversals
from expanse.complex import SimplicialComplex, Vertex, as_vertex
from expanse.errors import SearchLimitExceeded
from expanse.linalg import GF2, QQ


class Monomial:
    """``∏ x^a`` with positive exponents keyed by :class:`Vertex`."""

    __slots__ = ("_exps", "_hash")

    def __init__(self, exponents=None):
        items = {}
        for v, a in dict(exponents or {}).items():
            a = int(a)
            if a < 0:
                raise ValueError("exponents must be >= 0")
            if a:
                v = as_vertex(v)
                items[v] = items.get(v, 0) + a
        self._exps = tuple(sorted(items.items()))
        self._hash = hash(self._exps)

    @classmethod
    def one(cls) -> "Monomial":
        return cls()

    @classmethod
    def var(cls, v) -> "Monomial":
        return cls({v: 1})

    @classmethod
    def from_face(cls, vertices: Iterable) -> "Monomial":
        return cls({v: 1 for v in vertices})

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        t = text.strip().replace(" ", "")
        if t == "1":
            return cls()
        exps: dict = {}
        for tok in t.split("*"):
            m = re.fullmatch(r"(x?\d+(?:_\d+)?)(?:\^(\d+))?", tok)
            if m is None:
                raise ValueError(f"bad monomial factor {tok!r}")
            v = Vertex.parse(m.group(1))
            exps[v] = exps.get(v, 0) + int(m.group(2) or 1)
        return cls(exps)

    @property
    def exponents(self) -> dict:
        return dict(self._exps)

    def exponent(self, v) -> int:
        v = as_vertex(v)
        for w, a in self._exps:
            if w == v:
                return a
        return 0

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self._exps)

    @property
    def degree(self) -> int:
        return sum(a for _, a in self._exps)

    def is_one(self) -> bool:
        return not self._exps

    def is_squarefree(self) -> bool:
        return all(a == 1 for _, a in self._exps)

    def divides(self, other: "Monomial") -> bool:
        o = dict(other._exps)
        return all(o.get(v, 0) >= a for v, a in self._exps)

    def __mul__(self, other: "Monomial") -> "Monomial":
        e = dict(self._exps)
        for v, a in other._exps:
            e[v] = e.get(v, 0) + a
        return Monomial(e)

    def gcd(self, other: "Monomial") -> "Monomial":
        o = dict(other._exps)
        return Monomial({v: min(a, o.get(v, 0)) for v, a in self._exps})

    def lcm(self, other: "Monomial") -> "Monomial":
        e = dict(self._exps)
        for v, a in other._exps:
            e[v] = max(e.get(v, 0), a)
        return Monomial(e)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        if not other.divides(self):
            raise ValueError(f"{other} does not divide {self}")
        e = dict(self._exps)
        for v, a in other._exps:
            e[v] -= a
        return Monomial(e)

    def quotient(self, other: "Monomial") -> "Monomial":
        """Monomial colon ``self : other = self / gcd(self, other)``."""
        return self / self.gcd(other)

    def __eq__(self, other) -> bool:
        return isinstance(other, Monomial) and self._exps == other._exps

    def __hash__(self) -> int:
        return self._hash

    def sort_key(self) -> tuple:
        return (self.degree, self._exps)

    def __lt__(self, other: "Monomial") -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        if not self._exps:
            return "1"
        return "*".join(str(v) if a == 1 else f"{v}^{a}" for v, a in self._exps)

    def __repr__(self) -> str:
        return f"Monomial({self})"


def _minimalize(gens: Iterable[Monomial]) -> tuple:
    ordered = sorted(set(gens))
    kept: list[Monomial] = []
    for g in ordered:
        if not any(k.divides(g) for k in kept):
            kept.append(g)
    return tuple(sorted(kept))


class MonomialIdeal:
    """Monomial ideal stored by its unique minimal generating set.

    ``universe`` is the ambient variable set; it always contains the support
    of every generator.  Equality compares generators only.
    """

    def __init__(self, generators: Iterable = (), universe=None):
        gens = [g if isinstance(g, Monomial) else Monomial.parse(g) if isinstance(g, str)
                else Monomial(g) for g in generators]
        self.generators = _minimalize(gens)
        used = set()
        for g in self.generators:
            used |= g.support
        if universe is not None:
            used |= {as_vertex(v) for v in universe}
        self.universe = tuple(sorted(used))

    @classmethod
    def zero(cls, universe=()) -> "MonomialIdeal":
        return cls((), universe)

    @classmethod
    def unit(cls, universe=()) -> "MonomialIdeal":
        return cls((Monomial.one(),), universe)

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_unit(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def is_squarefree(self) -> bool:
        return all(g.is_squarefree() for g in self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __contains__(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.generators + other.generators, self.universe + other.universe)

    def scaled(self, m: Monomial) -> "MonomialIdeal":
        """The ideal ``m · I``."""
        return MonomialIdeal((m * g for g in self.generators), self.universe + tuple(m.support))

    def with_universe(self, universe) -> "MonomialIdeal":
        return MonomialIdeal(self.generators, universe)

    def degrees(self) -> set[int]:
        return {g.degree for g in self.generators}

    def support_masks(self) -> list[int]:
        index = {v: i for i, v in enumerate(self.universe)}
        return [sum(1 << index[v] for v in g.support) for g in self.generators]

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialIdeal) and self.generators == other.generators

    def __hash__(self) -> int:
        return hash(self.generators)

    def __str__(self) -> str:
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"

    __repr__ = __str__

    def to_text(self) -> str:
        return format_ideal(self)


def parse_ideal(text: str, universe=None) -> MonomialIdeal:
    """One generator per line (``x1*x2^2``); ``0`` alone is the zero ideal."""
    gens = []
    zero = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line == "0":
            zero = True
            continue
        gens.append(Monomial.parse(line))
    if zero and gens:
        raise ValueError("0 cannot be combined with generators")
    return MonomialIdeal(gens, universe)


def format_ideal(ideal: MonomialIdeal) -> str:
    if ideal.is_zero:
        return "0\n"
    return "\n".join(str(g) for g in ideal.generators) + "\n"


# -- complexes <-> ideals ------------------------------------------------------

def _mask_monomial(universe: tuple, mask: int) -> Monomial:
    return Monomial.from_face(universe[i] for i in bits(mask))


def stanley_reisner_ideal(cx: SimplicialComplex, universe=None) -> MonomialIdeal:
    """Generated by ``x^N`` over the minimal non-faces ``N``."""
    if universe is not None:
        cx = cx.with_universe(universe)
    if cx.is_void:
        return MonomialIdeal.unit(cx.universe)
    full = (1 << len(cx.universe)) - 1
    nonfaces = minimal_transversals(full & ~g for g in cx.facet_masks)
    return MonomialIdeal((_mask_monomial(cx.universe, n) for n in nonfaces), cx.universe)


def facet_ideal(cx: SimplicialComplex) -> MonomialIdeal:
    """``(x^F : F a facet)``; the irrelevant complex gives the unit ideal."""
    if cx.is_void:
        raise ValueError("the void complex has no facet ideal")
    return MonomialIdeal((Monomial.from_face(f) for f in cx.facets), cx.universe)


def _require_squarefree(ideal: MonomialIdeal) -> None:
    if not ideal.is_squarefree():
        raise ValueError("ideal is not squarefree")


def alexander_dual_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    """Intersection of the primes generated by the supports of the generators."""
    _require_squarefree(ideal)
    trans = minimal_transversals(ideal.support_masks())
    if not trans:  # (1): the prime of the empty support is (0)
        return MonomialIdeal.zero(ideal.universe)
    return MonomialIdeal((_mask_monomial(ideal.universe, t) for t in trans), ideal.universe)


def complex_of(ideal: MonomialIdeal) -> SimplicialComplex:
    """Stanley-Reisner complex of a squarefree ideal on its universe."""
    _require_squarefree(ideal)
    full = (1 << len(ideal.universe)) - 1
    trans = minimal_transversals(ideal.support_masks())
    return SimplicialComplex.from_masks(ideal.universe, [full & ~t for t in trans], antichain=True)


# -- colon splits and decomposability ------------------------------------------

def _as_monomial(u) -> Monomial:
    if isinstance(u, Monomial):
        return u
    if isinstance(u, str):
        return Monomial.parse(u)
    return Monomial(u)


def bracket_is_one(u: Monomial, m: Monomial) -> bool:
    """``[u, M] = 1``: no ``x^a`` of ``u`` divides ``M``."""
    return all(m.exponent(v) < a for v, a in u._exps)


def colon_split(ideal: MonomialIdeal, u) -> tuple[MonomialIdeal, MonomialIdeal]:
    """Return ``(I_u, I^u)`` partitioning the minimal generators by ``[u, M]``."""
    u = _as_monomial(u)
    if u.is_one():
        raise ValueError("u must not be 1")
    lower = [g for g in ideal.generators if bracket_is_one(u, g)]
    upper = [g for g in ideal.generators if not bracket_is_one(u, g)]
    return MonomialIdeal(lower, ideal.universe), MonomialIdeal(upper, ideal.universe)


def _shedding(gens: tuple, u: Monomial) -> tuple | None:
    lower = tuple(g for g in gens if bracket_is_one(u, g))
    if not lower:
        return None
    upper = tuple(g for g in gens if not bracket_is_one(u, g))
    targets = {Monomial.var(v) for v in u.support}
    for mi in lower:
        have = {mj.quotient(mi) for mj in upper}
        if not targets <= have:
            return None
    return lower, upper


def is_shedding_monomial(ideal: MonomialIdeal, u) -> bool:
    u = _as_monomial(u)
    if u.is_one():
        raise ValueError("u must not be 1")
    return _shedding(ideal.generators, u) is not None


def _candidates(gens: tuple, k: int):
    variables = sorted(set().union(*(g.support for g in gens)))
    top = max((a for g in gens for _, a in g._exps), default=1)
    for size in range(1, min(k + 1, len(variables)) + 1):
        for vs in combinations(variables, size):
            for exps in product(range(1, top + 1), repeat=size):
                yield Monomial(dict(zip(vs, exps)))


# squarefree ideals are searched on bitmasks: [u, M] = 1 iff u & M == 0 and
# M_j : M_i is M_j & ~M_i

def _mask_twins(gens: tuple) -> list[list[int]]:
    """Classes of variables whose transposition fixes the generator set."""
    support = 0
    for g in gens:
        support |= g
    classes: list[list[int]] = []
    for v in bits(support):
        bv = 1 << v
        for cls in classes:
            bu = 1 << cls[0]
            only_u = {g ^ bu for g in gens if g & bu and not g & bv}
            only_v = {g ^ bv for g in gens if g & bv and not g & bu}
            if only_u == only_v:
                cls.append(v)
                break
        else:
            classes.append([v])
    return classes


def _compositions(total: int, caps: list[int]):
    if not caps:
        if total == 0:
            yield ()
        return
    for t in range(min(total, caps[0]), -1, -1):
        for rest in _compositions(total - t, caps[1:]):
            yield (t,) + rest


def _mask_candidates(gens: tuple, k: int):
    """One squarefree ``u`` per orbit under twin transpositions."""
    classes = _mask_twins(gens)
    total = sum(len(c) for c in classes)
    for size in range(1, min(k + 1, total) + 1):
        for counts in _compositions(size, [len(c) for c in classes]):
            yield sum(1 << v for c, t in zip(classes, counts) for v in c[:t])


def _mask_shedding(gens: tuple, u: int):
    lower = tuple(g for g in gens if not g & u)
    if not lower:
        return None
    upper = tuple(g for g in gens if g & u)
    targets = [1 << v for v in bits(u)]
    for mi in lower:
        have = {mj & ~mi for mj in upper}
        if not all(t in have for t in targets):
            return None
    return lower, upper


IDEAL_SEARCH_BUDGET = 200_000
FIRST_PASS_BUDGET = 1_000


class _IdealDecomposer:
    """Depth-first search for a shedding tree with a node budget."""

    def __init__(self, budget: int, squarefree: bool):
        self.budget = budget
        self.nodes = 0
        self.memo: dict = {}
        self.candidates = _mask_candidates if squarefree else _candidates
        self.shedding = _mask_shedding if squarefree else _shedding

    def run(self, gens: tuple, k: int):
        if len(gens) <= 1:
            return ("base",)
        if gens in self.memo:
            return self.memo[gens]
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchLimitExceeded(f"ideal decomposition search exceeded {self.budget} nodes")
        out = None
        for u in self.candidates(gens, k):
            split = self.shedding(gens, u)
            if split is None:
                continue
            lower, upper = split
            left = self.run(lower, k)
            if left is None:
                continue
            right = self.run(upper, k)
            if right is None:
                continue
            out = (u, left, right)
            break
        self.memo[gens] = out
        return out


def _label_tree(tree, label):
    if tree is None or tree == ("base",):
        return tree
    u, left, right = tree
    return (label(u), _label_tree(left, label), _label_tree(right, label))


@lru_cache(maxsize=1 << 12)
def _k_decomposable(gens: tuple, k: int):
    """``(tree or None, method)`` with ``u`` written as strings in the tree."""
    squarefree = all(g.is_squarefree() for g in gens)
    if squarefree:
        universe = tuple(sorted(set().union(*(g.support for g in gens)))) if gens else ()
        index = {v: i for i, v in enumerate(universe)}
        key = tuple(sorted(sum(1 << index[v] for v in g.support) for g in gens))

        def label(u):
            return str(_mask_monomial(universe, u))
    else:
        key = gens
        label = str

    try:
        tree = _IdealDecomposer(FIRST_PASS_BUDGET, squarefree).run(key, k)
        return _label_tree(tree, label), "search"
    except SearchLimitExceeded:
        pass
    if squarefree:
        # k-decomposable ideals have linear quotients, so are componentwise linear
        ideal = MonomialIdeal(gens)
        for f in (QQ, GF2):
            if not is_componentwise_linear(ideal, f):
                return None, f"not componentwise linear over {f}"
    tree = _IdealDecomposer(IDEAL_SEARCH_BUDGET, squarefree).run(key, k)
    return _label_tree(tree, label), "search"


def is_k_decomposable_ideal(ideal: MonomialIdeal, k: int) -> bool:
    """Recursive test; the zero ideal counts as decomposable."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _k_decomposable(ideal.generators, k)[0] is not None


def k_decomposition_tree(ideal: MonomialIdeal, k: int):
    """Nested ``(u, tree(I_u), tree(I^u))`` witness, or ``None``."""
    if k < 0:
        raise ValueError("k must be >= 0")
    return _k_decomposable(ideal.generators, k)[0]


def colon_ideal(gens: Iterable[Monomial], f: Monomial) -> MonomialIdeal:
    """``(g_1, ..., g_m) : (f)`` for monomials."""
    return MonomialIdeal(g.quotient(f) for g in gens)


def linear_quotients_order(ideal: MonomialIdeal):
    """First order of linear quotients in lexicographic search order.

    Returns ``[(f_1, set()), (f_2, set_I(f_2)), ...]`` with ``set_I`` a
    ``frozenset`` of vertices, or ``None`` if no order exists.
    """
    gens = ideal.generators
    if not gens:
        raise ValueError("the zero ideal has no generators to order")
    m = len(gens)
    dead: set[int] = set()

    def labels(placed: list[int], j: int):
        col = colon_ideal((gens[i] for i in placed), gens[j])
        if any(g.degree != 1 for g in col.generators):
            return None
        return frozenset(v for g in col.generators for v in g.support)

    def search(placed: list[int], used: int, out: list):
        if len(placed) == m:
            return True
        if used in dead:
            return False
        for j in range(m):
            if used >> j & 1:
                continue
            lab = labels(placed, j) if placed else frozenset()
            if lab is None:
                continue
            placed.append(j)
            out.append((gens[j], lab))
            if search(placed, used | 1 << j, out):
                return True
            placed.pop()
            out.pop()
        dead.add(used)
        return False

    out: list = []
    return out if search([], 0, out) else None


def linear_resolution_check(ideal: MonomialIdeal, d: int, field=QQ) -> bool:
    """Whether a squarefree ideal generated in degree ``d`` has a ``d``-linear resolution."""
    from expanse.invariants import ideal_regularity

    if ideal.degrees() != {d}:
        raise ValueError(f"generators are not all of degree {d}")
    _require_squarefree(ideal)
    if ideal.is_unit:
        return True  # S itself, resolved by S
    return ideal_regularity(ideal, field) == d


def is_componentwise_linear(ideal: MonomialIdeal, field=QQ) -> bool:
    """Every squarefree component ``I_[j]`` has a ``j``-linear resolution."""
    _require_squarefree(ideal)
    if ideal.is_zero or ideal.is_unit:
        return True
    for j in range(min(ideal.degrees()), len(ideal.universe) + 1):
        comp = squarefree_component(ideal, j)
        if comp.is_zero:
            break
        if not linear_resolution_check(comp, j, field):
            return False
    return True


def squarefree_component(ideal: MonomialIdeal, j: int) -> MonomialIdeal:
    """Ideal generated by the squarefree degree-``j`` monomials of ``I``."""
    _require_squarefree(ideal)
    n = len(ideal.universe)
    masks = ideal.support_masks()
    out = []
    for combo in combinations(range(n), j):
        w = sum(1 << i for i in combo)
        if any(g & w == g for g in masks):
            out.append(_mask_monomial(ideal.universe, w))
    return MonomialIdeal(out, ideal.universe)
