"""Corpus generation and theorem-by-theorem verification of expansion results.

A corpus is a list of base complexes, each paired with expansion vectors.
Every theorem check turns one (complex, α) pair into one or more
:class:`TheoremCase` records; a report is those records as JSON lines with a
header and a per-theorem summary.
"""

from __future__ import annotations

import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Iterable, Iterator

from expanse.complex import (
    SimplicialComplex, Vertex, alexander_dual, core, core_vertex_mask, link, omega,
    reduced_euler_characteristic,
)
from expanse.errors import InconsistencyError, SearchLimitExceeded
from expanse.expansion import ExpansionVector, duplicate_vertex, expand, homology_epimorphism_check, restrict_alpha
from expanse.homology import reduced_homology
from expanse.ideals import (
    Monomial, MonomialIdeal, colon_ideal, colon_split, is_k_decomposable_ideal, stanley_reisner_ideal,
)
from expanse.invariants import big_height, depth, projective_dimension, regularity
from expanse.linalg import GF2, QQ, as_field
from expanse.properties import (
    is_buchsbaum, is_clean, is_cohen_macaulay, is_gorenstein, is_k_decomposable, is_sequentially_cm,
    is_shellable, gorenstein_by_euler, sequentially_cm_by_dual,
)

THEOREMS = ("CM", "BUCHS", "SCM", "GOR", "DECOM", "SHELL", "CLEAN", "REGS", "PD", "DEPTH",
            "PROP-EXP", "IDEAL-ID", "REL", "CORE", "KDUAL", "DECOMSHELL")
# not a theorem: agreement of the independent routes inside the library
CONSISTENCY = "CONSIST"
ALL_CHECKS = THEOREMS + (CONSISTENCY,)

MAX_EXHAUSTIVE_VERTICES = 4
MAX_EXHAUSTIVE_TOTAL = 8

CORPUS_NOTE = ("corpus parameters are chosen by this tool: exhaustive mode enumerates every "
               "complex on 1..n vertices with every alpha of entries <= max_copies (sum <= 8); "
               "random mode draws complexes and alphas from random.Random(seed)")


# -- corpus -------------------------------------------------------------------------

def _universe(n: int) -> tuple:
    return tuple(Vertex(i) for i in range(1, n + 1))


def enumerate_complexes(n: int) -> Iterator[SimplicialComplex]:
    """Every complex whose facets are an antichain of nonempty sets covering ``[n]``."""
    if not 1 <= n <= MAX_EXHAUSTIVE_VERTICES:
        raise ValueError(f"n must be in 1..{MAX_EXHAUSTIVE_VERTICES}")
    full = (1 << n) - 1
    subsets = sorted(range(1, full + 1), key=lambda m: (-m.bit_count(), m))
    found: list[tuple] = []

    def extend(start: int, chosen: list[int], cover: int):
        if cover == full:
            found.append(tuple(sorted(chosen)))
        for j in range(start, len(subsets)):
            m = subsets[j]
            if any(m & c == m or m & c == c for c in chosen):
                continue
            chosen.append(m)
            extend(j + 1, chosen, cover | m)
            chosen.pop()

    extend(0, [], 0)
    uni = _universe(n)
    found.sort(key=lambda fs: (max(m.bit_count() for m in fs), len(fs), fs))
    for masks in found:
        yield SimplicialComplex.from_masks(uni, masks, antichain=True)


def random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    """Random complex covering ``[n]``: a few random subsets, uncovered vertices added to one."""
    count = rng.randint(1, 2 * n)
    masks = [rng.randint(1, (1 << n) - 1) for _ in range(count)]
    for v in range(n):
        if not any(m >> v & 1 for m in masks):
            j = rng.randrange(len(masks))
            masks[j] |= 1 << v
    return SimplicialComplex.from_masks(_universe(n), masks)


@dataclass(frozen=True)
class CorpusSpec:
    """``mode`` is ``"exhaustive"`` or ``"random"``."""

    mode: str = "exhaustive"
    max_vertices: int = 3
    max_copies: int = 2
    samples: int = 0
    seed: int = 0
    min_vertices: int | None = None

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown corpus mode {self.mode!r}")
        if self.max_copies < 1 or self.max_vertices < 1:
            raise ValueError("max_vertices and max_copies must be positive")
        if self.mode == "exhaustive" and self.max_vertices > MAX_EXHAUSTIVE_VERTICES:
            raise ValueError(f"exhaustive corpora are limited to {MAX_EXHAUSTIVE_VERTICES} vertices")
        if self.samples < 0:
            raise ValueError("samples must be >= 0")

    def as_dict(self) -> dict:
        return {"mode": self.mode, "max_vertices": self.max_vertices, "max_copies": self.max_copies,
                "samples": self.samples, "seed": self.seed,
                "min_vertices": self.min_vertices if self.min_vertices is not None else
                (1 if self.mode == "exhaustive" else self.max_vertices)}


@dataclass
class CorpusGroup:
    """A base complex with the expansion vectors it is paired with."""

    index: int
    complex: SimplicialComplex
    alphas: list
    seed: int | None = None


def corpus_groups(spec: CorpusSpec) -> list[CorpusGroup]:
    groups = []
    if spec.mode == "exhaustive":
        lo = spec.min_vertices or 1
        for n in range(lo, spec.max_vertices + 1):
            alphas = [ExpansionVector(s) for s in product(range(1, spec.max_copies + 1), repeat=n)
                      if sum(s) <= MAX_EXHAUSTIVE_TOTAL]
            for cx in enumerate_complexes(n):
                groups.append(CorpusGroup(len(groups), cx, alphas))
        return groups
    rng = random.Random(spec.seed)
    lo = spec.min_vertices or spec.max_vertices
    for _ in range(spec.samples):
        n = rng.randint(lo, spec.max_vertices)
        cx = random_complex(rng, n)
        alpha = ExpansionVector(tuple(rng.randint(1, spec.max_copies) for _ in range(n)))
        groups.append(CorpusGroup(len(groups), cx, [alpha], spec.seed))
    return groups


def corpus_pairs(spec: CorpusSpec) -> Iterator[tuple[SimplicialComplex, ExpansionVector]]:
    for g in corpus_groups(spec):
        for a in g.alphas:
            yield g.complex, a


# -- cases ------------------------------------------------------------------------------

def _facet_list(cx: SimplicialComplex) -> list:
    return [[str(v) for v in sorted(f)] for f in cx.facets]


@dataclass
class TheoremCase:
    theorem: str
    group: int
    complex: list
    alpha: str | None
    field: str | None = None
    k: int | None = None
    part: str = ""
    lhs: object = None
    rhs: object = None
    status: str = "pass"
    reason: str = ""
    seed: int | None = None
    detail: dict = dc_field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def key(self) -> tuple:
        return (ALL_CHECKS.index(self.theorem), self.group, self.alpha or "", self.part,
                self.field or "", -2 if self.k is None else self.k)

    def to_record(self) -> dict:
        return {"type": "case", "theorem": self.theorem, "group": self.group, "complex": self.complex,
                "alpha": self.alpha, "field": self.field, "k": self.k, "part": self.part,
                "lhs": self.lhs, "rhs": self.rhs, "status": self.status, "reason": self.reason,
                "seed": self.seed, "detail": self.detail}


class _Item:
    """One (Δ, α) pair with lazily built shared objects."""

    def __init__(self, group: CorpusGroup, alpha: ExpansionVector | None):
        self.group = group
        self.base = group.complex
        self.alpha = alpha
        self._expanded = None

    @property
    def expanded(self) -> SimplicialComplex:
        if self._expanded is None:
            self._expanded = expand(self.base, self.alpha)
        return self._expanded

    def case(self, theorem: str, **kw) -> TheoremCase:
        return TheoremCase(theorem, self.group.index, _facet_list(self.base),
                           str(self.alpha) if self.alpha is not None else None,
                           seed=self.group.seed, **kw)


def _verdict_pair(item: _Item, theorem: str, fn, fields, **kw) -> list:
    out = []
    for f in fields:
        a = fn(item.base, f, **kw).result
        b = fn(item.expanded, f, **kw).result
        out.append(item.case(theorem, field=str(f), lhs=a, rhs=b, status="pass" if a == b else "fail"))
    return out


def _no_cone_points(cx: SimplicialComplex) -> bool:
    used = 0
    for g in cx.facet_masks:
        used |= g
    return core_vertex_mask(cx.facet_masks) == used


def _check_cm(item, fields):
    return _verdict_pair(item, "CM", is_cohen_macaulay, fields)


def _check_buchs(item, fields):
    return _verdict_pair(item, "BUCHS", is_buchsbaum, fields)


def _check_scm(item, fields):
    return _verdict_pair(item, "SCM", is_sequentially_cm, fields)


def _is_converse_example(item: _Item) -> bool:
    t = SimplicialComplex([[1, 2], [1, 3], [2, 3]])
    return item.base == t and item.alpha.s == (2, 1, 1)


def _check_gor(item, fields):
    if not _no_cone_points(item.base):
        return []
    out = []
    for f in fields:
        big = is_gorenstein(item.expanded, f).result
        small = is_gorenstein(item.base, f).result
        out.append(item.case("GOR", field=str(f), part="expanded=>base", lhs=big, rhs=small,
                             status="pass" if small or not big else "fail"))
        if _is_converse_example(item):
            ok = small and not big
            out.append(item.case("GOR", field=str(f), part="converse counterexample", lhs=small, rhs=big,
                                 status="pass" if ok else "fail",
                                 reason="" if ok else "expected base Gorenstein and expansion not"))
    return out


def _check_decom(item, fields):
    out = []
    for k in range(item.base.dim() + 1):
        a = is_k_decomposable(item.base, k).result
        b = is_k_decomposable(item.expanded, k).result
        out.append(item.case("DECOM", k=k, lhs=a, rhs=b, status="pass" if a == b else "fail"))
    return out


def _check_shell(item, fields):
    a, b = is_shellable(item.base).result, is_shellable(item.expanded).result
    return [item.case("SHELL", lhs=a, rhs=b, status="pass" if a == b else "fail")]


def _check_clean(item, fields):
    a, b = is_clean(item.base).result, is_clean(item.expanded).result
    return [item.case("CLEAN", lhs=a, rhs=b, status="pass" if a == b else "fail")]


def _check_regs(item, fields):
    out = []
    r = item.alpha.r()
    zero = item.base.is_simplex
    for f in fields:
        lhs = regularity(item.expanded, f, module="quotient")
        base = regularity(item.base, f, module="quotient")
        detail = {"form": "quotient", "r": r, "equal": lhs == base + r}
        if zero:
            # I_Δ = 0 lies outside the ideal form; record what the literal reading would give
            detail["ideal_form"] = "I_base = 0"
            detail["reg_ideal_expanded"] = regularity(item.expanded, f, module="ideal")
        else:
            detail["ideal_form"] = "checked"
            li, ri = regularity(item.expanded, f), regularity(item.base, f) + r
            detail["reg_ideal_expanded"], detail["reg_ideal_bound"] = li, ri
            if (li <= ri) != (lhs <= base + r):
                out.append(item.case("REGS", field=str(f), lhs=li, rhs=ri, status="fail",
                                     reason="ideal and quotient forms disagree", detail=detail))
                continue
        out.append(item.case("REGS", field=str(f), lhs=lhs, rhs=base + r,
                             status="pass" if lhs <= base + r else "fail", detail=detail))
    return out


def _check_pd(item, fields):
    out = []
    n, total = len(item.base.universe), item.alpha.total()
    for f in fields:
        if not is_sequentially_cm(item.base, f).result:
            continue
        pd_big = projective_dimension(item.expanded, f)
        pd_small = projective_dimension(item.base, f)
        d_big, d_small = depth(item.expanded, f), depth(item.base, f)
        bight = big_height(item.expanded)
        ok = pd_big == pd_small + total - n and d_big == d_small and pd_big == bight
        out.append(item.case("PD", field=str(f), lhs=[pd_big, d_big], rhs=[pd_small + total - n, d_small],
                             status="pass" if ok else "fail", detail={"bight": bight}))
    return out


def _check_depth(item, fields):
    out = []
    for f in fields:
        try:
            big, small = depth(item.expanded, f), depth(item.base, f)
        except InconsistencyError as exc:
            out.append(item.case("DEPTH", field=str(f), status="fail", reason=str(exc)))
            continue
        out.append(item.case("DEPTH", field=str(f), lhs=big, rhs=small,
                             status="pass" if big <= small else "fail", detail={"equal": big == small}))
    return out


def _link_identity(base: SimplicialComplex, big: SimplicialComplex, alpha) -> str:
    copies = dict(zip(base.universe, alpha))
    for m in sorted(base.face_masks()):
        f = base.face_of(m)
        lk = link(base, f)
        want = expand(lk, restrict_alpha(alpha, base.universe, lk.universe))
        for pick in product(*[[Vertex(v.base, j) for j in range(1, copies[v] + 1)] for v in sorted(f)]):
            if link(big, pick) != want:
                return f"link of {sorted(str(v) for v in pick)} differs"
    return ""


def _check_prop_exp(item, fields):
    base, big = item.base, item.expanded
    out = []
    ok = base.dim() == big.dim() and base.is_pure() == big.is_pure()
    out.append(item.case("PROP-EXP", part="i", lhs=[big.dim(), big.is_pure()], rhs=[base.dim(), base.is_pure()],
                         status="pass" if ok else "fail"))
    bad = _link_identity(base, big, item.alpha)
    out.append(item.case("PROP-EXP", part="ii", status="fail" if bad else "pass", reason=bad))
    for f in fields:
        failed = []
        for i in range(-1, base.dim() + 1):
            try:
                if not homology_epimorphism_check(base, item.alpha, i, f):
                    failed.append(i)
            except ArithmeticError:
                failed.append(i)
        out.append(item.case("PROP-EXP", part="iii", field=str(f), lhs=failed, rhs=[],
                             status="fail" if failed else "pass",
                             reason=f"not onto in degrees {failed}" if failed else ""))
    return out


def ideal_identities(cx: SimplicialComplex, vertex) -> dict:
    """Evaluate the duplication identities for ``Δ' = Δ`` with ``vertex`` duplicated.

    Returns ``{name: bool}`` for the Stanley-Reisner identities and the
    splitting of the dual ideal.
    """
    x = vertex if isinstance(vertex, Vertex) else Vertex(vertex)
    dup = duplicate_vertex(cx, x)
    xp = next(v for v in dup.universe if v not in cx.universe)
    big_uni = dup.universe
    rest = tuple(v for v in cx.universe if v != x)
    mx, mxp = Monomial.var(x), Monomial.var(xp)
    lk = link(cx, {x})

    i_dup = stanley_reisner_ideal(dup)
    i_base = stanley_reisner_ideal(cx).with_universe(big_uni)
    i_link = stanley_reisner_ideal(lk, rest)
    both = MonomialIdeal([mx * mxp], big_uni)
    out = {
        "sr_sum": i_dup == both + i_base + i_link.scaled(mxp),
        "sr_plus_new": i_dup + MonomialIdeal([mxp]) == i_base + MonomialIdeal([mxp]),
        "sr_colon_new": colon_ideal(i_dup.generators, mxp) == i_link + MonomialIdeal([mx]),
    }
    j_dup = stanley_reisner_ideal(alexander_dual(dup))
    j_base = stanley_reisner_ideal(alexander_dual(cx)).scaled(mxp)
    j_link = stanley_reisner_ideal(alexander_dual(lk, rest)).scaled(mx)
    out["dual_sum"] = j_dup == j_base + j_link
    out["dual_disjoint"] = (set(j_dup.generators) == set(j_base.generators) | set(j_link.generators)
                            and not set(j_base.generators) & set(j_link.generators))
    lower, upper = colon_split(j_dup, mxp)
    out["dual_split"] = lower == j_link and upper == j_base
    return out


def _check_ideal_id(item, fields):
    out = []
    for x in item.base.vertices:
        res = ideal_identities(item.base, x)
        bad = [k for k, v in res.items() if not v]
        out.append(item.case("IDEAL-ID", part=str(x), lhs=res, rhs=None,
                             status="fail" if bad else "pass", reason=", ".join(bad)))
    return out


def _expand_or_void(cx: SimplicialComplex, alpha, universe) -> SimplicialComplex:
    if cx.is_void:
        return cx
    return expand(cx.with_universe(universe), alpha)


def _check_rel(item, fields):
    base, big = item.base, item.expanded
    dims = sorted({len(f) - 1 for f in base.facets})
    bad = []
    for i in dims:
        om = omega(base, i)
        lhs = (_expand_or_void(om.ambient, item.alpha, base.universe).faces()
               - _expand_or_void(om.sub, item.alpha, base.universe).faces())
        if lhs != omega(big, i).member_faces:
            bad.append(i)
    return [item.case("REL", lhs=bad, rhs=[], status="fail" if bad else "pass",
                      reason=f"differs for i in {bad}" if bad else "")]


def _check_core(item, fields):
    if not _no_cone_points(item.base):
        return []
    ok = core(item.expanded) == expand(item.base, item.alpha) and core(item.base) == item.base
    return [item.case("CORE", status="pass" if ok else "fail")]


def _kdual_cases(item, cx, part):
    out = []
    ideal = stanley_reisner_ideal(alexander_dual(cx))
    for k in range(cx.dim() + 1):
        a = is_k_decomposable(cx, k).result
        b = is_k_decomposable_ideal(ideal, k)
        out.append(item.case("KDUAL", part=part, k=k, lhs=a, rhs=b, status="pass" if a == b else "fail"))
    return out


def _decomshell_cases(item, cx, part):
    a = is_shellable(cx).result
    b = is_k_decomposable(cx, cx.dim()).result
    return [item.case("DECOMSHELL", part=part, lhs=a, rhs=b, status="pass" if a == b else "fail")]


def _consistency_cases(item, cx, part, fields):
    out = []
    chi_f = reduced_euler_characteristic(cx)
    for f in fields:
        bad = []
        try:
            depth(cx, f, method="both")
        except InconsistencyError:
            bad.append("depth")
        if reduced_homology(cx, f).euler_characteristic() != chi_f:
            bad.append("euler")
        if is_sequentially_cm(cx, f).result != sequentially_cm_by_dual(cx, f):
            bad.append("scm")
        if _no_cone_points(cx) and is_gorenstein(cx, f, cross_check=False).result != gorenstein_by_euler(cx, f):
            bad.append("gorenstein")
        out.append(item.case(CONSISTENCY, part=part, field=str(f), lhs=bad, rhs=[],
                             status="fail" if bad else "pass", reason=", ".join(bad)))
    return out


PAIR_CHECKS = {
    "CM": _check_cm, "BUCHS": _check_buchs, "SCM": _check_scm, "GOR": _check_gor,
    "DECOM": _check_decom, "SHELL": _check_shell, "CLEAN": _check_clean, "REGS": _check_regs,
    "PD": _check_pd, "DEPTH": _check_depth, "PROP-EXP": _check_prop_exp, "REL": _check_rel,
    "CORE": _check_core,
}


def _guard(fn, item, theorem, *args) -> list:
    try:
        return fn(item, *args)
    except SearchLimitExceeded as exc:
        return [item.case(theorem, status="skip", reason=str(exc))]


def run_group(group: CorpusGroup, theorems: Iterable[str], fields) -> list[TheoremCase]:
    """All cases generated by one base complex and its expansion vectors."""
    theorems = list(theorems)
    fields = [as_field(f) for f in fields]
    cases: list[TheoremCase] = []
    head = _Item(group, None)
    if "IDEAL-ID" in theorems:
        cases += _guard(_check_ideal_id, head, "IDEAL-ID", fields)
    if "KDUAL" in theorems:
        cases += _guard(lambda it, f: _kdual_cases(it, it.base, "base"), head, "KDUAL", fields)
    if "DECOMSHELL" in theorems:
        cases += _guard(lambda it, f: _decomshell_cases(it, it.base, "base"), head, "DECOMSHELL", fields)
    if CONSISTENCY in theorems:
        cases += _guard(lambda it, f: _consistency_cases(it, it.base, "base", f), head, CONSISTENCY, fields)
    for alpha in group.alphas:
        item = _Item(group, alpha)
        for t in theorems:
            if t in PAIR_CHECKS:
                cases += _guard(PAIR_CHECKS[t], item, t, fields)
        trivial = all(s == 1 for s in alpha)
        if trivial:
            continue
        if "KDUAL" in theorems:
            cases += _guard(lambda it, f: _kdual_cases(it, it.expanded, "expanded"), item, "KDUAL", fields)
        if "DECOMSHELL" in theorems:
            cases += _guard(lambda it, f: _decomshell_cases(it, it.expanded, "expanded"), item,
                            "DECOMSHELL", fields)
        if CONSISTENCY in theorems:
            cases += _guard(lambda it, f: _consistency_cases(it, it.expanded, "expanded", f), item,
                            CONSISTENCY, fields)
    return cases


def _run_group_args(args):
    return run_group(*args)


def verify_theorem(theorem: str, corpus: CorpusSpec, fields=(QQ, GF2), jobs: int = 1) -> list[TheoremCase]:
    if theorem not in ALL_CHECKS:
        raise ValueError(f"unknown theorem id {theorem!r}")
    return run_cases(corpus, [theorem], fields, jobs)


def run_cases(corpus: CorpusSpec, theorems, fields=(QQ, GF2), jobs: int = 1) -> list[TheoremCase]:
    groups = corpus_groups(corpus)
    fields = tuple(as_field(f) for f in fields)
    work = [(g, tuple(theorems), fields) for g in groups]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_run_group_args, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        chunks = [_run_group_args(w) for w in work]
    cases = [c for chunk in chunks for c in chunk]
    cases.sort(key=TheoremCase.key)
    return cases


# -- reports ----------------------------------------------------------------------------

@dataclass
class Report:
    corpus: CorpusSpec
    theorems: tuple
    fields: tuple
    cases: list
    groups: int = 0
    pairs: int = 0

    @property
    def failures(self) -> list[TheoremCase]:
        return [c for c in self.cases if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> dict:
        table = {t: {"run": 0, "passed": 0, "failed": 0, "skipped": 0} for t in self.theorems}
        for c in self.cases:
            row = table[c.theorem]
            if c.status == "skip":
                row["skipped"] += 1
                continue
            row["run"] += 1
            row["passed" if c.status == "pass" else "failed"] += 1
        return table

    def equality_witness(self, theorem: str):
        """First case with a nontrivial ``α`` where ``REGS`` or ``DEPTH`` is tight."""
        for c in self.cases:
            if c.theorem != theorem or c.status != "pass":
                continue
            if theorem == "REGS" and c.detail.get("ideal_form") == "checked" and c.detail["r"] > 0 and \
                    c.detail["reg_ideal_expanded"] == c.detail["reg_ideal_bound"]:
                return c
            if theorem == "DEPTH" and c.detail.get("equal") and c.alpha and set(c.alpha.split(",")) != {"1"}:
                return c
        return None

    def header(self) -> dict:
        return {"type": "header", "corpus": self.corpus.as_dict(), "theorems": list(self.theorems),
                "fields": [str(f) for f in self.fields], "groups": self.groups, "pairs": self.pairs,
                "note": CORPUS_NOTE}

    def lines(self) -> list[str]:
        out = [self.header()]
        out += [c.to_record() for c in self.cases]
        witnesses = {}
        for t in ("REGS", "DEPTH"):
            w = self.equality_witness(t) if t in self.theorems else None
            if w is not None:
                witnesses[t] = {"complex": w.complex, "alpha": w.alpha, "field": w.field,
                                "lhs": w.lhs, "rhs": w.rhs}
        out.append({"type": "summary", "table": self.summary(), "equality_witnesses": witnesses,
                    "failures": len(self.failures)})
        return [json.dumps(r, ensure_ascii=False, separators=(",", ":")) for r in out]

    def write(self, path) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for line in self.lines():
                fh.write(line + "\n")

    def table_text(self) -> str:
        rows = [f"{'theorem':<12}{'run':>8}{'passed':>8}{'failed':>8}{'skipped':>9}"]
        for t, row in self.summary().items():
            rows.append(f"{t:<12}{row['run']:>8}{row['passed']:>8}{row['failed']:>8}{row['skipped']:>9}")
        return "\n".join(rows) + "\n"


def run_report(corpus: CorpusSpec, theorems=THEOREMS, fields=(QQ, GF2), out=None, jobs: int = 1) -> Report:
    """Run every check and optionally write the JSON-lines report to ``out``."""
    theorems = tuple(theorems)
    for t in theorems:
        if t not in ALL_CHECKS:
            raise ValueError(f"unknown theorem id {t!r}")
    fields = tuple(as_field(f) for f in fields)
    groups = corpus_groups(corpus)
    if not groups:
        print("warning: empty corpus", file=sys.stderr)
    cases = run_cases(corpus, theorems, fields, jobs)
    report = Report(corpus, theorems, fields, cases, len(groups), sum(len(g.alphas) for g in groups))
    if out is not None:
        report.write(out)
    return report


def gorenstein_converse_counterexample(field=QQ) -> dict:
    """The triangle boundary is Gorenstein; its (2,1,1) expansion is not (it is not Euler)."""
    from expanse.properties import is_euler

    t = SimplicialComplex([[1, 2], [1, 3], [2, 3]])
    big = expand(t, (2, 1, 1))
    euler = is_euler(big)
    return {"base_gorenstein": is_gorenstein(t, field).result,
            "expanded_euler": euler.result,
            "witness": euler.witness,
            "expanded_gorenstein": is_gorenstein(big, field).result}


__all__ = [
    "THEOREMS", "CONSISTENCY", "ALL_CHECKS", "CorpusSpec", "CorpusGroup", "TheoremCase", "Report",
    "enumerate_complexes", "random_complex", "corpus_groups", "corpus_pairs", "run_group",
    "run_cases", "verify_theorem", "run_report", "ideal_identities", "gorenstein_converse_counterexample",
]
