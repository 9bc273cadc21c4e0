import json

import pytest

import oracles
from conftest import T
from expanse.harness import (
    ALL_CHECKS, THEOREMS, CorpusSpec, corpus_groups, enumerate_complexes, gorenstein_converse_counterexample,
    run_cases, run_report, verify_theorem,
)
from expanse.linalg import GF2, QQ


@pytest.mark.parametrize("n,count", [(1, 1), (2, 2), (3, 9), (4, 114)])
def test_enumeration_counts(n, count):
    got = {frozenset(frozenset(v.base for v in f) for f in c.facets) for c in enumerate_complexes(n)}
    assert len(got) == count
    assert got == set(oracles.antichain_complexes(n))


def test_enumeration_bounds():
    with pytest.raises(ValueError):
        list(enumerate_complexes(5))
    with pytest.raises(ValueError):
        CorpusSpec("exhaustive", 5)
    with pytest.raises(ValueError):
        CorpusSpec("bogus")


def test_exhaustive_corpus_shape():
    groups = corpus_groups(CorpusSpec("exhaustive", 2, 2))
    assert len(groups) == 3
    assert [len(g.alphas) for g in groups] == [2, 4, 4]


def test_random_corpus_is_seeded():
    a = corpus_groups(CorpusSpec("random", 4, 3, 10, 7))
    b = corpus_groups(CorpusSpec("random", 4, 3, 10, 7))
    assert [(g.complex, g.alphas) for g in a] == [(g.complex, g.alphas) for g in b]
    assert all(len(g.complex.universe) == 4 for g in a)
    assert all(max(g.alphas[0]) <= 3 for g in a)


def test_converse_counterexample():
    res = gorenstein_converse_counterexample(QQ)
    assert res["base_gorenstein"] and not res["expanded_euler"] and not res["expanded_gorenstein"]
    assert res["witness"]["euler"] == 2


def test_gorenstein_cases_include_converse():
    cases = verify_theorem("GOR", CorpusSpec("exhaustive", 3, 2))
    conv = [c for c in cases if c.part == "converse counterexample"]
    assert len(conv) == 2 and all(c.passed for c in conv)
    assert all(c.complex == [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]] for c in conv)


def test_regs_and_pd_on_triangle():
    cases = verify_theorem("REGS", CorpusSpec("exhaustive", 3, 2), fields=[QQ])
    tri = [c for c in cases if c.complex == [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]] and c.alpha == "2,1,1"]
    assert len(tri) == 1
    assert tri[0].detail["reg_ideal_expanded"] == 3 and tri[0].detail["reg_ideal_bound"] == 4
    pd = verify_theorem("PD", CorpusSpec("exhaustive", 3, 2), fields=[QQ])
    tri = [c for c in pd if c.complex == [["x1", "x2"], ["x1", "x3"], ["x2", "x3"]] and c.alpha == "2,1,1"]
    assert tri[0].lhs == [2, 2] and tri[0].rhs == [2, 2] and tri[0].detail["bight"] == 2


def test_regs_on_simplex_uses_quotient_form():
    # I = 0 for a simplex; the duplicated point has I = (x1 x1_2) with reg 2 > 0 + 1
    cases = verify_theorem("REGS", CorpusSpec("exhaustive", 1, 2), fields=[QQ])
    dup = next(c for c in cases if c.alpha == "2")
    assert dup.passed and dup.detail["ideal_form"] == "I_base = 0"
    assert dup.detail["reg_ideal_expanded"] == 2


def test_small_exhaustive_all_pass():
    report = run_report(CorpusSpec("exhaustive", 3, 2), ALL_CHECKS)
    assert report.ok
    table = report.summary()
    assert all(row["skipped"] == 0 for row in table.values())
    assert all(table[t]["run"] > 0 for t in ALL_CHECKS)


def test_unknown_theorem():
    with pytest.raises(ValueError):
        verify_theorem("NOPE", CorpusSpec())
    with pytest.raises(ValueError):
        run_report(CorpusSpec(), ["NOPE"])


def test_report_is_deterministic_across_jobs(tmp_path):
    spec = CorpusSpec("random", 4, 2, 12, 3)
    a = run_report(spec, ALL_CHECKS, out=tmp_path / "a.jsonl", jobs=1)
    b = run_report(spec, ALL_CHECKS, out=tmp_path / "b.jsonl", jobs=2)
    assert a.lines() == b.lines()
    assert (tmp_path / "a.jsonl").read_bytes() == (tmp_path / "b.jsonl").read_bytes()


def test_report_lines_are_json(tmp_path):
    report = run_report(CorpusSpec("exhaustive", 2, 2), ("CM", "REGS", "DEPTH"), out=tmp_path / "r.jsonl")
    records = [json.loads(line) for line in (tmp_path / "r.jsonl").read_text().splitlines()]
    assert records[0]["type"] == "header" and records[0]["corpus"]["mode"] == "exhaustive"
    assert records[-1]["type"] == "summary" and records[-1]["failures"] == 0
    cases = [r for r in records if r["type"] == "case"]
    assert len(cases) == len(report.cases)
    assert {r["status"] for r in cases} == {"pass"}


def test_every_case_has_a_status():
    cases = run_cases(CorpusSpec("random", 4, 2, 5, 11), THEOREMS, (QQ, GF2))
    assert {c.status for c in cases} <= {"pass", "fail", "skip"}
    assert all(c.reason for c in cases if c.status == "skip")


def test_empty_corpus_warns(capsys):
    report = run_report(CorpusSpec("random", 3, 2, 0, 1))
    assert report.cases == [] and report.ok
    assert "empty corpus" in capsys.readouterr().err


def test_equality_witness_found():
    report = run_report(CorpusSpec("exhaustive", 3, 2), ("REGS", "DEPTH"), fields=[QQ])
    regs = report.equality_witness("REGS")
    assert regs is not None and regs.detail["reg_ideal_expanded"] == regs.detail["reg_ideal_bound"]
    dep = report.equality_witness("DEPTH")
    assert dep is not None and dep.lhs == dep.rhs


def test_triangle_is_in_corpus():
    assert any(g.complex == T for g in corpus_groups(CorpusSpec("exhaustive", 3, 2)))
