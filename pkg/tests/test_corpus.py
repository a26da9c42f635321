import pytest

from gkforge.corpus import (TSV_HEADER, Corpus, emit, format_tsv, parse_corpus, run_corpus,
                            run_report)
from gkforge.errors import DuplicateName, ParseError

SMALL = """\
name: C6
kind: cyclic
n: 6

name: F21
kind: semidirect
normal: cyclic 7
acting: cyclic 3
action: n1^2

name: F21xC2
kind: direct
factors: F21; cyclic 2
tags: cut-vertex

name: S3
degree: 3
gens: (1 2); (1 2 3)
tags: frobenius disconnected
"""


@pytest.fixture(scope="module")
def small():
    return Corpus(parse_corpus(SMALL))


def test_parse_and_build(small):
    assert [e.name for e in small] == ["C6", "F21", "F21xC2", "S3"]
    assert [small.group(e.name).order for e in small] == [6, 21, 42, 6]
    assert small["S3"].expected_tags == {"frobenius", "disconnected"}


@pytest.mark.parametrize("text, line", [
    ("name: A\nkind: cyclic\nn: 3\nbogus: 1\n", 4),
    ("kind: cyclic\n", 1),
    ("name: A\nkind: cyclic\nn three\n", 3),
])
def test_parse_error_carries_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_corpus(text)
    assert info.value.line == line


def test_duplicate_name():
    with pytest.raises(DuplicateName):
        parse_corpus("name: A\nkind: cyclic\nn: 3\nname: A\nkind: cyclic\nn: 5\n")


def test_report_records(small):
    r = run_report(small, "F21xC2")
    assert r.passed, [c.line() for c in r.failures()]
    assert r.cut_vertices == (2,)
    assert any(c.check == "theorem-a" and "|G0|=2" in "".join(r.certificates) for c in r.checks)
    r = run_report(small, "S3")
    assert {c.check for c in r.checks} >= {"gk", "lucido", "tags"}


def test_tag_mismatch_fails():
    c = Corpus(parse_corpus("name: S3\nkind: symmetric\nn: 3\ntags: 2frobenius disconnected\n"))
    r = run_report(c, "S3")
    assert [f.check for f in r.failures()] == ["tags"]


def test_empty_corpus_tsv_is_header_only():
    assert format_tsv(run_corpus(Corpus([]))) == TSV_HEADER


def test_dot_dir(small, tmp_path):
    paths = emit(run_corpus(small), "dot-dir", tmp_path)
    assert [p.name for p in paths] == ["01_C6.dot", "02_F21.dot", "03_F21xC2.dot", "04_S3.dot"]
    assert "2 -- 3" in paths[0].read_text()


def test_runs_are_deterministic(small):
    a = run_corpus(small)
    b = run_corpus(small, jobs=2)
    assert format_tsv(a) == format_tsv(b)
    assert [r.certificates for r in a] == [r.certificates for r in b]


def test_bundled_corpus(corpus):
    assert len(corpus) >= 30
    orders = [corpus.group(e.name).order for e in corpus]
    assert max(orders) <= 2000
