from collections import defaultdict

import pytest
from hypothesis import given, settings, strategies as st

from fieldevo.corpus import (
    CorpusCell, FieldCorpus, YearSeries, format_corpus_csv, occurrence_totals, parse_corpus_csv,
    trend_series,
)
from fieldevo.errors import (
    DuplicateCell, EmptyCorpus, InconsistentDocuments, MalformedHeader, MalformedRow, NegativeCount,
)

from conftest import make_corpus


def test_parse_minimal():
    c = parse_corpus_csv("year,discipline,count\n2002,Medicine,2\n2002,Immunology and Microbiology,1")
    assert len(c.cells) == 2
    assert c.span == (2002, 2002)
    assert c.document_totals is None


def test_parse_crlf_and_documents():
    text = "year,discipline,count,documents\r\n2002,Medicine,2,2\r\n2002, Nursing ,1,2\r\n2003,Medicine,4,3\r\n"
    c = parse_corpus_csv(text)
    assert c.document_totals == {2002: 2, 2003: 3}
    assert c.disciplines == ["Medicine", "Nursing"]


@pytest.mark.parametrize("text, exc", [
    ("year,discipline\n2002,A", MalformedHeader),
    ("Year,discipline,count\n2002,A,1", MalformedHeader),
    ("year,discipline,count\n2002,Medicine,-1", NegativeCount),
    ("year,discipline,count\n2002,Medicine,2\n2002,Medicine,3", DuplicateCell),
    ("year,discipline,count\n2002,Medicine,2\n2002,Medicine ,3", DuplicateCell),
    ("year,discipline,count\n2002,A,1,5", MalformedRow),
    ("year,discipline,count\n2002,A", MalformedRow),
    ("year,discipline,count\n20x2,A,1", MalformedRow),
    ("year,discipline,count\n2002,A,1.5", MalformedRow),
    ("year,discipline,count\n2002, ,1", MalformedRow),
    ("year,discipline,count,documents\n2002,A,1,4\n2002,B,1,5", InconsistentDocuments),
    ("year,discipline,count,documents\n2002,A,1,-4", NegativeCount),
    ("year,discipline,count\n", EmptyCorpus),
    ("year,discipline,count", EmptyCorpus),
])
def test_parse_errors(text, exc):
    with pytest.raises(exc):
        parse_corpus_csv(text)


def test_discipline_names_are_case_sensitive():
    c = parse_corpus_csv("year,discipline,count\n2002,medicine,1\n2002,Medicine,1")
    assert len(c.cells) == 2


def test_cell_invariants():
    with pytest.raises(NegativeCount):
        CorpusCell(2000, "A", -1)
    with pytest.raises(MalformedRow):
        CorpusCell(2000, "   ", 1)


def test_occurrence_totals(small_corpus):
    assert occurrence_totals(small_corpus).pairs() == [(2002, 3.0), (2003, 4.0)]
    assert occurrence_totals(make_corpus({1980: {"Mathematics": 1}})).pairs() == [(1980, 1.0)]


def test_absent_years_are_not_zero_filled():
    s = occurrence_totals(make_corpus({2002: {"A": 1}, 2004: {"A": 2}}))
    assert 2003 not in s.t
    assert s.t == (2002, 2004)


def test_trend_series_prefers_documents():
    c = make_corpus({2002: {"A": 3, "B": 2}, 2003: {"A": 7}}, docs={2002: 2, 2003: 3})
    s = trend_series(c)
    assert s.pairs() == [(2002, 2.0), (2003, 3.0)]
    assert not s.proxy


def test_trend_series_fallback_is_proxy():
    s = trend_series(make_corpus({2002: {"A": 3}}))
    assert s.pairs() == [(2002, 3.0)]
    assert s.proxy


def test_empty_documents_map_is_absent():
    c = make_corpus({2002: {"A": 3}}, docs={})
    assert c.document_totals is None
    assert trend_series(c).proxy


def test_year_series_rejects_unsorted():
    with pytest.raises(ValueError):
        YearSeries((2001, 2001), (1.0, 2.0))


corpora = st.dictionaries(
    st.integers(1950, 2020),
    st.dictionaries(st.sampled_from(["Medicine", "Mathematics", "Computer Science", "Nursing", "Physics"]),
                    st.integers(0, 500), min_size=1),
    min_size=1, max_size=12,
)


@settings(max_examples=100, deadline=None)
@given(corpora, st.booleans())
def test_csv_round_trip(table, with_docs):
    docs = {t: sum(row.values()) + 1 for t, row in table.items()} if with_docs else None
    c = make_corpus(table, docs)
    again = parse_corpus_csv(format_corpus_csv(c), field_name=c.field_name)
    assert again == c
    assert format_corpus_csv(again) == format_corpus_csv(c)


@settings(max_examples=100, deadline=None)
@given(corpora)
def test_occurrence_totals_match_brute_force(table):
    c = make_corpus(table)
    brute = defaultdict(int)
    for cell in c.cells:
        brute[cell.year] += cell.count
    assert dict(occurrence_totals(c).pairs()) == {t: float(v) for t, v in brute.items()}


@settings(max_examples=50, deadline=None)
@given(corpora, st.booleans())
def test_proxy_iff_no_documents(table, with_docs):
    docs = {t: 1 for t in table} if with_docs else None
    assert trend_series(make_corpus(table, docs)).proxy is (not with_docs)


def test_corpus_is_immutable(small_corpus):
    with pytest.raises(AttributeError):
        small_corpus.field_name = "x"
    assert isinstance(small_corpus.cells, tuple)
    assert isinstance(small_corpus, FieldCorpus)
