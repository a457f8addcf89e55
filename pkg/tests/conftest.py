from fractions import Fraction

import pytest

from fieldevo.corpus import CorpusCell, FieldCorpus

ACCEPTANCE_LINES = []


def exact_ols(t, y):
    """OLS in rational arithmetic: (intercept, slope, sse). Oracle for regress."""
    t = [Fraction(v) for v in t]
    y = [Fraction(v) for v in y]
    n = len(t)
    tm = sum(t) / n
    ym = sum(y) / n
    sxx = sum((a - tm) ** 2 for a in t)
    sxy = sum((a - tm) * (b - ym) for a, b in zip(t, y))
    slope = sxy / sxx
    intercept = ym - slope * tm
    sse = sum((b - intercept - slope * a) ** 2 for a, b in zip(t, y))
    return intercept, slope, sse, sxx, tm


def make_corpus(table, docs=None, name="test"):
    cells = [CorpusCell(t, d, n) for t, row in table.items() for d, n in row.items()]
    return FieldCorpus.from_cells(name, cells, docs)


@pytest.fixture
def small_corpus():
    return make_corpus({2002: {"A": 2, "B": 1}, 2003: {"A": 4}})


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
