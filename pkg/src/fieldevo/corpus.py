"""Publication corpora: per-year, per-discipline occurrence counts.

A corpus mirrors the spreadsheet layout of a bibliometric extraction: one
count per (year, subject area) pair, optionally with the number of distinct
documents published each year. A document tagged with k subject areas
contributes k occurrences, so occurrence sums over-count documents.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np

from .errors import (
    DuplicateCell,
    EmptyCorpus,
    InconsistentDocuments,
    MalformedHeader,
    MalformedRow,
    NegativeCount,
)

HEADER = ("year", "discipline", "count")
HEADER_WITH_DOCUMENTS = HEADER + ("documents",)


@dataclass(frozen=True)
class CorpusCell:
    year: int
    discipline: str
    count: int

    def __post_init__(self):
        name = self.discipline.strip()
        if not name:
            raise MalformedRow("discipline name is empty")
        if self.count < 0:
            raise NegativeCount(f"negative count {self.count} for {name!r} in {self.year}")
        object.__setattr__(self, "discipline", name)


@dataclass(frozen=True)
class YearSeries:
    """Observations ``(t, y)`` with strictly increasing years.

    ``proxy`` is set when the values are occurrence sums standing in for
    missing document totals.
    """

    t: tuple[int, ...]
    y: tuple[float, ...]
    proxy: bool = False

    def __post_init__(self):
        if len(self.t) != len(self.y):
            raise ValueError("t and y differ in length")
        if any(b <= a for a, b in zip(self.t, self.t[1:])):
            raise ValueError("years must be strictly increasing")
        if any(v < 0 for v in self.y):
            raise ValueError("series values must be non-negative")

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, float]], proxy: bool = False) -> "YearSeries":
        pairs = sorted(pairs)
        return cls(tuple(int(t) for t, _ in pairs), tuple(float(v) for _, v in pairs), proxy)

    def __len__(self):
        return len(self.t)

    def pairs(self) -> list[tuple[int, float]]:
        return list(zip(self.t, self.y))

    def arrays(self) -> tuple[np.ndarray, np.ndarray]:
        return np.asarray(self.t, dtype=float), np.asarray(self.y, dtype=float)


@dataclass(frozen=True)
class FieldCorpus:
    """Occurrence counts for one research field.

    Build with :meth:`from_cells`, which validates and canonicalizes the
    cells (sorted by year, then discipline).
    """

    field_name: str
    cells: tuple[CorpusCell, ...]
    document_totals: Mapping[int, int] | None = field(default=None)

    @classmethod
    def from_cells(cls, field_name: str, cells: Iterable[CorpusCell],
                   document_totals: Mapping[int, int] | None = None) -> "FieldCorpus":
        cells = sorted(cells, key=lambda c: (c.year, c.discipline))
        if not cells:
            raise EmptyCorpus("corpus has no cells")
        seen = set()
        for c in cells:
            key = (c.year, c.discipline)
            if key in seen:
                raise DuplicateCell(f"duplicate cell for {c.discipline!r} in {c.year}")
            seen.add(key)
        docs = None
        if document_totals:
            docs = {}
            for year, n in sorted(document_totals.items()):
                if n < 0:
                    raise NegativeCount(f"negative document total {n} in {year}")
                docs[int(year)] = int(n)
        return cls(field_name, tuple(cells), docs)

    @property
    def span(self) -> tuple[int, int]:
        return self.cells[0].year, self.cells[-1].year

    @property
    def years(self) -> list[int]:
        return sorted({c.year for c in self.cells})

    @property
    def disciplines(self) -> list[str]:
        return sorted({c.discipline for c in self.cells})

    def table(self) -> dict[int, dict[str, int]]:
        """Nested ``{year: {discipline: count}}`` view."""
        out: dict[int, dict[str, int]] = defaultdict(dict)
        for c in self.cells:
            out[c.year][c.discipline] = c.count
        return dict(out)

    def scaled(self, factor: int) -> "FieldCorpus":
        """Copy with every count (and document total) multiplied by ``factor``."""
        cells = [CorpusCell(c.year, c.discipline, c.count * factor) for c in self.cells]
        docs = None
        if self.document_totals is not None:
            docs = {t: n * factor for t, n in self.document_totals.items()}
        return FieldCorpus.from_cells(self.field_name, cells, docs)


def _parse_int(text, what, lineno):
    try:
        return int(text.strip())
    except ValueError:
        raise MalformedRow(f"line {lineno}: {what} {text!r} is not an integer") from None


def parse_corpus_csv(text: str, field_name: str = "") -> FieldCorpus:
    """Parse the ``year,discipline,count[,documents]`` CSV format.

    Fields are split on bare commas; quoting is not supported because
    discipline labels never contain commas.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    lines = text.replace("\r\n", "\n").split("\n")
    header = tuple(h.strip() for h in lines[0].split(","))
    if header not in (HEADER, HEADER_WITH_DOCUMENTS):
        raise MalformedHeader(f"expected header 'year,discipline,count[,documents]', got {lines[0]!r}")
    width = len(header)

    cells = []
    docs: dict[int, int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        parts = line.split(",")
        if len(parts) != width:
            raise MalformedRow(f"line {lineno}: expected {width} fields, got {len(parts)}")
        year = _parse_int(parts[0], "year", lineno)
        count = _parse_int(parts[2], "count", lineno)
        if not parts[1].strip():
            raise MalformedRow(f"line {lineno}: empty discipline")
        if count < 0:
            raise NegativeCount(f"line {lineno}: negative count {count}")
        cells.append(CorpusCell(year, parts[1], count))
        if width == 4 and parts[3].strip():
            n = _parse_int(parts[3], "documents", lineno)
            if n < 0:
                raise NegativeCount(f"line {lineno}: negative documents value {n}")
            if docs.setdefault(year, n) != n:
                raise InconsistentDocuments(
                    f"line {lineno}: documents for {year} is {n}, earlier rows say {docs[year]}")
    if not cells:
        raise EmptyCorpus("no data rows")
    return FieldCorpus.from_cells(field_name, cells, docs or None)


def format_corpus_csv(corpus: FieldCorpus) -> str:
    docs = corpus.document_totals
    lines = [",".join(HEADER_WITH_DOCUMENTS if docs is not None else HEADER)]
    for c in corpus.cells:
        row = f"{c.year},{c.discipline},{c.count}"
        if docs is not None:
            row += "," + (str(docs[c.year]) if c.year in docs else "")
        lines.append(row)
    return "\n".join(lines) + "\n"


def occurrence_totals(corpus: FieldCorpus) -> YearSeries:
    """Sum of occurrences per year. Years without cells are absent."""
    totals: dict[int, int] = defaultdict(int)
    for c in corpus.cells:
        totals[c.year] += c.count
    return YearSeries.from_pairs(totals.items())


def trend_series(corpus: FieldCorpus) -> YearSeries:
    """Publications per year: document totals if known, else occurrence sums (``proxy=True``)."""
    if corpus.document_totals:
        return YearSeries.from_pairs(corpus.document_totals.items(), proxy=False)
    occ = occurrence_totals(corpus)
    return YearSeries(occ.t, occ.y, proxy=True)
