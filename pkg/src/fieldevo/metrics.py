"""Discipline weights and production concentration."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping

from .corpus import FieldCorpus
from .errors import EmptyRange, InvalidThreshold

AGGREGATE_OCCURRENCES = "aggregate_occurrences"
SINGLE_YEAR = "single_year"

# slack on the cumulative-share comparison; shares only sum to 1 up to rounding
SHARE_EPS = 1e-12


@dataclass(frozen=True)
class WeightMatrix:
    """Per-year discipline weights ``{year: {discipline: weight}}``.

    Only years with a positive occurrence total appear.
    """

    weights: Mapping[int, Mapping[str, float]]

    @property
    def years(self) -> list[int]:
        return sorted(self.weights)

    @property
    def disciplines(self) -> list[str]:
        return sorted({d for row in self.weights.values() for d in row})

    def series(self, discipline: str) -> list[tuple[int, float]]:
        """Weight of one discipline over every emitted year, 0 where it has no cell."""
        return [(t, self.weights[t].get(discipline, 0.0)) for t in self.years]

    def ranking(self, year: int) -> list[str]:
        """Disciplines of ``year`` by descending weight, ties lexicographic."""
        row = self.weights[year]
        return sorted(row, key=lambda d: (-row[d], d))


@dataclass(frozen=True)
class ShareVector:
    shares: Mapping[str, float]
    basis: str = AGGREGATE_OCCURRENCES

    def ordered(self) -> list[tuple[str, float]]:
        return sorted(self.shares.items(), key=lambda kv: (-kv[1], kv[0]))


@dataclass(frozen=True)
class CoveringSet:
    members: tuple[str, ...]
    cumulative_share: float
    threshold: float

    @property
    def size(self) -> int:
        return len(self.members)


def weight_matrix(corpus: FieldCorpus) -> WeightMatrix:
    """Each discipline's occurrence count in a year divided by that year's total."""
    weights = {}
    for year, row in sorted(corpus.table().items()):
        total = sum(row.values())
        if total > 0:
            weights[year] = {d: n / total for d, n in sorted(row.items())}
    return WeightMatrix(weights)


def aggregate_shares(corpus: FieldCorpus, year_range: tuple[int, int] | None = None) -> ShareVector:
    """Share of all occurrences in ``year_range`` (inclusive) held by each discipline."""
    first, last = year_range if year_range is not None else corpus.span
    sums: dict[str, int] = defaultdict(int)
    for c in corpus.cells:
        if first <= c.year <= last:
            sums[c.discipline] += c.count
    total = sum(sums.values())
    if total == 0:
        raise EmptyRange(f"no occurrences in {first}-{last}")
    return ShareVector({d: n / total for d, n in sorted(sums.items())}, AGGREGATE_OCCURRENCES)


def year_shares(weights: WeightMatrix, year: int) -> ShareVector:
    if year not in weights.weights:
        raise EmptyRange(f"no occurrences in {year}")
    return ShareVector(dict(weights.weights[year]), SINGLE_YEAR)


def minimal_covering_set(shares: ShareVector, threshold: float) -> CoveringSet:
    """Smallest prefix of the descending-share ranking whose cumulative share reaches ``threshold``.

    Ties in share are broken by discipline name. The comparison is
    ``cumulative >= threshold`` so a set landing exactly on the threshold
    qualifies.
    """
    if not 0 < threshold <= 1:
        raise InvalidThreshold(f"threshold must lie in (0, 1], got {threshold}")
    members = []
    cumulative = 0.0
    for name, share in shares.ordered():
        members.append(name)
        cumulative += share
        if cumulative >= threshold - SHARE_EPS:
            break
    return CoveringSet(tuple(members), cumulative, threshold)
