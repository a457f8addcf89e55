"""Detectors for three regularities in how research fields evolve.

1. Concentration: a handful of disciplines account for most of the output.
2. Path dependence: a critical discipline (an origin discipline or an
   emergent one) stays among the leading disciplines throughout.
3. Emergence: a discipline absent at the origin rises to the top ranks.

The thresholds are heuristic and live in :class:`LawConfig`; every report
embeds the configuration it was computed with.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .corpus import FieldCorpus, trend_series
from .errors import AnalysisError, InsufficientData
from .metrics import CoveringSet, WeightMatrix, aggregate_shares, minimal_covering_set, weight_matrix
from .regress import FitResult, best_fit, ols_line, slope_p_value

RISING, FALLING, FLAT = "rising", "falling", "flat"
LAW3_MIN_YEARS = 6


@dataclass(frozen=True)
class LawConfig:
    threshold: float = 0.8
    size_band_max: int = 6
    origin_window_years: int = 1
    top_k: int = 3
    persistence_min: float = 0.75
    trend_alpha: float = 0.05
    emergence_final_window: int = 5

    def __post_init__(self):
        if not 0 < self.threshold <= 1:
            raise ValueError("threshold must lie in (0, 1]")
        if self.size_band_max < 1 or self.top_k < 1:
            raise ValueError("size_band_max and top_k must be at least 1")
        if self.origin_window_years < 1 or self.emergence_final_window < 1:
            raise ValueError("window lengths must be at least 1")
        if not 0 <= self.persistence_min <= 1:
            raise ValueError("persistence_min must lie in [0, 1]")
        if not 0 < self.trend_alpha < 1:
            raise ValueError("trend_alpha must lie in (0, 1)")


@dataclass(frozen=True)
class TrendResult:
    slope: float
    r2: float
    p_value: float
    significant: bool

    @property
    def direction(self) -> str:
        if self.significant and self.slope > 0:
            return RISING
        if self.significant and self.slope < 0:
            return FALLING
        return FLAT


@dataclass(frozen=True)
class Law1Finding:
    covering_set: CoveringSet
    passed: bool

    @property
    def size(self) -> int:
        return self.covering_set.size


@dataclass(frozen=True)
class Law2Finding:
    origin: tuple[str, ...]
    critical: tuple[str, ...]
    persistence: float
    passed: bool


@dataclass(frozen=True)
class Law3Finding:
    origin: tuple[str, ...]
    emergent: tuple[str, ...]
    declining_native: tuple[str, ...]
    trends: dict[str, TrendResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.emergent)


@dataclass(frozen=True)
class LawError:
    """Stands in for a finding whose detector raised."""

    error: str
    message: str
    passed: bool = False


@dataclass(frozen=True)
class LawReport:
    field_name: str
    law1: Law1Finding | LawError
    law2: Law2Finding | LawError
    law3: Law3Finding | LawError
    trend_fit: FitResult | LawError
    config: LawConfig
    proxy: bool


def origin_disciplines(corpus: FieldCorpus, window: int = 1) -> tuple[str, ...]:
    """Disciplines with a positive count in the first ``window`` years having any output."""
    if window < 1:
        raise ValueError("window must be at least 1")
    table = corpus.table()
    active = [t for t in sorted(table) if sum(table[t].values()) > 0]
    found = set()
    for t in active[:window]:
        found.update(d for d, n in table[t].items() if n > 0)
    return tuple(sorted(found))


def weight_trend(weights: Sequence[tuple[int, float]], alpha: float = 0.05) -> TrendResult:
    """Linear trend of a weight series with a two-sided t-test on the slope."""
    if len(weights) < 3:
        raise InsufficientData(f"trend needs at least 3 points, have {len(weights)}")
    t = np.array([p[0] for p in weights], dtype=float)
    y = np.array([p[1] for p in weights], dtype=float)
    line = ols_line(t, y)
    p = slope_p_value(line)
    return TrendResult(line.slope, line.r2, p, (not line.degenerate) and p < alpha)


def detect_law1(corpus: FieldCorpus, cfg: LawConfig = LawConfig()) -> Law1Finding:
    cover = minimal_covering_set(aggregate_shares(corpus), cfg.threshold)
    return Law1Finding(cover, cover.size <= cfg.size_band_max)


def detect_law3(corpus: FieldCorpus, cfg: LawConfig = LawConfig()) -> Law3Finding:
    weights = weight_matrix(corpus)
    years = weights.years
    if len(years) < LAW3_MIN_YEARS:
        raise InsufficientData(
            f"emergence needs {LAW3_MIN_YEARS} years with output, have {len(years)}")
    origin = origin_disciplines(corpus, cfg.origin_window_years)
    trends = {d: weight_trend(weights.series(d), cfg.trend_alpha) for d in weights.disciplines}

    final = years[-cfg.emergence_final_window:]
    final_mean = {
        d: float(np.mean([weights.weights[t].get(d, 0.0) for t in final]))
        for d in weights.disciplines
    }
    leaders = sorted(final_mean, key=lambda d: (-final_mean[d], d))[:cfg.top_k]
    emergent = tuple(d for d in leaders
                     if d not in origin and trends[d].direction == RISING)
    declining = tuple(d for d in origin if d in trends and trends[d].direction == FALLING)
    return Law3Finding(origin, emergent, declining, trends)


def _persistence(weights: WeightMatrix, critical: set[str], top_k: int) -> float:
    years = weights.years
    hits = sum(1 for t in years if critical.intersection(weights.ranking(t)[:top_k]))
    return hits / len(years)


def detect_law2(corpus: FieldCorpus, cfg: LawConfig = LawConfig(),
                law3: Law3Finding | None = None) -> Law2Finding:
    """Share of active years in which a critical discipline sits in the top ``top_k``.

    The critical set is the origin disciplines plus any emergent drivers. If
    ``law3`` is not supplied it is computed, and skipped when the corpus is
    too short for it.
    """
    weights = weight_matrix(corpus)
    if len(weights.years) < 2:
        raise InsufficientData("path dependence needs at least 2 years with output")
    origin = origin_disciplines(corpus, cfg.origin_window_years)
    if law3 is None:
        try:
            law3 = detect_law3(corpus, cfg)
        except InsufficientData:
            law3 = None
    critical = set(origin) | set(law3.emergent if law3 else ())
    persistence = _persistence(weights, critical, cfg.top_k)
    return Law2Finding(origin, tuple(sorted(critical)), persistence,
                       persistence >= cfg.persistence_min)


def _guard(fn, *args):
    try:
        return fn(*args)
    except AnalysisError as exc:
        return LawError(type(exc).__name__, str(exc))


def evaluate_field(corpus: FieldCorpus, cfg: LawConfig = LawConfig()) -> LawReport:
    """Fit the publication trend and run all three detectors.

    A detector that cannot run is recorded as a :class:`LawError` instead of
    aborting the whole report.
    """
    series = trend_series(corpus)
    trend = _guard(lambda s: best_fit(s)[1], series)
    law1 = _guard(detect_law1, corpus, cfg)
    law3 = _guard(detect_law3, corpus, cfg)
    law2 = _guard(detect_law2, corpus, cfg, law3 if isinstance(law3, Law3Finding) else None)
    return LawReport(corpus.field_name, law1, law2, law3, trend, cfg, series.proxy)
