"""Growth trends and discipline dynamics of research fields.

Modules
-------
corpus  : per-year, per-discipline occurrence counts and CSV ingestion
metrics : discipline weights, aggregate shares, minimal covering sets
regress : linear, growth and exponential trend fits by OLS
laws    : concentration, path-dependence and emergence detectors
synth   : seeded synthetic corpora
report  : canonical JSON/CSV output;  svg : static charts;  cli : command line
"""

__version__ = "0.1.0"

from .corpus import CorpusCell, FieldCorpus, YearSeries, format_corpus_csv, occurrence_totals, \
    parse_corpus_csv, trend_series
from .metrics import CoveringSet, ShareVector, WeightMatrix, aggregate_shares, minimal_covering_set, \
    weight_matrix
from .regress import FitResult, ModelKind, best_fit, effective_sample_size, fit, predict
from .laws import LawConfig, LawReport, TrendResult, detect_law1, detect_law2, detect_law3, \
    evaluate_field, origin_disciplines, weight_trend
from .synth import SynthSpec, generate_corpus, mixture_at, parse_spec_config
