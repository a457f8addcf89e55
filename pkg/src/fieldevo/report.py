"""Canonical serialization of analysis results.

Output is byte-stable: keys are sorted, floats carry 17 significant digits,
non-finite floats become ``null`` and lines end in LF. Nothing time- or
locale-dependent is written.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import asdict

from . import __version__
from .corpus import FieldCorpus, trend_series
from .laws import Law1Finding, Law2Finding, Law3Finding, LawError, LawReport
from .metrics import WeightMatrix, weight_matrix
from .regress import FitResult, fit_all

SCHEMA_VERSION = "1"
WEIGHT_DECIMALS = 12


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    s = format(x, ".17g")
    if not any(ch in s for ch in ".en"):
        s += ".0"
    return s


def _escape(s: str) -> str:
    out = []
    for ch in s:
        if ch == '"':
            out.append('\\"')
        elif ch == "\\":
            out.append("\\\\")
        elif ch == "\n":
            out.append("\\n")
        elif ch < " ":
            out.append(f"\\u{ord(ch):04x}")
        else:
            out.append(ch)
    return '"' + "".join(out) + '"'


def _encode(obj, indent: int, out: list[str]):
    pad = "  " * indent
    if obj is None:
        out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif isinstance(obj, float):
        out.append(_fmt_float(obj))
    elif isinstance(obj, str):
        out.append(_escape(obj))
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = sorted((str(k), v) for k, v in obj.items())
        for i, (k, v) in enumerate(items):
            out.append(f"{pad}  {_escape(k)}: ")
            _encode(v, indent + 1, out)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, v in enumerate(obj):
            out.append(pad + "  ")
            _encode(v, indent + 1, out)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def canonical_json(obj) -> str:
    out: list[str] = []
    _encode(obj, 0, out)
    return "".join(out) + "\n"


def fit_to_dict(fit: FitResult) -> dict:
    d = asdict(fit)
    d["kind"] = fit.kind.value
    return d


def weights_to_dict(weights: WeightMatrix) -> dict:
    return {str(t): dict(row) for t, row in sorted(weights.weights.items())}


def weights_to_csv(weights: WeightMatrix) -> str:
    lines = ["year,discipline,weight"]
    for t in weights.years:
        for d, w in sorted(weights.weights[t].items()):
            lines.append(f"{t},{d},{w:.{WEIGHT_DECIMALS}f}")
    return "\n".join(lines) + "\n"


def parse_weights_csv(text: str) -> WeightMatrix:
    rows = text.replace("\r\n", "\n").strip("\n").split("\n")
    if rows[0].strip() != "year,discipline,weight":
        raise ValueError("expected header 'year,discipline,weight'")
    weights: dict[int, dict[str, float]] = {}
    for row in rows[1:]:
        year, name, w = row.split(",")
        weights.setdefault(int(year), {})[name.strip()] = float(w)
    return WeightMatrix(weights)


def _finding_to_dict(finding) -> dict:
    if isinstance(finding, LawError):
        return {"error": finding.error, "message": finding.message, "pass": False}
    if isinstance(finding, Law1Finding):
        c = finding.covering_set
        return {
            "basis": "aggregate_occurrences",
            "covering_set": list(c.members),
            "cumulative_share": c.cumulative_share,
            "threshold": c.threshold,
            "size": finding.size,
            "pass": finding.passed,
        }
    if isinstance(finding, Law2Finding):
        return {
            "metric": "top_k_persistence",
            "origin": list(finding.origin),
            "critical": list(finding.critical),
            "persistence": finding.persistence,
            "pass": finding.passed,
        }
    if isinstance(finding, Law3Finding):
        return {
            "origin": list(finding.origin),
            "emergent": list(finding.emergent),
            "declining_native": list(finding.declining_native),
            "trends": {
                d: {"slope": tr.slope, "r2": tr.r2, "p_value": tr.p_value,
                    "direction": tr.direction}
                for d, tr in sorted(finding.trends.items())
            },
            "pass": finding.passed,
        }
    raise TypeError(type(finding).__name__)


def law_report_to_dict(report: LawReport) -> dict:
    trend = report.trend_fit
    return {
        "field_name": report.field_name,
        "law1": _finding_to_dict(report.law1),
        "law2": _finding_to_dict(report.law2),
        "law3": _finding_to_dict(report.law3),
        "trend_fit": (_finding_to_dict(trend) if isinstance(trend, LawError)
                      else fit_to_dict(trend)),
        "config": asdict(report.config),
        "proxy": report.proxy,
    }


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def build_report(corpus: FieldCorpus, law_report: LawReport, input_digest: str) -> dict:
    """Full report document: trend fits, weights, law verdicts, config and provenance."""
    series = trend_series(corpus)
    candidates = {k.value: fit_to_dict(f) for k, f in fit_all(series).items()}
    laws = law_report_to_dict(law_report)
    trend = laws.pop("trend_fit")
    return {
        "schema_version": SCHEMA_VERSION,
        "field_name": corpus.field_name,
        "trend": {
            "best": trend,
            "candidates": candidates,
            "series": {str(t): y for t, y in series.pairs()},
        },
        "weights": weights_to_dict(weight_matrix(corpus)),
        "laws": {k: laws[k] for k in ("law1", "law2", "law3")},
        "config": asdict(law_report.config),
        "provenance": {
            "input_sha256": input_digest,
            "proxy": series.proxy,
            "tool_version": __version__,
        },
    }

