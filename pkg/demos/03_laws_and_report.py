"""
Evolution laws on a designed takeover
=====================================

A synthetic field starts in mathematics and engineering; computer science
takes over along a logistic curve centred on 1995. The detectors should
find concentration, a persistent critical discipline, and computer science
as the emergent driver. The last step writes the full report with charts.
"""

import sys
import tempfile
from pathlib import Path

from fieldevo import evaluate_field, generate_corpus, mixture_at
from fieldevo.cli import run
from fieldevo.fixtures import fixture_path, load_spec

spec = load_spec("takeover")
for year in (1980, 1995, 2017):
    mix = mixture_at(spec, year)
    print(year, {d: round(w, 3) for d, w in mix.items()})

corpus = generate_corpus(spec)
report = evaluate_field(corpus)
print("\nlaw 1:", report.law1.size, "disciplines cover", f"{report.law1.covering_set.cumulative_share:.2f}",
      "->", "pass" if report.law1.passed else "fail")
print("law 2: origin", list(report.law2.origin), f"persistence {report.law2.persistence:.2f}",
      "->", "pass" if report.law2.passed else "fail")
print("law 3: emergent", list(report.law3.emergent), "declining natives", list(report.law3.declining_native))
for d, tr in report.law3.trends.items():
    print(f"   {d:18} slope {tr.slope:+.4f}/yr  p={tr.p_value:.2g}  {tr.direction}")

# report.json, weights.csv, trend.svg and weights.svg
out = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(tempfile.mkdtemp())
run(["report", "--input", str(fixture_path("takeover")), "--out", str(out)])
print("\nwrote", ", ".join(sorted(p.name for p in out.iterdir())), "to", out)
