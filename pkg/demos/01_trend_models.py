"""
Fitting publication trends
==========================

Three curves are fitted to a field's yearly publication counts: a straight
line, a growth curve exp(a + b t) and an exponential a exp(b t). Time is the
calendar year, so intercepts of log models are large negative numbers.
"""

from fieldevo import ModelKind, best_fit, fit, predict, trend_series
from fieldevo.fixtures import load_fixture
from fieldevo.regress import effective_sample_size, implied_sample_interval

corpus = load_fixture("takeover")
series = trend_series(corpus)
print(f"{len(series)} years, {series.t[0]}-{series.t[-1]}, documents known: {not series.proxy}")

# all three models, statistics on the scale each one is estimated on
print(f"{'model':12} {'a':>14} {'(se)':>9} {'b':>9} {'(se)':>9} {'std':>6} {'R2':>6} {'F':>9} sig")
for kind in ModelKind:
    f = fit(kind, series)
    print(f"{kind.value:12} {f.a:14.4g} {f.se_a:9.3g} {f.b:9.4f} {f.se_b:9.4f} "
          f"{f.std_coef:6.3f} {f.r2:6.3f} {f.f_stat:9.2f} {f.p_sig}")

kind, f = best_fit(series)
print(f"\nbest by original-scale SSE: {kind.value}; predicted output in 2020: {predict(f, 2020):.0f}")

# For a simple regression F = R^2 (n - 2) / (1 - R^2), so a published (R^2, F)
# pair pins down how many points were fitted.
print(f"\nthis fit: n_used={f.n_used}, recovered from R^2 and F: {effective_sample_size(f.r2, f.f_stat):.6f}")
for label, r2, F in [("microbiome", 0.97, 416.28), ("evolutionary robotics", 0.91, 355.73),
                     ("astrobiology", 0.84, 123.27), ("exobiology", 0.67, 110.90)]:
    lo, hi = implied_sample_interval(r2, F)
    print(f"  {label:22} R2={r2:.2f} F={F:7.2f} -> n in [{lo:5.2f}, {hi:5.2f}]")
