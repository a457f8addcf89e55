"""Trend models fitted by ordinary least squares.

Three curves are supported, all in calendar-year time ``t``:

* ``linear``       y = a + b t
* ``growth``       y = exp(a + b t), fitted as ln y = a + b t
* ``exponential``  y = a exp(b t), the same log-scale fit with a reported as exp(intercept)

Log models drop non-positive observations before fitting and report how many
were dropped. Statistics (standard errors, R², F) are computed on the scale
the regression is estimated on, with n - 2 residual degrees of freedom.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np
from scipy import stats

from .corpus import YearSeries
from .errors import DegenerateFit, DegenerateSeries, InsufficientData, NoModelFits, OutOfDomain

SIGNIFICANCE_LEVELS = (0.001, 0.01, 0.05)
NOT_SIGNIFICANT = "n.s."


class ModelKind(str, enum.Enum):
    LINEAR = "linear"
    GROWTH = "growth"
    EXPONENTIAL = "exponential"

    @property
    def log_scale(self) -> bool:
        return self is not ModelKind.LINEAR


# tie-break order for best_fit
KIND_ORDER = (ModelKind.LINEAR, ModelKind.GROWTH, ModelKind.EXPONENTIAL)


@dataclass(frozen=True)
class FitResult:
    kind: ModelKind
    a: float
    b: float
    se_a: float
    se_b: float
    std_coef: float
    r2: float
    f_stat: float
    p_sig: str
    n_used: int
    n_dropped: int
    estimation_scale: str
    # intercept of the estimation-scale line; differs from a only for exponential fits
    intercept: float = math.nan
    # sum of squared errors on the original scale, over every point of the input series
    sse_original: float = math.nan
    degenerate: bool = False


@dataclass(frozen=True)
class OLSLine:
    """Simple regression of y on t with the intercept at t = 0."""

    intercept: float
    slope: float
    se_intercept: float
    se_slope: float
    r2: float
    f_stat: float
    std_coef: float
    n: int
    degenerate: bool


def ols_line(t, y) -> OLSLine:
    """Fit ``y = intercept + slope * t`` by OLS.

    ``t`` is centred before solving and the intercept moved back to the
    t = 0 origin afterwards, which keeps calendar-year fits well conditioned.
    A response with no variance yields a flagged degenerate line with zero
    slope and NaN R², F and standardized coefficient.
    """
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    n = t.size
    if n < 3:
        raise InsufficientData(f"need at least 3 points, have {n}")
    if np.all(t == t[0]):
        raise DegenerateSeries("all time values are equal")

    t_mean = t.mean()
    tc = t - t_mean
    sxx = float(np.dot(tc, tc))
    y_mean = y.mean()
    if np.all(y == y[0]):
        return OLSLine(float(y[0]), 0.0, 0.0, 0.0, math.nan, math.nan, math.nan, n, True)

    yc = y - y_mean
    slope = float(np.dot(tc, yc)) / sxx
    resid = yc - slope * tc
    sse = float(np.dot(resid, resid))
    ssr = slope * slope * sxx
    # SST as SSR + SSE (equal for OLS) keeps F = t^2 and F <-> R^2 exact to rounding
    sst = ssr + sse
    s2 = sse / (n - 2)
    se_slope = math.sqrt(s2 / sxx)
    intercept = float(y_mean - slope * t_mean)
    se_intercept = math.sqrt(s2 * (1.0 / n + t_mean * t_mean / sxx))
    r2 = ssr / sst
    f_stat = (slope / se_slope) ** 2 if se_slope > 0 else math.inf
    std_coef = math.copysign(math.sqrt(r2), slope) if slope != 0 else 0.0
    return OLSLine(intercept, slope, se_intercept, se_slope, r2, f_stat, std_coef, n, False)


def significance_bucket(slope: float, se_slope: float, n: int) -> str:
    """Smallest of 0.001/0.01/0.05 at which a two-sided t-test rejects slope = 0."""
    if se_slope == 0:
        return NOT_SIGNIFICANT if slope == 0 else format(SIGNIFICANCE_LEVELS[0], "g")
    t_abs = abs(slope / se_slope)
    for level in SIGNIFICANCE_LEVELS:
        if t_abs > stats.t.ppf(1 - level / 2, n - 2):
            return format(level, "g")
    return NOT_SIGNIFICANT


def slope_p_value(line: OLSLine) -> float:
    if line.degenerate:
        return 1.0
    if line.se_slope == 0:
        return 0.0 if line.slope != 0 else 1.0
    return float(2 * stats.t.sf(abs(line.slope / line.se_slope), line.n - 2))


def fit(kind: ModelKind | str, series: YearSeries) -> FitResult:
    kind = ModelKind(kind)
    t_all, y_all = series.arrays()
    if kind.log_scale:
        keep = y_all > 0
        t, y = t_all[keep], np.log(y_all[keep])
    else:
        t, y = t_all, y_all
    n_dropped = int(t_all.size - t.size)
    if t.size < 3:
        raise InsufficientData(
            f"{kind.value} fit needs at least 3 usable points, have {t.size} ({n_dropped} dropped)")

    line = ols_line(t, y)
    if kind.log_scale:
        fitted = np.exp(line.intercept + line.slope * t_all)
    else:
        fitted = line.intercept + line.slope * t_all
    sse_original = float(np.sum((y_all - fitted) ** 2))

    a = line.intercept
    if kind is ModelKind.EXPONENTIAL:
        # calendar-year coding can push exp(intercept) past the float range
        a = math.exp(line.intercept) if line.intercept < 709.0 else math.inf
    p_sig = NOT_SIGNIFICANT if line.degenerate else significance_bucket(line.slope, line.se_slope, line.n)
    return FitResult(
        kind=kind, a=a, b=line.slope, se_a=line.se_intercept, se_b=line.se_slope,
        std_coef=line.std_coef, r2=line.r2, f_stat=line.f_stat, p_sig=p_sig,
        n_used=line.n, n_dropped=n_dropped,
        estimation_scale="log" if kind.log_scale else "original",
        intercept=line.intercept, sse_original=sse_original, degenerate=line.degenerate,
    )


def predict(fit_result: FitResult, t):
    """Evaluate the fitted curve at year(s) ``t``."""
    if fit_result.degenerate:
        raise DegenerateFit("cannot predict from a degenerate fit")
    a, b = fit_result.a, fit_result.b
    t = np.asarray(t, dtype=float)
    if fit_result.kind is ModelKind.LINEAR:
        out = a + b * t
    elif fit_result.kind is ModelKind.GROWTH:
        out = np.exp(a + b * t)
    elif math.isfinite(a):
        out = a * np.exp(b * t)
    else:
        out = np.exp(fit_result.intercept + b * t)
    return float(out) if out.ndim == 0 else out


def fit_all(series: YearSeries) -> dict[ModelKind, FitResult]:
    """Fit every model kind; kinds that raise are left out."""
    fits = {}
    for kind in KIND_ORDER:
        try:
            fits[kind] = fit(kind, series)
        except (InsufficientData, DegenerateSeries):
            continue
    return fits


def best_fit(series: YearSeries) -> tuple[ModelKind, FitResult]:
    """Model with the smallest original-scale SSE, ties going to the earlier of linear, growth, exponential."""
    fits = fit_all(series)
    if not fits:
        raise NoModelFits("no trend model could be fitted")
    kind = min(fits, key=lambda k: (fits[k].sse_original, KIND_ORDER.index(k)))
    return kind, fits[kind]


def effective_sample_size(r2: float, f_stat: float) -> float:
    """Number of points implied by a simple regression's R² and F.

    Inverts F = R² (n - 2) / (1 - R²).
    """
    if not (0 < r2 < 1) or not (f_stat > 0) or not math.isfinite(f_stat):
        raise OutOfDomain(f"need 0 < r2 < 1 and f_stat > 0, got r2={r2}, f_stat={f_stat}")
    return 2 + f_stat * (1 - r2) / r2


def implied_sample_interval(r2: float, f_stat: float, decimals: int = 2) -> tuple[float, float]:
    """Range of n consistent with an R² printed to ``decimals`` places.

    n decreases as R² grows, so the interval ends come from the upper and
    lower edges of R²'s rounding interval respectively.
    """
    half = 0.5 * 10.0 ** (-decimals)
    return effective_sample_size(r2 + half, f_stat), effective_sample_size(r2 - half, f_stat)
