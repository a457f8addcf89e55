"""Seeded synthetic corpora with a known trend and a known discipline mixture.

Generation is bit-reproducible: all randomness comes from the raw 64-bit
output of ``numpy.random.PCG64`` seeded through ``numpy.random.SeedSequence``.
Both are covered by numpy's stream-stability guarantee; the higher-level
``Generator`` distribution methods are not used because their algorithms may
change between numpy releases. Uniforms take the top 53 bits of a raw draw,
normals use the inverse normal CDF, and multinomial allocation is a sequence
of conditional binomials (each a count of Bernoulli trials) over disciplines
in lexicographic order.

Stream layout, per year in ascending order: one uniform for the total's
noise (drawn even when the noise is zero), then the Bernoulli trials of the
allocation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from statistics import NormalDist
from typing import Mapping

import numpy as np

from .corpus import CorpusCell, FieldCorpus
from .errors import InvalidSpec
from .regress import ModelKind

PRNG_NAME = f"numpy.random.PCG64 raw stream (numpy {np.__version__.split('.')[0]}.x)"
MIXTURE_TOL = 1e-12
_TWO_POW_M53 = 2.0 ** -53


@dataclass(frozen=True)
class SynthSpec:
    field_name: str
    kind: ModelKind
    a: float
    b: float
    years: tuple[int, int]
    mixture_start: Mapping[str, float]
    mixture_end: Mapping[str, float]
    noise_sd_log: float = 0.0
    transition_midpoint: float = 0.0
    transition_rate: float = 0.0
    seed: int = 0

    def __post_init__(self):
        try:
            object.__setattr__(self, "kind", ModelKind(self.kind))
        except ValueError:
            raise InvalidSpec(f"unknown model kind {self.kind!r}") from None
        first, last = self.years
        if first > last:
            raise InvalidSpec(f"first year {first} is after last year {last}")
        if not self.noise_sd_log >= 0:
            raise InvalidSpec("noise_sd_log must be non-negative")
        if not 0 <= self.seed < 2 ** 64:
            raise InvalidSpec("seed must be a 64-bit unsigned integer")
        for label in ("mixture_start", "mixture_end"):
            mix = getattr(self, label)
            if not mix:
                raise InvalidSpec(f"{label} is empty")
            if any(not w >= 0 for w in mix.values()):
                raise InvalidSpec(f"{label} has a negative weight")
            if abs(math.fsum(mix.values()) - 1.0) > MIXTURE_TOL:
                raise InvalidSpec(f"{label} sums to {math.fsum(mix.values())!r}, not 1")
            if any(not d.strip() or "," in d for d in mix):
                raise InvalidSpec(f"{label} has an unusable discipline name")

    @property
    def disciplines(self) -> list[str]:
        names = {d for d, w in self.mixture_start.items() if w > 0}
        names |= {d for d, w in self.mixture_end.items() if w > 0}
        return sorted(names)


def logistic(x: float) -> float:
    if x >= 0:
        return 1.0 / (1.0 + math.exp(-x))
    e = math.exp(x)
    return e / (1.0 + e)


def mixture_at(spec: SynthSpec, t: float) -> dict[str, float]:
    """Discipline mixture at year ``t``, moving logistically from start to end."""
    first, last = spec.years
    if not first <= t <= last:
        raise ValueError(f"year {t} outside {first}-{last}")
    s = logistic(spec.transition_rate * (t - spec.transition_midpoint))
    raw = {}
    for d in spec.disciplines:
        w0 = spec.mixture_start.get(d, 0.0)
        w1 = spec.mixture_end.get(d, 0.0)
        raw[d] = w0 + s * (w1 - w0)
    total = math.fsum(raw.values())
    return {d: w / total for d, w in raw.items()}


def ideal_total(spec: SynthSpec, t: float) -> float:
    if spec.kind is ModelKind.LINEAR:
        m = spec.a + spec.b * t
    elif spec.kind is ModelKind.GROWTH:
        m = math.exp(spec.a + spec.b * t)
    else:
        m = spec.a * math.exp(spec.b * t)
    return max(m, 0.0)


class _Stream:
    def __init__(self, seed: int):
        self._bits = np.random.PCG64(np.random.SeedSequence(seed))

    def uniforms(self, n: int) -> np.ndarray:
        """``n`` uniforms on [0, 1) with 53-bit resolution."""
        raw = self._bits.random_raw(n)
        return (np.asarray(raw, dtype=np.uint64) >> np.uint64(11)).astype(np.float64) * _TWO_POW_M53

    def open_uniform(self) -> float:
        return (float(self.uniforms(1)[0]) + 0.5 * _TWO_POW_M53)

    def binomial(self, n: int, p: float) -> int:
        if n == 0 or p <= 0.0:
            return 0
        if p >= 1.0:
            return n
        return int(np.count_nonzero(self.uniforms(n) < p))


def _allocate(stream: _Stream, total: int, mixture: dict[str, float]) -> dict[str, int]:
    names = sorted(mixture)
    counts = {}
    remaining = total
    mass_left = math.fsum(mixture.values())
    for i, d in enumerate(names):
        w = mixture[d]
        if i == len(names) - 1:
            k = remaining
        else:
            k = stream.binomial(remaining, w / mass_left if mass_left > 0 else 0.0)
        counts[d] = k
        remaining -= k
        mass_left -= w
    return counts


def generate_corpus(spec: SynthSpec) -> FieldCorpus:
    """Draw one corpus from ``spec``.

    Every discipline with weight in either mixture gets a cell each year
    (possibly zero), and document totals equal the drawn yearly totals.
    """
    stream = _Stream(spec.seed)
    normal = NormalDist()
    cells = []
    docs = {}
    first, last = spec.years
    for t in range(first, last + 1):
        eps = spec.noise_sd_log * normal.inv_cdf(stream.open_uniform())
        total = round(ideal_total(spec, t) * math.exp(eps))
        docs[t] = total
        for d, k in _allocate(stream, total, mixture_at(spec, t)).items():
            cells.append(CorpusCell(t, d, k))
    return FieldCorpus.from_cells(spec.field_name, cells, docs)


# flat ``key = value`` config files

_SCALAR_KEYS = ("field_name", "kind", "a", "b", "years", "noise_sd_log",
                "transition_midpoint", "transition_rate", "seed")


def parse_spec_config(text: str) -> SynthSpec:
    """Read a SynthSpec from ``key = value`` lines.

    ``#`` starts a comment. Mixtures use dotted keys such as
    ``mixture_start.Mathematics = 0.7``; ``years`` is ``first, last``.
    """
    values: dict[str, str] = {}
    mixtures: dict[str, dict[str, float]] = {"mixture_start": {}, "mixture_end": {}}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise InvalidSpec(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        prefix, dot, name = key.partition(".")
        try:
            if dot and prefix in mixtures:
                if name in mixtures[prefix]:
                    raise InvalidSpec(f"line {lineno}: duplicate key {key!r}")
                mixtures[prefix][name.strip()] = float(value)
            elif key in _SCALAR_KEYS:
                if key in values:
                    raise InvalidSpec(f"line {lineno}: duplicate key {key!r}")
                values[key] = value
            else:
                raise InvalidSpec(f"line {lineno}: unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, InvalidSpec):
                raise
            raise InvalidSpec(f"line {lineno}: bad value {value!r}") from None

    missing = [k for k in ("kind", "a", "b", "years") if k not in values]
    if missing:
        raise InvalidSpec(f"missing keys: {', '.join(missing)}")
    try:
        first, last = (int(v) for v in values["years"].split(","))
        return SynthSpec(
            field_name=values.get("field_name", ""),
            kind=values["kind"].lower(),
            a=float(values["a"]),
            b=float(values["b"]),
            years=(first, last),
            mixture_start=mixtures["mixture_start"],
            mixture_end=mixtures["mixture_end"] or dict(mixtures["mixture_start"]),
            noise_sd_log=float(values.get("noise_sd_log", 0.0)),
            transition_midpoint=float(values.get("transition_midpoint", first)),
            transition_rate=float(values.get("transition_rate", 0.0)),
            seed=int(values.get("seed", 0)),
        )
    except ValueError as exc:
        if isinstance(exc, InvalidSpec):
            raise
        raise InvalidSpec(str(exc)) from None


def format_spec_config(spec: SynthSpec) -> str:
    lines = [
        f"field_name = {spec.field_name}",
        f"kind = {spec.kind.value}",
        f"a = {spec.a!r}",
        f"b = {spec.b!r}",
        f"years = {spec.years[0]}, {spec.years[1]}",
        f"noise_sd_log = {spec.noise_sd_log!r}",
        f"transition_midpoint = {spec.transition_midpoint!r}",
        f"transition_rate = {spec.transition_rate!r}",
        f"seed = {spec.seed}",
    ]
    lines += [f"mixture_start.{d} = {w!r}" for d, w in sorted(spec.mixture_start.items())]
    lines += [f"mixture_end.{d} = {w!r}" for d, w in sorted(spec.mixture_end.items())]
    return "\n".join(lines) + "\n"
