"""Bundled synthetic fixtures.

Each fixture is a generator config (``<name>.cfg``) and the corpus it
produces (``fixture_<name>.csv``), frozen so analyses can be checked without
regenerating.
"""

from importlib import resources

from ..corpus import FieldCorpus, parse_corpus_csv
from ..synth import SynthSpec, parse_spec_config

NAMES = ("microbiome_like", "takeover", "uniform20")


def fixture_path(name: str, suffix: str = "csv"):
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(NAMES)}")
    filename = f"fixture_{name}.csv" if suffix == "csv" else f"{name}.cfg"
    return resources.files(__name__) / filename


def load_spec(name: str) -> SynthSpec:
    return parse_spec_config(fixture_path(name, "cfg").read_text(encoding="utf-8"))


def load_fixture(name: str) -> FieldCorpus:
    return parse_corpus_csv(fixture_path(name).read_text(encoding="utf-8"), field_name=name)
