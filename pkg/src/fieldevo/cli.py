"""Command-line interface.

Exit status is 0 on success, 1 when an analysis cannot be carried out on
valid input, and 2 for usage, I/O and parse errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .corpus import FieldCorpus, format_corpus_csv, parse_corpus_csv, trend_series
from .errors import AnalysisError, InputError
from .laws import LawConfig, evaluate_field
from .metrics import weight_matrix
from .regress import FitResult, best_fit, fit
from .report import build_report, canonical_json, digest, fit_to_dict, law_report_to_dict, \
    weights_to_csv, weights_to_dict
from .svg import trend_chart, weights_chart
from .synth import generate_corpus, parse_spec_config

DEFAULTS = LawConfig()


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fieldevo", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("fit", help="fit a trend model to the yearly publication series")
    s.add_argument("--input", required=True)
    s.add_argument("--model", choices=["linear", "growth", "exponential", "best"], default="best")

    s = sub.add_parser("weights", help="per-year discipline weights")
    s.add_argument("--input", required=True)
    s.add_argument("--csv", action="store_true", help="long-format CSV instead of JSON")

    s = sub.add_parser("laws", help="evaluate the three field-evolution laws")
    s.add_argument("--input", required=True)
    s.add_argument("--threshold", type=float, default=DEFAULTS.threshold)
    s.add_argument("--band-max", type=int, default=DEFAULTS.size_band_max)
    s.add_argument("--top-k", type=int, default=DEFAULTS.top_k)
    s.add_argument("--persistence-min", type=float, default=DEFAULTS.persistence_min)

    s = sub.add_parser("report", help="write report.json, weights.csv and SVG charts")
    s.add_argument("--input", required=True)
    s.add_argument("--out", required=True)

    s = sub.add_parser("synth", help="generate a synthetic corpus CSV")
    s.add_argument("--spec", required=True)
    s.add_argument("--out", required=True)
    return p


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None


def _load_corpus(path: str) -> tuple[FieldCorpus, bytes]:
    data = _read(path)
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError(f"{path}: not valid UTF-8") from None
    return parse_corpus_csv(text, field_name=Path(path).stem), data


def _write(path: Path, text: str):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror or exc}") from None


def _cmd_fit(args, out):
    corpus, _ = _load_corpus(args.input)
    series = trend_series(corpus)
    result = best_fit(series)[1] if args.model == "best" else fit(args.model, series)
    doc = fit_to_dict(result)
    doc["proxy"] = series.proxy
    out.write(canonical_json(doc))


def _cmd_weights(args, out):
    corpus, _ = _load_corpus(args.input)
    weights = weight_matrix(corpus)
    out.write(weights_to_csv(weights) if args.csv else canonical_json(weights_to_dict(weights)))


def _cmd_laws(args, out):
    corpus, _ = _load_corpus(args.input)
    try:
        cfg = LawConfig(threshold=args.threshold, size_band_max=args.band_max,
                        top_k=args.top_k, persistence_min=args.persistence_min)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out.write(canonical_json(law_report_to_dict(evaluate_field(corpus, cfg))))


def _cmd_report(args, out):
    corpus, data = _load_corpus(args.input)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise UsageError(f"cannot create {out_dir}: {exc.strerror or exc}") from None
    cfg = LawConfig()
    laws = evaluate_field(corpus, cfg)
    weights = weight_matrix(corpus)
    series = trend_series(corpus)
    trend = laws.trend_fit if isinstance(laws.trend_fit, FitResult) else None

    _write(out_dir / "report.json", canonical_json(build_report(corpus, laws, digest(data))))
    _write(out_dir / "weights.csv", weights_to_csv(weights))
    _write(out_dir / "trend.svg", trend_chart(series, trend, f"{corpus.field_name}: publications per year"))
    _write(out_dir / "weights.svg", weights_chart(weights, f"{corpus.field_name}: annual discipline weights"))


def _cmd_synth(args, out):
    data = _read(args.spec)
    spec = parse_spec_config(data.decode("utf-8"))
    _write(Path(args.out), format_corpus_csv(generate_corpus(spec)))


COMMANDS = {
    "fit": _cmd_fit,
    "weights": _cmd_weights,
    "laws": _cmd_laws,
    "report": _cmd_report,
    "synth": _cmd_synth,
}


def run(argv: list[str], stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        COMMANDS[args.command](args, stdout)
    except (UsageError, InputError) as exc:
        print(f"fieldevo {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return 2
    except AnalysisError as exc:
        print(f"fieldevo {args.command}: {type(exc).__name__}: {exc}", file=stderr)
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)
