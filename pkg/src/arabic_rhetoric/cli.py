"""Command-line entry point: ``arabic-rhetoric {classify,topstems,series}``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Mapping, Sequence

from . import __version__
from .classifier import (
    OTHER,
    classify_corpus,
    label_counts,
    summarize_labels,
    summarize_second_pass,
)
from .corpus_io import Corpus, EmptyCorpusError, filter_arabic, ingest_many, write_classifications
from .isri import load_tables
from .lexicon import StemLexicon, load_lexicon, top_stems
from .timeline import (
    NoDataError,
    WindowRangeError,
    aggregate_weekly,
    emit_plot_data,
    event_window_summary,
    load_events,
)

log = logging.getLogger("arabic_rhetoric")

CONFIG_FILE = "run_config.json"


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    lexicon: str | None
    events: str | None
    builtin_events: bool
    top_k: int
    counting: str
    figure1_denominator: str
    pre_weeks: int
    post_weeks: int


def _positive_int(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", nargs="+", required=True, help="tweet files (.jsonl or .csv)")
    common.add_argument("--out", type=Path, required=True, help="output directory")
    common.add_argument("--lexicon", help="lexicon JSON file (default: built-in)")
    common.add_argument("--counting", choices=("occurrence", "distinct"), default="occurrence")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="arabic-rhetoric", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("classify", parents=[common], help="label every tweet and write count tables")

    top = sub.add_parser("topstems", parents=[common], help="most frequent stems")
    top.add_argument("--top-k", type=_positive_int, default=100)

    series = sub.add_parser("series", parents=[common], help="weekly ratios and event windows")
    series.add_argument("--events", help="events CSV (name,date,description,categories)")
    series.add_argument("--builtin-events", action="store_true", help="use the bundled timeline")
    series.add_argument("--figure1-denominator", choices=("weekly", "global"), default="weekly")
    series.add_argument("--pre-weeks", type=_positive_int, default=1)
    series.add_argument("--post-weeks", type=_positive_int, default=2)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        inputs=tuple(args.input),
        lexicon=args.lexicon,
        events=getattr(args, "events", None),
        builtin_events=getattr(args, "builtin_events", False),
        top_k=getattr(args, "top_k", 100),
        counting=args.counting,
        figure1_denominator=getattr(args, "figure1_denominator", "weekly"),
        pre_weeks=getattr(args, "pre_weeks", 1),
        post_weeks=getattr(args, "post_weeks", 2),
    )


def write_config(config: RunConfig, lex: StemLexicon, out: Path) -> None:
    payload = {
        "config": asdict(config),
        "package_version": __version__,
        "lexicon_version": lex.version,
        "isri_tables_version": load_tables().version,
    }
    (out / CONFIG_FILE).write_text(
        json.dumps(payload, ensure_ascii=False, indent=2, sort_keys=True) + "\n", encoding="utf-8"
    )


def _writer(path: Path):
    fh = path.open("w", encoding="utf-8", newline="")
    return fh, csv.writer(fh, lineterminator="\n")


def _pct(x: float | None) -> str:
    return "" if x is None else f"{x:.2f}"


def write_label_summary(first: Mapping[str, int], path: Path) -> None:
    fh, w = _writer(path)
    with fh:
        w.writerow(["label", "count", "pct_total", "pct_categorized"])
        for row in summarize_labels(first):
            w.writerow([row.label, row.count, _pct(row.pct_total), _pct(row.pct_categorized)])
        total = sum(first.values())
        w.writerow(["Total", total, _pct(100.0 if total else 0.0), ""])
        w.writerow(["Categorized", total - first.get("None", 0), "", ""])


def write_second_pass_summary(second: Mapping[str, int], other_total: int, path: Path) -> None:
    fh, w = _writer(path)
    with fh:
        w.writerow(["label", "count", "pct_names_subset", "pct_of_other"])
        for row in summarize_second_pass(second, other_total):
            w.writerow([row.label, row.count, _pct(row.pct_names_subset), _pct(row.pct_of_other)])
        w.writerow(["Total", sum(second.values()), "", ""])


def write_corpus_stats(corpus: Corpus, path: Path) -> None:
    fh, w = _writer(path)
    with fh:
        w.writerow(["measure", "count"])
        w.writerow(["ingested", corpus.ingested])
        w.writerow(["retained", corpus.retained])
        for reason in sorted(corpus.rejected):
            w.writerow([f"rejected_{reason}", corpus.rejected[reason]])


def _load_corpus(config: RunConfig) -> Corpus:
    corpus = filter_arabic(ingest_many(config.inputs))
    if not corpus.records:
        raise EmptyCorpusError("no Arabic records left after language filtering")
    return corpus


def cmd_classify(config: RunConfig, out: Path) -> int:
    lex = load_lexicon(config.lexicon)
    corpus = _load_corpus(config)
    results = classify_corpus(corpus.records, lex, config.counting)
    first, second = label_counts(results)
    write_config(config, lex, out)
    write_corpus_stats(corpus, out / "corpus_stats.csv")
    write_classifications(results, out / "classifications.csv")
    write_label_summary(first, out / "summary.csv")
    write_second_pass_summary(second, first.get(OTHER, 0), out / "second_pass.csv")
    log.info("classified %d tweets into %s", len(results), out)
    return 0


def cmd_topstems(config: RunConfig, out: Path) -> int:
    lex = load_lexicon(config.lexicon)
    corpus = _load_corpus(config)
    table = top_stems(corpus.records, config.top_k, lex)
    write_config(config, lex, out)
    fh, w = _writer(out / "topstems.csv")
    with fh:
        w.writerow(["stem", "count"])
        w.writerows(table.rows)
    return 0


def cmd_series(config: RunConfig, out: Path) -> int:
    lex = load_lexicon(config.lexicon)
    events = load_events(None if config.builtin_events else config.events)
    corpus = _load_corpus(config)
    results = classify_corpus(corpus.records, lex, config.counting)
    series = aggregate_weekly(results, denominator=config.figure1_denominator)
    write_config(config, lex, out)
    emit_plot_data(series, events, out / "plot_data.csv")

    fh, w = _writer(out / "event_windows.csv")
    with fh:
        w.writerow(["event", "date", "label", "event_week", "baseline_mean", "window_mean",
                    "delta", "delta_sd", "status"])
        for event in events:
            for label in event.related_categories:
                try:
                    s = event_window_summary(series, event, label, config.pre_weeks, config.post_weeks)
                except (WindowRangeError, NoDataError) as exc:
                    log.info("skipping %s/%s: %s", event.name, label, exc)
                    status = "no_data" if isinstance(exc, NoDataError) else "out_of_range"
                    w.writerow([event.name, event.date.isoformat(), label, "", "", "", "", "", status])
                    continue
                w.writerow([event.name, event.date.isoformat(), label, s.event_week.isoformat(),
                            repr(s.baseline_mean), repr(s.window_mean), repr(s.delta),
                            repr(s.delta_sd), "ok"])
    return 0


COMMANDS = {"classify": cmd_classify, "topstems": cmd_topstems, "series": cmd_series}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    if args.command == "series" and not (args.events or args.builtin_events):
        parser.error("series needs --events PATH or --builtin-events")
    for path in args.input:
        if not Path(path).is_file():
            parser.error(f"input not found: {path}")
    if args.lexicon and not Path(args.lexicon).is_file():
        parser.error(f"lexicon not found: {args.lexicon}")
    if getattr(args, "events", None) and not Path(args.events).is_file():
        parser.error(f"events file not found: {args.events}")

    config = config_from_args(args)
    try:
        args.out.mkdir(parents=True, exist_ok=True)
        return COMMANDS[args.command](config, args.out)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
