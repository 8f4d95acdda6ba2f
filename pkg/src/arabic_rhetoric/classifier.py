"""Majority-rule tweet labelling with a second pass for Names ties."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from datetime import datetime
from typing import Iterable, Mapping, Sequence

from .corpus_io import TweetRecord
from .lexicon import CATEGORIES, CountingPolicy, StemLexicon, analyze, match_categories

OTHER = "Other"
NONE = "None"
LABELS = (*CATEGORIES, OTHER, NONE)
TOPICS = ("Violence", "Theological", "Sectarian")
SECOND_PASS_LABELS = ("NamesViolence", "NamesTheological", "NamesSectarian", "NamesOther")


@dataclass(frozen=True)
class TweetClassification:
    tweet_id: str
    counts: Mapping[str, int]
    label: str
    second_pass: str | None = None
    created_at: datetime | None = None


def majority(counts: Mapping[str, int], categories: Sequence[str]) -> str | None:
    """Unique argmax over ``categories``.

    Returns the category, ``OTHER`` when the maximum is shared, or None
    when every count is zero.
    """
    best = max(counts[c] for c in categories)
    if best <= 0:
        return None
    winners = [c for c in categories if counts[c] == best]
    return winners[0] if len(winners) == 1 else OTHER


def classify_tweet(counts: Mapping[str, int]) -> str:
    if set(counts) != set(CATEGORIES):
        raise ValueError(f"counts must cover exactly {CATEGORIES}")
    if any(v < 0 for v in counts.values()):
        raise ValueError("counts must be non-negative")
    return majority(counts, CATEGORIES) or NONE


def second_pass(counts: Mapping[str, int], label: str) -> str | None:
    """Re-run the majority rule without Names for Other tweets that mention a name."""
    if label != OTHER or counts["Names"] < 1:
        return None
    winner = majority(counts, TOPICS)
    if winner is None or winner == OTHER:
        return "NamesOther"
    return "Names" + winner


def classify_record(
    record: TweetRecord, lex: StemLexicon, counting: CountingPolicy = "occurrence"
) -> TweetClassification:
    stems, normalized_text = analyze(record.text, lex)
    counts = match_categories(stems, normalized_text, lex, counting)
    label = classify_tweet(counts)
    return TweetClassification(
        tweet_id=record.id,
        counts=counts,
        label=label,
        second_pass=second_pass(counts, label),
        created_at=record.created_at,
    )


def classify_corpus(
    records: Iterable[TweetRecord], lex: StemLexicon, counting: CountingPolicy = "occurrence"
) -> list[TweetClassification]:
    return [classify_record(r, lex, counting) for r in records]


@dataclass(frozen=True)
class LabelSummary:
    label: str
    count: int
    pct_total: float
    pct_categorized: float | None


def label_counts(results: Iterable[TweetClassification]) -> tuple[Counter[str], Counter[str]]:
    first: Counter[str] = Counter()
    second: Counter[str] = Counter()
    for r in results:
        first[r.label] += 1
        if r.second_pass:
            second[r.second_pass] += 1
    return first, second


def summarize_labels(first: Mapping[str, int]) -> list[LabelSummary]:
    """Per-label counts as a share of all tweets and of categorized tweets.

    "Categorized" means every tweet not labelled None, Other included.
    """
    total = sum(first.get(label, 0) for label in LABELS)
    categorized = total - first.get(NONE, 0)
    rows = []
    for label in LABELS:
        n = first.get(label, 0)
        pct_total = 100.0 * n / total if total else 0.0
        if label == NONE:
            pct_cat = None
        else:
            pct_cat = 100.0 * n / categorized if categorized else 0.0
        rows.append(LabelSummary(label, n, pct_total, pct_cat))
    return rows


@dataclass(frozen=True)
class SecondPassSummary:
    label: str
    count: int
    pct_names_subset: float
    pct_of_other: float


def summarize_second_pass(second: Mapping[str, int], other_total: int) -> list[SecondPassSummary]:
    """Second-pass shares over two denominators.

    ``pct_names_subset`` divides by the tweets that got a second-pass label;
    ``pct_of_other`` divides by every tweet labelled Other.
    """
    subset = sum(second.get(label, 0) for label in SECOND_PASS_LABELS)
    rows = []
    for label in SECOND_PASS_LABELS:
        n = second.get(label, 0)
        rows.append(SecondPassSummary(
            label,
            n,
            100.0 * n / subset if subset else 0.0,
            100.0 * n / other_total if other_total else 0.0,
        ))
    return rows
