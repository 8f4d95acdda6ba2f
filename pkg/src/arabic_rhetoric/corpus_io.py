"""Reading tweet records, Arabic filtering, and classification CSV output."""

from __future__ import annotations

import csv
import json
import logging
from collections import Counter
from dataclasses import dataclass, field, replace
from datetime import date, datetime, timedelta, timezone
from pathlib import Path
from types import MappingProxyType
from typing import TYPE_CHECKING, Iterable, Iterator, Mapping, Sequence

from .arabic_text import in_arabic_block

if TYPE_CHECKING:
    from .classifier import TweetClassification

log = logging.getLogger(__name__)

REQUIRED_FIELDS = ("id", "created_at", "text")
CLASSIFICATION_HEADER = [
    "id", "week", "violence", "theological", "sectarian", "names", "label", "second_pass_label",
]
ARABIC_LETTER_THRESHOLD = 0.5


class EmptyCorpusError(ValueError):
    """Raised when an input file yields no usable records."""


class MalformedRecord(ValueError):
    pass


@dataclass(frozen=True)
class TweetRecord:
    id: str
    created_at: datetime
    text: str
    user_id: str = ""
    lang: str | None = None


@dataclass(frozen=True)
class Corpus:
    records: tuple[TweetRecord, ...]
    source_path: str = ""
    ingested: int = 0
    rejected: Mapping[str, int] = field(default_factory=lambda: MappingProxyType({}))

    @property
    def retained(self) -> int:
        return len(self.records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[TweetRecord]:
        return iter(self.records)


def parse_timestamp(value: str) -> datetime:
    """Parse ISO-8601 (or Twitter's ``created_at`` format) to a UTC datetime.

    Naive timestamps are taken as UTC; sub-second precision is dropped.
    """
    value = value.strip()
    try:
        ts = datetime.fromisoformat(value.replace("Z", "+00:00"))
    except ValueError:
        try:
            ts = datetime.strptime(value, "%a %b %d %H:%M:%S %z %Y")
        except ValueError:
            raise MalformedRecord(f"unparseable timestamp: {value!r}") from None
    if ts.tzinfo is None:
        ts = ts.replace(tzinfo=timezone.utc)
    return ts.astimezone(timezone.utc).replace(microsecond=0)


def week_start(ts: datetime | date) -> date:
    """Monday of the ISO week containing ``ts`` (UTC)."""
    if isinstance(ts, datetime):
        ts = ts.astimezone(timezone.utc).date()
    return ts - timedelta(days=ts.weekday())


def record_from_mapping(row: Mapping[str, object]) -> TweetRecord:
    missing = [k for k in REQUIRED_FIELDS if row.get(k) in (None, "")]
    if missing:
        raise MalformedRecord(f"missing fields: {', '.join(missing)}")
    text = str(row["text"])
    if not text.strip():
        raise MalformedRecord("empty text")
    lang = row.get("lang")
    return TweetRecord(
        id=str(row["id"]),
        created_at=parse_timestamp(str(row["created_at"])),
        text=text,
        user_id=str(row.get("user_id") or ""),
        lang=str(lang) if lang not in (None, "") else None,
    )


def _iter_jsonl(path: Path) -> Iterator[Mapping[str, object] | None]:
    with path.open(encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError:
                yield None
                continue
            yield obj if isinstance(obj, dict) else None


def _iter_csv(path: Path) -> Iterator[Mapping[str, object] | None]:
    with path.open(encoding="utf-8", newline="") as fh:
        yield from csv.DictReader(fh)


def build_corpus(rows: Iterable[Mapping[str, object] | None], source_path: str = "") -> Corpus:
    records: list[TweetRecord] = []
    seen: set[str] = set()
    rejected: Counter[str] = Counter()
    ingested = 0
    for row in rows:
        ingested += 1
        if row is None:
            rejected["malformed"] += 1
            continue
        try:
            record = record_from_mapping(row)
        except MalformedRecord as exc:
            log.debug("rejecting row %d: %s", ingested, exc)
            rejected["malformed"] += 1
            continue
        if record.id in seen:
            rejected["duplicate"] += 1
            continue
        seen.add(record.id)
        records.append(record)
    return Corpus(tuple(records), source_path, ingested, MappingProxyType(dict(rejected)))


def _iter_rows(path: Path, format: str | None) -> Iterator[Mapping[str, object] | None]:
    if format is None:
        format = "csv" if path.suffix.lower() == ".csv" else "jsonl"
    if format == "jsonl":
        return _iter_jsonl(path)
    if format == "csv":
        return _iter_csv(path)
    raise ValueError(f"unsupported format: {format!r}")


def ingest(path: str | Path, format: str | None = None) -> Corpus:
    """Read a JSONL or CSV tweet file.

    Malformed rows and repeated ids (first occurrence wins) are counted in
    ``Corpus.rejected`` rather than raised.  Raises ``EmptyCorpusError`` if
    nothing valid remains.
    """
    return ingest_many([path], format)


def ingest_many(paths: Sequence[str | Path], format: str | None = None) -> Corpus:
    """Like ``ingest`` but deduplicates ids across several files, in order."""
    paths = [Path(p) for p in paths]
    # open eagerly so a bad path fails before any counting
    for p in paths:
        with p.open(encoding="utf-8"):
            pass
    rows = (row for p in paths for row in _iter_rows(p, format))
    corpus = build_corpus(rows, ",".join(str(p) for p in paths))
    if not corpus.records:
        raise EmptyCorpusError(f"no valid records in {corpus.source_path}")
    return corpus


def arabic_letter_fraction(text: str) -> float:
    letters = [ch for ch in text if ch.isalpha()]
    if not letters:
        return 0.0
    return sum(1 for ch in letters if in_arabic_block(ch)) / len(letters)


def is_arabic(record: TweetRecord) -> bool:
    if record.lang is not None:
        return record.lang.lower() == "ar"
    return arabic_letter_fraction(record.text) > ARABIC_LETTER_THRESHOLD


def filter_arabic(corpus: Corpus) -> Corpus:
    kept = tuple(r for r in corpus.records if is_arabic(r))
    rejected = dict(corpus.rejected)
    dropped = len(corpus.records) - len(kept)
    rejected["non_arabic"] = rejected.get("non_arabic", 0) + dropped
    return replace(corpus, records=kept, rejected=MappingProxyType(rejected))


def write_classifications(results: Sequence[TweetClassification], path: str | Path) -> None:
    if not results:
        raise ValueError("no classifications to write")
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CLASSIFICATION_HEADER)
        for r in results:
            writer.writerow([
                r.tweet_id,
                week_start(r.created_at).isoformat() if r.created_at else "",
                r.counts["Violence"],
                r.counts["Theological"],
                r.counts["Sectarian"],
                r.counts["Names"],
                r.label,
                r.second_pass or "",
            ])


def read_classifications(path: str | Path) -> list[dict[str, object]]:
    """Parse a classification CSV back into plain rows (counts as ints)."""
    out = []
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            out.append({
                "id": row["id"],
                "week": date.fromisoformat(row["week"]) if row["week"] else None,
                "counts": {
                    "Violence": int(row["violence"]),
                    "Theological": int(row["theological"]),
                    "Sectarian": int(row["sectarian"]),
                    "Names": int(row["names"]),
                },
                "label": row["label"],
                "second_pass": row["second_pass_label"] or None,
            })
    return out
