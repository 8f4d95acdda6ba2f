"""Weekly label ratios, the offline event list, and event-window deltas."""

from __future__ import annotations

import csv
import math
import statistics
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from datetime import date, datetime, timedelta
from importlib import resources
from io import StringIO
from pathlib import Path
from typing import Iterable, Literal, Mapping, Sequence

from .classifier import LABELS, SECOND_PASS_LABELS, TweetClassification
from .corpus_io import week_start

Denominator = Literal["weekly", "global"]
EVENTS_HEADER = ["name", "date", "description", "categories"]
PLOT_HEADER = ["week_start", "series", "count", "denominator", "ratio"]
SIDECAR_HEADER = ["name", "date", "label_hint"]
KNOWN_TAGS = frozenset(LABELS) | frozenset(SECOND_PASS_LABELS)


class EventFileError(ValueError):
    pass


class WindowRangeError(ValueError):
    pass


class NoDataError(ValueError):
    """The label has no defined ratio inside or outside the window."""


def series_name(label: str) -> str:
    """``NamesViolence`` -> ``names_violence``; ``Violence`` -> ``violence``."""
    if label.startswith("Names") and label != "Names":
        return "names_" + label[len("Names"):].lower()
    return label.lower()


SERIES_TO_LABEL = {series_name(label): label for label in (*LABELS, *SECOND_PASS_LABELS)}


@dataclass
class WeeklyCounts:
    """Mergeable per-week label counters; the unit of parallel aggregation."""

    labels: dict[date, Counter[str]] = field(default_factory=lambda: defaultdict(Counter))
    second_pass: dict[date, Counter[str]] = field(default_factory=lambda: defaultdict(Counter))
    eligible: Counter[date] = field(default_factory=Counter)

    def add(self, label: str, second: str | None, when: datetime | date) -> None:
        week = week_start(when)
        self.labels[week][label] += 1
        if second is not None:
            self.second_pass[week][second] += 1
            self.eligible[week] += 1

    def merge(self, other: WeeklyCounts) -> WeeklyCounts:
        out = WeeklyCounts()
        for src in (self, other):
            for week, c in src.labels.items():
                out.labels[week].update(c)
            for week, c in src.second_pass.items():
                out.second_pass[week].update(c)
            out.eligible.update(src.eligible)
        return out

    def weeks(self) -> list[date]:
        if not self.labels:
            return []
        first, last = min(self.labels), max(self.labels)
        n = (last - first).days // 7
        return [first + timedelta(weeks=i) for i in range(n + 1)]


@dataclass(frozen=True)
class WeeklySeries:
    week_start: date
    total: int
    counts: Mapping[str, int]
    denominator: int
    second_pass_counts: Mapping[str, int]
    second_pass_total: int

    def ratio(self, label: str) -> float | None:
        if label in SECOND_PASS_LABELS:
            if not self.second_pass_total:
                return None
            return self.second_pass_counts[label] / self.second_pass_total
        if not self.denominator:
            return None
        return self.counts[label] / self.denominator


def count_weekly(
    classifications: Iterable[TweetClassification],
    timestamps: Iterable[datetime] | None = None,
) -> WeeklyCounts:
    acc = WeeklyCounts()
    if timestamps is None:
        for c in classifications:
            if c.created_at is None:
                raise ValueError(f"classification {c.tweet_id} has no timestamp")
            acc.add(c.label, c.second_pass, c.created_at)
    else:
        for c, ts in zip(classifications, timestamps, strict=True):
            acc.add(c.label, c.second_pass, ts)
    return acc


def series_from_counts(acc: WeeklyCounts, denominator: Denominator = "weekly") -> list[WeeklySeries]:
    if denominator not in ("weekly", "global"):
        raise ValueError(f"unknown denominator: {denominator!r}")
    grand_total = sum(sum(c.values()) for c in acc.labels.values())
    out = []
    for week in acc.weeks():
        labels = acc.labels.get(week, Counter())
        second = acc.second_pass.get(week, Counter())
        total = sum(labels.values())
        out.append(WeeklySeries(
            week_start=week,
            total=total,
            counts={label: labels.get(label, 0) for label in LABELS},
            denominator=total if denominator == "weekly" else grand_total,
            second_pass_counts={label: second.get(label, 0) for label in SECOND_PASS_LABELS},
            second_pass_total=acc.eligible.get(week, 0),
        ))
    return out


def aggregate_weekly(
    classifications: Iterable[TweetClassification],
    timestamps: Iterable[datetime] | None = None,
    denominator: Denominator = "weekly",
) -> list[WeeklySeries]:
    """Bucket classifications into contiguous Monday-start UTC weeks.

    First-pass ratios divide by the week's tweet count (or by the corpus
    total with ``denominator="global"``).  Second-pass ratios divide by the
    week's count of tweets that received a second-pass label.
    """
    return series_from_counts(count_weekly(classifications, timestamps), denominator)


@dataclass(frozen=True)
class EventRecord:
    name: str
    date: date
    description: str = ""
    related_categories: tuple[str, ...] = ()


def _parse_event_date(value: str) -> date:
    value = value.strip()
    try:
        return date.fromisoformat(value)
    except ValueError:
        return datetime.strptime(value, "%m/%d/%Y").date()


def parse_events(text: str, source: str = "<events>") -> list[EventRecord]:
    reader = csv.reader(StringIO(text))
    events: list[EventRecord] = []
    names: set[str] = set()
    for row in reader:
        line = reader.line_num
        if not row or not any(cell.strip() for cell in row):
            continue
        if line == 1 and [c.strip() for c in row] == EVENTS_HEADER:
            continue
        if len(row) != len(EVENTS_HEADER):
            raise EventFileError(f"{source}:{line}: expected 4 columns, got {len(row)}")
        name, raw_date, description, raw_tags = (c.strip() for c in row)
        if not name:
            raise EventFileError(f"{source}:{line}: empty event name")
        if name in names:
            raise EventFileError(f"{source}:{line}: duplicate event name {name!r}")
        try:
            when = _parse_event_date(raw_date)
        except ValueError:
            raise EventFileError(f"{source}:{line}: unparseable date {raw_date!r}") from None
        tags = tuple(t.strip() for t in raw_tags.split(";") if t.strip())
        unknown = [t for t in tags if t not in KNOWN_TAGS]
        if unknown:
            raise EventFileError(f"{source}:{line}: unknown categories {unknown}")
        names.add(name)
        events.append(EventRecord(name, when, description, tags))
    return events


def load_events(path: str | Path | None = None) -> list[EventRecord]:
    """Read an events CSV, or the bundled timeline when ``path`` is None."""
    if path is None:
        text = resources.files("arabic_rhetoric").joinpath("data/events.csv").read_text("utf-8")
        return parse_events(text, "events.csv")
    return parse_events(Path(path).read_text(encoding="utf-8"), str(path))


@dataclass(frozen=True)
class WindowSummary:
    event: str
    label: str
    event_week: date
    baseline_mean: float
    window_mean: float
    delta: float
    delta_sd: float


def event_window_summary(
    series: Sequence[WeeklySeries],
    event: EventRecord,
    label: str,
    pre_weeks: int = 1,
    post_weeks: int = 2,
) -> WindowSummary:
    """Compare a label's mean ratio around an event with the rest of the series.

    The window spans ``pre_weeks`` before to ``post_weeks`` after the event's
    week.  ``delta_sd`` expresses the difference in baseline (population)
    standard deviations.  Weeks with no tweets are skipped.
    """
    if pre_weeks < 1 or post_weeks < 1:
        raise ValueError("pre_weeks and post_weeks must be >= 1")
    if not series:
        raise WindowRangeError("empty series")
    weeks = [s.week_start for s in series]
    event_week = week_start(event.date)
    lo = event_week - timedelta(weeks=pre_weeks)
    hi = event_week + timedelta(weeks=post_weeks)
    if lo < weeks[0] or hi > weeks[-1]:
        raise WindowRangeError(
            f"window {lo}..{hi} for {event.name!r} falls outside series {weeks[0]}..{weeks[-1]}"
        )

    inside, outside = [], []
    for s in series:
        r = s.ratio(label)
        if r is None:
            continue
        (inside if lo <= s.week_start <= hi else outside).append(r)
    if not inside or not outside:
        raise NoDataError(f"no populated weeks for {label} around {event.name!r}")

    baseline = statistics.fmean(outside)
    window = statistics.fmean(inside)
    delta = window - baseline
    sd = statistics.pstdev(outside)
    if sd > 0:
        delta_sd = delta / sd
    else:
        delta_sd = 0.0 if delta == 0 else math.copysign(math.inf, delta)
    return WindowSummary(event.name, label, event_week, baseline, window, delta, delta_sd)


def _fmt_ratio(r: float | None) -> str:
    return "" if r is None else repr(r)


def plot_series_labels(series: Sequence[WeeklySeries]) -> list[str]:
    labels = list(LABELS)
    if any(s.second_pass_total for s in series):
        labels.extend(SECOND_PASS_LABELS)
    return labels


def sidecar_path(path: Path) -> Path:
    return path.with_name(path.stem + ".events.csv")


def emit_plot_data(series: Sequence[WeeklySeries], events: Sequence[EventRecord], path: str | Path) -> Path:
    """Write long-format plot rows plus an ``<name>.events.csv`` sidecar.

    Returns the sidecar path.
    """
    if not series:
        raise ValueError("no weekly series to emit")
    path = Path(path)
    labels = plot_series_labels(series)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(PLOT_HEADER)
        for s in series:
            for label in labels:
                if label in SECOND_PASS_LABELS:
                    count, denom = s.second_pass_counts[label], s.second_pass_total
                else:
                    count, denom = s.counts[label], s.denominator
                writer.writerow([s.week_start.isoformat(), series_name(label), count, denom,
                                 _fmt_ratio(s.ratio(label))])
    sidecar = sidecar_path(path)
    with sidecar.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(SIDECAR_HEADER)
        for e in sorted(events, key=lambda e: (e.date, e.name)):
            writer.writerow([e.name, e.date.isoformat(), ";".join(e.related_categories)])
    return sidecar


def read_plot_data(path: str | Path) -> list[WeeklySeries]:
    rows: dict[date, dict[str, tuple[int, int]]] = defaultdict(dict)
    with Path(path).open(encoding="utf-8", newline="") as fh:
        for row in csv.DictReader(fh):
            label = SERIES_TO_LABEL[row["series"]]
            rows[date.fromisoformat(row["week_start"])][label] = (
                int(row["count"]), int(row["denominator"]),
            )
    out = []
    for week in sorted(rows):
        cells = rows[week]
        counts = {label: cells[label][0] for label in LABELS}
        second = {label: cells.get(label, (0, 0))[0] for label in SECOND_PASS_LABELS}
        eligible = cells.get(SECOND_PASS_LABELS[0], (0, 0))[1]
        out.append(WeeklySeries(
            week_start=week,
            total=sum(counts.values()),
            counts=counts,
            denominator=cells[LABELS[0]][1],
            second_pass_counts=second,
            second_pass_total=eligible,
        ))
    return out
