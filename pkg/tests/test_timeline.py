import random
from collections import Counter
from datetime import date, datetime, timedelta, timezone

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arabic_rhetoric.classifier import LABELS, SECOND_PASS_LABELS, TweetClassification
from arabic_rhetoric.timeline import (
    EventFileError,
    EventRecord,
    WindowRangeError,
    aggregate_weekly,
    count_weekly,
    emit_plot_data,
    event_window_summary,
    load_events,
    read_plot_data,
    series_from_counts,
    sidecar_path,
)

ZERO = {"Violence": 0, "Theological": 0, "Sectarian": 0, "Names": 0}
MONDAY = datetime(2014, 6, 2, 9, tzinfo=timezone.utc)


def tc(i, label, when, second=None):
    return TweetClassification(f"t{i}", ZERO, label, second, when)


def test_single_week_ratio():
    results = [tc(0, "Violence", MONDAY)] + [tc(i, "None", MONDAY + timedelta(days=i)) for i in (1, 2, 3)]
    (week,) = aggregate_weekly(results)
    assert week.week_start == date(2014, 6, 2)
    assert week.total == 4
    assert week.ratio("Violence") == 0.25


def test_all_none_week():
    (week,) = aggregate_weekly([tc(i, "None", MONDAY) for i in range(5)])
    assert week.ratio("None") == 1.0
    assert all(week.ratio(label) == 0 for label in LABELS if label != "None")


def test_gap_weeks_are_emitted_empty():
    results = [tc(0, "Violence", MONDAY), tc(1, "Names", MONDAY + timedelta(weeks=3))]
    series = aggregate_weekly(results)
    assert [s.total for s in series] == [1, 0, 0, 1]
    assert series[1].ratio("Violence") is None


def test_timestamps_argument_overrides():
    results = [tc(0, "Violence", None)]
    (week,) = aggregate_weekly(results, [MONDAY])
    assert week.total == 1
    with pytest.raises(ValueError):
        aggregate_weekly(results)


def test_global_denominator():
    results = [tc(0, "Violence", MONDAY), tc(1, "None", MONDAY + timedelta(weeks=1))]
    series = aggregate_weekly(results, denominator="global")
    assert [s.denominator for s in series] == [2, 2]
    assert series[0].ratio("Violence") == 0.5


def test_second_pass_denominator_is_names_subset():
    results = [
        tc(0, "Other", MONDAY, "NamesViolence"),
        tc(1, "Other", MONDAY, "NamesOther"),
        tc(2, "Other", MONDAY),
        tc(3, "Violence", MONDAY),
    ]
    (week,) = aggregate_weekly(results)
    assert week.second_pass_total == 2
    assert week.ratio("NamesViolence") == 0.5
    assert week.ratio("Other") == 0.75


def random_results(seed, n=400, weeks=10):
    rng = random.Random(seed)
    out = []
    for i in range(n):
        label = rng.choice(LABELS)
        second = rng.choice(SECOND_PASS_LABELS) if label == "Other" and rng.random() < 0.5 else None
        when = MONDAY.replace(hour=0) + timedelta(seconds=rng.randrange(weeks * 7 * 86400))
        out.append(tc(i, label, when, second))
    return out


@pytest.mark.parametrize("seed", range(5))
def test_weekly_ratios_match_brute_force(seed):
    results = random_results(seed)
    series = aggregate_weekly(results)
    assert len(series) == 10
    for s in series:
        lo = datetime.combine(s.week_start, datetime.min.time(), timezone.utc)
        hi = lo + timedelta(days=7)
        in_week = [r for r in results if lo <= r.created_at < hi]
        tally = Counter(r.label for r in in_week)
        for label in LABELS:
            assert s.ratio(label) == tally[label] / len(in_week)
        eligible = [r for r in in_week if r.second_pass]
        for label in SECOND_PASS_LABELS:
            expected = sum(r.second_pass == label for r in eligible) / len(eligible) if eligible else None
            assert s.ratio(label) == expected
        assert sum(s.ratio(label) for label in LABELS) == pytest.approx(1.0, abs=1e-9)


def test_merge_is_linear():
    results = random_results(11)
    a, b = results[::2], results[1::2]
    merged = series_from_counts(count_weekly(a).merge(count_weekly(b)))
    assert merged == aggregate_weekly(results)


def test_default_events():
    events = {e.name: e for e in load_events()}
    assert len(events) == 14
    assert events["Caliphate"].date == date(2014, 6, 28)
    assert events["Mosul and Takrit Captured"].date == date(2014, 6, 10)
    assert events["Iraq (USA Support)"].date == date(2014, 6, 18)
    assert events["Shite Attack"].date == date(2015, 5, 22)
    assert events["Violent Acts"].date == date(2015, 2, 15)


def test_empty_events_file(tmp_path):
    path = tmp_path / "e.csv"
    path.write_text("", encoding="utf-8")
    assert load_events(path) == []


def test_bad_event_date_names_row(tmp_path):
    path = tmp_path / "e.csv"
    path.write_text("name,date,description,categories\nA,2014-01-01,x,Violence\nB,someday,y,Names\n",
                    encoding="utf-8")
    with pytest.raises(EventFileError, match=":3:"):
        load_events(path)


@pytest.mark.parametrize("body", ["A,2014-01-01,x\n", "A,2014-01-01,x,Weather\n",
                                  "A,2014-01-01,x,Violence\nA,2014-02-01,y,Violence\n"])
def test_malformed_event_rows(tmp_path, body):
    path = tmp_path / "e.csv"
    path.write_text(body, encoding="utf-8")
    with pytest.raises(EventFileError):
        load_events(path)


def constant_series(weeks=20, violence=2, total=10):
    results, i = [], 0
    for w in range(weeks):
        for k in range(total):
            label = "Violence" if k < violence else "None"
            results.append(tc(i, label, MONDAY + timedelta(weeks=w)))
            i += 1
    return aggregate_weekly(results)


def test_window_flat_series():
    series = constant_series()
    event = EventRecord("e", date(2014, 7, 16))
    s = event_window_summary(series, event, "Violence")
    assert s.baseline_mean == pytest.approx(0.2)
    assert s.delta == 0 and s.delta_sd == 0


def test_window_spike_detected():
    series = constant_series()
    # inject a single spike at the event week with small baseline wobble
    results = []
    i = 0
    for w in range(20):
        violence = 12 if w == 8 else (2 if w % 2 else 3)
        for k in range(20):
            results.append(tc(i, "Violence" if k < violence else "None", MONDAY + timedelta(weeks=w)))
            i += 1
    series = aggregate_weekly(results)
    event = EventRecord("e", (MONDAY + timedelta(weeks=8, days=2)).date())
    s = event_window_summary(series, event, "Violence")
    assert s.delta > 0
    assert s.delta_sd > 2


def test_window_out_of_range():
    series = constant_series()
    with pytest.raises(WindowRangeError):
        event_window_summary(series, EventRecord("early", date(2013, 1, 1)), "Violence")
    with pytest.raises(WindowRangeError):
        # event in first week leaves no room for the pre-window
        event_window_summary(series, EventRecord("edge", MONDAY.date()), "Violence")
    with pytest.raises(ValueError):
        event_window_summary(series, EventRecord("e", date(2014, 7, 16)), "Violence", pre_weeks=0)


def test_emit_plot_rows(tmp_path):
    results = [tc(0, "Violence", MONDAY), tc(1, "None", MONDAY + timedelta(weeks=1))]
    series = aggregate_weekly(results)
    path = tmp_path / "plot.csv"
    sidecar = emit_plot_data(series, load_events(), path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "week_start,series,count,denominator,ratio"
    assert len(lines) - 1 == 12
    assert sidecar == sidecar_path(path)
    side = sidecar.read_text(encoding="utf-8").splitlines()
    assert side[0] == "name,date,label_hint"
    assert len(side) == 15


def test_emit_includes_second_pass_series(tmp_path):
    results = [tc(0, "Other", MONDAY, "NamesViolence"), tc(1, "None", MONDAY)]
    path = tmp_path / "plot.csv"
    emit_plot_data(aggregate_weekly(results), [], path)
    text = path.read_text(encoding="utf-8")
    assert "names_violence" in text and "names_other" in text
    assert len(text.splitlines()) - 1 == 10


def test_emit_is_byte_identical(tmp_path):
    series = aggregate_weekly(random_results(2))
    emit_plot_data(series, load_events(), tmp_path / "a.csv")
    emit_plot_data(series, load_events(), tmp_path / "b.csv")
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()
    assert (tmp_path / "a.events.csv").read_bytes() == (tmp_path / "b.events.csv").read_bytes()


def test_emit_empty_series_fails(tmp_path):
    with pytest.raises(ValueError):
        emit_plot_data([], [], tmp_path / "a.csv")


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from(["weekly", "global"]))
def test_plot_data_round_trip(tmp_path_factory, seed, denominator):
    series = aggregate_weekly(random_results(seed, n=60, weeks=6), denominator=denominator)
    path = tmp_path_factory.mktemp("rt") / "plot.csv"
    emit_plot_data(series, [], path)
    assert read_plot_data(path) == series
