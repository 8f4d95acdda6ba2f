"""Category dictionaries, stop words and per-tweet category counting."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Literal, Sequence

from .arabic_text import normalized_tokens
from .isri import norm_marks, stem

CATEGORIES = ("Violence", "Theological", "Sectarian", "Names")
BUILTIN_SIZES = {"Violence": 9, "Theological": 12, "Sectarian": 4, "Names": 9}
MATCH_MODES = ("exact_stem", "compound_containment")

CountingPolicy = Literal["occurrence", "distinct"]


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class LexiconEntry:
    stem: str
    match_mode: str
    expected_frequency: int | None = None


@dataclass(frozen=True)
class StemLexicon:
    categories: dict[str, tuple[LexiconEntry, ...]]
    stop_words: frozenset[str]
    version: str = "custom"
    _exact: dict[str, str] = field(init=False, repr=False, compare=False)
    _compounds: tuple[tuple[str, re.Pattern[str]], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        exact: dict[str, str] = {}
        compounds = []
        for category, entries in self.categories.items():
            for entry in entries:
                if entry.match_mode == "exact_stem":
                    exact[entry.stem] = category
                else:
                    compounds.append((category, compound_pattern(entry.stem)))
        object.__setattr__(self, "_exact", exact)
        object.__setattr__(self, "_compounds", tuple(compounds))

    def is_stop(self, word: str) -> bool:
        return word in self.stop_words

    def category_of(self, stem_: str) -> str | None:
        return self._exact.get(stem_)

    def entries(self) -> Iterable[tuple[str, LexiconEntry]]:
        for category, entries in self.categories.items():
            for entry in entries:
                yield category, entry

    def __len__(self) -> int:
        return sum(len(entries) for entries in self.categories.values())


def compound_pattern(entry: str) -> re.Pattern[str]:
    parts = norm_marks(entry, "both").split("_")
    return re.compile("[_ ]".join(re.escape(p) for p in parts))


def _parse_entry(raw: dict, where: str) -> LexiconEntry:
    try:
        stem_ = raw["stem"]
    except (KeyError, TypeError):
        raise LexiconError(f"{where}: entry without a stem: {raw!r}") from None
    mode = raw.get("match_mode") or ("compound_containment" if "_" in stem_ else "exact_stem")
    if mode not in MATCH_MODES:
        raise LexiconError(f"{where}: unknown match_mode {mode!r} for {stem_}")
    if ("_" in stem_) != (mode == "compound_containment"):
        raise LexiconError(f"{where}: {stem_} must use compound_containment iff it contains '_'")
    freq = raw.get("expected_frequency")
    return LexiconEntry(stem_, mode, None if freq is None else int(freq))


def lexicon_from_dict(data: dict, include_optional: bool = False) -> StemLexicon:
    raw_categories = data.get("categories")
    if not isinstance(raw_categories, dict):
        raise LexiconError("lexicon must have a 'categories' mapping")
    unknown = set(raw_categories) - set(CATEGORIES)
    if unknown:
        raise LexiconError(f"unknown categories: {sorted(unknown)}")

    categories: dict[str, list[LexiconEntry]] = {c: [] for c in CATEGORIES}
    sources = [raw_categories]
    if include_optional:
        sources.append(data.get("optional_entries", {}))
    owner: dict[str, str] = {}
    for source in sources:
        for category, raw_entries in source.items():
            if category not in categories:
                raise LexiconError(f"unknown category {category!r}")
            for raw in raw_entries:
                entry = _parse_entry(raw, category)
                if entry.stem in owner:
                    raise LexiconError(
                        f"stem {entry.stem} appears in both {owner[entry.stem]} and {category}"
                    )
                owner[entry.stem] = category
                categories[category].append(entry)

    return StemLexicon(
        categories={c: tuple(v) for c, v in categories.items()},
        stop_words=frozenset(data.get("stop_words", ())),
        version=str(data.get("version", "custom")),
    )


def load_lexicon(path: str | Path | None = None, include_optional: bool = False) -> StemLexicon:
    """Load a lexicon file, or the built-in one when ``path`` is None.

    The built-in lexicon is checked against its published cardinalities
    (9 Violence, 12 Theological, 4 Sectarian, 9 Names).
    """
    if path is None:
        text = resources.files("arabic_rhetoric").joinpath("data/lexicon.json").read_text("utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LexiconError(f"lexicon is not valid JSON: {exc}") from exc
    lex = lexicon_from_dict(data, include_optional=include_optional)
    if path is None and not include_optional:
        sizes = {c: len(lex.categories[c]) for c in CATEGORIES}
        if sizes != BUILTIN_SIZES:
            raise LexiconError(f"built-in lexicon has wrong category sizes: {sizes}")
    return lex


def analyze(text: str, lex: StemLexicon) -> tuple[list[str], str]:
    """Run tokenize -> normalize -> stop-word removal -> stem over one tweet.

    Returns the stems and the space-joined normalized surface text that
    compound entries are matched against.
    """
    tokens = normalized_tokens(text)
    normalized_text = " ".join(t.surface for t in tokens)
    stems = [stem(t.surface) for t in tokens if not lex.is_stop(t.surface)]
    return stems, normalized_text


def match_categories(
    stems: Sequence[str],
    normalized_text: str,
    lex: StemLexicon,
    counting: CountingPolicy = "occurrence",
) -> dict[str, int]:
    counts = dict.fromkeys(CATEGORIES, 0)
    if counting == "occurrence":
        for s in stems:
            category = lex.category_of(s)
            if category is not None:
                counts[category] += 1
    elif counting == "distinct":
        for s in set(stems):
            category = lex.category_of(s)
            if category is not None:
                counts[category] += 1
    else:
        raise ValueError(f"unknown counting policy: {counting!r}")

    if lex._compounds and normalized_text:
        text = norm_marks(normalized_text, "both")
        for category, pattern in lex._compounds:
            hits = len(pattern.findall(text))
            if counting == "distinct":
                hits = min(hits, 1)
            counts[category] += hits
    return counts


@dataclass(frozen=True)
class StemFrequencyTable:
    rows: tuple[tuple[str, int], ...]
    total_tokens: int

    def as_dict(self) -> dict[str, int]:
        return dict(self.rows)

    def __len__(self) -> int:
        return len(self.rows)


def top_stems(corpus: Iterable, k: int, lex: StemLexicon) -> StemFrequencyTable:
    """Most frequent stems over a corpus (records or plain strings).

    Ties go to the lower codepoint order of the stem.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    counter: Counter[str] = Counter()
    for item in corpus:
        stems, _ = analyze(item if isinstance(item, str) else item.text, lex)
        counter.update(stems)
    total = sum(counter.values())
    ranked = sorted(counter.items(), key=lambda kv: (-kv[1], kv[0]))
    return StemFrequencyTable(tuple(ranked[:k]), total)
