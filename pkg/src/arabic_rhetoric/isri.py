"""ISRI Arabic root extraction (Taghva, Elkhoury & Coombs, 2005).

Affix lists, morphological pattern templates and the protected word list
live in ``data/isri_tables.json``; this module only interprets them.  The
control flow matches NLTK's ``ISRIStemmer`` so that outputs agree with it
word for word.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from typing import Literal

HAMZA_CARRIERS = "آأإٱ"
ALEF = "ا"
WAW = "و"

NormLevel = Literal["diacritics", "hamza", "both"]


@dataclass(frozen=True)
class PatternRule:
    name: str
    when: tuple[tuple[int, str], ...]
    keep: tuple[int, ...]
    same: tuple[tuple[int, int], ...] = ()

    def matches(self, word: str) -> bool:
        if any(word[pos] not in letters for pos, letters in self.when):
            return False
        return all(word[a] == word[b] for a, b in self.same)

    def extract(self, word: str) -> str:
        return "".join(word[i] for i in self.keep)


@dataclass(frozen=True)
class AffixTables:
    version: str
    diacritics: frozenset[str]
    initial_hamza: frozenset[str]
    p3: tuple[str, ...]
    p2: tuple[str, ...]
    p1: tuple[str, ...]
    s3: tuple[str, ...]
    s2: tuple[str, ...]
    s1: tuple[str, ...]
    patterns: dict[str, tuple[PatternRule, ...]]
    protected_words: frozenset[str]


@lru_cache(maxsize=1)
def load_tables() -> AffixTables:
    raw = json.loads(
        resources.files("arabic_rhetoric").joinpath("data/isri_tables.json").read_text("utf-8")
    )
    patterns = {
        group: tuple(
            PatternRule(
                name=r["name"],
                when=tuple((int(pos), letters) for pos, letters in r["when"].items()),
                keep=tuple(r["keep"]),
                same=tuple(tuple(pair) for pair in r.get("same", ())),
            )
            for r in rules
        )
        for group, rules in raw["patterns"].items()
    }
    return AffixTables(
        version=raw["version"],
        diacritics=frozenset(raw["diacritics"]),
        initial_hamza=frozenset(raw["initial_hamza"]),
        p3=tuple(raw["p3"]),
        p2=tuple(raw["p2"]),
        p1=tuple(raw["p1"]),
        s3=tuple(raw["s3"]),
        s2=tuple(raw["s2"]),
        s1=tuple(raw["s1"]),
        patterns=patterns,
        protected_words=frozenset(raw["protected_words"]),
    )


def norm_marks(word: str, level: NormLevel = "both") -> str:
    """Strip the eight short-vowel marks and/or unify hamza-carrying alefs.

    ``hamza`` rewrites every آ, أ, إ and ٱ to a bare alef, wherever it occurs.
    """
    if level not in ("diacritics", "hamza", "both"):
        raise ValueError(f"unknown normalization level: {level!r}")
    tables = load_tables()
    if level in ("diacritics", "both"):
        word = "".join(ch for ch in word if ch not in tables.diacritics)
    if level in ("hamza", "both"):
        word = "".join(ALEF if ch in HAMZA_CARRIERS else ch for ch in word)
    return word


def _norm_initial_hamza(word: str) -> str:
    # root extraction only rewrites a leading hamza, as the reference does
    if word and word[0] in load_tables().initial_hamza:
        return ALEF + word[1:]
    return word


def strip_prefixes_32(word: str) -> str:
    tables = load_tables()
    if len(word) >= 6:
        for prefix in tables.p3:
            if word.startswith(prefix):
                return word[3:]
    if len(word) >= 5:
        for prefix in tables.p2:
            if word.startswith(prefix):
                return word[2:]
    return word


def strip_suffixes_32(word: str) -> str:
    tables = load_tables()
    if len(word) >= 6:
        for suffix in tables.s3:
            if word.endswith(suffix):
                return word[:-3]
    if len(word) >= 5:
        for suffix in tables.s2:
            if word.endswith(suffix):
                return word[:-2]
    return word


def strip_waw(word: str) -> str:
    if len(word) >= 4 and word.startswith(WAW + WAW):
        return word[1:]
    return word


def strip_suffix_1(word: str) -> str:
    for suffix in load_tables().s1:
        if word.endswith(suffix):
            return word[:-1]
    return word


def strip_prefix_1(word: str) -> str:
    for prefix in load_tables().p1:
        if word.startswith(prefix):
            return word[1:]
    return word


def _apply_patterns(word: str, group: str, fallback: bool) -> str:
    for rule in load_tables().patterns[group]:
        if rule.matches(word):
            return rule.extract(word)
    if fallback:
        length = len(word)
        word = strip_suffix_1(word)
        if len(word) == length:
            word = strip_prefix_1(word)
    return word


def _end_w5(word: str) -> str:
    if len(word) == 4:
        return _apply_patterns(word, "w4", fallback=True)
    if len(word) == 5:
        return _apply_patterns(word, "w54", fallback=False)
    return word


def _end_w6(word: str) -> str:
    if len(word) == 5:
        return _end_w5(_apply_patterns(word, "w53", fallback=True))
    if len(word) == 6:
        return _apply_patterns(word, "w64", fallback=False)
    return word


@lru_cache(maxsize=65536)
def stem(word: str) -> str:
    """Return the ISRI root of ``word``.

    Underscore compounds (hashtag-style entries) skip root extraction and
    only get diacritic and hamza normalization.
    """
    if "_" in word:
        return norm_marks(word, "both")
    word = norm_marks(word, "diacritics")
    if word in load_tables().protected_words:
        return word
    word = strip_prefixes_32(word)
    word = strip_suffixes_32(word)
    word = strip_waw(word)
    word = _norm_initial_hamza(word)

    if len(word) == 4:
        word = _apply_patterns(word, "w4", fallback=True)
    elif len(word) == 5:
        word = _end_w5(_apply_patterns(word, "w53", fallback=True))
    elif len(word) == 6:
        word = _end_w6(_apply_patterns(word, "w63", fallback=True))
    elif len(word) == 7:
        word = strip_suffix_1(word)
        if len(word) == 7:
            word = strip_prefix_1(word)
        if len(word) == 6:
            word = _end_w6(_apply_patterns(word, "w63", fallback=True))
    return word
