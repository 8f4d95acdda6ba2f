"""Tweet tokenization and character-level cleanup ahead of stemming."""

from __future__ import annotations

import unicodedata
from dataclasses import dataclass, replace

TATWEEL = "ـ"
ARABIC_BLOCKS = ((0x0600, 0x06FF), (0x0750, 0x077F), (0x08A0, 0x08FF))


@dataclass(frozen=True)
class Token:
    surface: str
    position: int

    @property
    def is_compound(self) -> bool:
        return "_" in self.surface


def in_arabic_block(ch: str) -> bool:
    cp = ord(ch)
    return any(lo <= cp <= hi for lo, hi in ARABIC_BLOCKS)


def is_arabic_letter(ch: str) -> bool:
    return ch != TATWEEL and in_arabic_block(ch) and unicodedata.category(ch).startswith("L")


def _is_word_char(ch: str) -> bool:
    # letters, combining marks and digits stay inside a token; '_' joins hashtag compounds
    if ch == "_":
        return True
    return unicodedata.category(ch)[0] in "LMN"


def tokenize(text: str) -> list[Token]:
    """Split ``text`` into word tokens.

    Whitespace, punctuation and symbols (including '#', '@' and emoji) all
    act as separators, so hashtag markers fall away while underscore
    compounds such as ``دولة_الإسلامية`` stay whole.
    """
    tokens: list[Token] = []
    current: list[str] = []
    for ch in text:
        if _is_word_char(ch):
            current.append(ch)
        elif current:
            tokens.append(Token("".join(current), len(tokens)))
            current = []
    if current:
        tokens.append(Token("".join(current), len(tokens)))
    return tokens


def clean_surface(surface: str) -> str:
    kept = "".join(
        ch for ch in surface if ch == "_" or is_arabic_letter(ch) or unicodedata.category(ch) == "Nd"
    )
    while "__" in kept:
        kept = kept.replace("__", "_")
    return kept.strip("_")


def normalize(token: Token) -> Token | None:
    """Keep only Arabic letters, digits and internal underscores.

    Returns ``None`` when nothing survives (e.g. all-Latin tokens like "RT").
    """
    surface = clean_surface(token.surface)
    if not surface:
        return None
    return replace(token, surface=surface)


def normalized_tokens(text: str) -> list[Token]:
    out = []
    for token in tokenize(text):
        norm = normalize(token)
        if norm is not None:
            out.append(norm)
    return out
