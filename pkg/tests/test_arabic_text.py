import string

import pytest
from hypothesis import given
from hypothesis import strategies as st

from arabic_rhetoric.arabic_text import Token, normalize, normalized_tokens, tokenize


def surfaces(tokens):
    return [t.surface for t in tokens]


def test_empty_text():
    assert tokenize("") == []


def test_hashtag_compound_survives():
    tokens = tokenize("#دولة_الإسلامية باقية")
    assert surfaces(tokens) == ["دولة_الإسلامية", "باقية"]
    assert tokens[0].is_compound and not tokens[1].is_compound


def test_punctuation_splits():
    assert surfaces(tokenize("قتل, ثم قتل.")) == ["قتل", "ثم", "قتل"]


def test_arabic_punctuation_and_emoji_dropped():
    assert surfaces(tokenize("قتل،ثم😀قتل؟")) == ["قتل", "ثم", "قتل"]


def test_diacritics_stay_attached():
    assert surfaces(tokenize("قَتَلَ الرجلُ")) == ["قَتَلَ", "الرجلُ"]


def test_positions_increase():
    tokens = normalized_tokens("RT @user قتل http://t.co/x جهاد")
    positions = [t.position for t in tokens]
    assert positions == sorted(set(positions))


@pytest.mark.parametrize(
    "surface, expected",
    [
        ("RT", None),
        ("قتل!", "قتل"),
        ("ISIS_دعش", "دعش"),
        ("قتـــل", "قتل"),
        ("٢٠١٤", "٢٠١٤"),
        ("2014", "2014"),
        ("قَتَلَ", "قتل"),
        ("_دولة__الخلافة_", "دولة_الخلافة"),
        ("___", None),
    ],
)
def test_normalize(surface, expected):
    out = normalize(Token(surface, 0))
    assert (out.surface if out else None) == expected


def test_mention_handle_latin_removed():
    assert normalized_tokens("@someone قتل") == [Token("قتل", 1)]


text_strategy = st.text(
    alphabet=st.sampled_from(list("قتلجهادالدولةإسلامية_#@ .,!؟،ًَُ😀ـ٠١2") + list(string.ascii_letters)),
    max_size=40,
)


@given(text_strategy)
def test_normalize_idempotent(text):
    for token in tokenize(text):
        once = normalize(token)
        if once is not None:
            assert normalize(once) == once


@given(text_strategy)
def test_normalized_tokens_are_clean(text):
    for token in normalized_tokens(text):
        s = token.surface
        assert s and not any(ch.isspace() for ch in s)
        assert not any(ch in string.ascii_letters for ch in s)
        assert not any(ch in string.punctuation and ch != "_" for ch in s)
        assert not s.startswith("_") and not s.endswith("_")


@given(text_strategy)
def test_tokenize_deterministic(text):
    assert tokenize(text) == tokenize(text)
