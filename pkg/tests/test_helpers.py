import os

import pytest

from src.utils.errors import PolynomialSyntaxError, WordError
from src.utils.helpers import (
    create_report_path_with_date,
    format_poly_terms,
    format_word,
    label_sort_key,
    parse_poly_terms,
    resolve_cache_dir,
    split_word,
)


def test_split_word_compact_and_spaced():
    assert split_word("3423") == ("3", "4", "2", "3")
    assert split_word("1 0+ 0- 2 1") == ("1", "0+", "0-", "2", "1")
    assert split_word("") == ()
    assert split_word("e") == ()


def test_split_word_rejects_unknown_labels():
    with pytest.raises(WordError):
        split_word("1 x 2")
    with pytest.raises(WordError):
        split_word("5", labels=["1", "2"])


def test_label_order_is_frozen():
    assert label_sort_key("0-") < label_sort_key("0+") < label_sort_key("0") < label_sort_key("1")


def test_format_word():
    assert format_word(("1", "2", "1")) == "1 2 1"
    assert format_word(("3", "4", "2"), compact=True) == "342"
    assert format_word(("0+", "1"), compact=True) == "0+ 1"


@pytest.mark.parametrize("text, terms", [
    ("v^113+v^107+v^103+v^97", {113: 1, 107: 1, 103: 1, 97: 1}),
    ("v^11+2v^9+v^7", {11: 1, 9: 2, 7: 1}),
    ("2v^9 - v^-1", {9: 2, -1: -1}),
    ("v + 1", {1: 1, 0: 1}),
    ("v^2 - v^2", {}),
])
def test_parse_poly_terms(text, terms):
    assert parse_poly_terms(text) == terms


@pytest.mark.parametrize("text", ["", "v^", "3x", "v^2 +"])
def test_parse_poly_terms_rejects_garbage(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_poly_terms(text)


def test_format_poly_terms():
    assert format_poly_terms({11: 1, 9: 2, 7: 1}) == "v^11+2v^9+v^7"
    assert format_poly_terms({1: 1, -1: -1}) == "v-v^-1"
    assert format_poly_terms({}) == "0"


def test_resolve_cache_dir_precedence(monkeypatch, tmp_path):
    monkeypatch.setenv("BRUHAT_CACHE_DIR", str(tmp_path))
    assert resolve_cache_dir() == str(tmp_path)
    assert resolve_cache_dir("otra") == "otra"


def test_report_path_is_dated_and_unique(tmp_path):
    base = os.path.join(str(tmp_path), "informe.md")
    first, directory = create_report_path_with_date(base)
    open(first, "w").close()
    second, _ = create_report_path_with_date(base)
    assert os.path.dirname(first) == directory
    assert first.endswith("informe.md")
    assert second.endswith("informe_01.md")
