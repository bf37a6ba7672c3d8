# Copyright (c) 2026 The hexec Authors. All rights reserved.
import re
import string

from hexec.common.config import NormalizationOptions

_DEFAULT_OPTIONS = NormalizationOptions()
_PUNCTUATION = set(string.punctuation)
_ARTICLES = re.compile(r"\b(a|an|the)\b")


def normalize_answer(s: str, options: NormalizationOptions = None) -> str:
    """Lower text and remove punctuation, articles and extra whitespace."""
    options = options or _DEFAULT_OPTIONS

    def remove_articles(text):
        return _ARTICLES.sub(" ", text)

    def white_space_fix(text):
        return " ".join(text.split())

    def remove_punc(text):
        return "".join(ch for ch in text if ch not in _PUNCTUATION)

    if options.lowercase:
        s = s.lower()
    if options.strip_punctuation:
        s = remove_punc(s)
    if options.strip_articles:
        s = remove_articles(s)
    if options.collapse_whitespace:
        s = white_space_fix(s)
    return s


def answer_tokens(s: str, options: NormalizationOptions = None):
    return normalize_answer(s, options).split()
