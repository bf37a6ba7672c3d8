# Copyright (c) 2026 The hexec Authors. All rights reserved.
import re
from typing import Optional, Sequence

from hexec.common.config import DEFAULT_ENTITY_HEADS

_WH_WORDS = {"who", "whom", "whose", "what", "which", "when", "where", "why", "how"}
# "Where is X's place of birth"
_POSSESSIVE = re.compile(
    r"^(?:who|what|where|when|which)\s+(?:is|was)\s+(.+?)'s\s", re.IGNORECASE
)


def extract_main_entity(
    question: str,
    entity_hint: Optional[str] = None,
    heads: Sequence[str] = None,
) -> str:
    """
    The entity a comparison returns for this question.

    A builder-supplied hint wins. Otherwise the text after a known template
    head ("publication date of ..."), else the possessor in "Where is X's ...",
    else after the last " of ", else the question without its leading
    wh-words. The possessive rule serves the "place of birth" and "place of
    death" templates, whose subject precedes the relation.
    """
    if entity_hint:
        return entity_hint

    text = question.strip().rstrip("?").strip()
    lowered = text.lower()

    for head in heads if heads is not None else DEFAULT_ENTITY_HEADS:
        at = lowered.find(head.lower() + " ")
        if at >= 0:
            return text[at + len(head) + 1 :].strip()

    m = _POSSESSIVE.match(text)
    if m:
        return m.group(1).strip()

    at = lowered.rfind(" of ")
    if at >= 0:
        return text[at + len(" of ") :].strip()

    words = text.split()
    while words and words[0].lower() in _WH_WORDS:
        words.pop(0)
    return " ".join(words)
