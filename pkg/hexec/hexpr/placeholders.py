# Copyright (c) 2026 The hexec Authors. All rights reserved.
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import List, Optional, Pattern

# "Ans#1" and the shorter "#1".
DEFAULT_PLACEHOLDER_PATTERN = r"(?<![\w#])(?:Ans)?#(?P<index>[1-9][0-9]*)(?![0-9])"
# "A1" style, only recognised on request.
A_PLACEHOLDER_PATTERN = r"(?<![\w#])A(?P<index>[1-9][0-9]*)(?![\w])"


@dataclass(frozen=True)
class PlaceholderRef:
    index: int
    surface_form: str
    start: int = field(default=0, compare=False)
    end: int = field(default=0, compare=False)


@lru_cache(maxsize=None)
def placeholder_regex(pattern: Optional[str] = None, a_placeholders: bool = False) -> Pattern:
    """
    Compile the placeholder recognizer. A custom pattern must define a
    named group "index" holding the slot number.
    """
    alternatives = [pattern or DEFAULT_PLACEHOLDER_PATTERN]
    if a_placeholders:
        alternatives.append(A_PLACEHOLDER_PATTERN)
    if len(alternatives) == 1:
        return re.compile(alternatives[0])
    # Named groups can't repeat across alternatives, so number them.
    renamed = [
        a.replace("(?P<index>", f"(?P<index{i}>") for i, a in enumerate(alternatives)
    ]
    return re.compile("|".join(f"(?:{a})" for a in renamed))


def match_index(m: "re.Match") -> int:
    for name, value in m.groupdict().items():
        if name.startswith("index") and value is not None:
            return int(value)
    raise ValueError(f"placeholder match without an index group: {m.group(0)}")


def find_placeholders(text: str, regex: Optional[Pattern] = None) -> List[PlaceholderRef]:
    regex = regex or placeholder_regex()
    return [
        PlaceholderRef(match_index(m), m.group(0), m.start(), m.end())
        for m in regex.finditer(text)
    ]
