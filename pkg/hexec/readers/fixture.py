# Copyright (c) 2026 The hexec Authors. All rights reserved.
import re
from typing import List, Sequence, Tuple

from hexec.common.results import HexecExceptionConfigError
from hexec.readers.base import Reader, ReaderCandidate, ReaderRequest, rank_candidates
from hexec.utils import read_jsonl

ScriptEntry = Tuple[str, Sequence[ReaderCandidate]]


class FixtureReader(Reader):
    """
    Scripted reader for tests: the first pattern found in the question
    (case-insensitive regex search) gives the candidates. No match, no answer.
    """

    name = "fixture"

    def __init__(self, script: Sequence[ScriptEntry]):
        self._script = []
        for pattern, candidates in script:
            try:
                compiled = re.compile(pattern, re.IGNORECASE)
            except re.error as e:
                raise HexecExceptionConfigError(
                    f"Bad fixture pattern {pattern!r}: {e}"
                ) from e
            self._script.append((compiled, tuple(candidates)))

    def answer(self, request: ReaderRequest) -> List[ReaderCandidate]:
        for pattern, candidates in self._script:
            if pattern.search(request.question):
                return rank_candidates(candidates, request.top_k)
        return []

    @classmethod
    def load(cls, path: str) -> "FixtureReader":
        # JSONL: {"pattern": regex, "candidates": [{"answer": str, "score": float}]}
        script = []
        for number, line in enumerate(read_jsonl(path), start=1):
            try:
                candidates = [
                    ReaderCandidate(str(c["answer"]), float(c.get("score", 1.0)))
                    for c in line["candidates"]
                ]
                script.append((str(line["pattern"]), candidates))
            except (KeyError, TypeError, ValueError) as e:
                raise HexecExceptionConfigError(
                    f"{path}:{number}: bad fixture entry ({e})"
                ) from e
        return cls(script)
