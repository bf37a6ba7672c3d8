# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from typing import Dict, Iterable, List, Mapping, Sequence

from hexec.common.config import NormalizationOptions
from hexec.common.results import HexecExceptionInputError
from hexec.executor.normalize import normalize_answer
from hexec.readers.base import Reader, ReaderCandidate, ReaderRequest
from hexec.utils import read_jsonl, write_jsonl

logger = logging.getLogger("hexec")


class FactStore:
    """
    Question -> ordered answers, keyed on the normalized question.

    File format: JSONL, one {"question": str, "answers": [str]} per line.
    Repeated questions append their answers.
    """

    def __init__(
        self,
        facts: Mapping[str, Sequence[str]] = None,
        normalization: NormalizationOptions = None,
    ):
        self.normalization = normalization
        self._entries: Dict[str, List[str]] = {}
        # First spelling seen per key, used when writing the store back out.
        self._questions: Dict[str, str] = {}
        for question, answers in (facts or {}).items():
            self.add(question, answers)

    def key(self, question: str) -> str:
        return normalize_answer(question, self.normalization)

    def add(self, question: str, answers: Iterable[str]):
        key = self.key(question)
        self._questions.setdefault(key, question)
        stored = self._entries.setdefault(key, [])
        for answer in answers:
            if answer not in stored:
                stored.append(answer)

    def lookup(self, question: str) -> List[str]:
        return list(self._entries.get(self.key(question), []))

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, question: str) -> bool:
        return self.key(question) in self._entries

    def to_lines(self) -> List[dict]:
        return [
            {"question": self._questions[key], "answers": list(answers)}
            for key, answers in self._entries.items()
        ]

    @classmethod
    def load(cls, path: str, normalization: NormalizationOptions = None) -> "FactStore":
        store = cls(normalization=normalization)
        for number, line in enumerate(read_jsonl(path), start=1):
            question = line.get("question")
            answers = line.get("answers")
            if not isinstance(question, str) or not isinstance(answers, list):
                raise HexecExceptionInputError(
                    f"{path}:{number}: expected {{'question': str, 'answers': [str]}}"
                )
            store.add(question, [str(a) for a in answers])
        logger.info(f"Loaded {len(store)} facts from {path}")
        return store

    def dump(self, path: str):
        write_jsonl(path, self.to_lines())


class OracleReader(Reader):
    """Answers from a FactStore, ignoring passages. Scores 1.0, 0.9, ... by rank."""

    name = "oracle"

    def __init__(self, store: FactStore):
        self.store = store

    def answer(self, request: ReaderRequest) -> List[ReaderCandidate]:
        answers = self.store.lookup(request.question)[: request.top_k]
        return [
            ReaderCandidate(a, max(0.0, round(1.0 - 0.1 * rank, 6)))
            for rank, a in enumerate(answers)
        ]
