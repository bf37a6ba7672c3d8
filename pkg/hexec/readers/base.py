# Copyright (c) 2026 The hexec Authors. All rights reserved.
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import List, Sequence, Tuple


@dataclass(frozen=True)
class Passage:
    title: str
    text: str

    @classmethod
    def from_dict(cls, d: dict) -> "Passage":
        return cls(title=str(d.get("title", "")), text=str(d.get("text", "")))

    def to_dict(self) -> dict:
        return {"title": self.title, "text": self.text}


@dataclass(frozen=True)
class ReaderCandidate:
    answer: str
    score: float

    def to_dict(self) -> dict:
        return {"answer": self.answer, "score": self.score}


@dataclass(frozen=True)
class ReaderRequest:
    # Question after placeholder substitution.
    question: str
    passages: Tuple[Passage, ...] = ()
    top_k: int = 5

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError(f"top_k must be >= 1, got {self.top_k}")
        object.__setattr__(self, "passages", tuple(self.passages))


def rank_candidates(
    candidates: Sequence[ReaderCandidate], top_k: int
) -> List[ReaderCandidate]:
    # Stable: equal scores keep the order the reader gave them.
    return sorted(candidates, key=lambda c: -c.score)[:top_k]


class Reader(ABC):
    """
    Single-hop reader: maps a question (and optional passages) to ranked
    candidate answers.

    Implementations return at most request.top_k candidates sorted by
    descending score, and raise HexecExceptionReaderError subclasses for
    transport or protocol failures.
    """

    # Whether one instance may serve concurrent executions.
    shareable: bool = True

    name: str = "reader"

    @abstractmethod
    def answer(self, request: ReaderRequest) -> List[ReaderCandidate]:
        pass

    def answer_encoded(
        self, request: ReaderRequest, inputs: List[str]
    ) -> List[ReaderCandidate]:
        """
        Entry point used by the reader service. `inputs` holds the model
        input strings built by `encode_passages`, one per passage. Readers
        backed by a model override this; lookup readers ignore the inputs.
        """
        return self.answer(request)

    def is_ready(self) -> bool:
        return True
