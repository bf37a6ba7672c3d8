# Copyright (c) 2026 The hexec Authors. All rights reserved.
#
# JSON models of the reader wire protocol.
#
#  request:  {"question": str, "passages": [{"title": str, "text": str}], "top_k": int}
#  response: {"candidates": [{"answer": str, "score": float}]}
from typing import List

from pydantic import BaseModel, Field

from hexec.readers.base import Passage, ReaderCandidate, ReaderRequest


class WirePassage(BaseModel):
    title: str = ""
    text: str = ""


class WireRequest(BaseModel):
    question: str
    passages: List[WirePassage] = []
    top_k: int = Field(5, ge=1)

    @classmethod
    def from_request(cls, request: ReaderRequest) -> "WireRequest":
        return cls(
            question=request.question,
            passages=[WirePassage(title=p.title, text=p.text) for p in request.passages],
            top_k=request.top_k,
        )

    def to_request(self) -> ReaderRequest:
        return ReaderRequest(
            question=self.question,
            passages=tuple(Passage(p.title, p.text) for p in self.passages),
            top_k=self.top_k,
        )


class WireCandidate(BaseModel):
    answer: str
    score: float


class WireResponse(BaseModel):
    candidates: List[WireCandidate]

    @classmethod
    def from_candidates(cls, candidates: List[ReaderCandidate]) -> "WireResponse":
        return cls(
            candidates=[WireCandidate(answer=c.answer, score=c.score) for c in candidates]
        )

    def to_candidates(self) -> List[ReaderCandidate]:
        return [ReaderCandidate(c.answer, c.score) for c in self.candidates]
