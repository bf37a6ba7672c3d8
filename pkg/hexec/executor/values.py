# Copyright (c) 2026 The hexec Authors. All rights reserved.
from dataclasses import dataclass, field
from decimal import Decimal
from enum import Enum
from typing import Dict, Iterable, Mapping, Optional, Tuple

from hexec.common.results import HexecExceptionMissingSlot
from hexec.readers.base import ReaderCandidate


class AnswerKind(Enum):
    SPAN = "SPAN"
    YES_NO = "YES_NO"
    NUMBER = "NUMBER"
    DICT = "DICT"
    EMPTY = "EMPTY"


def format_number(value: Decimal) -> str:
    if value == value.to_integral_value():
        return str(int(value))
    return format(value.normalize(), "f")


@dataclass(frozen=True)
class AnswerValue:
    """
    Result of executing a node.

    Equality only looks at the answer itself; `candidates` (the reader's
    ranked list, kept for AND) and `slot` (answer slot of the last primitive
    executed under the node) are bookkeeping.
    """

    kind: AnswerKind
    text: str = ""
    flag: Optional[bool] = None
    number: Optional[Decimal] = None
    entries: Tuple[Tuple[int, str], ...] = ()
    candidates: Tuple[ReaderCandidate, ...] = field(default=(), compare=False)
    slot: Optional[int] = field(default=None, compare=False)

    @classmethod
    def span(
        cls,
        text: str,
        candidates: Iterable[ReaderCandidate] = (),
        slot: Optional[int] = None,
    ) -> "AnswerValue":
        return cls(AnswerKind.SPAN, text=text, candidates=tuple(candidates), slot=slot)

    @classmethod
    def yes_no(cls, flag: bool, slot: Optional[int] = None) -> "AnswerValue":
        return cls(AnswerKind.YES_NO, flag=flag, slot=slot)

    @classmethod
    def of_number(cls, value: Decimal, slot: Optional[int] = None) -> "AnswerValue":
        return cls(AnswerKind.NUMBER, number=Decimal(value), slot=slot)

    @classmethod
    def of_dict(
        cls, entries: Mapping[int, str], slot: Optional[int] = None
    ) -> "AnswerValue":
        return cls(AnswerKind.DICT, entries=tuple(sorted(entries.items())), slot=slot)

    @classmethod
    def empty(
        cls, slot: Optional[int] = None, candidates: Iterable[ReaderCandidate] = ()
    ) -> "AnswerValue":
        return cls(AnswerKind.EMPTY, candidates=tuple(candidates), slot=slot)

    @property
    def is_empty(self) -> bool:
        return self.kind == AnswerKind.EMPTY

    def render(self) -> str:
        if self.kind == AnswerKind.SPAN:
            return self.text
        if self.kind == AnswerKind.YES_NO:
            return "Yes" if self.flag else "No"
        if self.kind == AnswerKind.NUMBER:
            return format_number(self.number)
        if self.kind == AnswerKind.DICT:
            inner = ", ".join(f"Ans#{k}: {v}" for k, v in self.entries)
            return "{" + inner + "}"
        return ""

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value, "text": self.render(), "slot": self.slot}
        if self.kind == AnswerKind.DICT:
            d["entries"] = {str(k): v for k, v in self.entries}
        if len(self.candidates) > 1:
            d["candidates"] = [c.to_dict() for c in self.candidates]
        return d


class AnswerMemory:
    """Answer slots in execution order: slot k holds the k-th primitive's answer."""

    def __init__(self):
        self._slots: Dict[int, str] = {}

    def store(self, answer: str) -> int:
        index = len(self._slots) + 1
        self._slots[index] = answer
        return index

    def __getitem__(self, index: int) -> str:
        if index not in self._slots:
            raise HexecExceptionMissingSlot(index)
        return self._slots[index]

    def __contains__(self, index: int) -> bool:
        return index in self._slots

    def __len__(self) -> int:
        return len(self._slots)

    def as_dict(self) -> Dict[int, str]:
        return dict(self._slots)

    @classmethod
    def from_dict(cls, slots: Mapping[int, str]) -> "AnswerMemory":
        memory = cls()
        for index in sorted(slots):
            if index != len(memory) + 1:
                raise HexecExceptionMissingSlot(len(memory) + 1)
            memory.store(slots[index])
        return memory
