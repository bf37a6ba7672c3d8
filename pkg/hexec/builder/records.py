# Copyright (c) 2026 The hexec Authors. All rights reserved.
#
# Dataset records, loaded from the published JSONL field names.
import logging
from dataclasses import dataclass, field
from typing import List, Optional

from hexec.common.results import (
    HexecExceptionRecordError,
    HexecExceptionUnsupportedReasoningType,
)
from hexec.hexpr.placeholders import find_placeholders
from hexec.readers.base import Passage
from hexec.utils import read_jsonl

logger = logging.getLogger("hexec")

MUSIQUE_TYPES = ["2hop", "3hop1", "3hop2", "4hop1", "4hop2", "4hop3"]
TWOWIKI_TYPES = ["comparison", "compositional", "bridge", "bridge_comparison", "inference"]


def _dict_entries(record_id: str, name: str, entries) -> list:
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise HexecExceptionRecordError(record_id, f"{name} must be a list of objects")
    return entries


@dataclass(frozen=True)
class SubQuestion:
    # May hold "#k" references and the "subject >> relation" shorthand.
    text: str
    answer: str

    def references(self) -> List[int]:
        return sorted({ref.index for ref in find_placeholders(self.text)})


@dataclass
class MusiqueRecord:
    id: str
    question: str
    answer: str
    reasoning_type: str
    sub_questions: List[SubQuestion]
    passages: List[Passage] = field(default_factory=list)
    answer_aliases: List[str] = field(default_factory=list)

    def validate(self):
        if not self.sub_questions:
            raise HexecExceptionRecordError(self.id, "no sub-questions")
        for j, sub in enumerate(self.sub_questions, start=1):
            for k in sub.references():
                if k >= j:
                    raise HexecExceptionRecordError(
                        self.id, f"sub-question #{j} refers to #{k}, expected k < {j}"
                    )

    @classmethod
    def from_dict(cls, d: dict) -> "MusiqueRecord":
        record_id = str(d.get("id", ""))
        decomposition = d.get("question_decomposition", d.get("sub_questions"))
        if not isinstance(decomposition, list):
            raise HexecExceptionRecordError(record_id, "missing question_decomposition")
        sub_questions = [
            SubQuestion(str(s.get("question", s.get("text", ""))), str(s.get("answer", "")))
            for s in _dict_entries(record_id, "question_decomposition", decomposition)
        ]
        paragraphs = d.get("paragraphs", d.get("passages", []))
        passages = [
            Passage(str(p.get("title", "")), str(p.get("paragraph_text", p.get("text", ""))))
            for p in _dict_entries(record_id, "paragraphs", paragraphs)
        ]
        record = cls(
            id=record_id,
            question=str(d.get("question", "")),
            answer=str(d.get("answer", "")),
            reasoning_type=musique_reasoning_type(record_id, d.get("reasoning_type")),
            sub_questions=sub_questions,
            passages=passages,
            answer_aliases=[str(a) for a in d.get("answer_aliases", [])],
        )
        record.validate()
        return record


def musique_reasoning_type(record_id: str, explicit: Optional[str] = None) -> str:
    # Published ids start with the type, e.g. "2hop__482757_12019".
    reasoning_type = explicit or record_id.split("__")[0]
    if reasoning_type not in MUSIQUE_TYPES:
        raise HexecExceptionUnsupportedReasoningType(
            record_id, f"unknown MuSiQue reasoning type '{reasoning_type}'"
        )
    return reasoning_type


@dataclass(frozen=True)
class Evidence:
    subject: str
    relation: str
    object: str


@dataclass
class TwoWikiRecord:
    id: str
    question: str
    answer: str
    reasoning_type: str
    evidences: List[Evidence]
    passages: List[Passage] = field(default_factory=list)

    def validate(self):
        if not self.evidences:
            raise HexecExceptionRecordError(self.id, "no evidences")
        for e in self.evidences:
            if not e.subject.strip() or not e.relation.strip():
                raise HexecExceptionRecordError(
                    self.id, f"evidence {[e.subject, e.relation, e.object]} lacks a subject or relation"
                )

    @classmethod
    def from_dict(cls, d: dict) -> "TwoWikiRecord":
        record_id = str(d.get("_id", d.get("id", "")))
        reasoning_type = str(d.get("type", d.get("reasoning_type", "")))
        if reasoning_type not in TWOWIKI_TYPES:
            raise HexecExceptionUnsupportedReasoningType(
                record_id, f"unknown 2WikiMultihopQA type '{reasoning_type}'"
            )
        evidences = []
        triples = d.get("evidences", [])
        if not isinstance(triples, list):
            raise HexecExceptionRecordError(record_id, "evidences must be a list")
        for triple in triples:
            if not isinstance(triple, (list, tuple)) or len(triple) != 3:
                raise HexecExceptionRecordError(record_id, f"bad evidence {triple!r}")
            evidences.append(Evidence(*(str(t) for t in triple)))
        passages = []
        context = d.get("context", [])
        if not isinstance(context, list):
            raise HexecExceptionRecordError(record_id, "context must be a list")
        for entry in context:
            if (
                not isinstance(entry, (list, tuple))
                or len(entry) != 2
                or not isinstance(entry[1], (list, tuple))
            ):
                raise HexecExceptionRecordError(record_id, f"bad context entry {entry!r}")
            title, sentences = entry
            passages.append(Passage(str(title), " ".join(str(s) for s in sentences)))
        record = cls(
            id=record_id,
            question=str(d.get("question", "")),
            answer=str(d.get("answer", "")),
            reasoning_type=reasoning_type,
            evidences=evidences,
            passages=passages,
        )
        record.validate()
        return record


def load_records(path: str, dataset: str) -> List[dict]:
    """Raw dataset lines; each is turned into a record by the converter."""
    lines = read_jsonl(path)
    logger.info(f"Read {len(lines)} {dataset} records from {path}")
    return lines


def record_from_dict(d: dict, dataset: str):
    if dataset == "musique":
        return MusiqueRecord.from_dict(d)
    return TwoWikiRecord.from_dict(d)
