# Copyright (c) 2026 The hexec Authors. All rights reserved.
import json
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional

from hexec.executor.values import AnswerValue
from hexec.readers.base import ReaderCandidate

# Failure codes raised before anything is executed.
PARSE_ERROR = "parse_error"
NOT_EXECUTABLE = "not_executable"
PARSE_STAGE_CODES = {PARSE_ERROR, NOT_EXECUTABLE}

# Execution failure codes not owned by an operation.
UNRESOLVED_PLACEHOLDER = "unresolved_placeholder"
INVALID_ITEM = "invalid_item"
READER_UNAVAILABLE = "reader_unavailable"
NO_ANSWER = "no_answer"


class ExecStatus(Enum):
    SUCCESS = "SUCCESS"
    SOFT_FAIL = "SOFT_FAIL"
    HARD_FAIL = "HARD_FAIL"


class StepKind(Enum):
    PRIMITIVE = "PRIMITIVE"
    OPERATION = "OPERATION"


def status_label(status: ExecStatus, code: Optional[str] = None) -> str:
    # SUCCESS, SOFT_FAIL(code) or HARD_FAIL(code)
    if status == ExecStatus.SUCCESS or not code:
        return status.value
    return f"{status.value}({code})"


@dataclass
class TraceStep:
    step_index: int
    node_path: str
    kind: StepKind
    output: AnswerValue
    # Primitives only.
    question: Optional[str] = None
    reader_candidates: List[ReaderCandidate] = field(default_factory=list)
    slot: Optional[int] = None
    # Operations only.
    op_kind: Optional[str] = None
    left: Optional[AnswerValue] = None
    right: Optional[AnswerValue] = None
    failure: Optional[str] = None

    def to_dict(self) -> dict:
        d = {
            "step_index": self.step_index,
            "node_path": self.node_path,
            "kind": self.kind.value,
        }
        if self.kind == StepKind.PRIMITIVE:
            d["question_after_substitution"] = self.question
            d["reader_candidates"] = [c.to_dict() for c in self.reader_candidates]
            d["slot"] = self.slot
        else:
            d["op_kind"] = self.op_kind
            d["operands"] = {"left": self.left.to_dict(), "right": self.right.to_dict()}
        d["output"] = self.output.to_dict()
        d["failure"] = self.failure
        return d


@dataclass
class ExecutionTrace:
    """Record of one execution, steps in execution order."""

    expression: str
    steps: List[TraceStep] = field(default_factory=list)
    status: ExecStatus = ExecStatus.SUCCESS
    status_code: Optional[str] = None
    message: Optional[str] = None
    answer: Optional[AnswerValue] = None
    # Position of the executed expression among the fallback candidates.
    candidate_index: int = 0
    attempts: List[dict] = field(default_factory=list)

    @property
    def exec_status(self) -> str:
        return status_label(self.status, self.status_code)

    def soft_fail(self, code: str, message: str = None):
        # The first soft failure is reported; a hard failure replaces it.
        if self.status == ExecStatus.SUCCESS:
            self.status = ExecStatus.SOFT_FAIL
            self.status_code = code
            self.message = message

    def hard_fail(self, code: str, message: str = None):
        self.status = ExecStatus.HARD_FAIL
        self.status_code = code
        self.message = message

    def primitive_steps(self) -> List[TraceStep]:
        return [s for s in self.steps if s.kind == StepKind.PRIMITIVE]

    def to_dict(self) -> dict:
        return {
            "expression": self.expression,
            "status": self.exec_status,
            "status_code": self.status_code,
            "message": self.message,
            "candidate_index": self.candidate_index,
            "answer": self.answer.to_dict() if self.answer is not None else None,
            "steps": [s.to_dict() for s in self.steps],
            "attempts": list(self.attempts),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)
