# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from dataclasses import dataclass
from typing import List, Mapping, Optional, Pattern, Sequence, Tuple, Union

from hexec.common.config import ExecConfig
from hexec.common.results import (
    HexecExceptionAllCandidatesFailed,
    HexecExceptionMissingSlot,
    HexecExceptionParseError,
    HexecExceptionReaderError,
)
from hexec.executor.entities import extract_main_entity
from hexec.executor.operations import apply_operation
from hexec.executor.trace import (
    NO_ANSWER,
    NOT_EXECUTABLE,
    PARSE_ERROR,
    READER_UNAVAILABLE,
    UNRESOLVED_PLACEHOLDER,
    ExecStatus,
    ExecutionTrace,
    StepKind,
    TraceStep,
)
from hexec.executor.values import AnswerMemory, AnswerValue
from hexec.hexpr.grammar import parse_hexpression, serialize
from hexec.hexpr.nodes import ROOT_PATH, HExpr, Primitive, child_path
from hexec.hexpr.placeholders import match_index, placeholder_regex
from hexec.hexpr.validate import validate
from hexec.readers.base import Passage, Reader, ReaderRequest, rank_candidates

logger = logging.getLogger("hexec")


@dataclass
class ExecutionResult:
    answer: AnswerValue
    trace: ExecutionTrace
    memory: AnswerMemory

    @property
    def exec_status(self) -> str:
        return self.trace.exec_status


def substitute_placeholders(
    text: str,
    memory: Union[AnswerMemory, Mapping[int, str]],
    regex: Optional[Pattern] = None,
) -> str:
    """Replace every placeholder in one pass; inserted answers are not rescanned."""
    regex = regex or placeholder_regex()

    def lookup(m):
        index = match_index(m)
        if index not in memory:
            raise HexecExceptionMissingSlot(index)
        return memory[index]

    return regex.sub(lookup, text)


class _HardFail(Exception):
    def __init__(self, code: str, message: str):
        self.code = code
        self.message = message
        super().__init__(message)


class _Execution:
    """State of one execution. Not shared between threads."""

    def __init__(
        self,
        expr: HExpr,
        passages: Sequence[Passage],
        reader: Reader,
        config: ExecConfig,
    ):
        self.expr = expr
        self.passages = tuple(passages)
        self.reader = reader
        self.config = config
        self.regex = placeholder_regex(config.placeholder_pattern, config.a_placeholders)
        self.memory = AnswerMemory()
        self.trace = ExecutionTrace(expression=serialize(expr))

    def run(self) -> ExecutionResult:
        try:
            answer, _ = self._evaluate(self.expr, ROOT_PATH)
        except _HardFail as e:
            logger.debug(f"Execution stopped: {e.message}")
            self.trace.hard_fail(e.code, e.message)
            answer = AnswerValue.empty()
        self.trace.answer = answer
        return ExecutionResult(answer, self.trace, self.memory)

    def _step_index(self) -> int:
        return len(self.trace.steps) + 1

    def _evaluate(self, node: HExpr, path: str) -> Tuple[AnswerValue, str]:
        # Returns the node's value and the main entity of its first-executed
        # primitive.
        if isinstance(node, Primitive):
            return self._resolve(node, path)

        right, right_entity = self._evaluate(node.right, child_path(path, "R"))
        left, left_entity = self._evaluate(node.left, child_path(path, "L"))
        outcome = apply_operation(
            node.kind, left, right, left_entity, right_entity, self.config
        )
        self.trace.steps.append(
            TraceStep(
                step_index=self._step_index(),
                node_path=path,
                kind=StepKind.OPERATION,
                output=outcome.value,
                op_kind=node.kind.value,
                left=left,
                right=right,
                failure=outcome.failure,
            )
        )
        if outcome.failure:
            self.trace.soft_fail(
                outcome.failure, f"{node.kind.value} at {path}: {outcome.failure}"
            )
        logger.debug(f"{path} {node.kind.value} -> {outcome.value.render()!r}")
        return outcome.value, right_entity

    def _resolve(self, node: Primitive, path: str) -> Tuple[AnswerValue, str]:
        try:
            question = substitute_placeholders(node.text, self.memory, self.regex)
        except HexecExceptionMissingSlot as e:
            raise _HardFail(UNRESOLVED_PLACEHOLDER, f"{path}: {e.message}")

        request = ReaderRequest(question, self.passages, self.config.top_k)
        try:
            candidates = rank_candidates(self.reader.answer(request), self.config.top_k)
        except HexecExceptionReaderError as e:
            raise _HardFail(READER_UNAVAILABLE, f"{path}: {e.message}")

        # Only the top candidate is committed to memory.
        answer = candidates[0].answer if candidates else ""
        slot = self.memory.store(answer)
        if candidates:
            value = AnswerValue.span(answer, candidates, slot=slot)
        else:
            value = AnswerValue.empty(slot=slot)
            self.trace.soft_fail(NO_ANSWER, f"{path}: no answer for {question!r}")

        self.trace.steps.append(
            TraceStep(
                step_index=self._step_index(),
                node_path=path,
                kind=StepKind.PRIMITIVE,
                output=value,
                question=question,
                reader_candidates=list(candidates),
                slot=slot,
                failure=None if candidates else NO_ANSWER,
            )
        )
        logger.debug(f"{path} Ans#{slot} {question!r} -> {answer!r}")
        entity = extract_main_entity(question, node.entity_hint, self.config.entity_heads)
        return value, entity


def execute(
    expr: HExpr,
    passages: Sequence[Passage],
    reader: Reader,
    config: ExecConfig = None,
) -> ExecutionResult:
    """
    Execute an H-expression against a reader.

    Primitives are resolved right subtree first; the k-th resolved primitive
    writes answer slot k and later primitives see it through placeholders.
    Operations run once both children are evaluated. Soft failures keep a
    best-effort answer, hard failures stop the execution with an Empty one.
    """
    return _Execution(expr, passages, reader, config or ExecConfig()).run()


def _failed(index: int, text: str, code: str, message: str) -> ExecutionResult:
    trace = ExecutionTrace(
        expression=text,
        status=ExecStatus.HARD_FAIL,
        status_code=code,
        message=message,
        answer=AnswerValue.empty(),
        candidate_index=index,
    )
    return ExecutionResult(trace.answer, trace, AnswerMemory())


def _attempt(index: int, text: str, stage: str, result: ExecutionResult) -> dict:
    trace = result.trace
    return {
        "index": index,
        "expression": text,
        "stage": stage,
        "status": trace.exec_status,
        "code": trace.status_code,
        "message": trace.message,
    }


def execute_with_fallback(
    candidates: Sequence[str],
    passages: Sequence[Passage],
    reader: Reader,
    config: ExecConfig = None,
    max_candidates: Optional[int] = None,
) -> ExecutionResult:
    """
    Try candidate expressions in order and return the first execution that
    does not hard-fail. Raises HexecExceptionAllCandidatesFailed, carrying
    the last result, when none succeeds.
    """
    if not candidates:
        raise ValueError("No candidate expressions")
    config = config or ExecConfig()
    regex = placeholder_regex(config.placeholder_pattern, config.a_placeholders)
    if max_candidates is not None:
        candidates = candidates[:max_candidates]

    attempts: List[dict] = []
    result = None
    for index, text in enumerate(candidates):
        try:
            expr = parse_hexpression(text)
        except HexecExceptionParseError as e:
            result = _failed(index, text, PARSE_ERROR, e.message)
            attempts.append(_attempt(index, text, "parse", result))
            continue

        report = validate(expr, config.max_depth, regex)
        if not report.executable:
            message = "; ".join(f"{d.node_path}: {d.message}" for d in report.errors)
            result = _failed(index, text, NOT_EXECUTABLE, message)
            attempts.append(_attempt(index, text, "validate", result))
            continue

        result = execute(expr, passages, reader, config)
        result.trace.candidate_index = index
        attempts.append(_attempt(index, text, "execution", result))
        if result.trace.status != ExecStatus.HARD_FAIL:
            result.trace.attempts = attempts
            return result

    result.trace.attempts = attempts
    raise HexecExceptionAllCandidatesFailed(attempts, result)
