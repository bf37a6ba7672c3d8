# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from hexec.common.config import ExecConfig
from hexec.common.results import (
    HexecExceptionInternalError,
    HexecExceptionNotNumeric,
)
from hexec.executor.coerce import (
    Lexical,
    align_comparables,
    coerce_number,
    parse_comparable,
)
from hexec.executor.normalize import normalize_answer
from hexec.executor.values import AnswerKind, AnswerValue
from hexec.hexpr.nodes import OpKind
from hexec.readers.base import ReaderCandidate

logger = logging.getLogger("hexec")

# Failure codes reported by operations.
EMPTY_INTERSECTION = "empty_intersection"
COMPARISON_TIE = "comparison_tie"
INCOMPARABLE = "incomparable"
NOT_NUMERIC = "not_numeric"
EMPTY_OPERAND = "empty_operand"

_DEFAULT_CONFIG = ExecConfig()


@dataclass(frozen=True)
class OperationOutcome:
    value: AnswerValue
    # Soft failure code, None on success.
    failure: Optional[str] = None


def _as_candidates(value: AnswerValue) -> Tuple[ReaderCandidate, ...]:
    if value.candidates:
        return value.candidates
    text = value.render()
    return (ReaderCandidate(text, 1.0),) if text else ()


def _union(left: AnswerValue, right: AnswerValue) -> AnswerValue:
    entries: Dict[int, str] = {}
    for child in (right, left):
        if child.kind == AnswerKind.DICT:
            entries.update(child.entries)
            continue
        if child.slot is None:
            raise HexecExceptionInternalError(
                f"UNION operand {child.render()!r} has no answer slot"
            )
        entries[child.slot] = child.render()
    return AnswerValue.of_dict(entries, slot=left.slot)


def _intersect(
    left: AnswerValue, right: AnswerValue, config: ExecConfig
) -> List[ReaderCandidate]:
    right_scores: Dict[str, float] = {}
    for c in _as_candidates(right):
        key = normalize_answer(c.answer, config.normalization)
        if key and key not in right_scores:
            right_scores[key] = c.score

    survivors = []
    seen = set()
    for c in _as_candidates(left):
        key = normalize_answer(c.answer, config.normalization)
        if key in right_scores and key not in seen:
            seen.add(key)
            survivors.append(ReaderCandidate(c.answer, c.score + right_scores[key]))
    # Stable, so equal sums keep the left operand's order.
    return sorted(survivors, key=lambda c: -c.score)


def _and(left: AnswerValue, right: AnswerValue, config: ExecConfig) -> OperationOutcome:
    survivors = _intersect(left, right, config)
    if survivors:
        return OperationOutcome(
            AnswerValue.span(survivors[0].answer, survivors, slot=left.slot)
        )

    if config.empty_intersection_policy == "left_top":
        left_candidates = _as_candidates(left)
        if left_candidates:
            top = left_candidates[0]
            return OperationOutcome(
                AnswerValue.span(top.answer, [top], slot=left.slot),
                EMPTY_INTERSECTION,
            )
    return OperationOutcome(AnswerValue.empty(slot=left.slot), EMPTY_INTERSECTION)


def _compare_order(
    kind: OpKind,
    left: AnswerValue,
    right: AnswerValue,
    left_entity: str,
    right_entity: str,
    config: ExecConfig,
) -> OperationOutcome:
    a = parse_comparable(left.render(), config.date_formats, config.normalization)
    b = parse_comparable(right.render(), config.date_formats, config.normalization)
    a, b = align_comparables(a, b)

    if type(a) is not type(b):
        return OperationOutcome(AnswerValue.empty(slot=left.slot), INCOMPARABLE)
    if isinstance(a, Lexical):
        logger.debug(f"Comparing non-numeric answers {a.text!r} and {b.text!r}")

    if a == b:
        entity = left_entity if config.tie_policy == "left" else right_entity
        return OperationOutcome(
            AnswerValue.span(entity, slot=left.slot), COMPARISON_TIE
        )

    left_wins = a < b if kind == OpKind.COMP_LT else a > b
    return OperationOutcome(
        AnswerValue.span(left_entity if left_wins else right_entity, slot=left.slot)
    )


def _arithmetic(
    kind: OpKind, left: AnswerValue, right: AnswerValue, config: ExecConfig
) -> OperationOutcome:
    try:
        a = coerce_number(left.render(), config.date_formats)
        b = coerce_number(right.render(), config.date_formats)
    except HexecExceptionNotNumeric as e:
        logger.debug(e.message)
        return OperationOutcome(AnswerValue.empty(slot=left.slot), NOT_NUMERIC)
    # Left minus right: "death year" - "birth year" gives an age.
    result = a - b if kind == OpKind.SUB else a + b
    return OperationOutcome(AnswerValue.of_number(result, slot=left.slot))


def apply_operation(
    kind: OpKind,
    left: AnswerValue,
    right: AnswerValue,
    left_entity: str = "",
    right_entity: str = "",
    config: ExecConfig = None,
) -> OperationOutcome:
    """
    Combine the values of an operation's two evaluated children.

    `left` is q2 (evaluated second), `right` is q1. The entities are the main
    entities of the two operand subtrees, returned by COMP_< and COMP_>.
    The result carries the left operand's answer slot.
    """
    config = config or _DEFAULT_CONFIG

    if kind == OpKind.JOIN:
        return OperationOutcome(left)
    if kind == OpKind.UNION:
        return OperationOutcome(_union(left, right))
    if kind == OpKind.AND:
        return _and(left, right, config)

    if left.is_empty or right.is_empty:
        return OperationOutcome(AnswerValue.empty(slot=left.slot), EMPTY_OPERAND)

    if kind == OpKind.COMP_EQ:
        equal = normalize_answer(left.render(), config.normalization) == normalize_answer(
            right.render(), config.normalization
        )
        return OperationOutcome(AnswerValue.yes_no(equal, slot=left.slot))
    if kind in (OpKind.COMP_LT, OpKind.COMP_GT):
        return _compare_order(kind, left, right, left_entity, right_entity, config)
    if kind in (OpKind.SUB, OpKind.ADD):
        return _arithmetic(kind, left, right, config)

    raise HexecExceptionInternalError(f"Unhandled operation {kind}")
