# Copyright (c) 2026 The hexec Authors. All rights reserved.
import random
from decimal import Decimal

import pytest

from hexec.common.config import ExecConfig
from hexec.common.results import HexecExceptionInternalError, HexecExceptionNotNumeric
from hexec.executor.coerce import (
    DateKey,
    Lexical,
    Numeric,
    align_comparables,
    coerce_number,
    parse_comparable,
)
from hexec.executor.entities import extract_main_entity
from hexec.executor.normalize import answer_tokens, normalize_answer
from hexec.executor.operations import (
    COMPARISON_TIE,
    EMPTY_INTERSECTION,
    EMPTY_OPERAND,
    INCOMPARABLE,
    NOT_NUMERIC,
    apply_operation,
)
from hexec.executor.values import AnswerKind, AnswerMemory, AnswerValue, format_number
from hexec.hexpr.nodes import OpKind
from hexec.readers.base import ReaderCandidate

RC = ReaderCandidate


def span(text, slot=None, candidates=()):
    return AnswerValue.span(text, candidates, slot=slot)


@pytest.mark.fast
def test_join_returns_left():
    left = span("New York", slot=2)
    outcome = apply_operation(OpKind.JOIN, left, span("Tod Browning", slot=1))
    assert outcome.value is left
    assert outcome.failure is None


@pytest.mark.fast
def test_union():
    outcome = apply_operation(OpKind.UNION, span("England", slot=2), span("McDonald's", slot=1))
    assert outcome.failure is None
    assert outcome.value.kind == AnswerKind.DICT
    assert outcome.value.render() == "{Ans#1: McDonald's, Ans#2: England}"
    assert outcome.value.slot == 2

    nested = apply_operation(OpKind.UNION, span("Paris", slot=3), outcome.value)
    assert nested.value.render() == "{Ans#1: McDonald's, Ans#2: England, Ans#3: Paris}"
    assert nested.value.to_dict()["entries"] == {"1": "McDonald's", "2": "England", "3": "Paris"}

    with pytest.raises(HexecExceptionInternalError):
        apply_operation(OpKind.UNION, span("x"), span("y", slot=1))


@pytest.mark.fast
def test_and():
    left = span("Dave Parker", slot=2, candidates=[RC("Dave Parker", 0.9), RC("Willie Stargell", 0.5)])
    right = span("Dave Parker", slot=1, candidates=[RC("Dave Parker", 0.8)])
    outcome = apply_operation(OpKind.AND, left, right)
    assert outcome.failure is None
    assert outcome.value.render() == "Dave Parker"
    assert outcome.value.candidates[0].score == pytest.approx(1.7)
    assert outcome.value.slot == 2


@pytest.mark.fast
def test_and_orders_by_summed_score():
    left = span("a", candidates=[RC("Alpha", 0.9), RC("Beta", 0.5), RC("Gamma", 0.4)])
    right = span("b", candidates=[RC("gamma", 0.9), RC("the Beta", 0.2), RC("Delta", 1.0)])
    outcome = apply_operation(OpKind.AND, left, right)
    assert [c.answer for c in outcome.value.candidates] == ["Gamma", "Beta"]
    assert outcome.value.render() == "Gamma"


@pytest.mark.fast
def test_and_without_candidates_uses_answer_text():
    outcome = apply_operation(OpKind.AND, span("Dave Parker", slot=2), span("dave parker", slot=1))
    assert outcome.value.render() == "Dave Parker"


@pytest.mark.fast
def test_and_empty_intersection():
    left = span("Willie Stargell", slot=2, candidates=[RC("Willie Stargell", 0.9), RC("Ralph Kiner", 0.3)])
    right = span("Dave Parker", slot=1, candidates=[RC("Dave Parker", 0.8)])

    outcome = apply_operation(OpKind.AND, left, right)
    assert outcome.failure == EMPTY_INTERSECTION
    assert outcome.value.is_empty

    outcome = apply_operation(
        OpKind.AND, left, right, config=ExecConfig(empty_intersection_policy="left_top")
    )
    assert outcome.failure == EMPTY_INTERSECTION
    assert outcome.value.render() == "Willie Stargell"


@pytest.mark.fast
def test_comp_eq():
    examples = [
        {"left": "United States", "right": "South Korea", "result": "No"},
        {"left": "the United States", "right": "United States.", "result": "Yes"},
        {"left": "England", "right": "ENGLAND", "result": "Yes"},
    ]
    for e in examples:
        outcome = apply_operation(OpKind.COMP_EQ, span(e["left"], slot=2), span(e["right"], slot=1))
        assert outcome.value.kind == AnswerKind.YES_NO
        assert outcome.value.render() == e["result"], e
        assert outcome.failure is None


@pytest.mark.fast
def test_comp_order():
    examples = [
        # Released first: 2003 is not before 1932, so the right entity wins.
        {"kind": OpKind.COMP_LT, "left": "2003", "right": "1932", "result": "The Mask of Fu Manchu"},
        {"kind": OpKind.COMP_GT, "left": "2003", "right": "1932", "result": "Blind Shaft"},
        {"kind": OpKind.COMP_GT, "left": "1 December 2010", "right": "5 May 1999", "result": "Blind Shaft"},
        {"kind": OpKind.COMP_LT, "left": "1932", "right": "5 November 1932", "result": "Blind Shaft"},
        {"kind": OpKind.COMP_LT, "left": "1,500", "right": "987.5", "result": "The Mask of Fu Manchu"},
        {"kind": OpKind.COMP_LT, "left": "apple", "right": "banana", "result": "Blind Shaft"},
    ]
    for e in examples:
        outcome = apply_operation(
            e["kind"], span(e["left"], slot=2), span(e["right"], slot=1),
            left_entity="Blind Shaft", right_entity="The Mask of Fu Manchu",
        )
        assert outcome.failure is None, e
        assert outcome.value.render() == e["result"], e
        assert outcome.value.slot == 2


@pytest.mark.fast
def test_comp_tie():
    outcome = apply_operation(OpKind.COMP_LT, span("1932"), span("1932"), "Left Film", "Right Film")
    assert outcome.failure == COMPARISON_TIE
    assert outcome.value.render() == "Right Film"

    outcome = apply_operation(
        OpKind.COMP_GT, span("1932"), span("1932"), "Left Film", "Right Film",
        config=ExecConfig(tie_policy="left"),
    )
    assert outcome.failure == COMPARISON_TIE
    assert outcome.value.render() == "Left Film"


@pytest.mark.fast
def test_comp_incomparable():
    outcome = apply_operation(OpKind.COMP_LT, span("1932"), span("Blind Shaft"), "a", "b")
    assert outcome.failure == INCOMPARABLE
    assert outcome.value.is_empty


@pytest.mark.fast
def test_arithmetic():
    examples = [
        {"kind": OpKind.SUB, "left": "1640", "right": "1568", "result": "72"},
        {"kind": OpKind.ADD, "left": "2", "right": "2", "result": "4"},
        {"kind": OpKind.ADD, "left": "1.5", "right": "2.25", "result": "3.75"},
        {"kind": OpKind.SUB, "left": "2 February 1640", "right": "1568", "result": "72"},
        {"kind": OpKind.ADD, "left": "4 siblings", "right": "1,000", "result": "1004"},
        {"kind": OpKind.SUB, "left": "10", "right": "25", "result": "-15"},
    ]
    for e in examples:
        outcome = apply_operation(e["kind"], span(e["left"], slot=2), span(e["right"], slot=1))
        assert outcome.failure is None, e
        assert outcome.value.kind == AnswerKind.NUMBER
        assert outcome.value.render() == e["result"], e

    outcome = apply_operation(OpKind.SUB, span("unknown"), span("1568"))
    assert outcome.failure == NOT_NUMERIC
    assert outcome.value.is_empty


@pytest.mark.fast
def test_empty_operands():
    for kind in (OpKind.COMP_EQ, OpKind.COMP_LT, OpKind.COMP_GT, OpKind.SUB, OpKind.ADD):
        outcome = apply_operation(kind, AnswerValue.empty(slot=2), span("1932", slot=1))
        assert outcome.failure == EMPTY_OPERAND, kind
        assert outcome.value.is_empty
        assert outcome.value.slot == 2


@pytest.mark.fast
def test_sub_add_against_integers():
    rng = random.Random(1)
    for _ in range(1000):
        a = rng.randint(-100000, 100000)
        b = rng.randint(-100000, 100000)
        sub = apply_operation(OpKind.SUB, span(str(a)), span(str(b)))
        add = apply_operation(OpKind.ADD, span(str(a)), span(str(b)))
        assert sub.value.number == a - b
        assert add.value.number == a + b
        assert add.value.render() == str(a + b)


_NAMES = ["Dave Parker", "Willie Stargell", "Ralph Kiner", "Roberto Clemente", "Honus Wagner", "Paul Waner"]


def _variant(rng: random.Random, name: str) -> str:
    name = rng.choice([name, name.upper(), name.lower(), "The " + name, name + "."])
    return name


@pytest.mark.fast
def test_and_against_naive_intersection():
    rng = random.Random(2)
    for _ in range(500):
        left = [RC(_variant(rng, n), rng.random()) for n in rng.sample(_NAMES, rng.randint(0, 6))]
        right = [RC(_variant(rng, n), rng.random()) for n in rng.sample(_NAMES, rng.randint(0, 6))]
        left_value = AnswerValue.span(left[0].answer if left else "", left)
        right_value = AnswerValue.span(right[0].answer if right else "", right)

        outcome = apply_operation(OpKind.AND, left_value, right_value)

        naive = {normalize_answer(c.answer) for c in left} & {normalize_answer(c.answer) for c in right}
        survivors = {normalize_answer(c.answer) for c in outcome.value.candidates}
        assert survivors == naive
        assert (outcome.failure == EMPTY_INTERSECTION) == (not naive)
        scores = [c.score for c in outcome.value.candidates]
        assert scores == sorted(scores, reverse=True)


@pytest.mark.fast
def test_comparison_invariant_under_increasing_maps():
    rng = random.Random(3)
    for _ in range(500):
        a, b = rng.sample(range(-500, 500), 2)
        k = rng.randint(1, 10)
        c = rng.randint(-100, 100)
        kind = rng.choice([OpKind.COMP_LT, OpKind.COMP_GT])
        before = apply_operation(kind, span(str(a)), span(str(b)), "left", "right")
        after = apply_operation(kind, span(str(k * a + c)), span(str(k * b + c)), "left", "right")
        assert before.value.render() == after.value.render()
        assert before.failure is None and after.failure is None


@pytest.mark.fast
def test_coerce_number():
    examples = [
        {"text": "72", "number": Decimal(72)},
        {"text": " -15 ", "number": Decimal(-15)},
        {"text": "1,234", "number": Decimal(1234)},
        {"text": "3.5", "number": Decimal("3.5")},
        {"text": "1 December 2010", "number": Decimal(2010)},
        {"text": "4 siblings", "number": Decimal(4)},
        {"text": "about 30", "number": Decimal(30)},
    ]
    for e in examples:
        assert coerce_number(e["text"]) == e["number"], e

    for text in ["unknown", "", "one two 3", "12,34"]:
        with pytest.raises(HexecExceptionNotNumeric) as excinfo:
            coerce_number(text)
        assert excinfo.value.text == text


@pytest.mark.fast
def test_parse_comparable():
    examples = [
        {"text": "1932", "value": Numeric(Decimal(1932))},
        {"text": "1 December 2010", "value": DateKey(2010, 12, 1)},
        {"text": "May 17, 1990", "value": DateKey(1990, 5, 17)},
        {"text": "May 1990", "value": DateKey(1990, 5, 1)},
        {"text": "1990-05-17", "value": DateKey(1990, 5, 17)},
        {"text": "The Blind Shaft", "value": Lexical("blind shaft")},
    ]
    for e in examples:
        assert parse_comparable(e["text"]) == e["value"], e

    assert align_comparables(Numeric(Decimal(1932)), DateKey(1932, 11, 5)) == (
        DateKey(1932),
        DateKey(1932, 11, 5),
    )
    # Non-integral numbers are never years.
    assert align_comparables(Numeric(Decimal("19.5")), DateKey(1932)) == (
        Numeric(Decimal("19.5")),
        DateKey(1932),
    )


@pytest.mark.fast
def test_normalize_answer():
    examples = [
        {"text": "The Mask of Fu Manchu", "normalized": "mask of fu manchu"},
        {"text": "  U.S.A.! ", "normalized": "usa"},
        {"text": "An  apple a day", "normalized": "apple day"},
        {"text": "McDonald's", "normalized": "mcdonalds"},
    ]
    for e in examples:
        assert normalize_answer(e["text"]) == e["normalized"], e
    assert answer_tokens("The Eiffel Tower") == ["eiffel", "tower"]


@pytest.mark.fast
def test_extract_main_entity():
    examples = [
        {"question": "When is publication date of The Mask of Fu Manchu?", "entity": "The Mask of Fu Manchu"},
        {"question": "What is publication date of Who Is Kissing Me??", "entity": "Who Is Kissing Me"},
        {"question": "When is date of death of Amalie Materna?", "entity": "Amalie Materna"},
        {"question": "Where is Tod Browning's place of birth?", "entity": "Tod Browning"},
        {"question": "Where was Giuseppe Cesari's place of death?", "entity": "Giuseppe Cesari"},
        {"question": "Who is the mayor of Paris?", "entity": "Paris"},
        {"question": "Who wrote Hamlet?", "entity": "wrote Hamlet"},
    ]
    for e in examples:
        assert extract_main_entity(e["question"]) == e["entity"], e

    assert extract_main_entity("When is publication date of Blind Shaft?", "Blind Shaft (film)") == "Blind Shaft (film)"
    assert extract_main_entity("Who is boss of Acme?", heads=["boss of"]) == "Acme"


@pytest.mark.fast
def test_answer_values():
    assert AnswerValue.yes_no(True).render() == "Yes"
    assert AnswerValue.of_number(Decimal("72.0")).render() == "72"
    assert AnswerValue.empty().render() == ""
    assert format_number(Decimal("0.50")) == "0.5"
    # Bookkeeping does not take part in equality.
    assert span("Paris", slot=1) == span("Paris", slot=3, candidates=[RC("Paris", 1.0)])


@pytest.mark.fast
def test_answer_memory():
    memory = AnswerMemory()
    assert memory.store("Aston Villa") == 1
    assert memory.store("Birmingham City") == 2
    assert memory[2] == "Birmingham City"
    assert 3 not in memory
    assert len(memory) == 2
    assert AnswerMemory.from_dict(memory.as_dict()).as_dict() == {1: "Aston Villa", 2: "Birmingham City"}
