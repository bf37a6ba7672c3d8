# Copyright (c) 2026 The hexec Authors. All rights reserved.
import logging
from typing import Dict, List, Set, Tuple

from hexec.builder.records import MusiqueRecord
from hexec.builder.shapes import Shape, ShapeLeaf, ShapeNode, fold_right, realize
from hexec.builder.templates import TemplateTable, template_question
from hexec.common.results import HexecExceptionUnsupportedShape
from hexec.executor.normalize import normalize_answer
from hexec.hexpr.nodes import HExpr, OpKind
from hexec.hexpr.placeholders import match_index, placeholder_regex

logger = logging.getLogger("hexec")

PLACEHOLDER_PREFIX = "Ans#"


def render_sub_question(text: str, templates: TemplateTable = None) -> str:
    # "Inagua National Park >> country" -> "What is country of Inagua National Park?"
    if ">>" in text:
        subject, relation = text.split(">>", 1)
        return template_question(subject.strip(), relation.strip(), templates)
    return text.strip()


class _MusiqueBuilder:
    def __init__(self, record: MusiqueRecord, templates: TemplateTable):
        self.record = record
        self.templates = templates
        self.count = len(record.sub_questions)
        self.refs: Dict[int, List[int]] = {
            j: sub.references() for j, sub in enumerate(record.sub_questions, start=1)
        }
        self.visited: Set[int] = set()

    def answer(self, j: int) -> str:
        return normalize_answer(self.record.sub_questions[j - 1].answer)

    def ancestors(self, j: int) -> Set[int]:
        found: Set[int] = set()
        pending = list(self.refs[j])
        while pending:
            k = pending.pop()
            if k not in found:
                found.add(k)
                pending.extend(self.refs[k])
        return found

    def independent(self, a: int, b: int) -> bool:
        return a not in self.ancestors(b) and b not in self.ancestors(a)

    def intersects(self, a: int, b: int) -> bool:
        # Two unrelated sub-questions with the same answer ask for one entity.
        return bool(self.answer(a)) and self.answer(a) == self.answer(b) and self.independent(a, b)

    def leaf(self, j: int) -> ShapeLeaf:
        return ShapeLeaf(j, render_sub_question(self.record.sub_questions[j - 1].text, self.templates))

    def construct(self, j: int) -> Shape:
        """
        Sub-question j over the dependencies not built yet. The highest
        numbered dependency is built first so it executes first; a
        dependency already built elsewhere is read from its slot.
        """
        self.visited.add(j)
        built: List[Tuple[int, Shape]] = []
        for k in reversed(self.refs[j]):
            if k not in self.visited:
                built.append((k, self.construct(k)))
        if not built:
            return self.leaf(j)

        shapes = [shape for _, shape in built]
        if len(built) == 2 and self.intersects(built[0][0], built[1][0]):
            combined = ShapeNode(OpKind.AND, shapes[1], shapes[0])
        else:
            combined = fold_right(OpKind.UNION, shapes)
        return ShapeNode(OpKind.JOIN, self.leaf(j), combined)

    def build(self) -> Shape:
        referenced = {k for ks in self.refs.values() for k in ks}
        sinks = [j for j in range(1, self.count + 1) if j not in referenced]

        if len(sinks) == 1:
            shape = self.construct(sinks[0])
        elif len(sinks) == 2 and self.intersects(*sinks):
            right = self.construct(sinks[1])
            left = self.construct(sinks[0])
            shape = ShapeNode(OpKind.AND, left, right)
        else:
            raise HexecExceptionUnsupportedShape(
                self.record.id,
                f"{len(sinks)} final sub-questions {sinks} that do not intersect",
            )

        missing = set(range(1, self.count + 1)) - self.visited
        if missing:
            raise HexecExceptionUnsupportedShape(
                self.record.id, f"sub-questions {sorted(missing)} are not used"
            )
        return shape


def build_from_musique(record: MusiqueRecord, templates: TemplateTable = None) -> HExpr:
    """
    Gold H-expression for a MuSiQue decomposition.

    Chains fold into right-nested JOINs, several dependencies of one
    sub-question are combined with UNION (AND when they are unrelated and
    share an answer), and "#k" references are renumbered to "Ans#<slot>"
    in execution order.
    """
    shape = _MusiqueBuilder(record, templates).build()
    expr = realize(shape, PLACEHOLDER_PREFIX, record.id)
    logger.debug(f"{record.id} ({record.reasoning_type}) built")
    return expr


def musique_closed_loop_facts(
    record: MusiqueRecord, templates: TemplateTable = None
) -> List[Tuple[str, str]]:
    """(question, answer) pairs an oracle needs to replay the record's own decomposition."""
    regex = placeholder_regex()
    answers = {j: sub.answer for j, sub in enumerate(record.sub_questions, start=1)}
    facts = []
    for sub in record.sub_questions:
        text = render_sub_question(sub.text, templates)
        question = regex.sub(lambda m: answers[match_index(m)], text)
        facts.append((question, sub.answer))
    return facts
